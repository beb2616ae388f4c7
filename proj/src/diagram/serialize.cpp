#include "congrowth/diagram/serialize.hpp"

#include "congrowth/errors.hpp"

namespace congrowth::diagram {

nlohmann::json to_json(const Diagram& d) {
  const auto& p = *d.presentation();
  nlohmann::json steps = nlohmann::json::array();
  for (const auto& s : d.steps())
    steps.push_back({s.cell, s.dir == Direction::forward ? 1 : -1, s.offset});
  return {{"top", p.format(d.top())}, {"bottom", p.format(d.bottom())}, {"cells", d.cell_count()}, {"steps", steps}};
}

Diagram diagram_from_json(const nlohmann::json& j, const PresentationPtr& p) {
  try {
    std::vector<Step> steps;
    for (const auto& s : j.at("steps")) {
      if (!s.is_array() || s.size() != 3) throw InputError("each step must be [cell, dir, offset]");
      const int dir = s[1].get<int>();
      if (dir != 1 && dir != -1) throw InputError("step direction must be 1 or -1");
      steps.push_back({s[0].get<std::uint32_t>(), dir == 1 ? Direction::forward : Direction::inverse,
                       s[2].get<std::uint32_t>()});
    }
    auto d = Diagram::from_derivation(p, p->word(j.at("top").get<std::string>()), steps);
    if (j.contains("bottom") && p->format(d.bottom()) != j.at("bottom").get<std::string>())
      throw InputError("recorded bottom word does not match the replayed steps");
    return d;
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed diagram JSON: ") + e.what());
  }
}

nlohmann::json to_json(const DiagramConjKey& key) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : key.entries)
    entries.push_back({{"kind", e.trivial ? "trivial" : "spherical"}, {e.trivial ? "class" : "cells", e.value}});
  return {{"components", entries}, {"determinate", key.determinate}};
}

}  // namespace congrowth::diagram
