#include "congrowth/diagram/decomposition.hpp"

#include <algorithm>

#include "congrowth/errors.hpp"

namespace congrowth::diagram {

Diagram SphericalDecomposition::recombine() const {
  std::vector<Diagram> parts;
  for (const auto& c : components) parts.push_back(c.diagram);
  return sum_all(parts);
}

namespace {

std::size_t source_length(const Presentation& p, const Step& s) {
  const auto& c = p.cell(s.cell);
  return (s.dir == Direction::forward ? c.top : c.bottom).size();
}

std::size_t target_length(const Presentation& p, const Step& s) {
  const auto& c = p.cell(s.cell);
  return (s.dir == Direction::forward ? c.bottom : c.top).size();
}

}  // namespace

SphericalDecomposition sum_decompose(const Diagram& d) {
  if (!d.is_spherical()) throw InputError("sum decomposition needs a spherical diagram");
  const auto& p = *d.presentation();
  const Word& base = d.top();
  const std::size_t len = base.size();

  // Track every interior vertex of the top path through the derivation.
  std::vector<std::int64_t> at(len + 1);
  std::vector<bool> alive(len + 1, true);
  for (std::size_t j = 0; j <= len; ++j) at[j] = static_cast<std::int64_t>(j);
  for (const auto& s : d.steps()) {
    const auto lo = static_cast<std::int64_t>(s.offset);
    const auto hi = lo + static_cast<std::int64_t>(source_length(p, s));
    const auto delta = static_cast<std::int64_t>(target_length(p, s)) - (hi - lo);
    for (std::size_t j = 1; j < len; ++j) {
      if (!alive[j] || at[j] <= lo) continue;
      if (at[j] < hi)
        alive[j] = false;
      else
        at[j] += delta;
    }
  }
  std::vector<std::size_t> cuts{0};
  for (std::size_t j = 1; j < len; ++j)
    if (alive[j] && at[j] == static_cast<std::int64_t>(j)) cuts.push_back(j);
  cuts.push_back(len);

  // Second pass: assign each step to the component between two cuts.
  const std::size_t m = cuts.size() - 1;
  std::vector<std::int64_t> cut_at(cuts.begin(), cuts.end());
  std::vector<std::vector<Step>> local(m);
  for (const auto& s : d.steps()) {
    const auto lo = static_cast<std::int64_t>(s.offset);
    std::size_t k = 0;
    while (k + 1 < m && cut_at[k + 1] <= lo) ++k;
    Step t = s;
    t.offset = static_cast<std::uint32_t>(lo - cut_at[k]);
    local[k].push_back(t);
    const auto delta =
        static_cast<std::int64_t>(target_length(p, s)) - static_cast<std::int64_t>(source_length(p, s));
    for (std::size_t j = k + 1; j <= m; ++j) cut_at[j] += delta;
  }

  SphericalDecomposition out;
  for (std::size_t k = 0; k < m; ++k) {
    Word piece(base.begin() + static_cast<std::ptrdiff_t>(cuts[k]),
               base.begin() + static_cast<std::ptrdiff_t>(cuts[k + 1]));
    auto diagram = Diagram::from_derivation(d.presentation(), piece, local[k]);
    if (!diagram.is_spherical()) throw std::logic_error("sum component is not spherical");
    out.components.push_back({std::move(piece), std::move(diagram)});
  }
  return out;
}

}  // namespace congrowth::diagram
