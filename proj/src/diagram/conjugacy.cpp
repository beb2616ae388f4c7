#include "congrowth/diagram/conjugacy.hpp"

#include <utility>

#include "congrowth/errors.hpp"
#include "graph.hpp"

namespace congrowth::diagram {

bool is_absolutely_reduced(const Diagram& d, int depth) {
  if (!d.is_spherical()) throw InputError("absolute reducedness needs a spherical diagram");
  if (depth < 1) throw InputError("depth must be at least 1");
  Diagram p = d;
  for (int k = 1; k <= depth; ++k) {
    if (k > 1) p = multiply(p, d);
    if (!is_reduced(p)) return false;
  }
  return true;
}

namespace {

struct SeamDipole {
  std::uint32_t cell;
  Direction dir;  // direction of the bottom cell
  std::size_t position;
  std::size_t width;
  int lag;  // the mirror cell sits in the lag-th copy below in d ∘ d ∘ ...
};

// A cell whose outputs are exactly the bottom edges [p, p+w), followed down
// through the edges that cross d untouched until it meets its mirror image on
// the top path of a later copy. Lag 1 is a dipole of d ∘ d. A dipole of any
// power of d has this shape, and since the untouched edges move monotonically
// the chain ends within |base| copies.
std::optional<SeamDipole> find_seam_dipole(const Diagram& d) {
  const auto g = detail::Graph::build(d.presentation(), d.top(), d.steps());
  std::vector<std::int64_t> bottom_pos(g.label.size(), -1), top_pos(g.label.size(), -1);
  for (std::size_t i = 0; i < g.bottom.size(); ++i) bottom_pos[g.bottom[i]] = static_cast<std::int64_t>(i);
  for (std::size_t i = 0; i < g.top.size(); ++i) top_pos[g.top[i]] = static_cast<std::int64_t>(i);

  std::vector<const detail::GraphCell*> top_cell_at(g.top.size(), nullptr);
  for (const auto& c : g.cells) {
    if (!c.alive) continue;
    const auto start = top_pos[c.in.front()];
    if (start < 0) continue;
    bool all = true;
    for (std::size_t i = 0; i < c.in.size() && all; ++i)
      all = top_pos[c.in[i]] == start + static_cast<std::int64_t>(i);
    if (all) top_cell_at[static_cast<std::size_t>(start)] = &c;
  }

  const int max_lag = static_cast<int>(g.top.size()) + 1;
  std::optional<SeamDipole> best;
  for (const auto& c : g.cells) {
    if (!c.alive) continue;
    const auto start = bottom_pos[c.out.front()];
    if (start < 0) continue;
    bool all = true;
    for (std::size_t i = 0; i < c.out.size() && all; ++i)
      all = bottom_pos[c.out[i]] == start + static_cast<std::int64_t>(i);
    if (!all) continue;
    const std::size_t width = c.out.size();
    std::int64_t at = start;
    for (int lag = 1; lag <= max_lag; ++lag) {
      const auto* t = top_cell_at[static_cast<std::size_t>(at)];
      if (t && t->cell == c.cell && t->dir == flip(c.dir) && t->in.size() == width) {
        const SeamDipole found{c.cell, c.dir, static_cast<std::size_t>(start), width, lag};
        if (!best || std::pair(lag, found.position) < std::pair(best->lag, best->position)) best = found;
        break;
      }
      // Continue only through edges that cross the diagram untouched.
      const auto next = bottom_pos[g.top[static_cast<std::size_t>(at)]];
      if (next < 0 || next == at) break;
      bool straight = true;
      for (std::size_t i = 0; i < width && straight; ++i)
        straight = static_cast<std::size_t>(at) + i < g.top.size() &&
                   bottom_pos[g.top[static_cast<std::size_t>(at) + i]] == next + static_cast<std::int64_t>(i);
      if (!straight) break;
      at = next;
    }
  }
  return best;
}

}  // namespace

CyclicReduction cyclic_reduce(const Diagram& input) {
  if (!input.is_spherical()) throw InputError("cyclic reduction needs a spherical diagram");
  CyclicReduction out{reduce(input), Diagram::trivial(input.presentation(), input.top()), 0};
  const auto& p = input.presentation();
  while (auto seam = find_seam_dipole(out.reduced)) {
    const Word& base = out.reduced.top();
    std::vector<Diagram> parts;
    if (seam->position > 0)
      parts.push_back(Diagram::trivial(p, Word(base.begin(), base.begin() + static_cast<std::ptrdiff_t>(seam->position))));
    parts.push_back(Diagram::cell(p, seam->cell, seam->dir));
    if (seam->position + seam->width < base.size())
      parts.push_back(
          Diagram::trivial(p, Word(base.begin() + static_cast<std::ptrdiff_t>(seam->position + seam->width), base.end())));
    const Diagram c = sum_all(parts);
    const std::size_t before = out.reduced.cell_count();
    out.reduced = reduce(multiply(multiply(c, out.reduced), inverse(c)));
    // A longer chain only moves the cell one copy closer to its mirror.
    if (out.reduced.cell_count() + (seam->lag == 1 ? 2 : 0) != before)
      throw std::logic_error("cyclic reduction failed to remove a seam dipole");
    out.conjugator = reduce(multiply(c, out.conjugator));
    ++out.strips;
  }
  return out;
}

std::string DiagramConjKey::str() const {
  std::string out = "[";
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (i) out += ",";
    out += (entries[i].trivial ? "e" : "s") + std::to_string(entries[i].value);
  }
  out += "]";
  if (!determinate) out += "?";
  return out;
}

std::vector<Component> merge_trivial_runs(const SphericalDecomposition& dec) {
  std::vector<Component> out;
  for (const auto& c : dec.components) {
    if (c.trivial() && !out.empty() && out.back().trivial()) {
      out.back().base.insert(out.back().base.end(), c.base.begin(), c.base.end());
      out.back().diagram = Diagram::trivial(c.diagram.presentation(), out.back().base);
    } else {
      out.push_back(c);
    }
  }
  return out;
}

DiagramConjKey conj_key_of_reduced(const Diagram& d, WordEquivalence& equivalence) {
  DiagramConjKey key;
  for (const auto& c : merge_trivial_runs(sum_decompose(d))) {
    if (c.trivial()) {
      auto h = equivalence.handle(c.base);
      if (!h) key.determinate = false;
      key.entries.push_back({true, h.value_or(-1)});
    } else {
      key.entries.push_back({false, static_cast<std::int64_t>(c.diagram.cell_count())});
    }
  }
  return key;
}

DiagramConjKey diagram_conj_key(const Diagram& d, WordEquivalence& equivalence) {
  return conj_key_of_reduced(cyclic_reduce(d).reduced, equivalence);
}

}  // namespace congrowth::diagram
