#include "congrowth/diagram/diagram.hpp"

#include <algorithm>

#include "congrowth/errors.hpp"
#include "graph.hpp"

namespace congrowth::diagram {

namespace detail {

namespace {

const Word& source_of(const Cell& c, Direction d) { return d == Direction::forward ? c.top : c.bottom; }
const Word& target_of(const Cell& c, Direction d) { return d == Direction::forward ? c.bottom : c.top; }

}  // namespace

Graph Graph::build(const PresentationPtr& p, const Word& top_word, std::span<const Step> steps) {
  if (!p) throw InputError("diagram has no presentation");
  p->alphabet().validate(top_word);
  Graph g;
  g.presentation = p;
  auto new_edge = [&](Letter x, std::int32_t from) {
    g.label.push_back(x);
    g.producer.push_back(from);
    g.consumer.push_back(kBoundary);
    return static_cast<std::uint32_t>(g.label.size() - 1);
  };
  std::vector<std::uint32_t> current;
  for (Letter x : top_word) current.push_back(new_edge(x, kBoundary));
  g.top = current;

  for (const auto& s : steps) {
    if (s.cell >= p->size()) throw InputError("cell index " + std::to_string(s.cell) + " out of range");
    const Cell& c = p->cell(s.cell);
    const Word& src = source_of(c, s.dir);
    const Word& dst = target_of(c, s.dir);
    if (std::size_t{s.offset} + src.size() > current.size())
      throw CompositionError("step " + p->format_cell(s.cell) + " at offset " + std::to_string(s.offset) +
                             " runs past the end of a word of length " + std::to_string(current.size()));
    for (std::size_t i = 0; i < src.size(); ++i)
      if (g.label[current[s.offset + i]] != src[i])
        throw CompositionError("step " + p->format_cell(s.cell) + (s.dir == Direction::forward ? "" : " (inverse)") +
                               " does not match the word at offset " + std::to_string(s.offset));
    const auto id = static_cast<std::int32_t>(g.cells.size());
    GraphCell gc;
    gc.cell = s.cell;
    gc.dir = s.dir;
    gc.in.assign(current.begin() + s.offset, current.begin() + s.offset + static_cast<std::ptrdiff_t>(src.size()));
    for (auto e : gc.in) g.consumer[e] = id;
    for (Letter x : dst) gc.out.push_back(new_edge(x, id));
    current.erase(current.begin() + s.offset, current.begin() + s.offset + static_cast<std::ptrdiff_t>(src.size()));
    current.insert(current.begin() + s.offset, gc.out.begin(), gc.out.end());
    g.cells.push_back(std::move(gc));
  }
  g.bottom = current;
  return g;
}

std::optional<std::uint32_t> Graph::dipole_partner(std::uint32_t upper) const {
  const auto& a = cells[upper];
  if (!a.alive) return std::nullopt;
  const auto c = consumer[a.out.front()];
  if (c == kBoundary) return std::nullopt;
  const auto& b = cells[static_cast<std::size_t>(c)];
  if (!b.alive || b.cell != a.cell || b.dir != flip(a.dir) || b.in != a.out) return std::nullopt;
  return static_cast<std::uint32_t>(c);
}

bool Graph::has_dipole() const {
  for (std::uint32_t i = 0; i < cells.size(); ++i)
    if (dipole_partner(i)) return true;
  return false;
}

std::size_t Graph::eliminate_dipoles() {
  std::vector<std::uint32_t> work;
  for (std::uint32_t i = static_cast<std::uint32_t>(cells.size()); i-- > 0;) work.push_back(i);
  std::size_t removed = 0;
  while (!work.empty()) {
    const auto a = work.back();
    work.pop_back();
    const auto partner = dipole_partner(a);
    if (!partner) continue;
    auto& upper = cells[a];
    auto& lower = cells[*partner];
    for (std::size_t i = 0; i < upper.in.size(); ++i) {
      const auto kept = upper.in[i];
      const auto dropped = lower.out[i];
      const auto c = consumer[dropped];
      consumer[kept] = c;
      auto& list = c == kBoundary ? bottom : cells[static_cast<std::size_t>(c)].in;
      std::replace(list.begin(), list.end(), dropped, kept);
    }
    upper.alive = lower.alive = false;
    ++removed;
    for (auto e : upper.in)
      if (producer[e] != kBoundary) work.push_back(static_cast<std::uint32_t>(producer[e]));
  }
  return removed;
}

std::vector<std::uint32_t> Graph::levels() const {
  // Cells are stored in a derivation order, so producers precede consumers.
  std::vector<std::uint32_t> level(cells.size(), 0);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (!cells[i].alive) continue;
    std::uint32_t l = 0;
    for (auto e : cells[i].in)
      if (producer[e] != kBoundary) l = std::max(l, level[static_cast<std::size_t>(producer[e])]);
    level[i] = l + 1;
  }
  return level;
}

Diagram Graph::canonical() const {
  const auto level = levels();
  std::uint32_t depth = 0;
  for (auto l : level) depth = std::max(depth, l);
  std::vector<std::vector<std::uint32_t>> by_level(depth + 1);
  for (std::uint32_t i = 0; i < cells.size(); ++i)
    if (cells[i].alive) by_level[level[i]].push_back(i);

  std::vector<std::uint32_t> current = top;
  std::vector<std::int64_t> pos(label.size(), -1);
  std::vector<Step> steps;
  std::vector<std::uint32_t> level_sizes;
  for (std::uint32_t l = 1; l <= depth; ++l) {
    for (std::size_t i = 0; i < current.size(); ++i) pos[current[i]] = static_cast<std::int64_t>(i);
    std::vector<std::pair<std::int64_t, std::uint32_t>> placed;
    for (auto c : by_level[l]) {
      const auto& gc = cells[c];
      const auto start = pos[gc.in.front()];
      for (std::size_t i = 0; i < gc.in.size(); ++i)
        if (pos[gc.in[i]] != start + static_cast<std::int64_t>(i))
          throw std::logic_error("diagram graph is not planar at a cell input");
      placed.emplace_back(start, c);
    }
    std::sort(placed.begin(), placed.end());
    std::vector<std::uint32_t> next;
    std::size_t cursor = 0;
    for (auto [start, c] : placed) {
      const auto& gc = cells[c];
      while (cursor < static_cast<std::size_t>(start)) next.push_back(current[cursor++]);
      steps.push_back({gc.cell, gc.dir, static_cast<std::uint32_t>(next.size())});
      next.insert(next.end(), gc.out.begin(), gc.out.end());
      cursor += gc.in.size();
    }
    while (cursor < current.size()) next.push_back(current[cursor++]);
    current = std::move(next);
    level_sizes.push_back(static_cast<std::uint32_t>(placed.size()));
  }
  if (current != bottom) throw std::logic_error("diagram replay does not end at the bottom path");
  Word top_word, bottom_word;
  for (auto e : top) top_word.push_back(label[e]);
  for (auto e : bottom) bottom_word.push_back(label[e]);
  return DiagramBuilder::make(presentation, std::move(top_word), std::move(bottom_word), std::move(steps),
                              std::move(level_sizes));
}

}  // namespace detail

namespace {

const PresentationPtr& common_presentation(const Diagram& d1, const Diagram& d2) {
  if (!d1.presentation() || !d2.presentation()) throw InputError("diagram has no presentation");
  if (d1.presentation() != d2.presentation() && *d1.presentation() != *d2.presentation())
    throw InputError("diagrams are over different presentations");
  return d1.presentation();
}

}  // namespace

Diagram Diagram::trivial(PresentationPtr p, Word w) {
  if (w.empty()) throw InputError("a trivial diagram needs a nonempty word");
  return Diagram::from_derivation(std::move(p), std::move(w), {});
}

Diagram Diagram::cell(PresentationPtr p, std::size_t index, Direction dir) {
  if (!p) throw InputError("diagram has no presentation");
  if (index >= p->size()) throw InputError("cell index " + std::to_string(index) + " out of range");
  const Cell& c = p->cell(index);
  Word top = dir == Direction::forward ? c.top : c.bottom;
  const Step s{static_cast<std::uint32_t>(index), dir, 0};
  return Diagram::from_derivation(std::move(p), std::move(top), std::span<const Step>(&s, 1));
}

Diagram Diagram::from_derivation(PresentationPtr p, Word top, std::span<const Step> steps) {
  if (top.empty()) throw InputError("a diagram needs a nonempty top word");
  return detail::Graph::build(p, top, steps).canonical();
}

std::string Diagram::str() const {
  if (!presentation_) return "<empty>";
  const auto& p = *presentation_;
  std::string out = "(" + p.format(top_) + ", " + p.format(bottom_) + ") cells=" + std::to_string(steps_.size());
  std::size_t k = 0;
  for (auto size : level_sizes_) {
    out += " |";
    for (std::uint32_t i = 0; i < size; ++i, ++k) {
      const auto& s = steps_[k];
      out += " " + p.format_cell(s.cell) + (s.dir == Direction::forward ? "" : "'") + "@" + std::to_string(s.offset);
    }
  }
  return out;
}

Diagram sum(const Diagram& d1, const Diagram& d2) {
  const auto& p = common_presentation(d1, d2);
  std::vector<Step> steps = d1.steps();
  const auto shift = static_cast<std::uint32_t>(d1.bottom().size());
  for (auto s : d2.steps()) {
    s.offset += shift;
    steps.push_back(s);
  }
  return Diagram::from_derivation(p, concat(d1.top(), d2.top()), steps);
}

Diagram multiply(const Diagram& d1, const Diagram& d2) {
  const auto& p = common_presentation(d1, d2);
  if (d1.bottom() != d2.top())
    throw CompositionError("cannot compose: bottom " + p->format(d1.bottom()) + " differs from top " +
                           p->format(d2.top()));
  std::vector<Step> steps = d1.steps();
  steps.insert(steps.end(), d2.steps().begin(), d2.steps().end());
  return Diagram::from_derivation(p, d1.top(), steps);
}

Diagram inverse(const Diagram& d) {
  std::vector<Step> steps(d.steps().rbegin(), d.steps().rend());
  for (auto& s : steps) s.dir = flip(s.dir);
  return Diagram::from_derivation(d.presentation(), d.bottom(), steps);
}

Diagram reduce(const Diagram& d) {
  auto g = detail::Graph::build(d.presentation(), d.top(), d.steps());
  if (g.eliminate_dipoles() == 0) return d;
  return g.canonical();
}

bool is_reduced(const Diagram& d) { return !detail::Graph::build(d.presentation(), d.top(), d.steps()).has_dipole(); }

std::size_t dipole_count(const Diagram& d) {
  return detail::Graph::build(d.presentation(), d.top(), d.steps()).eliminate_dipoles();
}

Diagram group_multiply(const Diagram& d1, const Diagram& d2) {
  if (!d1.is_spherical() || !d2.is_spherical()) throw InputError("group product needs spherical diagrams");
  if (d1.top() != d2.top()) throw InputError("group product needs a common base word");
  return reduce(multiply(d1, d2));
}

Diagram sum_all(std::span<const Diagram> parts) {
  if (parts.empty()) throw InputError("empty sum");
  Diagram out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) out = sum(out, parts[i]);
  return out;
}

Diagram multiply_all(std::span<const Diagram> factors) {
  if (factors.empty()) throw InputError("empty product");
  Diagram out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = multiply(out, factors[i]);
  return out;
}

Diagram power(const Diagram& d, int k) {
  if (k < 1) throw InputError("power needs k >= 1");
  Diagram out = d;
  for (int i = 1; i < k; ++i) out = multiply(out, d);
  return out;
}

}  // namespace congrowth::diagram
