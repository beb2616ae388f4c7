#pragma once

// Diagrams over a semigroup presentation, stored as derivations modulo the
// commutation of independent steps. The stored derivation is the level form:
// a step's level is one more than the highest level among the steps that
// produced its input edges, steps run level by level, and within a level from
// left to right. Offsets are positions in the word the step rewrites.

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "congrowth/diagram/presentation.hpp"

namespace congrowth::diagram {

enum class Direction : std::int8_t { forward = 1, inverse = -1 };

constexpr Direction flip(Direction d) { return d == Direction::forward ? Direction::inverse : Direction::forward; }

struct Step {
  std::uint32_t cell = 0;
  Direction dir = Direction::forward;
  std::uint32_t offset = 0;

  friend auto operator<=>(const Step&, const Step&) = default;
  friend bool operator==(const Step&, const Step&) = default;
};

class Diagram {
 public:
  Diagram() = default;

  /// The zero-cell (w, w)-diagram ε(w). Empty w → InputError.
  static Diagram trivial(PresentationPtr p, Word w);
  /// A single cell (u, v), or its mirror image (v, u).
  static Diagram cell(PresentationPtr p, std::size_t index, Direction dir = Direction::forward);
  /// Replays `steps` from `top`; a mismatching step → CompositionError.
  static Diagram from_derivation(PresentationPtr p, Word top, std::span<const Step> steps);

  const PresentationPtr& presentation() const { return presentation_; }
  const Word& top() const { return top_; }
  const Word& bottom() const { return bottom_; }
  std::size_t cell_count() const { return steps_.size(); }
  const std::vector<Step>& steps() const { return steps_; }
  const std::vector<std::uint32_t>& level_sizes() const { return level_sizes_; }
  bool is_spherical() const { return top_ == bottom_; }
  bool is_trivial() const { return steps_.empty(); }

  std::string str() const;

  /// Structural identity of the diagrams over the same presentation.
  friend bool operator==(const Diagram& a, const Diagram& b) { return a.top_ == b.top_ && a.steps_ == b.steps_; }
  friend std::strong_ordering operator<=>(const Diagram& a, const Diagram& b) {
    if (auto c = a.top_ <=> b.top_; c != 0) return c;
    return a.steps_ <=> b.steps_;
  }

 private:
  PresentationPtr presentation_;
  Word top_;
  Word bottom_;
  std::vector<Step> steps_;
  std::vector<std::uint32_t> level_sizes_;

  friend struct DiagramBuilder;
};

/// d1 + d2: d1 placed to the left of d2.
Diagram sum(const Diagram& d1, const Diagram& d2);
/// d1 ∘ d2: d2 glued below d1; needs bottom(d1) = top(d2). Not reduced.
Diagram multiply(const Diagram& d1, const Diagram& d2);
/// Mirror image; top and bottom swap.
Diagram inverse(const Diagram& d);

/// The unique dipole-free diagram equivalent to d.
Diagram reduce(const Diagram& d);
bool is_reduced(const Diagram& d);
/// Number of dipoles removed by reduce(d), which is (cells(d) - cells(reduce(d))) / 2.
std::size_t dipole_count(const Diagram& d);

/// reduce(d1 ∘ d2) for spherical diagrams over a common base word.
Diagram group_multiply(const Diagram& d1, const Diagram& d2);

/// Sum of trivial(...) and arbitrary diagrams left to right.
Diagram sum_all(std::span<const Diagram> parts);
/// ∘-product of a chain, left to right.
Diagram multiply_all(std::span<const Diagram> factors);
/// d ∘ d ∘ ... ∘ d (k ≥ 1 factors), unreduced.
Diagram power(const Diagram& d, int k);

}  // namespace congrowth::diagram

template <>
struct std::hash<congrowth::diagram::Diagram> {
  std::size_t operator()(const congrowth::diagram::Diagram& d) const noexcept {
    std::size_t h = d.top().size() * 0x100000001B3ull;
    for (auto x : d.top()) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(x);
    for (const auto& s : d.steps())
      h = h * 0x9E3779B97F4A7C15ull + (std::size_t{s.cell} << 33 ^ std::size_t{s.offset} << 1 ^
                                       (s.dir == congrowth::diagram::Direction::forward ? 1u : 0u));
    return h;
  }
};
