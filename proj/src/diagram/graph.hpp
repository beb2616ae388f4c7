#pragma once

// The plane graph behind a diagram: edges labelled by letters, each produced
// by one cell (or the top path) and consumed by one cell (or the bottom path).

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "congrowth/diagram/diagram.hpp"

namespace congrowth::diagram {

struct DiagramBuilder {
  static Diagram make(PresentationPtr p, Word top, Word bottom, std::vector<Step> steps,
                      std::vector<std::uint32_t> level_sizes) {
    Diagram d;
    d.presentation_ = std::move(p);
    d.top_ = std::move(top);
    d.bottom_ = std::move(bottom);
    d.steps_ = std::move(steps);
    d.level_sizes_ = std::move(level_sizes);
    return d;
  }
};

namespace detail {

inline constexpr std::int32_t kBoundary = -1;

struct GraphCell {
  std::uint32_t cell = 0;
  Direction dir = Direction::forward;
  std::vector<std::uint32_t> in, out;
  bool alive = true;
};

struct Graph {
  PresentationPtr presentation;
  std::vector<Letter> label;
  std::vector<std::int32_t> producer, consumer;
  std::vector<std::uint32_t> top, bottom;
  std::vector<GraphCell> cells;

  static Graph build(const PresentationPtr& p, const Word& top_word, std::span<const Step> steps);

  /// The lower cell of a dipole whose upper cell is `upper`, if any.
  std::optional<std::uint32_t> dipole_partner(std::uint32_t upper) const;
  bool has_dipole() const;
  /// Removes dipoles until none remain; returns how many were removed.
  std::size_t eliminate_dipoles();

  /// Level of each alive cell (dead cells get 0).
  std::vector<std::uint32_t> levels() const;
  Diagram canonical() const;
};

}  // namespace detail
}  // namespace congrowth::diagram
