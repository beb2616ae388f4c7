#pragma once

#include <vector>

#include "congrowth/diagram/diagram.hpp"

namespace congrowth::diagram {

struct Component {
  Word base;
  Diagram diagram;

  bool trivial() const { return diagram.is_trivial(); }
};

struct SphericalDecomposition {
  std::vector<Component> components;

  /// Sum of the components, left to right.
  Diagram recombine() const;
};

/// Splits a spherical diagram at every vertex of its top path that no cell
/// covers and that reaches the bottom path at the same position. Zero-cell
/// stretches come out as one component per letter.
SphericalDecomposition sum_decompose(const Diagram& d);

}  // namespace congrowth::diagram
