#pragma once

// Concrete diagram groups: Thompson's F = DG({x -> xx}, x) and the group
// DG({ab -> a, b -> b, bc -> c}, ac), which contains Z wr Z, together with the
// witness diagrams A(n0, ..., nk) used to count conjugacy classes.

#include <span>
#include <string>
#include <vector>

#include "congrowth/diagram/conjugacy.hpp"
#include "congrowth/diagram/diagram.hpp"
#include "congrowth/engine.hpp"

namespace congrowth::diagram {

/// x0 = (x→x²) ∘ (ε(x) + (x→x²)) ∘ ((x→x²)⁻¹ + ε(x)) ∘ (x→x²)⁻¹.
Diagram thompson_x0();
/// x1 = (x→x²) ∘ (ε(x) + x0) ∘ (x→x²)⁻¹.
Diagram thompson_x1();

/// Δ(n0..nk) = ε(a) + π^n0 + ... + π^nk + ε(c), π the cell b → b.
Diagram wrzz_delta(std::span<const int> parts);
/// Γ = ∏_{i=0..k} ((ab→a)⁻¹ + ε(b^i c)), an (ac, a b^(k+1) c)-diagram.
Diagram wrzz_gamma(int factors);
/// A(n0..nk) = reduce(Γ ∘ Δ ∘ Γ⁻¹), with Σ n_i + 2(k+1) cells.
Diagram build_wrZZ_witness(std::span<const int> parts);

struct WitnessEntry {
  std::vector<int> parts;
  Diagram diagram;
};

/// A(parts) for all 2^(n-1) compositions of n.
std::vector<WitnessEntry> wrzz_witness_family(int n);

/// t = ((ab→a)⁻¹ + ε(c)) ∘ (ε(a) + (bc→c)) and p = A(1).
Diagram wrzz_t();
Diagram wrzz_p();

class DiagramGroup {
 public:
  using element_type = Diagram;

  /// Generators must be reduced spherical diagrams over one base word; their
  /// inverses are appended as name + "'".
  DiagramGroup(std::string name, std::vector<Generator<Diagram>> generators);

  static DiagramGroup thompson();
  static DiagramGroup wreath();

  const std::string& name() const { return name_; }
  const Word& base() const { return identity_.top(); }
  const PresentationPtr& presentation() const { return identity_.presentation(); }
  element_type identity() const { return identity_; }
  element_type multiply(const element_type& x, const element_type& y) const { return group_multiply(x, y); }
  element_type invert(const element_type& x) const { return diagram::inverse(x); }
  const std::vector<Generator<Diagram>>& generators() const { return generators_; }

 private:
  std::string name_;
  Diagram identity_;
  std::vector<Generator<Diagram>> generators_;
};

struct DiagramBallCounts {
  std::vector<std::size_t> ball_sizes;     // |B(r)|, r = 0..radius
  std::vector<std::size_t> classes;        // distinct determinate keys in B(r)
  std::vector<std::size_t> indeterminate;  // elements of B(r) with an undecided key
  bool truncated = false;
  int radius() const { return static_cast<int>(classes.size()) - 1; }
};

/// Lower bounds for the number of conjugacy classes meeting the word-metric
/// ball B(r): the number of distinct determinate conjugacy keys.
DiagramBallCounts dg_ball_lower_bound(const DiagramGroup& group, int n, const EngineConfig& cfg,
                                      WordEquivalence& equivalence);

}  // namespace congrowth::diagram
