#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "congrowth/diagram/decomposition.hpp"
#include "congrowth/diagram/diagram.hpp"
#include "congrowth/diagram/equivalence.hpp"

namespace congrowth::diagram {

/// Whether d, d∘d, ..., d∘...∘d (depth factors) are all dipole-free.
bool is_absolutely_reduced(const Diagram& d, int depth = 2);

struct CyclicReduction {
  Diagram reduced;     // absolutely reduced spherical (v, v)-diagram
  Diagram conjugator;  // (v, u)-diagram Γ with d = Γ⁻¹ ∘ reduced ∘ Γ after reduction
  int strips = 0;
};

/// Conjugates a spherical diagram to an absolutely reduced one by moving
/// bottom cells to the top until they cancel against their mirror images
/// in some power of d. `strips` counts the moves.
CyclicReduction cyclic_reduce(const Diagram& d);

struct KeyEntry {
  bool trivial = false;
  std::int64_t value = 0;  // class handle of a trivial run, or cell count

  friend auto operator<=>(const KeyEntry&, const KeyEntry&) = default;
  friend bool operator==(const KeyEntry&, const KeyEntry&) = default;
};

/// Conjugacy invariant: after cyclic reduction and sum decomposition, each
/// maximal run of trivial components contributes its word class and each
/// spherical component its cell count, in order. Equal for conjugate
/// diagrams; distinct keys certify non-conjugacy. A trivial run whose word
/// class could not be settled makes the key indeterminate.
struct DiagramConjKey {
  std::vector<KeyEntry> entries;
  bool determinate = true;

  std::size_t component_count() const { return entries.size(); }
  std::string str() const;

  friend auto operator<=>(const DiagramConjKey&, const DiagramConjKey&) = default;
  friend bool operator==(const DiagramConjKey&, const DiagramConjKey&) = default;
};

/// Runs of consecutive trivial components merged into one trivial piece.
std::vector<Component> merge_trivial_runs(const SphericalDecomposition& dec);

/// Key of an absolutely reduced diagram (no cyclic reduction performed).
DiagramConjKey conj_key_of_reduced(const Diagram& absolutely_reduced, WordEquivalence& equivalence);
DiagramConjKey diagram_conj_key(const Diagram& d, WordEquivalence& equivalence);

}  // namespace congrowth::diagram

template <>
struct std::hash<congrowth::diagram::DiagramConjKey> {
  std::size_t operator()(const congrowth::diagram::DiagramConjKey& k) const noexcept {
    std::size_t h = k.determinate ? 1 : 2;
    for (const auto& e : k.entries)
      h = h * 0x9E3779B97F4A7C15ull + (static_cast<std::size_t>(e.value) << 1 | (e.trivial ? 1u : 0u));
    return h;
  }
};
