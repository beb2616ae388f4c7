#pragma once

// S∞ ⋊ Z: bijections of Z of the form x ↦ p(x + s), p finitary, acting on the
// right (x·(gh) = (x·g)·h). b is the translation x ↦ x + 1 and a the
// transposition (1 2). The element (s, p) is the normal form b^s p.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "congrowth/engine.hpp"
#include "congrowth/word.hpp"

namespace congrowth::groups {

struct PermShiftElement {
  std::vector<std::pair<std::int64_t, std::int64_t>> perm;  // sorted moved points → images
  std::int64_t shift = 0;

  std::int64_t image(std::int64_t x) const;
  std::vector<std::int64_t> support() const;

  friend auto operator<=>(const PermShiftElement&, const PermShiftElement&) = default;
  friend bool operator==(const PermShiftElement&, const PermShiftElement&) = default;
};

PermShiftElement permshift_multiply(const PermShiftElement& x, const PermShiftElement& y);
PermShiftElement permshift_inverse(const PermShiftElement& x);
PermShiftElement permshift_transposition(std::int64_t i, std::int64_t j);
PermShiftElement permshift_translation(std::int64_t s);

/// Alphabet {a, b} with inverses; a = letter 1, b = letter 2.
const Alphabet& lamp_alphabet();

/// The word b^n0 a b^n1 a ... b^nk a.
Word lamp_word(std::span<const int> parts);
/// Letter length of lamp_word: Σ parts + (k + 1).
int lamp_word_length(std::span<const int> parts);
/// The bound Σ parts + k quoted for the same word.
int lamp_quoted_length_bound(std::span<const int> parts);

/// Evaluates lamp_word(parts). Parts must be positive and even.
PermShiftElement lamp_witness(std::span<const int> parts);

/// Shift N ≥ 1 and every moved point in [1, N + 1].
bool lamp_in_window(const PermShiftElement& g);

/// Reads the parts back from a witness element; empty if g is not one.
std::vector<int> lamp_witness_parts(const PermShiftElement& g);

/// Lexicographically greatest rotation of the parts.
std::vector<int> lamp_canonical_rotation(std::span<const int> parts);

/// Witness elements are conjugate exactly when their part lists are
/// rotations of each other; the key is the witness of the canonical
/// rotation. Throws UnsupportedError outside the window or the family.
PermShiftElement lamp_witness_key(const PermShiftElement& g);

/// Canonical part lists (one per rotation class) of even compositions with
/// part sum <= max_sum, ordered by sum and then lexicographically.
std::vector<std::vector<int>> lamp_witness_family(int max_sum);

class LampGroup {
 public:
  using element_type = PermShiftElement;

  LampGroup();

  element_type identity() const { return {}; }
  element_type multiply(const element_type& x, const element_type& y) const { return permshift_multiply(x, y); }
  element_type invert(const element_type& x) const { return permshift_inverse(x); }
  /// a is an involution, so the list is {a, b, b'}.
  const std::vector<Generator<element_type>>& generators() const { return generators_; }
  std::string name() const { return "lamp-sinf"; }
  element_type element(std::span<const Letter> w) const;

 private:
  std::vector<Generator<element_type>> generators_;
};

std::string to_string(const PermShiftElement& g);

}  // namespace congrowth::groups

template <>
struct std::hash<congrowth::groups::PermShiftElement> {
  std::size_t operator()(const congrowth::groups::PermShiftElement& g) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(g.shift);
    for (const auto& [x, y] : g.perm) {
      h = h * 0x9E3779B97F4A7C15ull + std::hash<std::int64_t>{}(x);
      h = h * 0x9E3779B97F4A7C15ull + std::hash<std::int64_t>{}(y);
    }
    return h;
  }
};
