#pragma once

// Discrete Heisenberg group H = <x, y | [x,y] = z central>, every element
// uniquely x^k y^l z^m. Multiplication convention:
//   (k,l,m)(k',l',m') = (k+k', l+l', m+m'+k*l').

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "congrowth/checked.hpp"
#include "congrowth/engine.hpp"

namespace congrowth::groups {

template <class Int = std::int64_t>
struct HeisenbergElement {
  Int k{0}, l{0}, m{0};

  friend auto operator<=>(const HeisenbergElement&, const HeisenbergElement&) = default;
  friend bool operator==(const HeisenbergElement&, const HeisenbergElement&) = default;
};

template <class Int>
HeisenbergElement<Int> heis_multiply(const HeisenbergElement<Int>& a, const HeisenbergElement<Int>& b) {
  return {checked_add(a.k, b.k), checked_add(a.l, b.l), checked_add(checked_add(a.m, b.m), checked_mul(a.k, b.l))};
}

template <class Int>
HeisenbergElement<Int> heis_inverse(const HeisenbergElement<Int>& a) {
  return {checked_sub(Int(0), a.k), checked_sub(Int(0), a.l), checked_sub(checked_mul(a.k, a.l), a.m)};
}

/// Complete conjugacy invariant: (0,0,m) for central elements, otherwise
/// (k, l, m mod gcd(k,l)) with the residue in [0, gcd).
template <class Int = std::int64_t>
struct HeisenbergKey {
  Int k{0}, l{0}, s{0};

  friend auto operator<=>(const HeisenbergKey&, const HeisenbergKey&) = default;
  friend bool operator==(const HeisenbergKey&, const HeisenbergKey&) = default;
};

template <class Int>
HeisenbergKey<Int> heis_conjugacy_key(const HeisenbergElement<Int>& g) {
  if (g.k == 0 && g.l == 0) return {g.k, g.l, g.m};
  const Int d = gcd_value(g.k, g.l);
  return {g.k, g.l, floor_mod(g.m, d)};
}

class Heisenberg {
 public:
  using element_type = HeisenbergElement<std::int64_t>;
  using conjugacy_key_type = HeisenbergKey<std::int64_t>;
  static constexpr bool conjugacy_key_complete = true;

  Heisenberg();

  element_type identity() const { return {}; }
  element_type multiply(const element_type& a, const element_type& b) const { return heis_multiply(a, b); }
  element_type invert(const element_type& a) const { return heis_inverse(a); }
  const std::vector<Generator<element_type>>& generators() const { return generators_; }
  conjugacy_key_type conjugacy_key(const element_type& g) const { return heis_conjugacy_key(g); }
  std::string name() const { return "heisenberg"; }

  static element_type x() { return {1, 0, 0}; }
  static element_type y() { return {0, 1, 0}; }
  static element_type z() { return {0, 0, 1}; }

 private:
  std::vector<Generator<element_type>> generators_;
};

std::string to_string(const HeisenbergElement<std::int64_t>& g);

}  // namespace congrowth::groups

template <>
struct std::hash<congrowth::groups::HeisenbergElement<std::int64_t>> {
  std::size_t operator()(const congrowth::groups::HeisenbergElement<std::int64_t>& g) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(g.k);
    h = h * 0x9E3779B97F4A7C15ull + std::hash<std::int64_t>{}(g.l);
    return h * 0x9E3779B97F4A7C15ull + std::hash<std::int64_t>{}(g.m);
  }
};

template <>
struct std::hash<congrowth::groups::HeisenbergKey<std::int64_t>> {
  std::size_t operator()(const congrowth::groups::HeisenbergKey<std::int64_t>& g) const noexcept {
    return std::hash<congrowth::groups::HeisenbergElement<std::int64_t>>{}({g.k, g.l, g.s});
  }
};
