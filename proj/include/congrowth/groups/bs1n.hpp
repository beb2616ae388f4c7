#pragma once

// BS(1,n) = <a, b | b^-1 a b = a^n> modelled as Z[1/n] ⋊ Z:
//   (q, s)(q', s') = (q + n^-s q', s + s'),  a = (1, 0),  b = (0, 1).
// The element (q, s) is the normal form a^q b^s.

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "congrowth/engine.hpp"

namespace congrowth::groups {

struct BS1nElement {
  std::int64_t num = 0;    // q = num / base^exp
  int exp = 0;             // minimal: exp > 0 implies base does not divide num
  std::int64_t shift = 0;  // b-exponent
  int base = 2;

  friend auto operator<=>(const BS1nElement&, const BS1nElement&) = default;
  friend bool operator==(const BS1nElement&, const BS1nElement&) = default;
};

/// Normalizes num / base^exp (exp may be negative on input).
BS1nElement bs1n_make(int base, std::int64_t num, int exp, std::int64_t shift);

BS1nElement bs1n_multiply(const BS1nElement& a, const BS1nElement& b);
BS1nElement bs1n_inverse(const BS1nElement& a);

/// shift = 0: value is q with every factor n removed (the orbit of q under
/// multiplication by n^±1). shift = s ≠ 0: value is the least element of the
/// ×n orbit of q's image in Z/(n^|s| - 1).
struct BS1nKey {
  std::int64_t shift = 0;
  std::int64_t value = 0;

  friend auto operator<=>(const BS1nKey&, const BS1nKey&) = default;
  friend bool operator==(const BS1nKey&, const BS1nKey&) = default;
};

BS1nKey bs1n_conjugacy_key(const BS1nElement& g);

struct PowerLength {
  std::optional<int> exact;  // geodesic length; empty if the search hit its cap
  int bound = 0;             // 2(t1 + t2 + ...) + (m1 + m2 + ...) over base-n digits
};

/// Word length of a^k in BS(1,n) with generators {a, b}.
PowerLength bs1n_power_length(std::int64_t k, int base, std::size_t element_cap = 2'000'000);

class BS1n {
 public:
  using element_type = BS1nElement;
  using conjugacy_key_type = BS1nKey;
  static constexpr bool conjugacy_key_complete = true;

  explicit BS1n(int base);

  int base() const { return base_; }
  element_type identity() const { return bs1n_make(base_, 0, 0, 0); }
  element_type multiply(const element_type& x, const element_type& y) const { return bs1n_multiply(x, y); }
  element_type invert(const element_type& x) const { return bs1n_inverse(x); }
  const std::vector<Generator<element_type>>& generators() const { return generators_; }
  conjugacy_key_type conjugacy_key(const element_type& g) const { return bs1n_conjugacy_key(g); }
  std::string name() const { return "bs1n:" + std::to_string(base_); }

  element_type a() const { return bs1n_make(base_, 1, 0, 0); }
  element_type b() const { return bs1n_make(base_, 0, 0, 1); }
  element_type a_power(std::int64_t k) const { return bs1n_make(base_, k, 0, 0); }

 private:
  int base_;
  std::vector<Generator<element_type>> generators_;
};

std::string to_string(const BS1nElement& g);

}  // namespace congrowth::groups

template <>
struct std::hash<congrowth::groups::BS1nElement> {
  std::size_t operator()(const congrowth::groups::BS1nElement& g) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(g.num);
    h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(g.exp);
    h = h * 0x9E3779B97F4A7C15ull + std::hash<std::int64_t>{}(g.shift);
    return h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(g.base);
  }
};

template <>
struct std::hash<congrowth::groups::BS1nKey> {
  std::size_t operator()(const congrowth::groups::BS1nKey& k) const noexcept {
    return std::hash<std::int64_t>{}(k.shift) * 0x9E3779B97F4A7C15ull + std::hash<std::int64_t>{}(k.value);
  }
};
