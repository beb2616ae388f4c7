#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>

namespace congrowth {

// Arithmetic that throws std::overflow_error instead of wrapping. For
// non-builtin integer types (e.g. boost cpp_int) these are the plain operators.

template <class Int>
Int checked_add(const Int& a, const Int& b) {
  if constexpr (std::integral<Int>) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
  } else {
    return a + b;
  }
}

template <class Int>
Int checked_sub(const Int& a, const Int& b) {
  if constexpr (std::integral<Int>) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
  } else {
    return a - b;
  }
}

template <class Int>
Int checked_mul(const Int& a, const Int& b) {
  if constexpr (std::integral<Int>) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
  } else {
    return a * b;
  }
}

template <class Int>
Int abs_value(const Int& a) {
  return a < 0 ? checked_sub(Int(0), a) : a;
}

template <class Int>
Int gcd_value(Int a, Int b) {
  a = abs_value(a);
  b = abs_value(b);
  while (b != 0) {
    Int t = a % b;
    a = b;
    b = t;
  }
  return a;
}

/// Representative of a mod m in [0, m), for m > 0.
template <class Int>
Int floor_mod(const Int& a, const Int& m) {
  Int r = a % m;
  if (r < 0) r += m;
  return r;
}

/// Floor division for m > 0.
template <class Int>
Int floor_div(const Int& a, const Int& m) {
  Int q = a / m;
  if (a % m != 0 && a < 0) q -= 1;
  return q;
}

std::int64_t checked_pow(std::int64_t base, int exponent);

}  // namespace congrowth
