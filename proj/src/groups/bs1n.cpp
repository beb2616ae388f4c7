#include "congrowth/groups/bs1n.hpp"

#include <algorithm>

#include "congrowth/checked.hpp"
#include "congrowth/errors.hpp"

namespace congrowth {

std::int64_t checked_pow(std::int64_t base, int exponent) {
  if (exponent < 0) throw InputError("negative exponent");
  std::int64_t r = 1;
  for (int i = 0; i < exponent; ++i) r = checked_mul(r, base);
  return r;
}

}  // namespace congrowth

namespace congrowth::groups {

namespace {

__extension__ using Wide = __int128;

std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<Wide>(a) * b % m);
}

std::int64_t powmod(std::int64_t base, std::int64_t e, std::int64_t m) {
  std::int64_t r = 1 % m;
  base = floor_mod(base, m);
  while (e > 0) {
    if (e & 1) r = mulmod(r, base, m);
    base = mulmod(base, base, m);
    e >>= 1;
  }
  return r;
}

void check_base(int base) {
  if (base < 2) throw InputError("BS(1,n) needs n >= 2");
}

}  // namespace

BS1nElement bs1n_make(int base, std::int64_t num, int exp, std::int64_t shift) {
  check_base(base);
  if (exp < 0) {
    num = checked_mul(num, checked_pow(base, -exp));
    exp = 0;
  }
  if (num == 0) exp = 0;
  while (exp > 0 && num % base == 0) {
    num /= base;
    --exp;
  }
  return {num, exp, shift, base};
}

BS1nElement bs1n_multiply(const BS1nElement& a, const BS1nElement& b) {
  if (a.base != b.base) throw InputError("BS(1,n) base mismatch");
  const int base = a.base;
  // n^-s q' = b.num / n^(b.exp + s)
  const std::int64_t s = a.shift;
  if (s > 1000 || s < -1000) throw std::overflow_error("BS(1,n) shift out of range");
  const BS1nElement term = bs1n_make(base, b.num, b.exp + static_cast<int>(s), 0);
  const int e = std::max(a.exp, term.exp);
  const std::int64_t num = checked_add(checked_mul(a.num, checked_pow(base, e - a.exp)),
                                       checked_mul(term.num, checked_pow(base, e - term.exp)));
  return bs1n_make(base, num, e, checked_add(a.shift, b.shift));
}

BS1nElement bs1n_inverse(const BS1nElement& a) {
  if (a.shift > 1000 || a.shift < -1000) throw std::overflow_error("BS(1,n) shift out of range");
  return bs1n_make(a.base, checked_sub(std::int64_t{0}, a.num), a.exp - static_cast<int>(a.shift),
                   checked_sub(std::int64_t{0}, a.shift));
}

BS1nKey bs1n_conjugacy_key(const BS1nElement& g) {
  const std::int64_t n = g.base;
  if (g.shift == 0) {
    std::int64_t u = g.num;
    if (u != 0)
      while (u % n == 0) u /= n;
    return {0, u};
  }
  const int span = static_cast<int>(g.shift < 0 ? -g.shift : g.shift);
  const std::int64_t modulus = checked_pow(n, span) - 1;
  if (modulus == 1) return {g.shift, 0};
  // n^-1 ≡ n^(span-1) (mod n^span - 1)
  const std::int64_t n_inv = powmod(n, span - 1, modulus);
  const std::int64_t residue = mulmod(floor_mod(g.num, modulus), powmod(n_inv, g.exp, modulus), modulus);
  std::int64_t best = residue, current = residue;
  for (int j = 1; j < span; ++j) {
    current = mulmod(current, n, modulus);
    best = std::min(best, current);
  }
  return {g.shift, best};
}

PowerLength bs1n_power_length(std::int64_t k, int base, std::size_t element_cap) {
  check_base(base);
  if (k < 1) throw InputError("power length needs k >= 1");
  PowerLength out;
  std::int64_t rest = k;
  for (int t = 0; rest > 0; ++t, rest /= base) {
    const auto digit = static_cast<int>(rest % base);
    if (digit != 0) out.bound += 2 * t + digit;
  }
  // Meet in the middle: at the first radius r admitting a split x · (x^-1 g)
  // with both halves in B(r), the minimal split length is the geodesic length.
  const BS1n group(base);
  const auto target = group.a_power(k);
  EngineConfig cfg;
  cfg.element_cap = element_cap;
  cfg.threads = 1;
  for (int r = 0; 2 * r <= out.bound + 1; ++r) {
    auto ball = Ball<BS1nElement>::grow(group, r, cfg);
    if (ball.truncated()) return out;
    std::optional<int> best;
    const auto elems = ball.elements();
    for (std::size_t i = 0; i < elems.size(); ++i) {
      auto rest_len = ball.length_of(bs1n_multiply(bs1n_inverse(elems[i]), target));
      if (!rest_len) continue;
      const int total = ball.length(i) + *rest_len;
      if (!best || total < *best) best = total;
    }
    if (best) {
      out.exact = best;
      return out;
    }
  }
  return out;
}

BS1n::BS1n(int base) : base_(base) {
  check_base(base);
  generators_ = {{"a", a()}, {"a'", bs1n_inverse(a())}, {"b", b()}, {"b'", bs1n_inverse(b())}};
}

std::string to_string(const BS1nElement& g) {
  std::string q = std::to_string(g.num);
  if (g.exp > 0) q += "/" + std::to_string(g.base) + "^" + std::to_string(g.exp);
  return "(" + q + "," + std::to_string(g.shift) + ")";
}

}  // namespace congrowth::groups
