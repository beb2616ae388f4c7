#include "congrowth/groups/lamp.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "congrowth/errors.hpp"

namespace congrowth::groups {

std::int64_t PermShiftElement::image(std::int64_t x) const {
  auto it = std::lower_bound(perm.begin(), perm.end(), x, [](const auto& e, std::int64_t v) { return e.first < v; });
  return it != perm.end() && it->first == x ? it->second : x;
}

std::vector<std::int64_t> PermShiftElement::support() const {
  std::vector<std::int64_t> out;
  for (const auto& e : perm) out.push_back(e.first);
  return out;
}

namespace {

PermShiftElement from_function(std::vector<std::int64_t> candidates, std::int64_t shift,
                               const std::function<std::int64_t(std::int64_t)>& f) {
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  PermShiftElement out;
  out.shift = shift;
  for (auto y : candidates)
    if (auto z = f(y); z != y) out.perm.emplace_back(y, z);
  return out;
}

}  // namespace

// x·(s,p)·(s',p') = p'(p(x+s) + s'), which is q(x + s + s') with
// q(y) = p'(p(y - s') + s').
PermShiftElement permshift_multiply(const PermShiftElement& x, const PermShiftElement& y) {
  std::vector<std::int64_t> candidates;
  for (const auto& e : x.perm) candidates.push_back(e.first + y.shift);
  for (const auto& e : y.perm) candidates.push_back(e.first);
  return from_function(std::move(candidates), x.shift + y.shift,
                       [&](std::int64_t v) { return y.image(x.image(v - y.shift) + y.shift); });
}

PermShiftElement permshift_inverse(const PermShiftElement& x) {
  std::map<std::int64_t, std::int64_t> inv;
  for (const auto& [a, b] : x.perm) inv[b] = a;
  PermShiftElement out;
  out.shift = -x.shift;
  for (const auto& [b, a] : inv) out.perm.emplace_back(b - x.shift, a - x.shift);
  return out;
}

PermShiftElement permshift_transposition(std::int64_t i, std::int64_t j) {
  if (i == j) return {};
  if (i > j) std::swap(i, j);
  return {{{i, j}, {j, i}}, 0};
}

PermShiftElement permshift_translation(std::int64_t s) { return {{}, s}; }

const Alphabet& lamp_alphabet() {
  static const Alphabet alphabet = Alphabet::from_letters("ab", true);
  return alphabet;
}

namespace {

void check_parts(std::span<const int> parts) {
  if (parts.empty()) throw InputError("witness needs at least one part");
  for (int p : parts)
    if (p <= 0 || p % 2 != 0) throw InputError("witness parts must be positive and even, got " + std::to_string(p));
}

}  // namespace

Word lamp_word(std::span<const int> parts) {
  check_parts(parts);
  Word w;
  for (int p : parts) {
    w.insert(w.end(), static_cast<std::size_t>(p), 2);
    w.push_back(1);
  }
  return w;
}

int lamp_word_length(std::span<const int> parts) {
  check_parts(parts);
  int total = static_cast<int>(parts.size());
  for (int p : parts) total += p;
  return total;
}

int lamp_quoted_length_bound(std::span<const int> parts) { return lamp_word_length(parts) - 1; }

PermShiftElement lamp_witness(std::span<const int> parts) {
  check_parts(parts);
  const LampGroup group;
  const auto g = group.element(lamp_word(parts));

  // Closed form: b^N times the commuting transpositions (t+1, t+2) over the
  // tail sums t = n_k + ... + n_j.
  std::int64_t total = 0;
  for (int p : parts) total += p;
  PermShiftElement expected = permshift_translation(total);
  std::int64_t tail = 0;
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    expected = permshift_multiply(expected, permshift_transposition(tail + 1, tail + 2));
    tail += *it;
  }
  if (g != expected) throw std::logic_error("witness evaluation disagrees with its closed form");
  if (!lamp_in_window(g)) throw std::logic_error("witness violates the support window");
  return g;
}

bool lamp_in_window(const PermShiftElement& g) {
  if (g.shift < 1) return false;
  return std::all_of(g.perm.begin(), g.perm.end(),
                     [&](const auto& e) { return e.first >= 1 && e.first <= g.shift + 1; });
}

std::vector<int> lamp_witness_parts(const PermShiftElement& g) {
  if (!lamp_in_window(g) || g.perm.size() % 2 != 0) return {};
  std::vector<std::int64_t> tails;
  for (std::size_t i = 0; i < g.perm.size(); i += 2) {
    const auto [x, y] = g.perm[i];
    const auto [y2, x2] = g.perm[i + 1];
    if (y != x + 1 || y2 != y || x2 != x || (x - 1) % 2 != 0) return {};
    tails.push_back(x - 1);
  }
  if (tails.empty() || tails.front() != 0) return {};
  // tails = 0 < T1 < ... < Tk; parts read back from n_k to n_0.
  std::vector<int> parts;
  parts.push_back(static_cast<int>(g.shift - tails.back()));
  for (std::size_t i = tails.size() - 1; i > 0; --i) parts.push_back(static_cast<int>(tails[i] - tails[i - 1]));
  for (int p : parts)
    if (p <= 0 || p % 2 != 0) return {};
  return parts;
}

std::vector<int> lamp_canonical_rotation(std::span<const int> parts) {
  std::vector<int> best(parts.begin(), parts.end());
  std::vector<int> cur = best;
  for (std::size_t i = 1; i < parts.size(); ++i) {
    std::rotate(cur.begin(), cur.begin() + 1, cur.end());
    best = std::max(best, cur);
  }
  return best;
}

PermShiftElement lamp_witness_key(const PermShiftElement& g) {
  if (!lamp_in_window(g)) throw UnsupportedError("element outside the support window; use the oracle");
  auto parts = lamp_witness_parts(g);
  if (parts.empty()) throw UnsupportedError("element is not a witness word; use the oracle");
  if (lamp_witness(parts) != g) throw std::logic_error("witness part decoding is not faithful");
  return lamp_witness(lamp_canonical_rotation(parts));
}

std::vector<std::vector<int>> lamp_witness_family(int max_sum) {
  std::vector<std::vector<int>> out;
  for (int half = 1; 2 * half <= max_sum; ++half)
    for (const auto& c : Compositions(half)) {
      std::vector<int> parts;
      for (int p : c) parts.push_back(2 * p);
      if (lamp_canonical_rotation(parts) == parts) out.push_back(std::move(parts));
    }
  // Compositions come grouped by sum already.
  auto lo = out.begin();
  while (lo != out.end()) {
    auto sum = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
    auto hi = std::find_if(lo, out.end(), [&](const auto& v) { return sum(v) != sum(*lo); });
    std::sort(lo, hi);
    lo = hi;
  }
  return out;
}

LampGroup::LampGroup() {
  const auto b = permshift_translation(1);
  generators_ = {{"a", permshift_transposition(1, 2)}, {"b", b}, {"b'", permshift_inverse(b)}};
}

PermShiftElement LampGroup::element(std::span<const Letter> w) const {
  lamp_alphabet().validate(w);
  PermShiftElement g;
  for (Letter x : w) {
    const PermShiftElement& gen = letter_index(x) == 0 ? generators_[0].element : (x > 0 ? generators_[1].element
                                                                                         : generators_[2].element);
    g = permshift_multiply(g, gen);
  }
  return g;
}

std::string to_string(const PermShiftElement& g) {
  std::string out = "b^" + std::to_string(g.shift) + " [";
  bool first = true;
  for (const auto& [x, y] : g.perm) {
    if (!first) out += " ";
    first = false;
    out += std::to_string(x) + "->" + std::to_string(y);
  }
  return out + "]";
}

}  // namespace congrowth::groups
