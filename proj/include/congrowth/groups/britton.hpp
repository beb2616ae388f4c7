#pragma once

// BS(m,n) = <a, t | t^-1 a^m t = a^n> as an HNN extension of <a> with
// associated subgroups A = <a^m>, B = <a^n>. Elements are kept in Britton
// normal form
//   a^k0 t^e1 a^k1 t^e2 ... t^er a^tail,
// pinch-free, with k_{i-1} in [0, m) before t and in [0, n) before t^-1.

#include <compare>
#include <cstdint>
#include <functional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "congrowth/engine.hpp"
#include "congrowth/word.hpp"

namespace congrowth::groups {

/// Alphabet {a, t} with inverses; a is letter 1, t is letter 2.
const Alphabet& britton_alphabet();
inline constexpr Letter kLetterA = 1;
inline constexpr Letter kLetterT = 2;

struct BrittonSyllable {
  std::int64_t a_exp = 0;
  int t_sign = 1;

  friend auto operator<=>(const BrittonSyllable&, const BrittonSyllable&) = default;
  friend bool operator==(const BrittonSyllable&, const BrittonSyllable&) = default;
};

struct BrittonWord {
  int m = 1, n = 1;
  std::vector<BrittonSyllable> syllables;
  std::int64_t tail = 0;

  friend auto operator<=>(const BrittonWord&, const BrittonWord&) = default;
  friend bool operator==(const BrittonWord&, const BrittonWord&) = default;

  void push_a(std::int64_t k);
  void push_t(int sign);
  /// Letter word of the normal form.
  Word word() const;
  std::string str() const;
};

/// Fully pinch-reduced canonical word; equal outputs iff equal in BS(m,n).
BrittonWord britton_reduce(std::span<const Letter> w, int m, int n);
BrittonWord britton_multiply(const BrittonWord& x, const BrittonWord& y);
BrittonWord britton_inverse(const BrittonWord& x);

/// Independent word-problem check: repeatedly free-reduces and removes pinches
/// t^-1 a^cm t → a^cn and t a^cn t^-1 → a^cm anywhere in the word; by
/// Britton's lemma the word is trivial iff this ends with the empty word.
bool britton_rewrites_to_identity(std::span<const Letter> w, int m, int n);

class BSmn {
 public:
  using element_type = BrittonWord;

  BSmn(int m, int n);

  element_type identity() const { return BrittonWord{m_, n_, {}, 0}; }
  element_type multiply(const element_type& x, const element_type& y) const { return britton_multiply(x, y); }
  element_type invert(const element_type& x) const { return britton_inverse(x); }
  const std::vector<Generator<element_type>>& generators() const { return generators_; }
  std::string name() const { return "bsmn:" + std::to_string(m_) + ":" + std::to_string(n_); }
  element_type element(std::span<const Letter> w) const { return britton_reduce(w, m_, n_); }

 private:
  int m_, n_;
  std::vector<Generator<element_type>> generators_;
};

/// a ∉ AB ∪ BA in H = <a> ≅ Z. Here AB = BA = gcd(m,n)Z, so this holds iff
/// gcd(m, n) > 1.
bool hnn_instance_admissible(int m, int n);

/// Positive words over the blocks {t, ta} of letter length <= max_length.
std::vector<Word> hnn_witness_words(int max_length);

/// Cyclic normal forms of hnn_witness_words(max_length). Throws
/// UnsupportedError when the instance is not admissible.
std::set<CyclicWord> hnn_witness_classes(int m, int n, int max_length);

/// |hnn_witness_classes(m, n, L)| for L = 1..max_length.
std::vector<std::size_t> hnn_witness_counts(int m, int n, int max_length);

}  // namespace congrowth::groups

template <>
struct std::hash<congrowth::groups::BrittonWord> {
  std::size_t operator()(const congrowth::groups::BrittonWord& w) const noexcept {
    std::size_t h = std::hash<std::int64_t>{}(w.tail) ^ (static_cast<std::size_t>(w.m) << 40) ^
                    (static_cast<std::size_t>(w.n) << 48);
    for (const auto& s : w.syllables)
      h = h * 0x9E3779B97F4A7C15ull + std::hash<std::int64_t>{}(s.a_exp * 2 + (s.t_sign > 0 ? 1 : 0));
    return h;
  }
};
