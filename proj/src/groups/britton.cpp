#include "congrowth/groups/britton.hpp"

#include <numeric>

#include "congrowth/checked.hpp"
#include "congrowth/errors.hpp"

namespace congrowth::groups {

const Alphabet& britton_alphabet() {
  static const Alphabet alphabet = Alphabet::from_letters("at", true);
  return alphabet;
}

void BrittonWord::push_a(std::int64_t k) { tail = checked_add(tail, k); }

void BrittonWord::push_t(int sign) {
  if (sign > 0) {
    if (!syllables.empty() && syllables.back().t_sign < 0 && tail % m == 0) {
      tail = checked_add(syllables.back().a_exp, checked_mul(tail / m, std::int64_t{n}));
      syllables.pop_back();
    } else {
      syllables.push_back({floor_mod<std::int64_t>(tail, m), 1});
      tail = checked_mul(floor_div<std::int64_t>(tail, m), std::int64_t{n});
    }
  } else {
    if (!syllables.empty() && syllables.back().t_sign > 0 && tail % n == 0) {
      tail = checked_add(syllables.back().a_exp, checked_mul(tail / n, std::int64_t{m}));
      syllables.pop_back();
    } else {
      syllables.push_back({floor_mod<std::int64_t>(tail, n), -1});
      tail = checked_mul(floor_div<std::int64_t>(tail, n), std::int64_t{m});
    }
  }
}

namespace {

void append_power(Word& w, Letter x, std::int64_t k) {
  for (std::int64_t i = 0; i < (k < 0 ? -k : k); ++i) w.push_back(k < 0 ? invert(x) : x);
}

void check_parameters(int m, int n) {
  if (m < 1 || n < 1) throw InputError("BS(m,n) needs m, n >= 1");
}

}  // namespace

Word BrittonWord::word() const {
  Word w;
  for (const auto& s : syllables) {
    append_power(w, kLetterA, s.a_exp);
    w.push_back(s.t_sign > 0 ? kLetterT : invert(kLetterT));
  }
  append_power(w, kLetterA, tail);
  return w;
}

std::string BrittonWord::str() const {
  std::string out;
  auto power = [&](std::int64_t k) {
    if (k == 0) return;
    out += "a";
    if (k != 1) out += "^" + std::to_string(k);
    out += " ";
  };
  for (const auto& s : syllables) {
    power(s.a_exp);
    out += s.t_sign > 0 ? "t " : "t' ";
  }
  power(tail);
  if (out.empty()) return "e";
  out.pop_back();
  return out;
}

BrittonWord britton_reduce(std::span<const Letter> w, int m, int n) {
  check_parameters(m, n);
  britton_alphabet().validate(w);
  BrittonWord out{m, n, {}, 0};
  for (Letter x : w) {
    if (letter_index(x) == 0)
      out.push_a(x > 0 ? 1 : -1);
    else
      out.push_t(x > 0 ? 1 : -1);
  }
  return out;
}

BrittonWord britton_multiply(const BrittonWord& x, const BrittonWord& y) {
  if (x.m != y.m || x.n != y.n) throw InputError("BS(m,n) parameter mismatch");
  BrittonWord out = x;
  for (const auto& s : y.syllables) {
    out.push_a(s.a_exp);
    out.push_t(s.t_sign);
  }
  out.push_a(y.tail);
  return out;
}

BrittonWord britton_inverse(const BrittonWord& x) {
  BrittonWord out{x.m, x.n, {}, 0};
  out.push_a(-x.tail);
  for (auto it = x.syllables.rbegin(); it != x.syllables.rend(); ++it) {
    out.push_t(-it->t_sign);
    out.push_a(-it->a_exp);
  }
  return out;
}

bool britton_rewrites_to_identity(std::span<const Letter> input, int m, int n) {
  check_parameters(m, n);
  const auto& alphabet = britton_alphabet();
  Word w = free_reduce(alphabet, input);
  for (bool changed = true; changed;) {
    changed = false;
    for (std::size_t i = 0; i < w.size() && !changed; ++i) {
      if (letter_index(w[i]) != 1) continue;
      std::size_t j = i + 1;
      std::int64_t c = 0;
      while (j < w.size() && letter_index(w[j]) == 0) c += w[j++] > 0 ? 1 : -1;
      if (j == w.size() || w[j] != invert(w[i])) continue;
      // w[i] = t^-1 ... t needs c ≡ 0 (mod m); w[i] = t ... t^-1 needs c ≡ 0 (mod n).
      const bool opens_inverse = w[i] < 0;
      const std::int64_t div = opens_inverse ? m : n;
      if (c % div != 0) continue;
      const std::int64_t image = c / div * (opens_inverse ? n : m);
      Word replaced(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      append_power(replaced, kLetterA, image);
      replaced.insert(replaced.end(), w.begin() + static_cast<std::ptrdiff_t>(j + 1), w.end());
      w = free_reduce(alphabet, replaced);
      changed = true;
    }
  }
  return w.empty();
}

BSmn::BSmn(int m, int n) : m_(m), n_(n) {
  check_parameters(m, n);
  const Word a{kLetterA}, ai{congrowth::invert(kLetterA)}, t{kLetterT}, ti{congrowth::invert(kLetterT)};
  generators_ = {{"a", element(a)}, {"a'", element(ai)}, {"t", element(t)}, {"t'", element(ti)}};
}

bool hnn_instance_admissible(int m, int n) {
  check_parameters(m, n);
  return std::gcd(m, n) != 1;
}

std::vector<Word> hnn_witness_words(int max_length) {
  if (max_length < 0) throw InputError("witness length must be nonnegative");
  std::vector<Word> out;
  // Words grouped by length: extend every word of length L-1 by t and of
  // length L-2 by ta.
  std::vector<std::vector<Word>> by_length(static_cast<std::size_t>(max_length) + 1);
  by_length[0] = {Word{}};
  for (int len = 1; len <= max_length; ++len) {
    auto& bucket = by_length[static_cast<std::size_t>(len)];
    for (const auto& w : by_length[static_cast<std::size_t>(len - 1)]) {
      auto v = w;
      v.push_back(kLetterT);
      bucket.push_back(std::move(v));
    }
    if (len >= 2)
      for (const auto& w : by_length[static_cast<std::size_t>(len - 2)]) {
        auto v = w;
        v.push_back(kLetterT);
        v.push_back(kLetterA);
        bucket.push_back(std::move(v));
      }
    out.insert(out.end(), bucket.begin(), bucket.end());
  }
  return out;
}

std::set<CyclicWord> hnn_witness_classes(int m, int n, int max_length) {
  if (!hnn_instance_admissible(m, n))
    throw UnsupportedError("BS(" + std::to_string(m) + "," + std::to_string(n) +
                           "): a lies in AB ∪ BA, the witness family certifies nothing");
  std::set<CyclicWord> classes;
  for (const auto& w : hnn_witness_words(max_length)) classes.insert(cyclic_normal_form(britton_alphabet(), w));
  return classes;
}

std::vector<std::size_t> hnn_witness_counts(int m, int n, int max_length) {
  if (!hnn_instance_admissible(m, n))
    throw UnsupportedError("BS(" + std::to_string(m) + "," + std::to_string(n) + ") is not an admissible instance");
  std::set<CyclicWord> classes;
  std::vector<std::size_t> counts;
  std::vector<Word> words = hnn_witness_words(max_length);
  std::size_t next = 0;
  for (int len = 1; len <= max_length; ++len) {
    while (next < words.size() && static_cast<int>(words[next].size()) <= len)
      classes.insert(cyclic_normal_form(britton_alphabet(), words[next++]));
    counts.push_back(classes.size());
  }
  return counts;
}

}  // namespace congrowth::groups
