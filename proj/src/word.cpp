#include "congrowth/word.hpp"

#include <algorithm>

#include "congrowth/errors.hpp"

namespace congrowth {

namespace {

// Byte length of the UTF-8 sequence starting with `lead`.
std::size_t utf8_length(unsigned char lead) {
  if (lead < 0x80) return 1;
  if ((lead >> 5) == 0x6) return 2;
  if ((lead >> 4) == 0xE) return 3;
  if ((lead >> 3) == 0x1E) return 4;
  throw InputError("invalid UTF-8 lead byte");
}

std::vector<std::string> split_code_points(std::string_view text) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < text.size();) {
    const std::size_t len = utf8_length(static_cast<unsigned char>(text[i]));
    if (i + len > text.size()) throw InputError("truncated UTF-8 sequence");
    out.emplace_back(text.substr(i, len));
    i += len;
  }
  return out;
}

bool is_separator(const std::string& cp) {
  return cp == " " || cp == "\t" || cp == "\n" || cp == "\r" || cp == "." || cp == "\xC2\xB7";
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> symbols, bool with_inverses)
    : symbols_(std::move(symbols)), with_inverses_(with_inverses) {
  if (symbols_.empty()) throw InputError("alphabet must not be empty");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    const auto& s = symbols_[i];
    if (s.empty() || split_code_points(s).size() != 1)
      throw InputError("alphabet symbol must be a single code point: '" + s + "'");
    if (s == "'" || is_separator(s)) throw InputError("reserved character used as alphabet symbol");
    for (std::size_t j = 0; j < i; ++j)
      if (symbols_[j] == s) throw InputError("duplicate alphabet symbol '" + s + "'");
  }
}

Alphabet Alphabet::from_letters(std::string_view letters, bool with_inverses) {
  return Alphabet(split_code_points(letters), with_inverses);
}

bool Alphabet::contains(Letter x) const {
  if (x == 0) return false;
  if (x < 0 && !with_inverses_) return false;
  return letter_index(x) < symbols_.size();
}

Letter Alphabet::letter(std::string_view symbol) const {
  for (std::size_t i = 0; i < symbols_.size(); ++i)
    if (symbols_[i] == symbol) return letter_at(i);
  throw InputError("symbol '" + std::string(symbol) + "' is not in the alphabet");
}

void Alphabet::validate(std::span<const Letter> w) const {
  for (Letter x : w)
    if (!contains(x)) throw InputError("letter code " + std::to_string(x) + " is outside the alphabet");
}

Word Alphabet::parse(std::string_view text) const {
  Word w;
  for (const auto& cp : split_code_points(text)) {
    if (is_separator(cp)) continue;
    if (cp == "'") {
      if (!with_inverses_) throw InputError("inverse marker used over an alphabet without inverses");
      if (w.empty() || w.back() < 0) throw InputError("dangling inverse marker in '" + std::string(text) + "'");
      w.back() = invert(w.back());
      continue;
    }
    w.push_back(letter(cp));
  }
  return w;
}

std::string Alphabet::format(std::span<const Letter> w) const {
  validate(w);
  std::string out;
  for (Letter x : w) {
    out += symbols_[letter_index(x)];
    if (x < 0) out += '\'';
  }
  return out;
}

std::uint32_t Alphabet::rank(Letter x) const {
  const auto i = static_cast<std::uint32_t>(letter_index(x));
  return with_inverses_ ? 2 * i + (x < 0 ? 1 : 0) : i;
}

Word inverse(std::span<const Letter> w) {
  Word out(w.rbegin(), w.rend());
  for (auto& x : out) x = invert(x);
  return out;
}

Word concat(std::span<const Letter> u, std::span<const Letter> v) {
  Word out(u.begin(), u.end());
  out.insert(out.end(), v.begin(), v.end());
  return out;
}

Word rotate(std::span<const Letter> w, std::size_t k) {
  Word out(w.begin(), w.end());
  if (!out.empty()) std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(k % out.size()), out.end());
  return out;
}

Word free_reduce(const Alphabet& alphabet, std::span<const Letter> w) {
  alphabet.validate(w);
  if (!alphabet.has_inverses()) throw InputError("free reduction needs an alphabet with inverses");
  Word stack;
  stack.reserve(w.size());
  for (Letter x : w) {
    if (!stack.empty() && stack.back() == invert(x))
      stack.pop_back();
    else
      stack.push_back(x);
  }
  return stack;
}

Word cyclic_reduce(std::span<const Letter> reduced) {
  std::size_t lo = 0, hi = reduced.size();
  while (hi - lo >= 2 && reduced[lo] == invert(reduced[hi - 1])) {
    ++lo;
    --hi;
  }
  return Word(reduced.begin() + static_cast<std::ptrdiff_t>(lo), reduced.begin() + static_cast<std::ptrdiff_t>(hi));
}

std::size_t least_rotation(std::span<const Letter> s, const std::function<bool(Letter, Letter)>& less) {
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const Letter a = s[(i + k) % n];
    const Letter b = s[(j + k) % n];
    if (!less(a, b) && !less(b, a)) {
      ++k;
      continue;
    }
    if (less(b, a))
      i += k + 1;
    else
      j += k + 1;
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

CyclicWord cyclic_normal_form(const Alphabet& alphabet, std::span<const Letter> w) {
  if (w.empty()) throw InputError("cyclic normal form of the empty word");
  alphabet.validate(w);
  const auto k = least_rotation(w, [&](Letter a, Letter b) { return alphabet.rank(a) < alphabet.rank(b); });
  return CyclicWord(rotate(w, k));
}

CyclicWord cyclic_normal_form(std::span<const Letter> w) {
  if (w.empty()) throw InputError("cyclic normal form of the empty word");
  return CyclicWord(rotate(w, least_rotation(w)));
}

std::uint64_t count_compositions(int n) {
  if (n < 1) throw InputError("compositions need n >= 1");
  if (n > 64) throw InputError("composition count overflows 64 bits");
  return std::uint64_t{1} << (n - 1);
}

Compositions::Compositions(int n) : n_(n) {
  if (n > 62) throw InputError("composition enumeration limited to n <= 62");
  total_ = count_compositions(n);
}

void Compositions::iterator::fill() {
  parts_.clear();
  if (n_ < 1 || mask_ >= (std::uint64_t{1} << (n_ - 1))) return;
  int run = 1;
  for (int j = 0; j < n_ - 1; ++j) {
    if (mask_ >> j & 1) {
      parts_.push_back(run);
      run = 1;
    } else {
      ++run;
    }
  }
  parts_.push_back(run);
}

}  // namespace congrowth
