#pragma once

// Words over finite alphabets: parsing, free reduction, cyclic normal forms,
// and the composition counts used by the witness families.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iterator>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace congrowth {

/// Signed letter code: +(i+1) is the i-th alphabet symbol, -(i+1) its formal
/// inverse. Zero is never a valid letter.
using Letter = std::int32_t;
using Word = std::vector<Letter>;

constexpr Letter letter_at(std::size_t index) { return static_cast<Letter>(index + 1); }
constexpr Letter invert(Letter x) { return -x; }
constexpr std::size_t letter_index(Letter x) { return static_cast<std::size_t>(x < 0 ? -x : x) - 1; }

class Alphabet {
 public:
  Alphabet() = default;
  /// Each symbol must be a single UTF-8 code point; symbols must be distinct
  /// and may not be the inverse marker `'`.
  Alphabet(std::vector<std::string> symbols, bool with_inverses);

  /// Convenience: one symbol per character of an ASCII string.
  static Alphabet from_letters(std::string_view letters, bool with_inverses);

  std::size_t size() const { return symbols_.size(); }
  bool has_inverses() const { return with_inverses_; }
  const std::string& symbol(std::size_t index) const { return symbols_.at(index); }
  const std::vector<std::string>& symbols() const { return symbols_; }

  bool contains(Letter x) const;
  Letter letter(std::string_view symbol) const;

  /// Throws InputError if any letter is foreign to the alphabet.
  void validate(std::span<const Letter> w) const;

  /// Grammar: a sequence of symbols, each optionally followed by `'` which
  /// denotes the formal inverse (only when the alphabet has inverses).
  /// ASCII whitespace and `.`/`·` separators are ignored.
  Word parse(std::string_view text) const;
  std::string format(std::span<const Letter> w) const;

  /// Position of a letter in the declared order a < a' < b < b' < ...
  std::uint32_t rank(Letter x) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> symbols_;
  bool with_inverses_ = false;
};

Word inverse(std::span<const Letter> w);
Word concat(std::span<const Letter> u, std::span<const Letter> v);
Word rotate(std::span<const Letter> w, std::size_t k);

/// Cancels adjacent x x^-1 pairs until none remain.
Word free_reduce(const Alphabet& alphabet, std::span<const Letter> w);

/// Strips inverse pairs from the two ends of a freely reduced word.
Word cyclic_reduce(std::span<const Letter> reduced);

/// Index of the lexicographically least rotation under `less` (Booth, O(n)).
std::size_t least_rotation(std::span<const Letter> w,
                           const std::function<bool(Letter, Letter)>& less = std::less<Letter>{});

/// A word up to rotation, stored as its least rotation.
class CyclicWord {
 public:
  CyclicWord() = default;
  const Word& representative() const { return rep_; }
  std::size_t size() const { return rep_.size(); }

  friend auto operator<=>(const CyclicWord&, const CyclicWord&) = default;

 private:
  friend CyclicWord cyclic_normal_form(const Alphabet&, std::span<const Letter>);
  friend CyclicWord cyclic_normal_form(std::span<const Letter>);
  explicit CyclicWord(Word rep) : rep_(std::move(rep)) {}
  Word rep_;
};

/// Least rotation in the alphabet's declared letter order. Empty → InputError.
CyclicWord cyclic_normal_form(const Alphabet& alphabet, std::span<const Letter> w);
/// Least rotation comparing raw letter codes (for positive-only words this is
/// the declared order).
CyclicWord cyclic_normal_form(std::span<const Letter> w);

/// Number of ordered compositions of n into positive parts, 2^(n-1).
/// n = 0 or n > 64 → InputError.
std::uint64_t count_compositions(int n);

/// Enumerates the compositions of n (n ≤ 62) in a fixed order: composition i
/// places a cut after position j whenever bit j of i is set.
class Compositions {
 public:
  explicit Compositions(int n);

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = std::vector<int>;
    using difference_type = std::ptrdiff_t;
    using pointer = const value_type*;
    using reference = const value_type&;

    iterator() = default;
    iterator(int n, std::uint64_t mask) : n_(n), mask_(mask) { fill(); }
    reference operator*() const { return parts_; }
    pointer operator->() const { return &parts_; }
    iterator& operator++() {
      ++mask_;
      fill();
      return *this;
    }
    iterator operator++(int) {
      auto old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) { return a.mask_ == b.mask_; }

   private:
    void fill();
    int n_ = 0;
    std::uint64_t mask_ = 0;
    std::vector<int> parts_;
  };

  iterator begin() const { return iterator(n_, 0); }
  iterator end() const { return iterator(n_, total_); }
  std::uint64_t size() const { return total_; }

 private:
  int n_;
  std::uint64_t total_;
};

}  // namespace congrowth
