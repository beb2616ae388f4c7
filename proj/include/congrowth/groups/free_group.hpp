#pragma once

#include <functional>
#include <span>
#include <string>
#include <vector>

#include "congrowth/engine.hpp"
#include "congrowth/word.hpp"

namespace congrowth::groups {

struct FreeWord {
  Word letters;  // freely reduced

  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;
  friend bool operator==(const FreeWord&, const FreeWord&) = default;
};

/// Free group on `rank` generators named a, b, c, ... Elements are freely
/// reduced words; conjugacy classes are cyclic words of cyclically reduced
/// representatives.
class FreeGroup {
 public:
  using element_type = FreeWord;
  using conjugacy_key_type = FreeWord;
  static constexpr bool conjugacy_key_complete = true;

  explicit FreeGroup(int rank);

  int rank() const { return static_cast<int>(alphabet_.size()); }
  const Alphabet& alphabet() const { return alphabet_; }
  element_type identity() const { return {}; }
  element_type multiply(const element_type& x, const element_type& y) const;
  element_type invert(const element_type& x) const { return {inverse(x.letters)}; }
  const std::vector<Generator<element_type>>& generators() const { return generators_; }
  /// Least rotation of the cyclic reduction (empty for the identity).
  conjugacy_key_type conjugacy_key(const element_type& x) const;
  std::string name() const { return "free:" + std::to_string(rank()); }
  element_type element(std::span<const Letter> w) const { return {free_reduce(alphabet_, w)}; }

 private:
  Alphabet alphabet_;
  std::vector<Generator<element_type>> generators_;
};

}  // namespace congrowth::groups

template <>
struct std::hash<congrowth::groups::FreeWord> {
  std::size_t operator()(const congrowth::groups::FreeWord& w) const noexcept {
    std::size_t h = w.letters.size();
    for (auto x : w.letters) h = h * 0x9E3779B97F4A7C15ull + static_cast<std::size_t>(static_cast<std::uint32_t>(x));
    return h;
  }
};
