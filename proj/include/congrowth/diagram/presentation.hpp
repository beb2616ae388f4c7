#pragma once

// Semigroup presentations whose relations are the cells of diagrams. A cell
// u -> v is directed: its inverse is a separate cell type, even when u = v.

#include <cstddef>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "congrowth/word.hpp"

namespace congrowth::diagram {

struct Cell {
  Word top;
  Word bottom;

  friend bool operator==(const Cell&, const Cell&) = default;
};

class Presentation {
 public:
  /// The alphabet must not have inverses; cell words must be nonempty.
  Presentation(Alphabet alphabet, std::vector<Cell> cells);

  /// One `u -> v` per line (the arrow may also be `→`); `#` starts a comment.
  /// Symbols are single code points; the alphabet is ordered by first use.
  static Presentation parse(std::string_view text);
  static Presentation load(const std::filesystem::path& path);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Cell>& cells() const { return cells_; }
  const Cell& cell(std::size_t i) const { return cells_.at(i); }
  std::size_t size() const { return cells_.size(); }

  Word word(std::string_view text) const { return alphabet_.parse(text); }
  std::string format(const Word& w) const { return alphabet_.format(w); }
  std::string format_cell(std::size_t i) const;
  std::optional<std::size_t> find_cell(const Word& top, const Word& bottom) const;

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  Alphabet alphabet_;
  std::vector<Cell> cells_;
};

using PresentationPtr = std::shared_ptr<const Presentation>;

/// {x -> xx}: DG(P, x) is Thompson's group F.
PresentationPtr thompson_presentation();
/// {ab -> a, b -> b, bc -> c}: DG(P, ac) contains Z wr Z.
PresentationPtr wreath_presentation();

}  // namespace congrowth::diagram
