#pragma once

// Equality of words in the semigroup given by a presentation ("u = v modulo
// P"). Linear invariants certify inequality; a budgeted bidirectional search
// over the rewriting graph certifies equality, or inequality when one side's
// component is exhausted.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "congrowth/diagram/presentation.hpp"

namespace congrowth::diagram {

enum class Verdict { equivalent, inequivalent, unknown };

class WordEquivalence {
 public:
  explicit WordEquivalence(PresentationPtr p, std::size_t budget = 100'000);

  const PresentationPtr& presentation() const { return presentation_; }
  std::size_t budget() const { return budget_; }

  /// Inequality witnessed by a linear functional on letter counts that every
  /// relation preserves.
  bool separated_by_invariants(const Word& u, const Word& v) const;
  Verdict compare(const Word& u, const Word& v) const;

  /// Class handle of w, assigning ids 0, 1, ... in order of first sight.
  /// Empty when some comparison against an existing class is undecided.
  std::optional<std::int64_t> handle(const Word& w);
  std::size_t class_count() const { return representatives_.size(); }
  const std::vector<Word>& representatives() const { return representatives_; }

 private:
  PresentationPtr presentation_;
  std::size_t budget_;
  Eigen::MatrixXd invariants_;  // columns span the functionals
  std::vector<Word> representatives_;
  std::map<Word, std::optional<std::int64_t>> cache_;
};

}  // namespace congrowth::diagram
