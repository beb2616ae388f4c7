#include "congrowth/diagram/equivalence.hpp"

#include <set>

#include "congrowth/errors.hpp"

namespace congrowth::diagram {

namespace {

Eigen::VectorXd content(const Word& w, std::size_t letters) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(letters));
  for (Letter x : w) c(static_cast<Eigen::Index>(letter_index(x))) += 1.0;
  return c;
}

void neighbours(const Presentation& p, const Word& w, std::vector<Word>& out) {
  out.clear();
  auto rewrite = [&](const Word& from, const Word& to) {
    if (from.size() > w.size()) return;
    for (std::size_t i = 0; i + from.size() <= w.size(); ++i) {
      if (!std::equal(from.begin(), from.end(), w.begin() + static_cast<std::ptrdiff_t>(i))) continue;
      Word v(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      v.insert(v.end(), to.begin(), to.end());
      v.insert(v.end(), w.begin() + static_cast<std::ptrdiff_t>(i + from.size()), w.end());
      if (v != w) out.push_back(std::move(v));
    }
  };
  for (const auto& c : p.cells()) {
    rewrite(c.top, c.bottom);
    rewrite(c.bottom, c.top);
  }
}

}  // namespace

WordEquivalence::WordEquivalence(PresentationPtr p, std::size_t budget) : presentation_(std::move(p)), budget_(budget) {
  if (!presentation_) throw InputError("word equivalence needs a presentation");
  const auto letters = presentation_->alphabet().size();
  Eigen::MatrixXd relations(static_cast<Eigen::Index>(presentation_->size()), static_cast<Eigen::Index>(letters));
  for (std::size_t i = 0; i < presentation_->size(); ++i) {
    const auto& c = presentation_->cell(i);
    relations.row(static_cast<Eigen::Index>(i)) = (content(c.top, letters) - content(c.bottom, letters)).transpose();
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(relations);
  if (lu.rank() == 0)
    invariants_ = Eigen::MatrixXd::Identity(static_cast<Eigen::Index>(letters), static_cast<Eigen::Index>(letters));
  else if (lu.rank() == static_cast<Eigen::Index>(letters))
    invariants_ = Eigen::MatrixXd(static_cast<Eigen::Index>(letters), 0);
  else
    invariants_ = lu.kernel();
}

bool WordEquivalence::separated_by_invariants(const Word& u, const Word& v) const {
  if (invariants_.cols() == 0) return false;
  const auto letters = presentation_->alphabet().size();
  const Eigen::VectorXd diff = content(u, letters) - content(v, letters);
  const Eigen::VectorXd values = invariants_.transpose() * diff;
  return values.cwiseAbs().maxCoeff() > 1e-9 * std::max(1.0, diff.cwiseAbs().maxCoeff());
}

Verdict WordEquivalence::compare(const Word& u, const Word& v) const {
  if (u == v) return Verdict::equivalent;
  if (separated_by_invariants(u, v)) return Verdict::inequivalent;
  const auto& p = *presentation_;
  std::set<Word> seen[2] = {{u}, {v}};
  std::vector<Word> frontier[2] = {{u}, {v}};
  std::vector<Word> nbrs;
  while (!frontier[0].empty() && !frontier[1].empty()) {
    const int side = frontier[0].size() <= frontier[1].size() ? 0 : 1;
    std::vector<Word> next;
    for (const auto& w : frontier[side]) {
      neighbours(p, w, nbrs);
      for (auto& x : nbrs) {
        if (seen[1 - side].contains(x)) return Verdict::equivalent;
        if (seen[side].insert(x).second) next.push_back(std::move(x));
      }
      if (seen[0].size() + seen[1].size() > budget_) return Verdict::unknown;
    }
    frontier[side] = std::move(next);
  }
  return Verdict::inequivalent;
}

std::optional<std::int64_t> WordEquivalence::handle(const Word& w) {
  if (auto it = cache_.find(w); it != cache_.end()) return it->second;
  bool undecided = false;
  std::optional<std::int64_t> result;
  for (std::size_t i = 0; i < representatives_.size() && !result; ++i) {
    switch (compare(w, representatives_[i])) {
      case Verdict::equivalent:
        result = static_cast<std::int64_t>(i);
        break;
      case Verdict::unknown:
        undecided = true;
        break;
      case Verdict::inequivalent:
        break;
    }
  }
  if (!result && !undecided) {
    result = static_cast<std::int64_t>(representatives_.size());
    representatives_.push_back(w);
  }
  cache_.emplace(w, result);
  return result;
}

}  // namespace congrowth::diagram
