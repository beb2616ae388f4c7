#include <gtest/gtest.h>

#include <random>

#include "congrowth/diagram/conjugacy.hpp"
#include "congrowth/diagram/families.hpp"
#include "congrowth/errors.hpp"
#include "random_diagrams.hpp"

using namespace congrowth;
using namespace congrowth::diagram;

namespace {

PresentationPtr W() { return wreath_presentation(); }

// (a -> ab) ∘ (ε(a) + π) ∘ (ab -> a): reduced, but its square has a dipole
// across the seam.
Diagram seam_example() {
  const auto p = W();
  const auto up = Diagram::cell(p, 0, Direction::inverse);
  const auto mid = sum(Diagram::trivial(p, p->word("a")), Diagram::cell(p, 1));
  return multiply(multiply(up, mid), Diagram::cell(p, 0));
}

}  // namespace

TEST(AbsolutelyReduced, Examples) {
  const auto pi = Diagram::cell(W(), 1);
  EXPECT_TRUE(is_absolutely_reduced(pi));
  EXPECT_TRUE(is_absolutely_reduced(Diagram::trivial(W(), W()->word("ac"))));
  const auto s = seam_example();
  EXPECT_TRUE(is_reduced(s));
  EXPECT_FALSE(is_absolutely_reduced(s));
  EXPECT_THROW(is_absolutely_reduced(Diagram::cell(thompson_presentation(), 0)), InputError);
  EXPECT_THROW(is_absolutely_reduced(pi, 0), InputError);
}

TEST(CyclicReduce, SeamExampleReducesToTheLoopCell) {
  const auto s = seam_example();
  const auto cr = cyclic_reduce(s);
  EXPECT_EQ(cr.reduced.cell_count(), 1u);
  EXPECT_EQ(cr.reduced.top(), W()->word("ab"));
  EXPECT_EQ(cr.strips, 1);
  EXPECT_EQ(reduce(multiply(multiply(inverse(cr.conjugator), cr.reduced), cr.conjugator)), s);
}

TEST(CyclicReduce, AbsolutelyReducedInputIsUnchanged) {
  // x0 ends with the merge its square cancels against its opening split.
  const auto x0 = thompson_x0();
  EXPECT_FALSE(is_absolutely_reduced(x0, 2));
  const auto core = cyclic_reduce(x0);
  EXPECT_EQ(core.reduced.cell_count(), 2u);
  EXPECT_EQ(core.strips, 1);
  ASSERT_TRUE(is_absolutely_reduced(core.reduced, 6));
  const auto again = cyclic_reduce(core.reduced);
  EXPECT_EQ(again.reduced, core.reduced);
  EXPECT_EQ(again.conjugator, Diagram::trivial(x0.presentation(), core.reduced.top()));
  EXPECT_EQ(again.strips, 0);
}

TEST(CyclicReduce, DipoleThatOnlyAppearsInTheCube) {
  // Over abbc: the square is reduced but a b-cell on the bottom meets its
  // mirror two copies further down through untouched edges.
  const auto p = W();
  const auto d = Diagram::from_derivation(p, p->word("abbc"),
                                          std::vector<Step>{{1, Direction::inverse, 1},
                                                            {2, Direction::inverse, 3},
                                                            {1, Direction::inverse, 1},
                                                            {1, Direction::forward, 3},
                                                            {0, Direction::forward, 0}});
  ASSERT_TRUE(d.is_spherical());
  ASSERT_TRUE(is_reduced(d));
  EXPECT_TRUE(is_absolutely_reduced(d, 2));
  EXPECT_FALSE(is_absolutely_reduced(d, 3));
  const auto cr = cyclic_reduce(d);
  EXPECT_LT(cr.reduced.cell_count(), d.cell_count());
  EXPECT_TRUE(is_absolutely_reduced(cr.reduced, static_cast<int>(cr.reduced.top().size()) + 2));
  EXPECT_EQ(reduce(multiply(multiply(inverse(cr.conjugator), cr.reduced), cr.conjugator)), d);
}

TEST(CyclicReduce, ConjugatesShrinkBackAndSatisfyTheIdentity) {
  const auto g = DiagramGroup::thompson();
  std::mt19937_64 rng(91);
  for (int i = 0; i < 100; ++i) {
    const auto core = cyclic_reduce(testing_support::random_element(g, 1 + i % 5, rng)).reduced;
    if (core.top() != g.base()) continue;
    const auto c = testing_support::random_element(g, 1 + i % 4, rng);
    const auto conj = group_multiply(group_multiply(inverse(c), core), c);
    const auto cr = cyclic_reduce(conj);
    EXPECT_LE(cr.reduced.cell_count(), conj.cell_count());
    EXPECT_EQ(reduce(multiply(multiply(inverse(cr.conjugator), cr.reduced), cr.conjugator)), conj);
  }
}

TEST(CyclicReduce, OutputIsAbsolutelyReducedAtDepthFour) {
  std::mt19937_64 rng(92);
  for (const auto& g : {DiagramGroup::thompson(), DiagramGroup::wreath()})
    for (int i = 0; i < 300; ++i) {
      const auto d = testing_support::random_element(g, 1 + i % 9, rng);
      const auto cr = cyclic_reduce(d);
      EXPECT_TRUE(is_absolutely_reduced(cr.reduced, 2));
      EXPECT_TRUE(is_absolutely_reduced(cr.reduced, 4));
      EXPECT_TRUE(is_absolutely_reduced(cr.reduced, static_cast<int>(cr.reduced.top().size()) + 2));
      EXPECT_EQ(reduce(multiply(multiply(inverse(cr.conjugator), cr.reduced), cr.conjugator)), d);
    }
}

TEST(CyclicReduce, WitnessRecoversDeltaUpToComponentOrder) {
  for (const auto& parts : {std::vector<int>{1}, std::vector<int>{2, 1}, std::vector<int>{1, 3, 2}}) {
    const auto cr = cyclic_reduce(build_wrZZ_witness(parts));
    std::vector<int> counts;
    for (const auto& c : sum_decompose(cr.reduced).components)
      if (!c.trivial()) counts.push_back(static_cast<int>(c.diagram.cell_count()));
    auto a = counts, b = parts;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    EXPECT_EQ(a, b);
    int sum = 0;
    for (int p : parts) sum += p;
    EXPECT_EQ(cr.reduced.cell_count(), static_cast<std::size_t>(sum));
  }
}

TEST(ConjKey, WitnessOrderMatters) {
  WordEquivalence eq(W());
  const auto k21 = diagram_conj_key(build_wrZZ_witness(std::vector<int>{2, 1}), eq);
  const auto k12 = diagram_conj_key(build_wrZZ_witness(std::vector<int>{1, 2}), eq);
  EXPECT_NE(k21, k12);
  EXPECT_TRUE(k21.determinate);
  EXPECT_EQ(k21.str(), "[e0,s2,s1,e1]");
  EXPECT_EQ(k12.str(), "[e0,s1,s2,e1]");
}

TEST(ConjKey, TrivialWordsEqualModuloThePresentation) {
  WordEquivalence eq(W());
  EXPECT_EQ(eq.compare(W()->word("ab"), W()->word("a")), Verdict::equivalent);
  EXPECT_EQ(eq.handle(W()->word("ab")), eq.handle(W()->word("a")));
  EXPECT_EQ(eq.compare(W()->word("a"), W()->word("c")), Verdict::inequivalent);
  EXPECT_TRUE(eq.separated_by_invariants(W()->word("a"), W()->word("c")));
  EXPECT_NE(eq.handle(W()->word("a")), eq.handle(W()->word("c")));
  const auto k1 = diagram_conj_key(Diagram::trivial(W(), W()->word("ab")), eq);
  const auto k2 = diagram_conj_key(Diagram::trivial(W(), W()->word("a")), eq);
  EXPECT_EQ(k1, k2);
}

TEST(ConjKey, TinyBudgetGivesUnknownNotAGuess) {
  // In {ab -> ba} the words aabb and bbaa are equal but far apart.
  const auto p = std::make_shared<const Presentation>(Presentation::parse("ab -> ba"));
  WordEquivalence eq(p, 2);
  EXPECT_EQ(eq.compare(p->word("aabb"), p->word("bbaa")), Verdict::unknown);
  WordEquivalence roomy(p);
  EXPECT_EQ(roomy.compare(p->word("aabb"), p->word("bbaa")), Verdict::equivalent);
  EXPECT_EQ(roomy.compare(p->word("aabb"), p->word("abab")), Verdict::equivalent);
  EXPECT_EQ(roomy.compare(p->word("aab"), p->word("abb")), Verdict::inequivalent);
}

TEST(ConjKey, InvariantUnderConjugationAndCyclicReduction) {
  std::mt19937_64 rng(93);
  for (const auto& g : {DiagramGroup::thompson(), DiagramGroup::wreath()}) {
    WordEquivalence eq(g.presentation());
    for (int i = 0; i < 250; ++i) {
      const auto d = testing_support::random_element(g, 1 + i % 7, rng);
      const auto c = testing_support::random_element(g, 1 + i % 5, rng);
      const auto k = diagram_conj_key(d, eq);
      ASSERT_TRUE(k.determinate);
      EXPECT_EQ(diagram_conj_key(group_multiply(group_multiply(inverse(c), d), c), eq), k);
      EXPECT_EQ(diagram_conj_key(cyclic_reduce(d).reduced, eq), k);
    }
  }
}

TEST(ConjKey, ThompsonSquareDiffersFromGenerator) {
  WordEquivalence eq(thompson_presentation());
  const auto x0 = thompson_x0();
  EXPECT_NE(diagram_conj_key(x0, eq), diagram_conj_key(group_multiply(x0, x0), eq));
}
