#include <gtest/gtest.h>

#include <random>
#include <set>

#include "congrowth/errors.hpp"
#include "congrowth/groups/lamp.hpp"
#include "group_laws.hpp"

using namespace congrowth;
using namespace congrowth::groups;

namespace {

// Right action of a word on a point of Z: a swaps 1 and 2, b adds 1.
std::int64_t act(const Word& w, std::int64_t x) {
  for (Letter l : w) {
    if (letter_index(l) == 0) {
      x = x == 1 ? 2 : x == 2 ? 1 : x;
    } else {
      x += l > 0 ? 1 : -1;
    }
  }
  return x;
}

Word random_word(std::size_t len, std::mt19937_64& rng) {
  const Letter letters[] = {1, 2, -2};
  std::uniform_int_distribution<int> pick(0, 2);
  Word w;
  for (std::size_t i = 0; i < len; ++i) w.push_back(letters[pick(rng)]);
  return w;
}

// g as a map, x ↦ p(x + s).
std::int64_t apply(const PermShiftElement& g, std::int64_t x) { return g.image(x + g.shift); }

}  // namespace

TEST(Lamp, GeneratorExamples) {
  const LampGroup g;
  const auto a = g.element(lamp_alphabet().parse("a"));
  const auto b = g.element(lamp_alphabet().parse("b"));
  EXPECT_EQ(g.multiply(a, a), g.identity());
  EXPECT_EQ(g.multiply(g.multiply(g.invert(b), a), b), permshift_transposition(2, 3));
  const auto bb = g.multiply(b, b);
  EXPECT_EQ(bb.shift, 2);
  EXPECT_TRUE(bb.perm.empty());
  EXPECT_TRUE(g.identity().support().empty());
}

TEST(Lamp, ElementActsLikeItsWord) {
  const LampGroup g;
  std::mt19937_64 rng(51);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(1 + i % 12, rng);
    const auto e = g.element(w);
    for (std::int64_t x = -15; x <= 15; ++x) EXPECT_EQ(apply(e, x), act(w, x));
  }
}

TEST(Lamp, PermutationIsABijectionOnItsSupport) {
  const LampGroup g;
  std::mt19937_64 rng(52);
  for (int i = 0; i < 300; ++i) {
    const auto e = g.element(random_word(12, rng));
    std::set<std::int64_t> dom, img;
    for (const auto& [x, y] : e.perm) {
      EXPECT_NE(x, y);
      dom.insert(x);
      img.insert(y);
    }
    EXPECT_EQ(dom, img);
    EXPECT_TRUE(std::is_sorted(e.perm.begin(), e.perm.end()));
  }
}

TEST(Lamp, GroupAxioms) {
  const LampGroup g;
  EXPECT_TRUE(testing_support::generators_closed_under_inverse(g));
  std::mt19937_64 rng(53);
  EXPECT_EQ(testing_support::group_axiom_violations(g, 4, 1000, rng), 0u);
}

TEST(Lamp, ConjugationByBShiftsSupport) {
  const LampGroup g;
  const auto b = g.element(lamp_alphabet().parse("b"));
  std::mt19937_64 rng(54);
  for (int i = 0; i < 300; ++i) {
    const auto x = g.element(random_word(10, rng));
    std::int64_t m = 1 + i % 5;
    auto bm = g.identity();
    for (int k = 0; k < m; ++k) bm = g.multiply(bm, b);
    const auto y = g.multiply(g.multiply(g.invert(bm), x), bm);
    EXPECT_EQ(y.shift, x.shift);
    ASSERT_EQ(y.perm.size(), x.perm.size());
    for (std::size_t j = 0; j < x.perm.size(); ++j) {
      EXPECT_EQ(y.perm[j].first, x.perm[j].first + m);
      EXPECT_EQ(y.perm[j].second, x.perm[j].second + m);
    }
  }
}

TEST(LampWitness, Examples) {
  const auto w22 = lamp_witness(std::vector<int>{2, 2});
  EXPECT_EQ(w22.shift, 4);
  EXPECT_EQ(w22, permshift_multiply(permshift_translation(4),
                                    permshift_multiply(permshift_transposition(3, 4), permshift_transposition(1, 2))));
  const auto w2 = lamp_witness(std::vector<int>{2});
  EXPECT_EQ(w2.shift, 2);
  EXPECT_EQ(w2.perm, (std::vector<std::pair<std::int64_t, std::int64_t>>{{1, 2}, {2, 1}}));
  EXPECT_THROW(lamp_witness(std::vector<int>{3}), InputError);
  EXPECT_THROW(lamp_witness(std::vector<int>{2, 0}), InputError);
  EXPECT_THROW(lamp_witness(std::vector<int>{}), InputError);
}

TEST(LampWitness, LengthAndQuotedBound) {
  for (const auto& parts : {std::vector<int>{2}, std::vector<int>{2, 4}, std::vector<int>{4, 2, 2}}) {
    int sum = 0;
    for (int p : parts) sum += p;
    const int k = static_cast<int>(parts.size()) - 1;
    EXPECT_EQ(lamp_word_length(parts), sum + k + 1);
    EXPECT_EQ(lamp_quoted_length_bound(parts), sum + k);
    EXPECT_EQ(static_cast<int>(lamp_word(parts).size()), lamp_word_length(parts));
  }
}

TEST(LampWitness, KeysSeparateDifferentCompositions) {
  EXPECT_NE(lamp_witness_key(lamp_witness(std::vector<int>{2, 2})), lamp_witness_key(lamp_witness(std::vector<int>{4})));
  EXPECT_EQ(lamp_witness_key(lamp_witness(std::vector<int>{2, 4})), lamp_witness_key(lamp_witness(std::vector<int>{2, 4})));
}

TEST(LampWitness, AllCompositionsUpToTenGiveDistinctElementsInTheWindow) {
  std::set<PermShiftElement> seen;
  std::size_t total = 0;
  for (int half = 1; half <= 5; ++half)
    for (const auto& c : Compositions(half)) {
      std::vector<int> parts;
      for (int p : c) parts.push_back(2 * p);
      const auto g = lamp_witness(parts);
      EXPECT_TRUE(lamp_in_window(g));
      EXPECT_EQ(lamp_witness_parts(g), parts);
      seen.insert(g);
      ++total;
    }
  EXPECT_EQ(seen.size(), total);
}

TEST(LampWitness, RotationsAreConjugateAndShareAKey) {
  const LampGroup g;
  for (const auto& parts : lamp_witness_family(10)) {
    const auto key = lamp_witness_key(lamp_witness(parts));
    EXPECT_EQ(key, lamp_witness(parts));
    auto rotated = parts;
    const Word w = lamp_word(parts);
    std::size_t cut = 0;
    for (std::size_t i = 1; i < parts.size(); ++i) {
      cut += static_cast<std::size_t>(rotated.front()) + 1;
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      // Moving the first block to the end is conjugation by that block.
      const auto block = g.element(std::span<const Letter>(w).first(cut));
      EXPECT_EQ(g.multiply(g.multiply(g.invert(block), g.element(w)), block), lamp_witness(rotated));
      EXPECT_EQ(lamp_witness_key(lamp_witness(rotated)), key);
    }
  }
}

TEST(LampWitness, FamilyHasOneMemberPerRotationClass) {
  // Compositions of m up to rotation: 1, 2, 3, 5, 7, 13 for m = 1..6.
  const auto family = lamp_witness_family(12);
  EXPECT_EQ(family.size(), 31u);
  std::set<std::vector<int>> canon;
  for (const auto& p : family) {
    EXPECT_EQ(lamp_canonical_rotation(p), p);
    canon.insert(p);
  }
  EXPECT_EQ(canon.size(), family.size());
}

TEST(LampWitness, KeyRejectsElementsOutsideTheFamily) {
  const LampGroup g;
  EXPECT_THROW(lamp_witness_key(g.identity()), UnsupportedError);
  EXPECT_THROW(lamp_witness_key(g.element(lamp_alphabet().parse("abbb"))), UnsupportedError);
  EXPECT_THROW(lamp_witness_key(g.element(lamp_alphabet().parse("bbbab'"))), UnsupportedError);
}
