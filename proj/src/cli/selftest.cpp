#include "selftest.hpp"

#include <random>
#include <sstream>

#include "congrowth/diagram/conjugacy.hpp"
#include "congrowth/diagram/families.hpp"
#include "congrowth/engine.hpp"
#include "congrowth/groups/britton.hpp"
#include "congrowth/groups/bs1n.hpp"
#include "congrowth/groups/free_group.hpp"
#include "congrowth/groups/heisenberg.hpp"
#include "congrowth/groups/lamp.hpp"

namespace congrowth::cli {

namespace {

struct Reporter {
  std::ostream& out;
  bool ok = true;

  void check(const std::string& name, bool pass, const std::string& detail = {}) {
    out << (pass ? "PASS " : "FAIL ") << name;
    if (!detail.empty()) out << "  (" << detail << ")";
    out << "\n";
    ok = ok && pass;
  }
};

template <class G>
typename G::element_type random_element(const G& g, int length, std::mt19937_64& rng) {
  const auto& gens = g.generators();
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  auto x = g.identity();
  for (int i = 0; i < length; ++i) x = g.multiply(x, gens[pick(rng)].element);
  return x;
}

// Complete invariants never exceed the oracle's block count and agree with
// it once the conjugator radius is large; keys survive random conjugation.
template <HasConjugacyInvariant G>
void check_invariant(Reporter& rep, const G& g, int radius, int conj_radius, bool expect_equal, unsigned threads,
                     std::mt19937_64& rng) {
  EngineConfig cfg;
  cfg.threads = threads;
  const auto ball = enumerate_ball(g, radius, cfg);
  const auto inv = distinct_key_counts(g, ball, threads);
  const auto orc = oracle_counts(g, ball, conj_radius, threads);
  bool bounded = true, equal = true;
  for (std::size_t r = 0; r < inv.size(); ++r) {
    bounded = bounded && inv[r] <= orc[r];
    equal = equal && inv[r] == orc[r];
  }
  std::ostringstream detail;
  detail << "radius " << radius << ": invariant " << inv.back() << ", oracle " << orc.back();
  rep.check(g.name() + " invariant <= oracle", bounded, detail.str());
  if (expect_equal) rep.check(g.name() + " invariant == oracle", equal, detail.str());

  bool stable = true;
  for (int i = 0; i < 200; ++i) {
    const auto x = random_element(g, radius, rng);
    const auto w = random_element(g, 4, rng);
    stable = stable && g.conjugacy_key(g.multiply(g.multiply(g.invert(w), x), w)) == g.conjugacy_key(x);
  }
  rep.check(g.name() + " key is conjugation invariant", stable);
}

void check_britton(Reporter& rep, std::mt19937_64& rng) {
  const int m = 2, n = 4;
  std::uniform_int_distribution<int> letter(0, 3);
  const Letter letters[] = {groups::kLetterA, invert(groups::kLetterA), groups::kLetterT, invert(groups::kLetterT)};
  int mismatches = 0;
  for (int i = 0; i < 2000; ++i) {
    Word u, v;
    for (int k = 0; k < 8; ++k) u.push_back(letters[letter(rng)]);
    for (int k = 0; k < 8; ++k) v.push_back(letters[letter(rng)]);
    Word probe = u;
    const Word vi = inverse(v);
    probe.insert(probe.end(), vi.begin(), vi.end());
    const bool same = groups::britton_reduce(u, m, n) == groups::britton_reduce(v, m, n);
    mismatches += same != groups::britton_rewrites_to_identity(probe, m, n) ? 1 : 0;
  }
  rep.check("bsmn:2:4 normal form agrees with pinch rewriting", mismatches == 0,
            std::to_string(mismatches) + " mismatches in 2000 pairs");
}

void check_lamp(Reporter& rep) {
  const groups::LampGroup g;
  bool ok = true;
  for (const auto& parts : groups::lamp_witness_family(8)) {
    const auto key = groups::lamp_witness_key(groups::lamp_witness(parts));
    auto rotated = parts;
    for (std::size_t i = 0; i < parts.size(); ++i) {
      std::rotate(rotated.begin(), rotated.begin() + 1, rotated.end());
      ok = ok && groups::lamp_witness_key(groups::lamp_witness(rotated)) == key;
    }
    const Word w = groups::lamp_word(parts);
    for (std::size_t cut = 0; cut < w.size(); ++cut) {
      const auto prefix = g.element(std::span<const Letter>(w).first(cut));
      const auto conj = g.multiply(g.multiply(g.invert(prefix), g.element(w)), prefix);
      if (groups::lamp_in_window(conj) && !groups::lamp_witness_parts(conj).empty())
        ok = ok && groups::lamp_witness_key(conj) == key;
    }
  }
  rep.check("lamp-sinf witness keys respect rotation", ok);
}

void check_diagrams(Reporter& rep, std::mt19937_64& rng) {
  for (const auto& g : {diagram::DiagramGroup::thompson(), diagram::DiagramGroup::wreath()}) {
    diagram::WordEquivalence eq(g.presentation());
    bool inverse_ok = true, key_ok = true;
    for (int i = 0; i < 40; ++i) {
      const auto x = random_element(g, 4, rng);
      inverse_ok = inverse_ok && g.multiply(x, g.invert(x)).is_trivial();
      const auto w = random_element(g, 2, rng);
      const auto k1 = diagram::diagram_conj_key(x, eq);
      const auto k2 = diagram::diagram_conj_key(g.multiply(g.multiply(g.invert(w), x), w), eq);
      if (k1.determinate && k2.determinate) key_ok = key_ok && k1 == k2;
    }
    rep.check(g.name() + " x * inv(x) reduces to the identity", inverse_ok);
    rep.check(g.name() + " key is conjugation invariant", key_ok);
  }
}

}  // namespace

bool run_selftest(std::uint64_t seed, unsigned threads, std::ostream& out) {
  Reporter rep{out};
  std::mt19937_64 rng(seed);
  out << "selftest seed=" << seed << "\n";
  check_invariant(rep, groups::Heisenberg{}, 4, 4, false, threads, rng);
  check_invariant(rep, groups::BS1n(2), 4, 4, false, threads, rng);
  check_invariant(rep, groups::FreeGroup(2), 4, 4, true, threads, rng);
  check_britton(rep, rng);
  check_lamp(rep);
  check_diagrams(rep, rng);
  out << (rep.ok ? "all checks passed" : "some checks failed") << "\n";
  return rep.ok;
}

}  // namespace congrowth::cli
