#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <json.hpp>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <unordered_set>

#include "congrowth/cli.hpp"
#include "congrowth/diagram/conjugacy.hpp"
#include "congrowth/diagram/families.hpp"
#include "congrowth/engine.hpp"
#include "congrowth/groups/bs1n.hpp"
#include "congrowth/groups/britton.hpp"
#include "congrowth/groups/heisenberg.hpp"
#include "congrowth/groups/lamp.hpp"
#include "congrowth/growth/fit.hpp"
#include "pl_oracle.hpp"
#include "random_diagrams.hpp"

using namespace congrowth;
namespace dg = congrowth::diagram;

namespace {

struct Check {
  std::ostream& out;
  bool ok = true;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      out << "  fail: " << what << "\n";
    }
  }
};

EngineConfig config(unsigned threads) {
  EngineConfig cfg;
  cfg.threads = threads;
  return cfg;
}

std::string fixed(double x, int digits = 4) {
  std::ostringstream s;
  s << std::fixed << std::setprecision(digits) << x;
  return s.str();
}

GrowthSeries series_of(std::vector<std::uint64_t> values) {
  GrowthSeries s;
  s.values = std::move(values);
  return s;
}

bool witness_count_wrzz(unsigned threads, std::ostream& out) {
  Check c{out};
  for (int n = 1; n <= 10; ++n) {
    std::ostringstream json_out, err;
    const int status = cli::run({"witness", "wr-zz", "--n", std::to_string(n), "--threads", std::to_string(threads)},
                                json_out, err);
    if (status != cli::kOk) {
      c.expect(false, "witness wr-zz --n " + std::to_string(n) + " exited " + std::to_string(status) + ": " + err.str());
      continue;
    }
    const auto report = nlohmann::json::parse(json_out.str());
    const auto count = report["count"].get<std::uint64_t>();
    const auto distinct = report["distinct_keys"].get<std::uint64_t>();
    const auto max_cells = report["max_cells"].get<int>();

    // Recount the keys here rather than trusting the report.
    const auto family = dg::wrzz_witness_family(n);
    dg::WordEquivalence eq(dg::wreath_presentation());
    std::set<dg::DiagramConjKey> keys;
    bool determinate = true;
    for (const auto& w : family) {
      auto k = dg::diagram_conj_key(w.diagram, eq);
      determinate = determinate && k.determinate;
      keys.insert(std::move(k));
    }
    out << "  n=" << n << " count=" << count << " distinct_keys=" << distinct << " recount=" << keys.size()
        << " max_cells=" << max_cells << "\n";
    const std::uint64_t expected = std::uint64_t{1} << (n - 1);
    c.expect(count == expected && family.size() == expected, "count != 2^(n-1) at n=" + std::to_string(n));
    c.expect(distinct == count && keys.size() == family.size() && determinate,
             "keys not pairwise distinct at n=" + std::to_string(n));
    c.expect(max_cells <= 3 * n, "cell bound exceeded at n=" + std::to_string(n));
  }
  return c.ok;
}

Word thompson_commutator(const Word& u, const Word& v) {
  Word w = congrowth::inverse(u);
  const auto vi = congrowth::inverse(v);
  w.insert(w.end(), vi.begin(), vi.end());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

dg::Diagram thompson_word(const Word& w, bool composition_order) {
  const auto p = dg::thompson_presentation();
  dg::Diagram d = dg::Diagram::trivial(p, p->word("x"));
  auto apply = [&](Letter l) {
    dg::Diagram g = std::abs(l) == 1 ? dg::thompson_x0() : dg::thompson_x1();
    d = dg::group_multiply(d, l < 0 ? dg::inverse(g) : g);
  };
  if (composition_order)
    for (auto it = w.rbegin(); it != w.rend(); ++it) apply(*it);
  else
    for (Letter l : w) apply(l);
  return d;
}

bool diagram_engine_soundness(unsigned, std::ostream& out) {
  Check c{out};
  const auto F = dg::thompson_presentation();
  const auto W = dg::wreath_presentation();
  std::mt19937_64 rng(20240611);
  std::size_t mismatches = 0, pl_mismatches = 0, cells = 0;
  for (int i = 0; i < 1000; ++i) {
    const bool thompson = i % 2 == 1;
    const auto& p = thompson ? F : W;
    const Word top = p->word(thompson ? (i % 4 == 1 ? "x" : "xx") : "abc");
    const auto steps = testing_support::random_walk(p, top, 2 + static_cast<std::size_t>(i % 14), 10, rng);
    auto noisy = testing_support::insert_dipoles(p, top, steps, 1 + i % 5, rng);
    noisy = testing_support::shuffle_commuting(p, noisy, 60, rng);
    const auto d = dg::Diagram::from_derivation(p, top, steps);
    const auto e = dg::Diagram::from_derivation(p, top, noisy);
    const auto rd = dg::reduce(d), re = dg::reduce(e);
    cells += e.cell_count();
    if (rd != re || !dg::is_reduced(rd)) ++mismatches;
    if (thompson && top.size() == 1 && d.is_spherical()) {
      const auto m = testing_support::pl_of_diagram(e);
      if (m != testing_support::pl_of_diagram(rd) || m != testing_support::pl_of_diagram(d)) ++pl_mismatches;
    }
  }
  const auto g = dg::DiagramGroup::thompson();
  for (int i = 0; i < 200; ++i) {
    const auto a = testing_support::random_product(g, 1 + static_cast<std::size_t>(i % 7), rng);
    const auto b = testing_support::random_product(g, 1 + static_cast<std::size_t>(i % 5), rng);
    const auto prod = dg::group_multiply(dg::reduce(a), dg::reduce(b));
    // The diagram a ∘ b applies a first.
    const auto expect_map = testing_support::pl_of_diagram(a).then(testing_support::pl_of_diagram(b));
    if (testing_support::pl_of_diagram(prod) != expect_map) ++pl_mismatches;
  }
  out << "  random pairs=1000 cells=" << cells << " mismatches=" << mismatches << " pl_mismatches=" << pl_mismatches
      << "\n";
  c.expect(mismatches == 0, "reduced forms differ");
  c.expect(pl_mismatches == 0, "PL oracle disagrees with the diagram engine");

  c.expect(testing_support::pl_of_diagram(dg::thompson_x0()) == testing_support::standard_x0(),
           "x0 diagram is not the standard x0");
  c.expect(testing_support::pl_of_diagram(dg::thompson_x1()) == testing_support::standard_x1(),
           "x1 diagram is not the standard x1");
  const Word u{1, -2};
  const std::vector<std::pair<std::string, Word>> relators{{"[x0x1^-1, x0^-1x1x0]", thompson_commutator(u, {-1, 2, 1})},
                                                           {"[x0x1^-1, x0^-2x1x0^2]",
                                                            thompson_commutator(u, {-1, -1, 2, 1, 1})}};
  const auto eps = dg::Diagram::trivial(F, F->word("x"));
  for (const auto& [name, w] : relators) {
    const auto d = thompson_word(w, true);
    const bool pl_trivial = testing_support::evaluate_composition(w).is_identity();
    const auto literal = thompson_word(w, false);
    out << "  " << name << ": composition order cells=" << d.cell_count() << " pl_identity=" << pl_trivial
        << "; first-factor-first reading cells=" << literal.cell_count() << "\n";
    c.expect(d == eps, name + " does not reduce to eps(x)");
    c.expect(pl_trivial, name + " is not the identity in the PL model");
  }
  return c.ok;
}

// Ball and exact counts shared by AC3 and AC4.
struct HeisenbergData {
  std::vector<std::size_t> ball;   // |B(n)|, n = 0..16
  std::vector<std::size_t> exact;  // g_c(n), n = 0..16
};

HeisenbergData heisenberg_data(unsigned threads) {
  const groups::Heisenberg h;
  const auto ball = enumerate_ball(h, 16, config(threads));
  HeisenbergData d;
  for (int r = 0; r <= 16; ++r) d.ball.push_back(ball.size(r));
  d.exact = distinct_key_counts(h, ball, threads);
  return d;
}

bool heisenberg_conjugacy_growth(unsigned threads, std::ostream& out) {
  Check c{out};
  const groups::Heisenberg h;
  const auto data = heisenberg_data(threads);
  out << "  g_c(1..16) =";
  for (int n = 1; n <= 16; ++n) out << " " << data.exact[static_cast<std::size_t>(n)];
  out << "\n";
  for (int n = 1; n <= 6; ++n) {
    const auto oracle = conjugacy_count_oracle(h, n, n + 4, config(threads));
    out << "  n=" << n << " exact=" << data.exact[static_cast<std::size_t>(n)] << " oracle(R=" << n + 4
        << ")=" << oracle << "\n";
    c.expect(oracle == data.exact[static_cast<std::size_t>(n)], "oracle disagrees at n=" + std::to_string(n));
  }
  double prev2 = 0, prev25 = INFINITY;
  for (int n = 8; n <= 16; ++n) {
    const double g = static_cast<double>(data.exact[static_cast<std::size_t>(n)]);
    const double r2 = g / (n * n), r25 = g / std::pow(n, 2.5);
    out << "  n=" << n << " g/n^2=" << fixed(r2) << " g/n^2.5=" << fixed(r25) << "\n";
    c.expect(r2 >= prev2, "g/n^2 decreases at n=" + std::to_string(n));
    c.expect(r25 <= prev25, "g/n^2.5 increases at n=" + std::to_string(n));
    prev2 = r2;
    prev25 = r25;
  }
  const auto series =
      series_of(std::vector<std::uint64_t>(data.exact.begin() + 1, data.exact.end()));
  const auto bound = growth::bound_check(series, 3, 1, 16);
  out << "  bound_check s=3: bounded=" << bound.bounded << " C=" << fixed(bound.constant) << "\n";
  c.expect(bound.bounded, "bound_check with s=3 fails");
  return c.ok;
}

bool heisenberg_volume(unsigned threads, std::ostream& out) {
  Check c{out};
  const auto data = heisenberg_data(threads);
  const auto series = series_of(std::vector<std::uint64_t>(data.ball.begin() + 1, data.ball.end()));
  const double slope = growth::loglog_slope(series, 8, 16);
  out << "  |B(8..16)| =";
  for (int n = 8; n <= 16; ++n) out << " " << series.at(n);
  out << "\n  loglog slope=" << fixed(slope) << "\n";
  c.expect(slope >= 3.4 && slope <= 4.6, "loglog slope outside [3.4, 4.6]");
  return c.ok;
}

int floor_log2(std::int64_t k) {
  int r = 0;
  while (k > 1) {
    k >>= 1;
    ++r;
  }
  return r;
}

bool bs12_conjugacy(unsigned threads, std::ostream& out) {
  Check c{out};
  const groups::BS1n g(2);

  {
    const auto ball = enumerate_ball(g, 5, config(threads));
    const auto block = oracle_partition(g, ball, 5, 8, threads);
    const auto elems = ball.elements();
    // Two partitions agree iff the map key-class -> block and its converse are functions.
    std::map<groups::BS1nKey, std::size_t> key_to_block;
    std::map<std::size_t, groups::BS1nKey> block_to_key;
    std::size_t disagreements = 0;
    for (std::size_t i = 0; i < block.size(); ++i) {
      const auto key = g.conjugacy_key(elems[i]);
      auto [a, fresh_a] = key_to_block.emplace(key, block[i]);
      auto [b, fresh_b] = block_to_key.emplace(block[i], key);
      if ((!fresh_a && a->second != block[i]) || (!fresh_b && b->second != key)) ++disagreements;
    }
    out << "  B(5) size=" << block.size() << " key classes=" << key_to_block.size()
        << " oracle blocks=" << block_to_key.size() << " disagreements=" << disagreements << "\n";
    c.expect(disagreements == 0, "key partition differs from the oracle partition on B(5)");
  }

  {
    const int radius = 2 * floor_log2(63) + 1;
    const auto ball = enumerate_ball(g, radius, config(threads));
    std::set<groups::BS1nKey> keys;
    std::size_t over = 0;
    for (std::int64_t k = 1; k <= 63; k += 2) {
      const auto x = g.a_power(k);
      keys.insert(g.conjugacy_key(x));
      const int allowed = 2 * floor_log2(k) + 1;
      const auto len = ball.length_of(x);
      if (!len || *len > allowed) {
        ++over;
        const auto exact = groups::bs1n_power_length(k, 2).exact;
        out << "  a^" << k << ": word length " << (exact ? std::to_string(*exact) : "?") << ", radius bound "
            << allowed << "\n";
      }
    }
    out << "  odd k<=63: distinct keys=" << keys.size() << "/32 outside radius bound=" << over << "\n";
    c.expect(keys.size() == 32, "keys of odd powers collide");
    c.expect(over == 0, "some a^k lies outside the ball of radius 2*floor(log2 k)+1");
  }

  {
    const auto series = growth_series(g, 14, Method::invariant(), config(threads));
    const double slope = growth::log_slope(series, 8, 14);
    out << "  g_c(8..14) =";
    for (int n = 8; n <= 14; ++n) out << " " << series.at(n);
    out << "\n  log slope=" << fixed(slope) << "\n";
    c.expect(slope >= 0.2, "log slope below 0.2");
  }
  return c.ok;
}

bool lamp_witnesses(unsigned threads, std::ostream& out) {
  Check c{out};
  const groups::LampGroup g;

  std::set<groups::PermShiftElement> all;
  std::size_t compositions = 0;
  bool window = true;
  for (int half = 1; half <= 6; ++half)
    for (const auto& comp : Compositions(half)) {
      std::vector<int> parts;
      for (int p : comp) parts.push_back(2 * p);
      const auto w = groups::lamp_witness(parts);
      window = window && groups::lamp_in_window(w);
      all.insert(w);
      ++compositions;
    }
  out << "  compositions=" << compositions << " distinct elements=" << all.size() << " in window=" << window << "\n";
  c.expect(all.size() == compositions, "witness elements are not pairwise distinct");
  c.expect(window, "a witness leaves the support window");

  const auto family = groups::lamp_witness_family(12);
  const auto ball = enumerate_ball(g, 10, config(threads));
  const auto block = oracle_partition(g, ball, 10, 6, threads);
  std::map<std::size_t, std::vector<int>> seen;
  std::size_t in_ball = 0, merges = 0;
  for (const auto& parts : family) {
    const auto idx = ball.index_of(groups::lamp_witness(parts));
    if (!idx) continue;
    ++in_ball;
    auto [it, fresh] = seen.emplace(block[*idx], parts);
    if (!fresh) ++merges;
  }
  out << "  rotation classes=" << family.size() << " within B(10)=" << in_ball << " oracle merges=" << merges << "\n";

  // Rotations of one part list are conjugate; report how many the oracle joins.
  std::size_t rotations = 0, joined = 0;
  for (int half = 1; half <= 6; ++half)
    for (const auto& comp : Compositions(half)) {
      std::vector<int> parts;
      for (int p : comp) parts.push_back(2 * p);
      const auto canon = groups::lamp_canonical_rotation(parts);
      if (canon == parts) continue;
      const auto a = ball.index_of(groups::lamp_witness(parts)), b = ball.index_of(groups::lamp_witness(canon));
      if (!a || !b) continue;
      ++rotations;
      joined += block[*a] == block[*b] ? 1 : 0;
    }
  out << "  non-canonical rotations within B(10)=" << rotations << " joined to their class=" << joined << "\n";
  c.expect(merges == 0, "distinct witness classes merge under the oracle");

  // Witness classes with word length <= n; complete for n <= 13.
  std::vector<std::uint64_t> counts(13, 0);
  for (const auto& parts : family) {
    const int len = groups::lamp_word_length(parts);
    for (int n = len; n <= 13; ++n) ++counts[static_cast<std::size_t>(n - 1)];
  }
  const auto series = series_of(counts);
  const double slope = growth::log_slope(series, 3, 13);
  out << "  witness classes by length 3..13 =";
  for (int n = 3; n <= 13; ++n) out << " " << series.at(n);
  out << "\n  log slope=" << fixed(slope) << "\n";
  c.expect(slope >= 0.2, "log slope below 0.2");
  return c.ok;
}

bool hnn_witnesses_bs24(unsigned, std::ostream& out) {
  Check c{out};
  const bool admissible = groups::hnn_instance_admissible(2, 4);
  out << "  BS(2,4) admissible=" << admissible << "\n";
  c.expect(admissible, "BS(2,4) fails the admissibility check");
  if (!admissible) return false;

  const auto counts = groups::hnn_witness_counts(2, 4, 14);
  std::vector<std::uint64_t> values(counts.begin(), counts.end());
  out << "  classes(L=1..14) =";
  for (auto v : values) out << " " << v;
  out << "\n";
  c.expect(std::adjacent_find(values.begin(), values.end(), std::greater_equal<>()) == values.end(),
           "class counts are not strictly increasing");
  const double slope = growth::log_slope(series_of(values), 6, 14);
  out << "  tail log slope (L=6..14)=" << fixed(slope) << "\n";
  c.expect(slope >= 0.3, "tail log slope below 0.3");

  // Conjugates of each class representative by conjugators of length <= 4.
  const groups::BSmn g(2, 4);
  const auto classes = groups::hnn_witness_classes(2, 4, 5);
  std::vector<groups::BrittonWord> reps;
  for (const auto& cls : classes) reps.push_back(g.element(cls.representative()));
  std::size_t merges = 0;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    std::unordered_set<groups::BrittonWord> seen{reps[i]};
    std::vector<groups::BrittonWord> frontier{reps[i]};
    for (int d = 1; d <= 4; ++d) {
      std::vector<groups::BrittonWord> next;
      for (const auto& y : frontier)
        for (const auto& s : g.generators()) {
          auto z = g.multiply(g.multiply(g.invert(s.element), y), s.element);
          if (seen.insert(z).second) next.push_back(std::move(z));
        }
      frontier = std::move(next);
    }
    for (std::size_t j = 0; j < reps.size(); ++j)
      if (j != i && seen.contains(reps[j])) ++merges;
  }
  out << "  L<=5 classes=" << reps.size() << " merges under R=4 conjugation=" << merges << "\n";
  c.expect(merges == 0, "distinct cyclic classes are conjugate by a short conjugator");
  return c.ok;
}

struct Criterion {
  int id;
  std::string name;
  std::function<bool(unsigned, std::ostream&)> run;
  double limit_seconds;
};

std::vector<Criterion> criteria() {
  return {{1, "witness_count_wrzz", witness_count_wrzz, 60},
          {2, "diagram_engine_soundness", diagram_engine_soundness, 120},
          {3, "heisenberg_conjugacy_growth", heisenberg_conjugacy_growth, 300},
          {4, "heisenberg_volume", heisenberg_volume, 300},
          {5, "bs12_conjugacy", bs12_conjugacy, 300},
          {6, "lamp_witnesses", lamp_witnesses, 300},
          {7, "hnn_witnesses_bs24", hnn_witnesses_bs24, 300}};
}

bool thread_determinism(unsigned, std::ostream& out) {
  Check c{out};
  for (const auto& cr : criteria()) {
    std::ostringstream one, many;
    const bool a = cr.run(1, one);
    const bool b = cr.run(8, many);
    const bool same = a == b && one.str() == many.str();
    out << "  AC" << cr.id << " " << cr.name << ": identical=" << same << "\n";
    c.expect(same, "AC" + std::to_string(cr.id) + " output depends on the thread count");
  }
  return c.ok;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"congrowth acceptance checks"};
  int only = 0;
  unsigned threads = default_thread_count();
  app.add_option("--criterion", only, "run only this criterion (1-8)")->check(CLI::Range(0, 8));
  app.add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

  auto list = criteria();
  list.push_back({8, "thread_determinism", thread_determinism, 1e9});

  bool all_ok = true;
  for (const auto& cr : list) {
    if (only != 0 && cr.id != only) continue;
    std::ostringstream detail;
    const auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = cr.run(threads, detail);
    } catch (const std::exception& e) {
      detail << "  exception: " << e.what() << "\n";
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > cr.limit_seconds) {
      ok = false;
      detail << "  fail: runtime " << fixed(secs, 1) << " s exceeds " << cr.limit_seconds << " s\n";
    }
    std::cout << detail.str() << (ok ? "PASS" : "FAIL") << " AC" << cr.id << " " << cr.name << " (" << fixed(secs, 2)
              << " s)\n";
    all_ok = all_ok && ok;
  }
  return all_ok ? 0 : 1;
}
