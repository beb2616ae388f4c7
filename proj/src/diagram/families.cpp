#include "congrowth/diagram/families.hpp"

#include <unordered_set>

#include "congrowth/errors.hpp"
#include "congrowth/parallel.hpp"

namespace congrowth::diagram {

namespace {

constexpr std::size_t kAbToA = 0;
constexpr std::size_t kBToB = 1;
constexpr std::size_t kBcToC = 2;

Diagram eps(const PresentationPtr& p, std::string_view w) { return Diagram::trivial(p, p->word(w)); }

Diagram expand() { return Diagram::cell(thompson_presentation(), 0); }

Diagram contract() { return Diagram::cell(thompson_presentation(), 0, Direction::inverse); }

}  // namespace

Diagram thompson_x0() {
  static const Diagram d = [] {
    const auto p = thompson_presentation();
    const Diagram f[] = {expand(), sum(eps(p, "x"), expand()), sum(contract(), eps(p, "x")), contract()};
    return multiply_all(f);
  }();
  return d;
}

Diagram thompson_x1() {
  static const Diagram d = [] {
    const auto p = thompson_presentation();
    const Diagram f[] = {expand(), sum(eps(p, "x"), thompson_x0()), contract()};
    return multiply_all(f);
  }();
  return d;
}

Diagram wrzz_delta(std::span<const int> parts) {
  if (parts.empty()) throw InputError("witness needs at least one part");
  const auto p = wreath_presentation();
  std::vector<Diagram> pieces{eps(p, "a")};
  const auto pi = Diagram::cell(p, kBToB);
  for (int n : parts) {
    if (n < 1) throw InputError("witness parts must be positive");
    pieces.push_back(power(pi, n));
  }
  pieces.push_back(eps(p, "c"));
  return sum_all(pieces);
}

Diagram wrzz_gamma(int factors) {
  if (factors < 1) throw InputError("gamma needs at least one factor");
  const auto p = wreath_presentation();
  const auto grow = Diagram::cell(p, kAbToA, Direction::inverse);
  std::vector<Diagram> chain;
  for (int i = 0; i < factors; ++i) {
    Word tail(static_cast<std::size_t>(i), p->alphabet().letter("b"));
    tail.push_back(p->alphabet().letter("c"));
    chain.push_back(sum(grow, Diagram::trivial(p, tail)));
  }
  return multiply_all(chain);
}

Diagram build_wrZZ_witness(std::span<const int> parts) {
  const auto delta = wrzz_delta(parts);
  const auto gamma = wrzz_gamma(static_cast<int>(parts.size()));
  return reduce(multiply(multiply(gamma, delta), inverse(gamma)));
}

std::vector<WitnessEntry> wrzz_witness_family(int n) {
  std::vector<WitnessEntry> out;
  for (const auto& parts : Compositions(n)) out.push_back({parts, build_wrZZ_witness(parts)});
  return out;
}

Diagram wrzz_t() {
  const auto p = wreath_presentation();
  return multiply(sum(Diagram::cell(p, kAbToA, Direction::inverse), eps(p, "c")),
                  sum(eps(p, "a"), Diagram::cell(p, kBcToC)));
}

Diagram wrzz_p() {
  const int one[] = {1};
  return build_wrZZ_witness(one);
}

DiagramGroup::DiagramGroup(std::string name, std::vector<Generator<Diagram>> gens) : name_(std::move(name)) {
  if (gens.empty()) throw InputError("diagram group needs generators");
  for (const auto& g : gens) {
    if (!g.element.is_spherical()) throw InputError("generator " + g.name + " is not spherical");
    if (g.element.top() != gens.front().element.top()) throw InputError("generators have different base words");
    if (!is_reduced(g.element)) throw InputError("generator " + g.name + " is not reduced");
  }
  identity_ = Diagram::trivial(gens.front().element.presentation(), gens.front().element.top());
  for (const auto& g : gens) {
    generators_.push_back(g);
    generators_.push_back({g.name + "'", diagram::inverse(g.element)});
  }
}

DiagramGroup DiagramGroup::thompson() { return DiagramGroup("dg:thompson", {{"x0", thompson_x0()}, {"x1", thompson_x1()}}); }

DiagramGroup DiagramGroup::wreath() { return DiagramGroup("dg:wrzz", {{"t", wrzz_t()}, {"p", wrzz_p()}}); }

DiagramBallCounts dg_ball_lower_bound(const DiagramGroup& group, int n, const EngineConfig& cfg,
                                      WordEquivalence& equivalence) {
  const auto ball = Ball<Diagram>::grow(group, n, cfg);
  const auto elems = ball.elements();
  std::vector<Diagram> reduced(elems.size());
  parallel_for(elems.size(), cfg.threads, [&](std::size_t i) { reduced[i] = cyclic_reduce(elems[i]).reduced; });

  DiagramBallCounts out;
  out.truncated = ball.truncated();
  std::unordered_set<DiagramConjKey> seen;
  std::size_t undecided = 0;
  for (int r = 0; r <= ball.radius(); ++r) {
    const std::size_t lo = r == 0 ? 0 : ball.size(r - 1);
    for (std::size_t i = lo; i < ball.size(r); ++i) {
      auto key = conj_key_of_reduced(reduced[i], equivalence);
      if (key.determinate)
        seen.insert(std::move(key));
      else
        ++undecided;
    }
    out.ball_sizes.push_back(ball.size(r));
    out.classes.push_back(seen.size());
    out.indeterminate.push_back(undecided);
  }
  return out;
}

}  // namespace congrowth::diagram
