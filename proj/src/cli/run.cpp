#include "congrowth/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <variant>

#include "congrowth/diagram/conjugacy.hpp"
#include "congrowth/diagram/expression.hpp"
#include "congrowth/diagram/families.hpp"
#include "congrowth/diagram/serialize.hpp"
#include "congrowth/engine.hpp"
#include "congrowth/errors.hpp"
#include "congrowth/groups/britton.hpp"
#include "congrowth/groups/bs1n.hpp"
#include "congrowth/groups/free_group.hpp"
#include "congrowth/groups/heisenberg.hpp"
#include "congrowth/groups/lamp.hpp"
#include "congrowth/growth/fit.hpp"
#include "congrowth/growth/series_io.hpp"
#include "selftest.hpp"

namespace congrowth::cli {

namespace {

using nlohmann::json;
using AnyGroup = std::variant<groups::Heisenberg, groups::BS1n, groups::BSmn, groups::LampGroup, groups::FreeGroup,
                              diagram::DiagramGroup>;

std::vector<int> parse_ints(const std::string& text, char sep) {
  std::vector<int> out;
  std::stringstream ss(text);
  for (std::string part; std::getline(ss, part, sep);) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != part.size() || part.empty()) throw InputError("expected an integer, got '" + part + "'");
    out.push_back(v);
  }
  return out;
}

AnyGroup parse_group(const std::string& sel) {
  auto params = [&](std::string_view prefix, std::size_t count) {
    auto v = parse_ints(sel.substr(prefix.size()), ':');
    if (v.size() != count) throw InputError("group selector '" + sel + "' needs " + std::to_string(count) + " parameter(s)");
    return v;
  };
  if (sel == "heisenberg") return groups::Heisenberg{};
  if (sel == "lamp-sinf") return groups::LampGroup{};
  if (sel == "dg:thompson") return diagram::DiagramGroup::thompson();
  if (sel == "dg:wrzz") return diagram::DiagramGroup::wreath();
  if (sel.starts_with("bs1n:")) return groups::BS1n(params("bs1n:", 1)[0]);
  if (sel.starts_with("bsmn:")) {
    auto v = params("bsmn:", 2);
    return groups::BSmn(v[0], v[1]);
  }
  if (sel.starts_with("free:")) return groups::FreeGroup(params("free:", 1)[0]);
  throw InputError("unknown group '" + sel +
                   "' (expected heisenberg, bs1n:<n>, bsmn:<m>:<n>, lamp-sinf, free:<rank>, dg:thompson, dg:wrzz)");
}

struct Output {
  explicit Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InputError("cannot write " + path);
      stream_ = &file_;
    }
  }
  std::ostream& operator*() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct SeriesOptions {
  std::string group;
  int radius = 0;
  std::size_t cap = EngineConfig{}.element_cap;
  unsigned threads = default_thread_count();
  std::string format = "csv";
  std::string out;
  std::string method = "invariant";
  int conj_radius = 0;
};

void emit_series(std::ostream& os, const GrowthSeries& s, const growth::Metadata& meta, const std::string& format) {
  if (format == "csv") {
    growth::write_series_csv(os, s, meta);
    return;
  }
  json config = json::object();
  for (const auto& [k, v] : meta) config[k] = v;
  json rows = json::array();
  for (std::size_t i = 0; i < s.values.size(); ++i)
    rows.push_back({{"n", s.first_radius + static_cast<int>(i)}, {"value", s.values[i]}, {"kind", kind_label(s.kind)}});
  os << json{{"version", growth::artifact_version()}, {"config", config}, {"truncated", s.truncated}, {"rows", rows}}
            .dump(2)
     << "\n";
}

growth::Metadata series_metadata(const std::string& command, const SeriesOptions& o) {
  growth::Metadata meta{{"command", command}, {"group", o.group}, {"radius", std::to_string(o.radius)}};
  if (command == "cgf") {
    meta.emplace_back("method", o.method);
    if (o.method == "oracle") meta.emplace_back("conj_radius", std::to_string(o.conj_radius));
  }
  meta.emplace_back("element_cap", std::to_string(o.cap));
  meta.emplace_back("format", o.format);
  return meta;
}

// Lamp witnesses with word length <= n, one per rotation class.
GrowthSeries lamp_witness_series(int n) {
  std::vector<std::size_t> per_radius(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& parts : groups::lamp_witness_family(n)) {
    const int len = groups::lamp_word_length(parts);
    for (int r = len; r <= n; ++r) ++per_radius[static_cast<std::size_t>(r)];
  }
  return detail::make_series(per_radius, n, SeriesKind::conj_lower_bound, false);
}

GrowthSeries compute_cgf(const AnyGroup& any, const SeriesOptions& o, const EngineConfig& cfg) {
  if (o.method == "oracle") {
    if (o.conj_radius < 0) throw InputError("--conj-radius must be nonnegative");
    return std::visit([&](const auto& g) { return growth_series(g, o.radius, Method::oracle(o.conj_radius), cfg); },
                      any);
  }
  if (o.method == "invariant") {
    if (const auto* dg = std::get_if<diagram::DiagramGroup>(&any)) {
      diagram::WordEquivalence eq(dg->presentation());
      const auto counts = diagram::dg_ball_lower_bound(*dg, o.radius, cfg, eq);
      return detail::make_series(counts.classes, o.radius, SeriesKind::conj_lower_bound, counts.truncated);
    }
    return std::visit(
        [&](const auto& g) -> GrowthSeries {
          using G = std::decay_t<decltype(g)>;
          if constexpr (HasConjugacyInvariant<G>)
            return growth_series(g, o.radius, Method::invariant(), cfg);
          else
            throw UnsupportedError("group " + o.group + " has no conjugacy invariant; use --method oracle or witness");
        },
        any);
  }
  if (o.method == "witness") {
    if (const auto* b = std::get_if<groups::BSmn>(&any)) {
      const auto v = parse_ints(o.group.substr(5), ':');
      (void)b;
      auto counts = groups::hnn_witness_counts(v[0], v[1], o.radius);
      counts.insert(counts.begin(), 1);
      return detail::make_series(counts, o.radius, SeriesKind::conj_lower_bound, false);
    }
    if (std::holds_alternative<groups::LampGroup>(any)) return lamp_witness_series(o.radius);
    throw UnsupportedError("no witness family for " + o.group + " (available: bsmn:<m>:<n>, lamp-sinf)");
  }
  throw InputError("unknown method '" + o.method + "' (expected invariant, oracle or witness)");
}

int run_series(const std::string& command, const SeriesOptions& o, std::ostream& out) {
  if (o.radius < 0) throw InputError("--radius must be nonnegative");
  if (o.cap < 1) throw InputError("--cap must be at least 1");
  if (o.format != "csv" && o.format != "json") throw InputError("--format must be csv or json");
  const auto any = parse_group(o.group);
  EngineConfig cfg;
  cfg.element_cap = o.cap;
  cfg.threads = std::max(1u, o.threads);
  GrowthSeries s = command == "ball" ? std::visit(
                                           [&](const auto& g) { return growth_series(g, o.radius, Method::ball(), cfg); },
                                           any)
                                     : compute_cgf(any, o, cfg);
  Output sink(o.out, out);
  emit_series(*sink, s, series_metadata(command, o), o.format);
  return s.truncated ? kTruncated : kOk;
}

json wrzz_witness_report(int n, bool with_list, unsigned threads) {
  if (n < 1 || n > 20) throw InputError("--n must be in [1, 20] for wr-zz");
  diagram::WordEquivalence eq(diagram::wreath_presentation());
  std::set<diagram::DiagramConjKey> keys;
  std::size_t max_cells = 0;
  bool determinate = true;
  json list = json::array();
  const auto family = diagram::wrzz_witness_family(n);
  std::vector<diagram::Diagram> cores(family.size());
  parallel_for(family.size(), threads,
               [&](std::size_t i) { cores[i] = diagram::cyclic_reduce(family[i].diagram).reduced; });
  for (std::size_t i = 0; i < family.size(); ++i) {
    const auto& w = family[i];
    const auto key = diagram::conj_key_of_reduced(cores[i], eq);
    determinate = determinate && key.determinate;
    keys.insert(key);
    max_cells = std::max(max_cells, w.diagram.cell_count());
    if (with_list) list.push_back({{"parts", w.parts}, {"cells", w.diagram.cell_count()}, {"key", key.str()}});
  }
  json report{{"family", "wr-zz"},
              {"n", n},
              {"count", family.size()},
              {"expected", count_compositions(n)},
              {"distinct_keys", keys.size()},
              {"keys_determinate", determinate},
              {"max_cells", max_cells},
              {"cell_bound", 3 * n}};
  if (with_list) report["witnesses"] = list;
  return report;
}

int run_witness(const std::string& family, int n, const std::string& format, const std::string& out_path,
                unsigned threads, std::ostream& out) {
  Output sink(out_path, out);
  json report;
  if (family == "wr-zz") {
    report = wrzz_witness_report(n, true, threads);
    if (format == "csv") {
      *sink << "# congrowth " << growth::artifact_version() << "\n# command=witness\n# family=wr-zz\n# n=" << n
            << "\n# count=" << report["count"] << "\n# distinct_keys=" << report["distinct_keys"]
            << "\n# max_cells=" << report["max_cells"] << "\nparts,cells,key\n";
      for (const auto& w : report["witnesses"]) {
        std::string parts;
        for (const auto& p : w["parts"]) parts += (parts.empty() ? "" : " ") + std::to_string(p.get<int>());
        *sink << parts << "," << w["cells"] << "," << w["key"].get<std::string>() << "\n";
      }
      return kOk;
    }
  } else if (family.starts_with("bsmn:")) {
    const auto v = parse_ints(family.substr(5), ':');
    if (v.size() != 2) throw InputError("expected bsmn:<m>:<n>");
    if (n < 1) throw InputError("--n must be at least 1");
    const auto classes = groups::hnn_witness_classes(v[0], v[1], n);
    json words = json::array();
    for (const auto& c : classes) words.push_back(groups::britton_alphabet().format(c.representative()));
    report = {{"family", family},
              {"admissible", groups::hnn_instance_admissible(v[0], v[1])},
              {"max_length", n},
              {"counts", groups::hnn_witness_counts(v[0], v[1], n)},
              {"classes", words}};
  } else if (family == "lamp-sinf") {
    json list = json::array();
    for (const auto& parts : groups::lamp_witness_family(n)) {
      const auto g = groups::lamp_witness(parts);
      list.push_back({{"parts", parts},
                      {"word", groups::lamp_alphabet().format(groups::lamp_word(parts))},
                      {"word_length", groups::lamp_word_length(parts)},
                      {"quoted_bound", groups::lamp_quoted_length_bound(parts)},
                      {"element", groups::to_string(g)}});
    }
    report = {{"family", family}, {"max_sum", n}, {"count", list.size()}, {"witnesses", list}};
  } else {
    throw InputError("unknown witness family '" + family + "' (expected wr-zz, bsmn:<m>:<n>, lamp-sinf)");
  }
  if (format == "csv") throw InputError("csv output is only available for wr-zz");
  *sink << report.dump(2) << "\n";
  return kOk;
}

int run_diagram(const std::string& group, const std::string& presentation_path, const std::string& expr,
                const std::string& out_path, std::ostream& out) {
  diagram::ExpressionContext ctx;
  if (!presentation_path.empty()) {
    ctx.presentation = std::make_shared<const diagram::Presentation>(diagram::Presentation::load(presentation_path));
    if (*ctx.presentation == *diagram::thompson_presentation()) ctx = diagram::ExpressionContext::thompson();
    if (*ctx.presentation == *diagram::wreath_presentation()) ctx = diagram::ExpressionContext::wreath();
  } else if (group == "thompson" || group == "dg:thompson") {
    ctx = diagram::ExpressionContext::thompson();
  } else if (group == "wrzz" || group == "dg:wrzz") {
    ctx = diagram::ExpressionContext::wreath();
  } else {
    throw InputError("pass --presentation <file> or --group thompson|wrzz");
  }
  const auto d = diagram::evaluate_expression(expr, ctx);
  const auto r = diagram::reduce(d);
  json report{{"expression", expr}, {"input", diagram::to_json(d)}, {"reduced", diagram::to_json(r)},
              {"spherical", r.is_spherical()}};
  if (r.is_spherical()) {
    diagram::WordEquivalence eq(ctx.presentation);
    const auto cr = diagram::cyclic_reduce(r);
    report["absolutely_reduced"] = diagram::is_absolutely_reduced(r);
    report["cyclically_reduced"] = diagram::to_json(cr.reduced);
    json comps = json::array();
    for (const auto& c : diagram::merge_trivial_runs(diagram::sum_decompose(cr.reduced)))
      comps.push_back({{"base", ctx.presentation->format(c.base)}, {"cells", c.diagram.cell_count()}});
    report["components"] = comps;
    report["key"] = diagram::to_json(diagram::conj_key_of_reduced(cr.reduced, eq));
  }
  Output sink(out_path, out);
  *sink << report.dump(2) << "\n";
  return kOk;
}

int run_fit(const std::string& path, int tail_start, double bound_s, const std::string& window,
            const std::string& out_path, std::ostream& out) {
  growth::SeriesFile file;
  if (path == "-") {
    file = growth::read_series_csv(std::cin);
  } else {
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    file = growth::read_series_csv(in);
  }
  const auto& s = file.series;
  std::optional<std::size_t> tail;
  if (tail_start >= 0) tail = static_cast<std::size_t>(tail_start);
  json report{{"version", growth::artifact_version()},
              {"source", path},
              {"kind", kind_label(s.kind)},
              {"first_radius", s.first_radius},
              {"last_radius", s.last_radius()},
              {"truncated", s.truncated},
              {"models", growth::to_json(growth::fit_growth(s, tail))}};
  if (bound_s > 0) {
    int lo = std::max(1, s.first_radius), hi = s.last_radius();
    if (!window.empty()) {
      const auto w = parse_ints(window, ':');
      if (w.size() != 2) throw InputError("--window must be lo:hi");
      lo = w[0];
      hi = w[1];
    }
    const auto b = growth::bound_check(s, bound_s, lo, hi);
    report["bound_check"] = {{"s", bound_s},          {"window", {lo, hi}},
                             {"bounded", b.bounded},  {"constant", b.constant},
                             {"ratios", b.ratios},    {"strictly_increasing", b.strictly_increasing}};
  }
  Output sink(out_path, out);
  *sink << report.dump(2) << "\n";
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"congrowth: exact ball and conjugacy-class counts for finitely generated groups and diagram groups",
               "congrowth"};
  app.require_subcommand(1);
  app.set_version_flag("--version", growth::artifact_version());

  SeriesOptions ball_opts, cgf_opts;
  auto add_series_flags = [](CLI::App* sub, SeriesOptions& o) {
    sub->add_option("group", o.group, "heisenberg | bs1n:<n> | bsmn:<m>:<n> | lamp-sinf | free:<rank> | dg:thompson | dg:wrzz")
        ->required();
    sub->add_option("-N,--radius", o.radius, "largest radius")->required();
    sub->add_option("--cap", o.cap, "element cap");
    sub->add_option("--threads", o.threads, "worker threads (default: CONGROWTH_THREADS or hardware)");
    sub->add_option("--format", o.format, "csv | json");
    sub->add_option("-o,--out", o.out, "output file (default: stdout)");
  };
  auto* ball = app.add_subcommand("ball", "ball sizes |B(n)|");
  add_series_flags(ball, ball_opts);
  auto* cgf = app.add_subcommand("cgf", "conjugacy growth: exact, lower or upper bounds depending on method");
  add_series_flags(cgf, cgf_opts);
  cgf->add_option("--method", cgf_opts.method, "invariant | oracle | witness");
  cgf->add_option("--conj-radius", cgf_opts.conj_radius, "conjugator radius for the oracle");

  std::string family, wit_format = "json", wit_out;
  int wit_n = 1;
  auto* witness = app.add_subcommand("witness", "witness families and their certificates");
  witness->add_option("family", family, "wr-zz | bsmn:<m>:<n> | lamp-sinf")->required();
  witness->add_option("--n", wit_n, "size: n for wr-zz, max length for bsmn, max part sum for lamp-sinf")->required();
  witness->add_option("--format", wit_format, "json | csv (wr-zz only)");
  witness->add_option("-o,--out", wit_out, "output file");
  unsigned wit_threads = default_thread_count();
  witness->add_option("--threads", wit_threads, "worker threads")->check(CLI::PositiveNumber);

  std::string dg_group, dg_pres, dg_expr, dg_out;
  auto* dgram = app.add_subcommand("diagram", "evaluate a diagram expression and print its reduced form and key");
  dgram->add_option("--group", dg_group, "thompson | wrzz");
  dgram->add_option("--presentation", dg_pres, "presentation file with `u -> v` lines");
  dgram->add_option("-e,--expr", dg_expr, "expression over cell(i), eps(w), +, *, inv(...), names")->required();
  dgram->add_option("-o,--out", dg_out, "output file");

  std::string fit_path, fit_window, fit_out;
  int fit_tail = -1;
  double fit_bound = 0;
  auto* fit = app.add_subcommand("fit", "fit growth models to a series CSV");
  fit->add_option("csv", fit_path, "series file, or - for stdin")->required();
  fit->add_option("--tail-start", fit_tail, "first fitted index (default: half the series)");
  fit->add_option("--bound", fit_bound, "also check g(n) <= C n^s for this s");
  fit->add_option("--window", fit_window, "lo:hi radii for the bound check");
  fit->add_option("-o,--out", fit_out, "output file");

  std::uint64_t seed = 1;
  unsigned st_threads = default_thread_count();
  auto* selftest = app.add_subcommand("selftest", "oracle-versus-invariant validation suite");
  selftest->add_option("--seed", seed, "random seed");
  selftest->add_option("--threads", st_threads, "worker threads");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*ball) return run_series("ball", ball_opts, out);
    if (*cgf) return run_series("cgf", cgf_opts, out);
    if (*witness) return run_witness(family, wit_n, wit_format, wit_out, wit_threads, out);
    if (*dgram) return run_diagram(dg_group, dg_pres, dg_expr, dg_out, out);
    if (*fit) return run_fit(fit_path, fit_tail, fit_bound, fit_window, fit_out, out);
    if (*selftest) return run_selftest(seed, std::max(1u, st_threads), out) ? kOk : kFailure;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << " (last completed radius " << e.last_completed_radius() << ")\n";
    return kTruncated;
  } catch (const UnsupportedError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::overflow_error& e) {
    err << "error: arithmetic overflow: " << e.what() << "\n";
    return kFailure;
  }
  return kUsage;
}

}  // namespace congrowth::cli
