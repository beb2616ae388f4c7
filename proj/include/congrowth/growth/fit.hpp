#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "congrowth/engine.hpp"

namespace congrowth::growth {

enum class ModelKind { exponential, poly_log, polynomial };

std::string model_name(ModelKind kind);

/// exponential: g ≈ C·e^(rate·n); polynomial: g ≈ C·n^degree;
/// poly_log: g ≈ C·n²·ln n. `parameter` is the rate or the degree (2 for
/// poly_log); residual is the sum of squared errors in ln g.
struct GrowthModel {
  ModelKind kind;
  double parameter = 0;
  double coefficient = 0;
  double residual = 0;

  friend bool operator==(const GrowthModel&, const GrowthModel&) = default;
};

/// Least-squares fits on the tail values[tail_start..] (default: half the
/// series), best first. Ties keep the order exponential, poly_log, polynomial.
/// poly_log is omitted when the tail contains n < 2.
std::vector<GrowthModel> fit_growth(const GrowthSeries& series, std::optional<std::size_t> tail_start = std::nullopt);

struct BoundCheck {
  bool bounded = false;
  double constant = 0;  // max of g(n)/n^s over the window
  bool strictly_increasing = false;
  std::vector<double> ratios;
};

/// Empirical check that g(n) <= C·n^s on radii [lo, hi]: the last ratio may
/// not exceed the largest ratio seen in the first half of the window.
BoundCheck bound_check(const GrowthSeries& series, double s, int lo, int hi);

/// Least-squares slope of ln g(n) against n over radii [lo, hi].
double log_slope(const GrowthSeries& series, int lo, int hi);
/// Least-squares slope of ln g(n) against ln n over radii [lo, hi].
double loglog_slope(const GrowthSeries& series, int lo, int hi);

nlohmann::json to_json(const std::vector<GrowthModel>& models);

}  // namespace congrowth::growth
