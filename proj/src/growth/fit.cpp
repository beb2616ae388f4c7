#include "congrowth/growth/fit.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "congrowth/errors.hpp"

namespace congrowth::growth {

std::string model_name(ModelKind kind) {
  switch (kind) {
    case ModelKind::exponential:
      return "exponential";
    case ModelKind::poly_log:
      return "poly_log";
    case ModelKind::polynomial:
      return "polynomial";
  }
  return "?";
}

namespace {

struct Line {
  double slope, intercept, residual;
};

Line least_squares(const std::vector<double>& x, const std::vector<double>& y) {
  const auto n = static_cast<Eigen::Index>(x.size());
  Eigen::MatrixXd a(n, 2);
  Eigen::VectorXd b(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    a(i, 0) = x[static_cast<std::size_t>(i)];
    a(i, 1) = 1.0;
    b(i) = y[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector2d coef = a.colPivHouseholderQr().solve(b);
  return {coef(0), coef(1), (a * coef - b).squaredNorm()};
}

void check_window(const GrowthSeries& s, int lo, int hi) {
  if (lo > hi || lo < s.first_radius || hi > s.last_radius())
    throw InputError("window [" + std::to_string(lo) + "," + std::to_string(hi) + "] is outside the series");
}

}  // namespace

std::vector<GrowthModel> fit_growth(const GrowthSeries& series, std::optional<std::size_t> tail_start) {
  const std::size_t start = tail_start.value_or(series.values.size() / 2);
  if (series.values.size() < start + 4) throw InputError("series too short to fit: need at least 4 tail points");
  std::vector<double> n, ln_n, ln_g;
  bool log_defined = true;
  for (std::size_t i = start; i < series.values.size(); ++i) {
    const double radius = series.first_radius + static_cast<double>(i);
    if (series.values[i] == 0) throw InputError("series values must be positive on the fitted tail");
    if (radius < 1) throw InputError("fitted tail must start at n >= 1");
    if (radius < 2) log_defined = false;
    n.push_back(radius);
    ln_n.push_back(std::log(radius));
    ln_g.push_back(std::log(static_cast<double>(series.values[i])));
  }

  std::vector<GrowthModel> models;
  const auto e = least_squares(n, ln_g);
  models.push_back({ModelKind::exponential, e.slope, std::exp(e.intercept), e.residual});
  if (log_defined) {
    double mean = 0;
    std::vector<double> shifted;
    for (std::size_t i = 0; i < n.size(); ++i) shifted.push_back(ln_g[i] - std::log(n[i] * n[i] * ln_n[i]));
    for (double v : shifted) mean += v;
    mean /= static_cast<double>(shifted.size());
    double residual = 0;
    for (double v : shifted) residual += (v - mean) * (v - mean);
    models.push_back({ModelKind::poly_log, 2.0, std::exp(mean), residual});
  }
  const auto p = least_squares(ln_n, ln_g);
  models.push_back({ModelKind::polynomial, p.slope, std::exp(p.intercept), p.residual});

  double scale = 1.0;
  for (const auto& m : models) scale = std::max(scale, m.residual);
  std::stable_sort(models.begin(), models.end(), [&](const GrowthModel& a, const GrowthModel& b) {
    return a.residual < b.residual - 1e-12 * scale;
  });
  return models;
}

BoundCheck bound_check(const GrowthSeries& series, double s, int lo, int hi) {
  check_window(series, lo, hi);
  if (lo < 1) throw InputError("bound check needs n >= 1");
  BoundCheck out;
  for (int r = lo; r <= hi; ++r) out.ratios.push_back(static_cast<double>(series.at(r)) / std::pow(r, s));
  out.constant = *std::max_element(out.ratios.begin(), out.ratios.end());
  const std::size_t half = std::max<std::size_t>(1, (out.ratios.size() + 1) / 2);
  const double early = *std::max_element(out.ratios.begin(), out.ratios.begin() + static_cast<std::ptrdiff_t>(half));
  out.bounded = out.ratios.back() <= early * (1 + 1e-9);
  out.strictly_increasing = out.ratios.size() > 1;
  for (std::size_t i = 1; i < out.ratios.size(); ++i)
    if (!(out.ratios[i] > out.ratios[i - 1])) out.strictly_increasing = false;
  return out;
}

double log_slope(const GrowthSeries& series, int lo, int hi) {
  check_window(series, lo, hi);
  if (hi - lo < 1) throw InputError("slope needs at least two points");
  std::vector<double> x, y;
  for (int r = lo; r <= hi; ++r) {
    if (series.at(r) == 0) throw InputError("log slope needs positive values");
    x.push_back(r);
    y.push_back(std::log(static_cast<double>(series.at(r))));
  }
  return least_squares(x, y).slope;
}

double loglog_slope(const GrowthSeries& series, int lo, int hi) {
  check_window(series, lo, hi);
  if (hi - lo < 1 || lo < 1) throw InputError("log-log slope needs at least two points with n >= 1");
  std::vector<double> x, y;
  for (int r = lo; r <= hi; ++r) {
    if (series.at(r) == 0) throw InputError("log-log slope needs positive values");
    x.push_back(std::log(static_cast<double>(r)));
    y.push_back(std::log(static_cast<double>(series.at(r))));
  }
  return least_squares(x, y).slope;
}

nlohmann::json to_json(const std::vector<GrowthModel>& models) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : models) {
    nlohmann::json j{{"kind", model_name(m.kind)}, {"coefficient", m.coefficient}, {"residual", m.residual}};
    j[m.kind == ModelKind::exponential ? "rate" : "degree"] = m.parameter;
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace congrowth::growth
