#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "poincare/graded_dims.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/rational.hpp"

namespace poincare {

/// Power series over Q known through a truncation degree. Coefficients beyond
/// the truncation are unknown unless the series is declared to have finite
/// support (polynomial provenance).
class TruncatedSeriesQ {
 public:
  explicit TruncatedSeriesQ(int truncation, bool finite_support = false)
      : truncation_(truncation), finite_support_(finite_support) {
    if (truncation < 0) throw InvalidDegree("negative truncation");
  }

  TruncatedSeriesQ(int truncation, std::map<int, Rational> coeffs, bool finite_support = false)
      : TruncatedSeriesQ(truncation, finite_support) {
    for (auto& [degree, c] : coeffs) {
      if (degree < 0) throw InvalidDegree("negative degree in series");
      if (degree > truncation) throw DegreeOutOfWindow("coefficient beyond the truncation");
      if (c != 0) coeffs_[degree] = canonical(c);
    }
  }

  static TruncatedSeriesQ from_dims(const GradedDims& dims, int truncation) {
    if (truncation > dims.support().knowledge()) {
      throw DegreeOutOfWindow("ranks not declared through the requested truncation");
    }
    std::map<int, Rational> coeffs;
    for (auto& [degree, rank] : dims.entries()) {
      if (degree <= truncation) coeffs[degree] = Rational(static_cast<long>(rank));
    }
    const bool finite = dims.support().finite() && dims.support().bound <= truncation;
    return TruncatedSeriesQ(truncation, std::move(coeffs), finite);
  }

  static TruncatedSeriesQ from_polynomial(const PolynomialQ& p, int truncation) {
    if (p.degree() > truncation) throw DegreeOutOfWindow("polynomial degree beyond the truncation");
    std::map<int, Rational> coeffs(p.coeffs().begin(), p.coeffs().end());
    return TruncatedSeriesQ(truncation, std::move(coeffs), /*finite_support=*/true);
  }

  int truncation() const { return truncation_; }
  bool finite_support() const { return finite_support_; }
  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int degree) const {
    if (degree > truncation_ && !finite_support_) {
      throw DegreeOutOfWindow("coefficient beyond the truncation");
    }
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  /// Exact partial sum through the truncation.
  Rational partial_sum(const Rational& point) const {
    const Rational t = canonical(point);
    Rational acc(0);
    for (auto& [d, c] : coeffs_) acc += c * pow_rational(t, static_cast<unsigned long>(d));
    return acc;
  }

  double partial_sum(double t) const { return partial_sum(t, truncation_); }

  double partial_sum(double t, int through_degree) const {
    double acc = 0.0;
    for (auto& [d, c] : coeffs_) {
      if (d > through_degree) break;
      acc += to_double(c) * std::pow(t, d);
    }
    return acc;
  }

  friend bool operator==(const TruncatedSeriesQ&, const TruncatedSeriesQ&) = default;

 private:
  std::map<int, Rational> coeffs_;  // nonzero coefficients only
  int truncation_;
  bool finite_support_;
};

enum class ConvergenceVerdict { ConvergesTo, DivergenceSuspected, Inconclusive };

/// Heuristic convergence evidence from partial sums over doubling prefixes.
/// Never a proof; the verdict is reported as such.
struct ConvergenceReport {
  ConvergenceVerdict verdict = ConvergenceVerdict::Inconclusive;
  double value = 0.0;       // extrapolated limit, valid for ConvergesTo
  double tail_bound = 0.0;  // geometric remainder bound from the last decrement ratio
  std::vector<std::pair<int, double>> prefix_sums;
};

struct RadiusEstimate {
  /// Headline radius estimate: a power-law fit over the trailing window,
  /// which cancels the leading C*g^n*n^a bias of the raw root test.
  double radius = 0.0;
  /// Raw root test: 1 / max over the trailing window of |a_n|^(1/n).
  /// Coefficientwise monotone by construction.
  double root_test_value = 0.0;
  std::optional<double> ratio_test_value;  // mean |a_n/a_{n+1}|; absent with window gaps
  bool infinite_radius = false;            // declared-polynomial input
  int window_lo = 0;
  int window_hi = 0;
  std::optional<ConvergenceReport> at_radius;  // filled by the experiments that need it
};

namespace detail {

/// ln g and the power-law exponent from up to three window samples of
/// ln|a_n| = ln C + n ln g + alpha ln n. Falls back to the two-point slope
/// when degenerate.
inline double fitted_growth(const std::vector<std::pair<int, double>>& samples) {
  const auto& first = samples.front();
  const auto& last = samples.back();
  const double two_point = (last.second - first.second) / (last.first - first.first);
  if (samples.size() < 3) return two_point;
  const auto& mid = samples[samples.size() / 2];
  const double d21 = mid.first - first.first;
  const double d32 = last.first - mid.first;
  const double l21 = std::log(static_cast<double>(mid.first) / first.first);
  const double l32 = std::log(static_cast<double>(last.first) / mid.first);
  const double u1 = mid.second - first.second;
  const double u2 = last.second - mid.second;
  const double det = d21 * l32 - d32 * l21;
  if (std::abs(det) < 1e-12) return two_point;
  return (u1 * l32 - u2 * l21) / det;
}

}  // namespace detail

/// Radius-of-convergence estimate from the trailing window (default 25% of
/// the truncation). Zero coefficients inside the window are skipped; windows
/// are fixed in advance so the raw root test stays coefficientwise monotone.
inline RadiusEstimate radius_estimate(const TruncatedSeriesQ& s, double window_fraction = 0.25) {
  const int n = s.truncation();
  if (n < 8) throw TooShort("radius estimation needs truncation >= 8");
  if (!(window_fraction > 0.0 && window_fraction <= 1.0)) {
    throw std::invalid_argument("window fraction must be in (0, 1]");
  }

  RadiusEstimate est;
  const int width = std::max(4, static_cast<int>(std::ceil(window_fraction * n)));
  est.window_lo = std::max(1, n - width + 1);
  est.window_hi = n;

  std::vector<std::pair<int, double>> usable;  // (degree, ln |a|)
  double max_root = 0.0;
  bool gap = false;
  for (int d = est.window_lo; d <= n; ++d) {
    const Rational c = s.coeff(d);
    if (c == 0) {
      gap = true;
      continue;
    }
    const double lna = std::log(std::abs(to_double(c)));
    usable.emplace_back(d, lna);
    max_root = std::max(max_root, std::exp(lna / d));
  }

  if (s.finite_support() || usable.empty()) {
    est.infinite_radius = true;
    est.radius = std::numeric_limits<double>::infinity();
    est.root_test_value =
        max_root > 0.0 ? 1.0 / max_root : std::numeric_limits<double>::infinity();
    return est;
  }

  est.root_test_value = 1.0 / max_root;

  if (!gap && usable.size() >= 2) {
    double acc = 0.0;
    for (std::size_t i = 0; i + 1 < usable.size(); ++i) {
      acc += std::exp(usable[i].second - usable[i + 1].second);
    }
    est.ratio_test_value = acc / static_cast<double>(usable.size() - 1);
  }

  if (usable.size() < 3) {
    // Too sparse in the window; widen to everything known for the fit only.
    std::vector<std::pair<int, double>> all;
    for (auto& [d, c] : s.coeffs()) {
      if (d >= 1) all.emplace_back(d, std::log(std::abs(to_double(c))));
    }
    usable = std::move(all);
  }
  if (usable.size() >= 2) {
    const double growth = std::exp(detail::fitted_growth(usable));
    if (std::isfinite(growth) && growth > 0.0) est.radius = 1.0 / growth;
  }
  if (!(est.radius > 0.0) || !std::isfinite(est.radius)) est.radius = est.root_test_value;
  return est;
}

namespace detail {

inline constexpr double kConvergeRatio = 0.90;
inline constexpr double kDivergeRatio = 0.95;

}  // namespace detail

/// Tri-state convergence heuristic at a point: partial sums over doubling
/// prefixes; decrements shrinking geometrically suggest convergence,
/// decrements bounded below suggest divergence.
inline ConvergenceReport converges_at_radius(const TruncatedSeriesQ& s, double r) {
  if (!(r > 0.0)) throw std::invalid_argument("evaluation point must be positive");
  const int n = s.truncation();

  std::vector<int> checkpoints{n};
  while (checkpoints.back() / 2 >= 4) checkpoints.push_back(checkpoints.back() / 2);
  std::reverse(checkpoints.begin(), checkpoints.end());

  ConvergenceReport report;
  std::vector<double> sums;
  for (int k : checkpoints) {
    sums.push_back(s.partial_sum(r, k));
    report.prefix_sums.emplace_back(k, sums.back());
  }
  if (sums.size() < 2) return report;

  std::vector<double> increments;
  for (std::size_t i = 0; i + 1 < sums.size(); ++i) increments.push_back(sums[i + 1] - sums[i]);

  // An exactly vanishing tail converges outright.
  if (std::abs(increments.back()) == 0.0) {
    report.verdict = ConvergenceVerdict::ConvergesTo;
    report.value = sums.back();
    return report;
  }

  std::vector<double> ratios;
  for (std::size_t i = 0; i + 1 < increments.size(); ++i) {
    if (std::abs(increments[i]) == 0.0) return report;  // irregular; stay inconclusive
    ratios.push_back(std::abs(increments[i + 1]) / std::abs(increments[i]));
  }
  if (ratios.size() < 2) return report;

  const bool all_shrinking =
      std::all_of(ratios.begin(), ratios.end(), [](double q) { return q <= detail::kConvergeRatio; });
  const bool all_sustained =
      std::all_of(ratios.begin(), ratios.end(), [](double q) { return q >= detail::kDivergeRatio; });

  if (all_shrinking) {
    const double q = ratios.back();
    report.verdict = ConvergenceVerdict::ConvergesTo;
    report.tail_bound = std::abs(increments.back()) * q / (1.0 - q);
    report.value = sums.back() + increments.back() * q / (1.0 - q);
  } else if (all_sustained) {
    report.verdict = ConvergenceVerdict::DivergenceSuspected;
  }
  return report;
}

}  // namespace poincare
