#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "poincare/hilali.hpp"
#include "poincare/map_model.hpp"
#include "poincare/truncated_series.hpp"

namespace poincare {

/// Homotopical Hilbert-Poincare series of a space through degree n.
inline TruncatedSeriesQ hp_series_pi(const SpaceModel& x, int truncation) {
  return TruncatedSeriesQ::from_dims(x.homotopy, truncation);
}

/// Kernel Hilbert-Poincare series of a map through degree n.
inline TruncatedSeriesQ hp_series_pi(const MapModel& f, int truncation) {
  return TruncatedSeriesQ::from_dims(kernel_dims(f.pimap), truncation);
}

/// Homological Hilbert-Poincare series (spaces with infinite homology rank).
inline TruncatedSeriesQ hp_series_h(const SpaceModel& x, int truncation) {
  return TruncatedSeriesQ::from_dims(x.homology, truncation);
}

struct HyperbolicReport {
  int truncation = 0;
  RadiusEstimate radius;
  bool felix_bound_satisfied = false;  // estimated radius < 1
  ConvergenceReport at_radius;
  /// (series value at the radius, P at the radius) when the series converges
  /// there and the comparison polynomial is available.
  std::optional<std::pair<double, double>> comparison;
  std::string note;
};

namespace detail {

inline HyperbolicReport series_experiment(const TruncatedSeriesQ& series,
                                          const PolynomialQ* compare) {
  HyperbolicReport report;
  report.truncation = series.truncation();
  report.radius = radius_estimate(series);
  if (report.radius.infinite_radius) {
    report.note = "polynomial support: infinite radius, nothing to test at the boundary";
    return report;
  }
  report.felix_bound_satisfied = report.radius.radius < 1.0;
  report.at_radius = converges_at_radius(series, report.radius.radius);
  report.radius.at_radius = report.at_radius;
  if (report.at_radius.verdict == ConvergenceVerdict::DivergenceSuspected) {
    report.note = "question vacuous for this series: divergence suspected at the radius";
  } else if (report.at_radius.verdict == ConvergenceVerdict::ConvergesTo && compare != nullptr) {
    report.comparison = {report.at_radius.value, (*compare)(report.radius.radius)};
    report.note = report.comparison->first <= report.comparison->second
                      ? "boundary inequality holds on this evidence"
                      : "boundary inequality FAILS on this evidence";
  }
  return report;
}

}  // namespace detail

/// Felix bound check: the radius of convergence of HP^pi of a hyperbolic
/// space must land below 1.
inline HyperbolicReport felix_check(const SpaceModel& x, int truncation) {
  if (classify(x) != EllipticityClass::Hyperbolic) {
    throw NotHyperbolic(x.name + " is not declared rationally hyperbolic");
  }
  if (truncation < 20) throw TooShort("Felix check needs truncation >= 20");
  const TruncatedSeriesQ series = hp_series_pi(x, truncation);
  const PolynomialQ p = poincare_polynomial(x);
  HyperbolicReport report = detail::series_experiment(series, &p);
  report.note = report.felix_bound_satisfied
                    ? "Felix bound satisfied: estimated radius < 1"
                    : "estimated radius >= 1 contradicts the Felix bound; data suspect";
  return report;
}

/// Evidence gathering for the boundary inequality HP^pi_X(r_X) <= P_X(r_X):
/// estimate the radius, test convergence there, compare when convergent.
inline HyperbolicReport question_42_experiment(const SpaceModel& x, int truncation) {
  if (classify(x) != EllipticityClass::Hyperbolic) {
    throw NotHyperbolic(x.name + " is not declared rationally hyperbolic");
  }
  const TruncatedSeriesQ series = hp_series_pi(x, truncation);
  const PolynomialQ p = poincare_polynomial(x);
  return detail::series_experiment(series, &p);
}

/// Calibration variant for raw coefficient streams.
inline HyperbolicReport question_42_experiment(const TruncatedSeriesQ& series,
                                               const PolynomialQ* compare = nullptr) {
  return detail::series_experiment(series, compare);
}

enum class RadiusSource { SourceSpace, KernelSeries };  // r_X versus r_f

/// Threshold search in the hyperbolic case: least n with
/// n * HP^pi_f(r) < (P_f(r))^n for 0 < r below the estimated radius.
/// Partial sums stand in for the series values; everything here is reported
/// as floating-point evidence, not proof.
struct HyperbolicThresholdEntry {
  int n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
};

struct HyperbolicThresholdReport {
  std::optional<int> threshold;  // n(r), if found within max_n
  int max_n = 0;
  double r = 0.0;
  double radius_estimate = 0.0;  // the bound r was checked against
  RadiusSource radius_source = RadiusSource::SourceSpace;
  std::optional<std::pair<int, int>> verified_range;
  std::vector<HyperbolicThresholdEntry> per_n;
};

inline HyperbolicThresholdReport hyperbolic_threshold(const MapModel& f, double r, int truncation,
                                                      int max_n = 12,
                                                      RadiusSource source = RadiusSource::SourceSpace) {
  if (ellipticity_of_map(f).hyperbolic_wrt_kernel() != Tri::Yes) {
    throw NotHyperbolic(f.name + " is not (known) rationally hyperbolic wrt kernel");
  }
  GradedDims h_kernel = kernel_dims(f.hmap);
  if (!h_kernel.support().finite()) {
    throw UnboundedSupport("homology kernel of " + f.name + " is not fully declared");
  }
  const PolynomialQ pf = PolynomialQ::one() + PolynomialQ::from_dims(h_kernel);
  if (!(pf(Rational(1)) > 1)) {
    throw NotApplicable("P_f(1) = 1: the hyperbolic threshold corollary needs a "
                        "noninjective H_i(f;Q)");
  }
  if (!(r > 0.0)) throw std::invalid_argument("r must be positive");

  const TruncatedSeriesQ kernel_series = hp_series_pi(f, truncation);
  const TruncatedSeriesQ radius_series =
      source == RadiusSource::SourceSpace ? hp_series_pi(f.source, truncation) : kernel_series;

  HyperbolicThresholdReport report;
  report.max_n = max_n;
  report.r = r;
  report.radius_source = source;
  report.radius_estimate = radius_estimate(radius_series).radius;
  if (r >= report.radius_estimate) {
    throw RadiusExceeded("r must stay below the estimated radius " +
                         std::to_string(report.radius_estimate));
  }

  const double hp_r = kernel_series.partial_sum(r);
  const double pf_r = pf(r);
  int verify_until = max_n;
  for (int n = 1; n <= max_n; ++n) {
    const double lhs = n * hp_r;
    const double rhs = std::pow(pf_r, n);
    report.per_n.push_back({n, lhs, rhs});
    if (!report.threshold && lhs < rhs) {
      report.threshold = n;
      verify_until = std::min(n + 5, max_n);
    }
    if (report.threshold) {
      if (!(lhs < rhs)) {
        report.threshold.reset();  // not sustained; keep searching
        verify_until = max_n;
      } else if (n >= verify_until) {
        report.verified_range = {*report.threshold, n};
        break;
      }
    }
  }
  return report;
}

}  // namespace poincare
