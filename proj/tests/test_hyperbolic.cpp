#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "poincare/hyperbolic.hpp"

using namespace poincare;

namespace {

constexpr double kInvSqrt2 = 0.7071067811865476;
constexpr double kPiSquaredOverSix = 1.6449340668482264;

TruncatedSeriesQ basel_series(int n, long d = 1) {
  std::map<int, Rational> coeffs;
  for (int k = 1; k <= n; ++k) {
    coeffs[k] = pow_rational(Rational(d), static_cast<unsigned long>(k)) / Rational(k) / Rational(k);
  }
  return TruncatedSeriesQ(n, std::move(coeffs));
}

TruncatedSeriesQ geometric_series(int n, long d) {
  std::map<int, Rational> coeffs;
  for (int k = 0; k <= n; ++k) coeffs[k] = pow_rational(Rational(d), static_cast<unsigned long>(k));
  return TruncatedSeriesQ(n, std::move(coeffs));
}

// Hyperbolic-wrt-kernel with a noninjective homology class: the wedge
// inclusion crossed with the constant map S^2 -> pt.
MapModel synthetic_hyperbolic_map(int truncation) {
  return product_map(wedge_inclusion(3, truncation), constant_map(sphere(2), point()),
                     Exactness::AllowTruncated);
}

}  // namespace

TEST_CASE("hp series of spaces and maps") {
  TruncatedSeriesQ w = hp_series_pi(wedge_of_spheres({3, 3}, 10), 10);
  CHECK(w.coeff(3) == 2);
  CHECK(w.coeff(5) == 1);
  CHECK(w.coeff(7) == 2);
  CHECK(w.coeff(9) == 3);

  // the wedge inclusion's kernel series drops the degree-3 classes
  TruncatedSeriesQ k = hp_series_pi(wedge_inclusion(3, 10), 10);
  CHECK(k.coeff(3) == 0);
  CHECK(k.coeff(5) == 1);
  CHECK(k.coeff(7) == 2);
  CHECK(k.coeff(9) == 3);

  // elliptic input: polynomial support, infinite radius
  TruncatedSeriesQ s = hp_series_pi(sphere(4), 12);
  CHECK(s.finite_support());
  CHECK(radius_estimate(s).infinite_radius);
  PolynomialQ ppi = homotopy_poincare_polynomial(sphere(4));
  for (int d = 0; d <= 12; ++d) CHECK(s.coeff(d) == ppi.coeff(d));

  CHECK_THROWS_AS(hp_series_pi(wedge_of_spheres({3, 3}, 10), 12), DegreeOutOfWindow);

  // homological series for infinite homology (K(Q,4))
  TruncatedSeriesQ h = hp_series_h(eilenberg_maclane_q(4, 20), 20);
  CHECK(h.coeff(8) == 1);
  CHECK(h.coeff(9) == 0);
}

TEST_CASE("Felix bound on wedges") {
  HyperbolicReport w33 = felix_check(wedge_of_spheres({3, 3}, 60), 60);
  CHECK(w33.felix_bound_satisfied);
  CHECK(w33.radius.radius < 1.0);
  // Witt growth rate: radius 1/sqrt(2) within 3%
  CHECK(w33.radius.radius == doctest::Approx(kInvSqrt2).epsilon(0.03));

  HyperbolicReport w22 = felix_check(wedge_of_spheres({2, 2}, 60), 60);
  CHECK(w22.felix_bound_satisfied);
  CHECK(w22.radius.radius == doctest::Approx(0.5).epsilon(0.05));

  CHECK_THROWS_AS(felix_check(sphere(3), 60), NotHyperbolic);
  CHECK_THROWS_AS(felix_check(wedge_of_spheres({3, 3}, 60), 12), TooShort);
}

TEST_CASE("kernel series dominated by the source series") {
  // dim Ker(pi_i(f)) <= dim pi_i(X) degreewise, so the kernel radius cannot
  // be smaller (up to estimator tolerance)
  MapModel g = wedge_inclusion(3, 60);
  const double r_f = radius_estimate(hp_series_pi(g, 60)).radius;
  const double r_x = radius_estimate(hp_series_pi(g.source, 60)).radius;
  CHECK(r_f >= 0.95 * r_x);
  CHECK(r_x < 1.0);
  CHECK(r_f < 1.0);

  TruncatedSeriesQ kernel = hp_series_pi(g, 60);
  TruncatedSeriesQ source = hp_series_pi(g.source, 60);
  for (int d = 0; d <= 60; ++d) CHECK(kernel.coeff(d) <= source.coeff(d));
}

TEST_CASE("hyperbolic threshold on a synthetic map") {
  MapModel f = synthetic_hyperbolic_map(60);
  REQUIRE(ellipticity_of_map(f).hyperbolic_wrt_kernel() == Tri::Yes);

  HyperbolicThresholdReport report = hyperbolic_threshold(f, 0.5, 60, 12);
  REQUIRE(report.threshold.has_value());
  CHECK(*report.threshold == 1);
  REQUIRE(report.verified_range.has_value());
  CHECK(report.verified_range->second - report.verified_range->first >= 5);

  // n(r) is nonincreasing as r decreases
  int previous = 100;
  for (double r : {0.5, 0.3, 0.1}) {
    HyperbolicThresholdReport rr = hyperbolic_threshold(f, r, 60, 12);
    REQUIRE(rr.threshold.has_value());
    CHECK(*rr.threshold <= previous);
    previous = *rr.threshold;
  }

  CHECK_THROWS_AS(hyperbolic_threshold(f, 0.99, 60, 12), RadiusExceeded);
  CHECK_THROWS_AS(hyperbolic_threshold(constant_map(sphere(2), point()), 0.5, 60, 12),
                  NotHyperbolic);
  // wedge inclusion itself has an injective homology map: P_f(1) = 1
  CHECK_THROWS_AS(hyperbolic_threshold(wedge_inclusion(3, 60), 0.5, 60, 12), NotApplicable);
}

TEST_CASE("question 4.2 experiment on the wedge") {
  HyperbolicReport report = question_42_experiment(wedge_of_spheres({3, 3}, 60), 60);
  // harmonic-type partial sums at the radius: divergence suspected, question vacuous
  CHECK(report.at_radius.verdict == ConvergenceVerdict::DivergenceSuspected);
  CHECK(report.note.find("vacuous") != std::string::npos);
}

TEST_CASE("question 4.2 calibration streams") {
  HyperbolicReport p1 = question_42_experiment(basel_series(200));
  CHECK(p1.radius.radius == doctest::Approx(1.0).epsilon(0.02));
  CHECK(p1.at_radius.verdict == ConvergenceVerdict::ConvergesTo);
  CHECK(p1.at_radius.value == doctest::Approx(kPiSquaredOverSix).epsilon(0.01));

  HyperbolicReport p2 = question_42_experiment(basel_series(200, 3));
  CHECK(p2.radius.radius == doctest::Approx(1.0 / 3).epsilon(0.02));
  CHECK(p2.at_radius.verdict == ConvergenceVerdict::ConvergesTo);
  CHECK(p2.at_radius.value == doctest::Approx(kPiSquaredOverSix).epsilon(0.01));

  HyperbolicReport p3 = question_42_experiment(geometric_series(512, 1));
  CHECK(p3.at_radius.verdict == ConvergenceVerdict::DivergenceSuspected);

  HyperbolicReport p4 = question_42_experiment(geometric_series(200, 3));
  CHECK(p4.radius.radius == doctest::Approx(1.0 / 3).epsilon(0.02));
  CHECK(p4.at_radius.verdict == ConvergenceVerdict::DivergenceSuspected);
}

TEST_CASE("comparison at the radius when convergent") {
  // inject a stream converging at its radius alongside a comparison polynomial
  PolynomialQ p = PolynomialQ({{0, Rational(2)}, {2, Rational(3)}});
  HyperbolicReport report = question_42_experiment(basel_series(200), &p);
  REQUIRE(report.comparison.has_value());
  CHECK(report.comparison->first == doctest::Approx(kPiSquaredOverSix).epsilon(0.01));
  CHECK(report.comparison->second == doctest::Approx(5.0).epsilon(0.05));
  CHECK(report.note.find("inequality holds") != std::string::npos);
}
