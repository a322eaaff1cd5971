#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "poincare/pbw.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/truncated_series.hpp"

using namespace poincare;

namespace {

PolynomialQ poly(std::initializer_list<std::pair<int, long>> coeffs) {
  std::map<int, Rational> m;
  for (auto& [d, c] : coeffs) m[d] = Rational(c);
  return PolynomialQ(m);
}

// p1(x) = sum x^n / n^2, the Basel series; p2 scales x by d.
TruncatedSeriesQ basel_series(int n, long d = 1) {
  std::map<int, Rational> coeffs;
  for (int k = 1; k <= n; ++k) {
    coeffs[k] = pow_rational(Rational(d), static_cast<unsigned long>(k)) / Rational(k) / Rational(k);
  }
  return TruncatedSeriesQ(n, std::move(coeffs));
}

// p3(x) = sum x^n; p4 scales x by d.
TruncatedSeriesQ geometric_series(int n, long d = 1) {
  std::map<int, Rational> coeffs;
  for (int k = 0; k <= n; ++k) coeffs[k] = pow_rational(Rational(d), static_cast<unsigned long>(k));
  return TruncatedSeriesQ(n, std::move(coeffs));
}

constexpr double kPiSquaredOverSix = 1.6449340668482264;

}  // namespace

TEST_CASE("polynomial ring operations") {
  PolynomialQ a = poly({{0, 1}, {2, 1}});  // 1 + t^2
  PolynomialQ b = poly({{0, 1}, {3, 1}});  // 1 + t^3
  CHECK(a * b == poly({{0, 1}, {2, 1}, {3, 1}, {5, 1}}));
  CHECK(a * PolynomialQ::one() == a);
  CHECK((a - a).is_zero());
  CHECK((-a) + a == PolynomialQ());

  // P_{S^2} * P_{S^2} at 1 equals the Kunneth convolution total 4
  CHECK((a * a)(Rational(1)) == 4);
}

TEST_CASE("ring laws on random polynomials") {
  std::mt19937 rng(271828);
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> deg(0, 6);
  auto random_poly = [&] {
    std::map<int, Rational> m;
    for (int i = 0; i < 4; ++i) {
      Rational c(coeff(rng), 1 + i % 2);
      c.canonicalize();
      m[deg(rng)] = c;
    }
    return PolynomialQ(m);
  };
  for (int trial = 0; trial < 100; ++trial) {
    PolynomialQ p = random_poly(), q = random_poly(), r = random_poly();
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * (q + r) == p * q + p * r);
    CHECK(p + q == q + p);
    const Rational t(trial % 5, 3);
    CHECK((p * q)(t) == p(t) * q(t));
  }
}

TEST_CASE("evaluation") {
  PolynomialQ s2 = poly({{0, 1}, {2, 1}});
  CHECK(s2(Rational(1)) == 2);  // P_{S^2}(1)
  CHECK(s2(Rational(-1)) == 2);

  for (int k = 1; k <= 4; ++k) {
    PolynomialQ pi_even = poly({{2 * k, 1}, {4 * k - 1, 1}});
    CHECK(pi_even(Rational(-1)) == 0);  // (-1)^(4k-1) + (-1)^(2k)
  }

  CHECK(poly({{1, 1}, {4, 2}})(Rational(1, 2)) == Rational(1, 2) + Rational(2) / Rational(16));
}

TEST_CASE("Basel partial sum at 1") {
  TruncatedSeriesQ p1 = basel_series(10000);
  CHECK(std::abs(p1.partial_sum(1.0) - kPiSquaredOverSix) < 1e-3);
}

TEST_CASE("radius estimation: geometric coefficients") {
  TruncatedSeriesQ p4 = geometric_series(60, 3);
  RadiusEstimate est = radius_estimate(p4);
  CHECK(!est.infinite_radius);
  CHECK(est.root_test_value == doctest::Approx(1.0 / 3).epsilon(0.02));
  CHECK(est.radius == doctest::Approx(1.0 / 3).epsilon(0.02));
  CHECK(est.ratio_test_value.has_value());
  CHECK(*est.ratio_test_value == doctest::Approx(1.0 / 3).epsilon(0.02));
}

TEST_CASE("radius estimation: Basel-type coefficients") {
  RadiusEstimate p1 = radius_estimate(basel_series(200));
  CHECK(p1.radius == doctest::Approx(1.0).epsilon(0.02));

  RadiusEstimate p2 = radius_estimate(basel_series(200, 3));
  CHECK(p2.radius == doctest::Approx(1.0 / 3).epsilon(0.02));
}

TEST_CASE("radius estimation: declared polynomials have infinite radius") {
  TruncatedSeriesQ poly_series = TruncatedSeriesQ::from_polynomial(poly({{2, 1}, {3, 1}}), 40);
  RadiusEstimate est = radius_estimate(poly_series);
  CHECK(est.infinite_radius);
  CHECK(std::isinf(est.radius));

  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coeff(0, 9);
  for (int trial = 0; trial < 20; ++trial) {
    std::map<int, Rational> coeffs;
    for (int d = 0; d <= 30; ++d) {
      if (int c = coeff(rng); c > 0) coeffs[d] = Rational(c);
    }
    TruncatedSeriesQ s(30, coeffs, /*finite_support=*/true);
    CHECK(radius_estimate(s).infinite_radius);
  }
}

TEST_CASE("radius estimation rejects short series") {
  CHECK_THROWS_AS(radius_estimate(basel_series(7)), TooShort);
}

TEST_CASE("root test is coefficientwise monotone") {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> big(0, 1000);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 12 + trial % 30;
    std::map<int, Rational> upper, lower;
    for (int d = 1; d <= n; ++d) {
      const long b = big(rng);
      if (b > 0) upper[d] = Rational(b);
      std::uniform_int_distribution<long> below(0, b);
      if (const long a = below(rng); a > 0) lower[d] = Rational(a);
    }
    RadiusEstimate ea = radius_estimate(TruncatedSeriesQ(n, lower));
    RadiusEstimate eb = radius_estimate(TruncatedSeriesQ(n, upper));
    const double ra = ea.infinite_radius ? std::numeric_limits<double>::infinity() : ea.root_test_value;
    const double rb = eb.infinite_radius ? std::numeric_limits<double>::infinity() : eb.root_test_value;
    CHECK(ra >= rb - 1e-12);
  }
}

TEST_CASE("convergence heuristic at the radius") {
  // p1 at 1: partial sums settle geometrically onto pi^2/6
  ConvergenceReport conv = converges_at_radius(basel_series(4096), 1.0);
  CHECK(conv.verdict == ConvergenceVerdict::ConvergesTo);
  CHECK(conv.value == doctest::Approx(kPiSquaredOverSix).epsilon(1e-3));
  CHECK(conv.tail_bound < 1e-2);

  // p3 at 1 diverges: increments double
  CHECK(converges_at_radius(geometric_series(512), 1.0).verdict ==
        ConvergenceVerdict::DivergenceSuspected);

  // p4 with d = 3 at its radius 1/3: terms are constant
  CHECK(converges_at_radius(geometric_series(200, 3), 1.0 / 3).verdict ==
        ConvergenceVerdict::DivergenceSuspected);

  // polynomial tail: converges exactly
  ConvergenceReport flat = converges_at_radius(TruncatedSeriesQ::from_polynomial(poly({{2, 5}}), 64), 2.0);
  CHECK(flat.verdict == ConvergenceVerdict::ConvergesTo);
  CHECK(flat.value == doctest::Approx(20.0));
}

TEST_CASE("pbw extraction of a two-letter tensor algebra") {
  // u = 1/(1 - 2 t^2): generators are the Witt numbers in even degrees.
  std::map<int, Rational> coeffs;
  for (int m = 0; 2 * m <= 9; ++m) coeffs[2 * m] = pow_rational(Rational(2), m);
  GradedDims l = pbw_extract(TruncatedSeriesQ(9, coeffs));
  CHECK(l.at(2) == 2);
  CHECK(l.at(4) == 1);
  CHECK(l.at(6) == 2);
  CHECK(l.at(8) == 3);
  CHECK(l.at(3) == 0);

  // against both oracles: brute-force Lyndon words and the Witt formula
  for (int m = 1; m <= 4; ++m) {
    CHECK(l.at(2 * m) == oracles::lyndon_count(2, m));
    CHECK(l.at(2 * m) == oracles::witt_number(2, m));
  }
}

TEST_CASE("pbw extraction of single generators") {
  // u = 1 + t^k for odd k: one exterior generator
  GradedDims one_odd = pbw_extract(TruncatedSeriesQ(12, {{0, Rational(1)}, {5, Rational(1)}}));
  CHECK(one_odd.entries() == std::map<int, GradedDims::Dim>{{5, 1}});

  // u = 1/(1 - t^2): one polynomial generator, everything else forced to zero
  std::map<int, Rational> coeffs;
  for (int m = 0; 2 * m <= 12; ++m) coeffs[2 * m] = 1;
  GradedDims one_even = pbw_extract(TruncatedSeriesQ(12, coeffs));
  CHECK(one_even.entries() == std::map<int, GradedDims::Dim>{{2, 1}});

  // u = 1/(1 - t) on one odd letter: l_1 = 1 then l_2 = 1, closing exactly
  std::map<int, Rational> ones;
  for (int d = 0; d <= 10; ++d) ones[d] = 1;
  GradedDims mixed = pbw_extract(TruncatedSeriesQ(10, ones));
  CHECK(mixed.entries() == std::map<int, GradedDims::Dim>{{1, 1}, {2, 1}});
}

TEST_CASE("pbw roundtrip on random realizable profiles") {
  std::mt19937 rng(60601);
  std::uniform_int_distribution<int> count(0, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 10 + trial % 6;
    std::map<int, long long> generators;
    for (int k = 1; k <= n; ++k) {
      if (int c = count(rng); c > 0) generators[k] = c;
    }
    const auto expanded = oracles::pbw_reexpand(generators, n);
    std::map<int, Rational> coeffs;
    for (int d = 0; d <= n; ++d) {
      if (expanded[static_cast<std::size_t>(d)] != 0) coeffs[d] = expanded[static_cast<std::size_t>(d)];
    }
    GradedDims extracted = pbw_extract(TruncatedSeriesQ(n, coeffs));
    std::map<int, long long> got(extracted.entries().begin(), extracted.entries().end());
    CHECK(got == generators);

    // and the library-side re-expansion reproduces the series exactly
    TruncatedSeriesQ back = pbw_expand(extracted, n);
    for (int d = 0; d <= n; ++d) CHECK(back.coeff(d) == expanded[static_cast<std::size_t>(d)]);
  }
}

TEST_CASE("pbw rejects unrealizable series") {
  // constant term must be 1
  CHECK_THROWS_AS(pbw_extract(TruncatedSeriesQ(8, {{0, Rational(2)}})), NotRealizable);
  // 1 + t^2 alone is unrealizable: the polynomial generator forces t^4
  CHECK_THROWS_AS(pbw_extract(TruncatedSeriesQ(8, {{0, Rational(1)},
                                                   {2, Rational(1)},
                                                   {4, Rational(0)}})),
                  NotRealizable);
  // fractional coefficients are not a tensor algebra
  CHECK_THROWS_AS(pbw_extract(TruncatedSeriesQ(8, {{0, Rational(1)}, {1, Rational(1, 2)}})),
                  NotRealizable);
}
