#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "poincare/graded_dims.hpp"
#include "poincare/pbw.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/truncated_series.hpp"

namespace poincare {

/// Default truncation for catalog entries with infinite support; covers every
/// builtin example with margin.
inline constexpr int kDefaultTruncation = 24;

/// Whether a total rank (homology or homotopy) is known finite, known
/// infinite, or undetermined by the declared data.
enum class Finiteness { Finite, Infinite, Unknown };

/// A rational model of a simply connected space: degreewise homology and
/// homotopy ranks plus provenance for the total-rank finiteness.
struct SpaceModel {
  std::string name;
  GradedDims homology;  // degree >= 0, H_0 = Q, H_1 = 0
  GradedDims homotopy;  // degree >= 2
  Finiteness homology_total = Finiteness::Unknown;
  Finiteness homotopy_total = Finiteness::Unknown;
  std::string notes;
};

inline SpaceModel make_space(std::string name, GradedDims homology, GradedDims homotopy,
                             Finiteness homology_total, Finiteness homotopy_total,
                             std::string notes = {}) {
  if (homology.at(0) != 1) throw InvalidModel("H_0 must have rank 1 (path-connected)");
  if (homology.known(1) && homology.at(1) != 0) {
    throw InvalidModel("H_1 must vanish (simply connected)");
  }
  for (auto& [degree, rank] : homotopy.entries()) {
    if (degree < 2) throw InvalidModel("homotopy ranks below degree 2 are excluded");
  }
  if (homology.support().finite() && homology_total != Finiteness::Finite) {
    throw InvalidModel("FiniteUpTo homology must be declared finite");
  }
  if (homotopy.support().finite() && homotopy_total != Finiteness::Finite) {
    throw InvalidModel("FiniteUpTo homotopy must be declared finite");
  }
  return SpaceModel{std::move(name), std::move(homology), std::move(homotopy), homology_total,
                    homotopy_total, std::move(notes)};
}

// -- catalog ----------------------------------------------------------------

inline SpaceModel point() {
  return make_space("pt", GradedDims::finite({{0, 1}}), GradedDims(Support::finite_up_to(1)),
                    Finiteness::Finite, Finiteness::Finite, "one cell; trivial minimal model");
}

inline SpaceModel sphere(int n) {
  if (n < 2) throw InvalidDegree("sphere dimension must be >= 2 (simple connectivity)");
  std::map<int, GradedDims::Dim> pi{{n, 1}};
  std::string notes;
  if (n % 2 == 0) {
    pi[2 * n - 1] = 1;
    notes = "minimal model (Lambda(x,y), dy = x^2): pi ranks at n and 2n-1";
  } else {
    notes = "minimal model (Lambda(x), d = 0)";
  }
  return make_space("S^" + std::to_string(n), GradedDims::finite({{0, 1}, {n, 1}}),
                    GradedDims::finite(std::move(pi)), Finiteness::Finite, Finiteness::Finite,
                    std::move(notes));
}

inline SpaceModel complex_projective(int n) {
  if (n < 1) throw InvalidDegree("CP^n needs n >= 1");
  std::map<int, GradedDims::Dim> h;
  for (int i = 0; i <= n; ++i) h[2 * i] = 1;
  return make_space("CP^" + std::to_string(n), GradedDims::finite(std::move(h)),
                    GradedDims::finite({{2, 1}, {2 * n + 1, 1}}), Finiteness::Finite,
                    Finiteness::Finite, "minimal model (Lambda(x2,y), dy = x^(n+1))");
}

inline SpaceModel eilenberg_maclane_q(int n, int truncation = kDefaultTruncation) {
  if (n < 2) throw InvalidDegree("K(Q,n) needs n >= 2 (simple connectivity)");
  GradedDims pi = GradedDims::finite({{n, 1}});
  if (n % 2 == 1) {
    return make_space("K(Q," + std::to_string(n) + ")", GradedDims::finite({{0, 1}, {n, 1}}),
                      std::move(pi), Finiteness::Finite, Finiteness::Finite,
                      "exterior cohomology Lambda(x_n)");
  }
  if (truncation < n) throw InvalidDegree("truncation below the fundamental class");
  std::map<int, GradedDims::Dim> h;
  for (int i = 0; i * n <= truncation; ++i) h[i * n] = 1;
  return make_space("K(Q," + std::to_string(n) + ")",
                    GradedDims(Support::truncated_at(truncation), std::move(h)), std::move(pi),
                    Finiteness::Infinite, Finiteness::Finite,
                    "polynomial cohomology Q[x_n]: homology rank is infinite");
}

inline SpaceModel wedge_of_spheres(const std::vector<int>& degrees,
                                   int truncation = kDefaultTruncation) {
  if (degrees.empty()) throw InvalidDegree("wedge needs at least one sphere");
  for (int n : degrees) {
    if (n < 2) throw InvalidDegree("wedge summands must be spheres of dimension >= 2");
  }
  if (degrees.size() == 1) return sphere(degrees[0]);

  std::ostringstream name;
  std::map<int, GradedDims::Dim> h{{0, 1}};
  int top = 0;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i) name << " v ";
    name << "S^" << degrees[i];
    h[degrees[i]] += 1;
    top = std::max(top, degrees[i]);
  }
  if (truncation < 2 * top) throw InvalidDegree("wedge truncation must reach degree 2*max");

  // Loop-space homology is the tensor algebra on one generator of loop degree
  // n_j - 1 per sphere; its Hilbert series inverts (1 - sum_j t^(n_j - 1)).
  const int loop_truncation = truncation - 1;
  std::vector<Rational> u(static_cast<std::size_t>(loop_truncation) + 1, Rational(0));
  u[0] = 1;
  for (int i = 1; i <= loop_truncation; ++i) {
    for (int n : degrees) {
      if (i - (n - 1) >= 0) u[static_cast<std::size_t>(i)] += u[static_cast<std::size_t>(i - (n - 1))];
    }
  }
  std::map<int, Rational> coeffs;
  for (int i = 0; i <= loop_truncation; ++i) {
    if (u[static_cast<std::size_t>(i)] != 0) coeffs[i] = u[static_cast<std::size_t>(i)];
  }
  GradedDims loop_generators = pbw_extract(TruncatedSeriesQ(loop_truncation, std::move(coeffs)));

  std::map<int, GradedDims::Dim> pi;
  for (auto& [k, l] : loop_generators.entries()) pi[k + 1] = l;
  return make_space(name.str(), GradedDims::finite(std::move(h)),
                    GradedDims(Support::truncated_at(truncation), std::move(pi)),
                    Finiteness::Finite, Finiteness::Infinite,
                    "free graded Lie algebra on the loop generators (PBW/Witt)");
}

// -- constructions ----------------------------------------------------------

namespace detail {

inline Finiteness combine_totals(Finiteness a, Finiteness b) {
  if (a == Finiteness::Infinite || b == Finiteness::Infinite) return Finiteness::Infinite;
  if (a == Finiteness::Finite && b == Finiteness::Finite) return Finiteness::Finite;
  return Finiteness::Unknown;
}

}  // namespace detail

/// Product space: homology convolves (Kunneth), homotopy adds degreewise.
inline SpaceModel product(const SpaceModel& x, const SpaceModel& y) {
  return make_space(x.name + " x " + y.name, convolve(x.homology, y.homology),
                    sum(x.homotopy, y.homotopy),
                    detail::combine_totals(x.homology_total, y.homology_total),
                    detail::combine_totals(x.homotopy_total, y.homotopy_total));
}

enum class EllipticityClass { Elliptic, Hyperbolic, UndeterminedTruncated };

/// Classification strictly from declared data; truncated data without a
/// finiteness provenance note stays undetermined.
inline EllipticityClass classify(const SpaceModel& x) {
  if (x.homology_total == Finiteness::Finite) {
    if (x.homotopy_total == Finiteness::Finite) return EllipticityClass::Elliptic;
    if (x.homotopy_total == Finiteness::Infinite) return EllipticityClass::Hyperbolic;
  }
  return EllipticityClass::UndeterminedTruncated;
}

inline PolynomialQ poincare_polynomial(const SpaceModel& x) {
  if (!x.homology.support().finite()) {
    throw UnboundedSupport("homology of " + x.name + " is not declared finite");
  }
  return PolynomialQ::from_dims(x.homology);
}

inline PolynomialQ homotopy_poincare_polynomial(const SpaceModel& x) {
  if (!x.homotopy.support().finite()) {
    throw UnboundedSupport("homotopy of " + x.name + " is not declared finite");
  }
  return PolynomialQ::from_dims(x.homotopy);
}

inline std::variant<PolynomialQ, TruncatedSeriesQ> homotopy_poincare(const SpaceModel& x) {
  if (x.homotopy.support().finite()) return homotopy_poincare_polynomial(x);
  return TruncatedSeriesQ::from_dims(x.homotopy, x.homotopy.support().bound);
}

inline long long euler(const SpaceModel& x) {
  return to_int64(poincare_polynomial(x)(Rational(-1)));
}

inline long long euler_pi(const SpaceModel& x) {
  return to_int64(homotopy_poincare_polynomial(x)(Rational(-1)));
}

/// Empirical exponential growth rate of a hyperbolic space's homotopy ranks:
/// max over k >= min_degree of (sum_{i<=k} ranks)^(1/k).
inline double hyperbolic_growth_probe(const SpaceModel& x, int min_degree) {
  if (classify(x) != EllipticityClass::Hyperbolic) {
    throw NotHyperbolic(x.name + " is not declared hyperbolic");
  }
  const int window = x.homotopy.support().knowledge();
  if (min_degree < 2 || min_degree > window) {
    throw TooShort("probe start must lie inside the declared window");
  }
  double cumulative = 0.0;
  double best = 0.0;
  auto it = x.homotopy.entries().begin();
  for (int k = 2; k <= window; ++k) {
    while (it != x.homotopy.entries().end() && it->first <= k) {
      cumulative += static_cast<double>(it->second);
      ++it;
    }
    if (k >= min_degree && cumulative > 0.0) {
      best = std::max(best, std::pow(cumulative, 1.0 / k));
    }
  }
  return best;
}

}  // namespace poincare
