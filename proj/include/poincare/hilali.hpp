#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "poincare/map_model.hpp"
#include "poincare/polynomial.hpp"
#include "poincare/truncated_series.hpp"

namespace poincare {

using PolyOrSeries = std::variant<PolynomialQ, TruncatedSeriesQ>;

namespace detail {

inline PolyOrSeries generating_function(const GradedDims& dims) {
  if (dims.support().finite()) return PolynomialQ::from_dims(dims);
  return TruncatedSeriesQ::from_dims(dims, dims.support().bound);
}

}  // namespace detail

// Kernel/cokernel Poincare generating functions of a map. Polynomial exactly
// when the profile support is fully known; truncated otherwise.
inline PolyOrSeries ker_poincare(const MapModel& f) {
  return detail::generating_function(kernel_dims(f.hmap));
}
inline PolyOrSeries ker_poincare_pi(const MapModel& f) {
  return detail::generating_function(kernel_dims(f.pimap));
}
inline PolyOrSeries cok_poincare(const MapModel& f) {
  return detail::generating_function(cokernel_dims(f.hmap));
}
inline PolyOrSeries cok_poincare_pi(const MapModel& f) {
  return detail::generating_function(cokernel_dims(f.pimap));
}

/// P_f(t) = 1 + sum_{i>=2} dim Ker H_i(f;Q) t^i, for maps elliptic with
/// respect to kernel.
inline PolynomialQ p_of_map(const MapModel& f) {
  if (ellipticity_of_map(f).elliptic_wrt_kernel() != Tri::Yes) {
    throw NotEllipticWrtKernel(f.name + " is not (known) rationally elliptic wrt kernel");
  }
  GradedDims kernel = kernel_dims(f.hmap);
  if (!kernel.support().finite()) {
    throw UnboundedSupport("kernel profile of " + f.name + " is not fully declared");
  }
  return PolynomialQ::one() + PolynomialQ::from_dims(kernel);
}

/// P^pi_f(t) = sum_{i>=2} dim Ker(pi_i(f) tensor Q) t^i.
inline PolynomialQ p_pi_of_map(const MapModel& f) {
  if (ellipticity_of_map(f).elliptic_wrt_kernel() != Tri::Yes) {
    throw NotEllipticWrtKernel(f.name + " is not (known) rationally elliptic wrt kernel");
  }
  GradedDims kernel = kernel_dims(f.pimap);
  if (!kernel.support().finite()) {
    throw UnboundedSupport("pi-kernel profile of " + f.name + " is not fully declared");
  }
  return PolynomialQ::from_dims(kernel);
}

/// The exact rank-nullity identities Ker P_f - P_X + P_Y - Cok P_f = 0 on
/// homology and homotopy, checked as polynomial identities. Requires both
/// spaces elliptic.
struct IdentityReport {
  bool h_identity = false;
  bool pi_identity = false;
  bool h_surjective = false;   // cokernel vanishes degreewise
  bool pi_surjective = false;
  PolynomialQ h_residual;      // zero when the identity holds
  PolynomialQ pi_residual;
};

inline IdentityReport verify_exact_identities(const MapModel& f) {
  if (classify(f.source) != EllipticityClass::Elliptic) {
    throw NotApplicable("source " + f.source.name + " is not (known) rationally elliptic");
  }
  if (classify(f.target) != EllipticityClass::Elliptic) {
    throw NotApplicable("target " + f.target.name + " is not (known) rationally elliptic");
  }
  const PolynomialQ ker_h = PolynomialQ::from_dims(kernel_dims(f.hmap));
  const PolynomialQ cok_h = PolynomialQ::from_dims(cokernel_dims(f.hmap));
  const PolynomialQ ker_pi = PolynomialQ::from_dims(kernel_dims(f.pimap));
  const PolynomialQ cok_pi = PolynomialQ::from_dims(cokernel_dims(f.pimap));

  IdentityReport report;
  report.h_residual = ker_h - poincare_polynomial(f.source) + poincare_polynomial(f.target) - cok_h;
  report.pi_residual = ker_pi - homotopy_poincare_polynomial(f.source) +
                       homotopy_poincare_polynomial(f.target) - cok_pi;
  report.h_identity = report.h_residual.is_zero();
  report.pi_identity = report.pi_residual.is_zero();
  report.h_surjective = cok_h.is_zero();
  report.pi_surjective = cok_pi.is_zero();
  return report;
}

/// Outcome of an inequality check with its exact values.
struct HilaliVerdict {
  Rational lhs;  // homotopical side
  Rational rhs;  // homological side
  bool holds = false;
  bool strict = false;
  std::string context;
};

inline HilaliVerdict make_verdict(Rational lhs, Rational rhs, std::string context) {
  HilaliVerdict v{std::move(lhs), std::move(rhs), false, false, std::move(context)};
  v.holds = v.lhs <= v.rhs;
  v.strict = v.lhs < v.rhs;
  return v;
}

/// P^pi_X(1) <= P_X(1) for a rationally elliptic space.
inline HilaliVerdict hilali_check(const SpaceModel& x) {
  if (classify(x) != EllipticityClass::Elliptic) {
    throw NotElliptic(x.name + " is not (known) rationally elliptic");
  }
  return make_verdict(homotopy_poincare_polynomial(x)(Rational(1)),
                      poincare_polynomial(x)(Rational(1)), x.name);
}

/// P^pi_f(1) <= P_f(1) for a map elliptic with respect to kernel.
inline HilaliVerdict relative_hilali_check(const MapModel& f) {
  return make_verdict(p_pi_of_map(f)(Rational(1)), p_of_map(f)(Rational(1)), f.name);
}

/// Threshold search for the strict inequality P^pi_{f^n}(s) < P_{f^n}(s).
struct ThresholdEntry {
  int n = 0;
  Rational lhs;  // P^pi_{f^n}(s)
  Rational rhs;  // P_{f^n}(s)
};

struct ThresholdReport {
  std::optional<int> analytic_bound;         // least n with n*P^pi_f(s) < P_f(s)^n
  std::optional<int> exact_minimum;          // least n with the strict inequality, if <= max_n
  int max_n = 0;
  std::optional<std::pair<int, int>> verified_range;  // strict inequality verified throughout
  std::vector<ThresholdEntry> per_n;
  Rational s;
};

/// The "modulo product" computation: an analytic bound from
/// n*P^pi_f(s) < (P_f(s))^n and the exact minimum from Kunneth powers.
/// Requires P_f(s) > 1 (some H_i(f) not injective) unless s = 0, where the
/// strict inequality 0 < 1 holds for every n.
inline ThresholdReport product_threshold(const MapModel& f, const Rational& point = Rational(1),
                                         int max_n = 12) {
  const Rational s = canonical(point);
  if (s < 0) throw NegativeEvaluationPoint("evaluation point must be >= 0");
  if (max_n < 1) throw InvalidDegree("max_n must be >= 1");
  if (!f.source.homology.support().finite()) {
    throw UnboundedSupport("threshold needs finite source homology");
  }
  const PolynomialQ pf = p_of_map(f);
  const PolynomialQ ppi = p_pi_of_map(f);
  const Rational pf_s = pf(s);
  const Rational ppi_s = ppi(s);

  ThresholdReport report;
  report.s = s;
  report.max_n = max_n;

  if (s > 0 && pf_s == 1) {
    throw NotApplicable("P_f(s) = 1: every H_i(f;Q) is injective, the threshold theorem "
                        "does not apply");
  }

  // Analytic bound: the least n from which n * P^pi_f(s) < P_f(s)^n holds for
  // good. n * c / b^n is unimodal in n for b > 1, so the condition is
  // sustained once it holds past the peak at n ~ 1/(b-1); termination is
  // guaranteed there.
  if (ppi_s == 0) {
    report.analytic_bound = 1;  // 0 < P_f(s)^n for every n, including s = 0
  } else {
    constexpr int kScanCap = 10000;
    int sustained_from = 1;
    Rational power(1);
    for (int n = 1;; ++n) {
      if (n > kScanCap) {
        throw NotApplicable("analytic bound beyond the search cap; P_f(s) is too close to 1");
      }
      power *= pf_s;
      const bool holds = Rational(n) * ppi_s < power;
      if (!holds) {
        sustained_from = n + 1;
        continue;
      }
      // Past the peak iff (n+1) <= n * P_f(s); then the margin only grows.
      if (Rational(n + 1) <= Rational(n) * pf_s) {
        report.analytic_bound = sustained_from;
        break;
      }
    }
  }

  // Exact route: Kunneth powers with exact elimination, f^n built up
  // incrementally. A broken streak restarts the search.
  MapModel power_of_f = f;
  int verify_until = max_n;
  for (int n = 1; n <= max_n; ++n) {
    if (n > 1) power_of_f = product_map(power_of_f, f);
    const Rational lhs = p_pi_of_map(power_of_f)(s);
    const Rational rhs = p_of_map(power_of_f)(s);
    report.per_n.push_back({n, lhs, rhs});
    if (!report.exact_minimum && lhs < rhs) {
      report.exact_minimum = n;
      verify_until = std::min(n + 5, max_n);
    }
    if (report.exact_minimum) {
      if (!(lhs < rhs)) {
        report.exact_minimum.reset();
        verify_until = max_n;
      } else if (n >= verify_until) {
        report.verified_range = {*report.exact_minimum, n};
        break;
      }
    }
  }
  return report;
}

/// Which case of the product corollary applies to a pair of maps, and the
/// verified product inequality when one does.
enum class CorollaryCase { BothAtLeastTwo, OneHomotopyTrivial, Undetermined, HypothesisFails };

struct CorollaryReport {
  CorollaryCase which = CorollaryCase::Undetermined;
  HilaliVerdict f1;
  HilaliVerdict f2;
  HilaliVerdict product;  // P^pi vs P of f1 x f2, always computed
};

inline CorollaryReport corollary_case_check(const MapModel& f1, const MapModel& f2) {
  if (!f1.source.homology.support().finite() || !f2.source.homology.support().finite()) {
    throw UnboundedSupport("corollary needs finite source homology on both factors");
  }
  CorollaryReport report;
  report.f1 = relative_hilali_check(f1);
  report.f2 = relative_hilali_check(f2);

  MapModel prod = product_map(f1, f2);
  report.product = make_verdict(p_pi_of_map(prod)(Rational(1)), p_of_map(prod)(Rational(1)),
                                prod.name);

  if (!report.f1.holds || !report.f2.holds) {
    report.which = CorollaryCase::HypothesisFails;
  } else if (report.f1.rhs >= 2 && report.f2.rhs >= 2) {
    report.which = CorollaryCase::BothAtLeastTwo;
  } else if (report.f1.lhs == 0 || report.f2.lhs == 0) {
    report.which = CorollaryCase::OneHomotopyTrivial;
  } else {
    report.which = CorollaryCase::Undetermined;  // some P_{f_i}(1) = 1 with P^pi_{f_i}(1) != 0
  }
  return report;
}

/// Probe of the injectivity conjecture (homological injectivity implies
/// homotopical injectivity, for rationally elliptic maps) on one model.
struct InjectivityReport {
  Tri h_injective = Tri::Undetermined;
  Tri pi_injective = Tri::Undetermined;
  MapClassification classification;
  bool in_scope = false;  // the conjecture concerns rationally elliptic maps
  Tri consistent = Tri::Undetermined;
  std::string note;
};

namespace detail {

inline Tri injectivity_from_profile(const GradedDims& kernel) {
  if (!kernel.entries().empty()) return Tri::No;
  return kernel.support().finite() ? Tri::Yes : Tri::Undetermined;
}

}  // namespace detail

inline InjectivityReport injectivity_probe(const MapModel& f) {
  InjectivityReport report;
  report.classification = ellipticity_of_map(f);
  report.h_injective = detail::injectivity_from_profile(kernel_dims(f.hmap));
  report.pi_injective = detail::injectivity_from_profile(kernel_dims(f.pimap));
  report.in_scope = report.classification.elliptic() == Tri::Yes;

  if (report.h_injective == Tri::No) {
    report.consistent = Tri::Yes;  // hypothesis fails, nothing to contradict
  } else if (report.h_injective == Tri::Yes) {
    report.consistent = report.pi_injective;
  }
  if (!report.in_scope) {
    report.note = "outside conjecture scope: map is not (known) rationally elliptic";
  }
  return report;
}

}  // namespace poincare
