#pragma once

#include <stdexcept>
#include <string>

namespace poincare {

/// A degree was queried beyond the declared truncation window.
struct DegreeOutOfWindow : std::out_of_range {
  explicit DegreeOutOfWindow(const std::string& what) : std::out_of_range(what) {}
};

/// An operation requiring fully known (FiniteUpTo) support was handed
/// truncated data.
struct UnboundedSupport : std::domain_error {
  explicit UnboundedSupport(const std::string& what) : std::domain_error(what) {}
};

/// A series is not the Hilbert series of any free graded Lie algebra.
struct NotRealizable : std::domain_error {
  explicit NotRealizable(const std::string& what) : std::domain_error(what) {}
};

/// Not enough coefficients for a meaningful estimate.
struct TooShort : std::invalid_argument {
  explicit TooShort(const std::string& what) : std::invalid_argument(what) {}
};

struct NotHyperbolic : std::domain_error {
  explicit NotHyperbolic(const std::string& what) : std::domain_error(what) {}
};

struct NotElliptic : std::domain_error {
  explicit NotElliptic(const std::string& what) : std::domain_error(what) {}
};

struct NotEllipticWrtKernel : std::domain_error {
  explicit NotEllipticWrtKernel(const std::string& what) : std::domain_error(what) {}
};

/// A check whose hypothesis fails on the given input.
struct NotApplicable : std::domain_error {
  explicit NotApplicable(const std::string& what) : std::domain_error(what) {}
};

struct RadiusExceeded : std::invalid_argument {
  explicit RadiusExceeded(const std::string& what) : std::invalid_argument(what) {}
};

struct InvalidDegree : std::invalid_argument {
  explicit InvalidDegree(const std::string& what) : std::invalid_argument(what) {}
};

/// Evaluation points must be >= 0.
struct NegativeEvaluationPoint : std::invalid_argument {
  explicit NegativeEvaluationPoint(const std::string& what) : std::invalid_argument(what) {}
};

/// Malformed model file, reference, or literal.
struct InvalidModel : std::runtime_error {
  explicit InvalidModel(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace poincare
