#pragma once

#include <algorithm>
#include <limits>
#include <map>
#include <string>

#include "poincare/errors.hpp"

namespace poincare {

/// Degrees at or beyond this bound are never declared.
inline constexpr int kUnboundedDegree = std::numeric_limits<int>::max();

enum class SupportKind {
  FiniteUpTo,   // ranks are zero in every degree above the bound
  TruncatedAt,  // ranks above the bound are unknown, never assumed zero
};

struct Support {
  SupportKind kind = SupportKind::FiniteUpTo;
  int bound = 0;

  static Support finite_up_to(int degree) { return {SupportKind::FiniteUpTo, degree}; }
  static Support truncated_at(int degree) { return {SupportKind::TruncatedAt, degree}; }

  bool finite() const { return kind == SupportKind::FiniteUpTo; }

  /// Highest degree whose rank is known. Unbounded for FiniteUpTo.
  int knowledge() const { return finite() ? kUnboundedDegree : bound; }

  friend bool operator==(const Support&, const Support&) = default;
};

/// Window algebra for degreewise sums: knowledge is the meet.
inline Support sum_support(const Support& a, const Support& b) {
  if (a.finite() && b.finite()) return Support::finite_up_to(std::max(a.bound, b.bound));
  return Support::truncated_at(std::min(a.knowledge(), b.knowledge()));
}

/// Window algebra for convolutions (Kunneth): a degree-i coefficient needs
/// every factor coefficient up to i, so knowledge is again the meet; two
/// fully known supports convolve to bound a+b.
inline Support convolution_support(const Support& a, const Support& b) {
  if (a.finite() && b.finite()) return Support::finite_up_to(a.bound + b.bound);
  return Support::truncated_at(std::min(a.knowledge(), b.knowledge()));
}

/// Degreewise nonnegative integer ranks with a declared support marker.
/// Stores nonzero ranks only; finiteness is declared, never inferred.
class GradedDims {
 public:
  using Dim = long long;

  explicit GradedDims(Support support) : support_(support) {}

  GradedDims(Support support, std::map<int, Dim> dims) : support_(support) {
    for (auto& [degree, rank] : dims) {
      if (degree < 0) throw InvalidDegree("negative degree in graded dimensions");
      if (rank < 0) throw InvalidModel("negative rank at degree " + std::to_string(degree));
      if (degree > support.knowledge()) {
        throw DegreeOutOfWindow("rank declared at degree " + std::to_string(degree) +
                                " beyond the support bound");
      }
      if (support.finite() && degree > support.bound) {
        throw DegreeOutOfWindow("nonzero rank above a FiniteUpTo bound");
      }
      if (rank > 0) dims_[degree] = rank;
    }
  }

  /// FiniteUpTo support with the bound at the top nonzero degree.
  static GradedDims finite(std::map<int, Dim> dims) {
    int top = 0;
    for (auto& [degree, rank] : dims)
      if (rank > 0) top = std::max(top, degree);
    return GradedDims(Support::finite_up_to(top), std::move(dims));
  }

  /// Rank at a degree; zero above a FiniteUpTo bound, throws beyond a
  /// TruncatedAt bound.
  Dim at(int degree) const {
    if (degree < 0) return 0;
    if (!known(degree)) {
      throw DegreeOutOfWindow("degree " + std::to_string(degree) + " beyond truncation " +
                              std::to_string(support_.bound));
    }
    auto it = dims_.find(degree);
    return it == dims_.end() ? 0 : it->second;
  }

  bool known(int degree) const { return degree <= support_.knowledge(); }

  const std::map<int, Dim>& entries() const { return dims_; }
  const Support& support() const { return support_; }

  /// Sum of all known ranks. The true total exactly when support is finite.
  Dim total_known() const {
    Dim t = 0;
    for (auto& [degree, rank] : dims_) t += rank;
    return t;
  }

  /// Highest degree with a nonzero rank, -1 if none.
  int top_nonzero() const { return dims_.empty() ? -1 : dims_.rbegin()->first; }

  friend bool operator==(const GradedDims&, const GradedDims&) = default;

  friend GradedDims sum(const GradedDims& a, const GradedDims& b) {
    Support s = sum_support(a.support_, b.support_);
    std::map<int, Dim> out;
    for (auto& [degree, rank] : a.dims_)
      if (degree <= s.knowledge()) out[degree] += rank;
    for (auto& [degree, rank] : b.dims_)
      if (degree <= s.knowledge()) out[degree] += rank;
    return GradedDims(s, std::move(out));
  }

  friend GradedDims convolve(const GradedDims& a, const GradedDims& b) {
    Support s = convolution_support(a.support_, b.support_);
    std::map<int, Dim> out;
    for (auto& [i, ra] : a.dims_) {
      for (auto& [j, rb] : b.dims_) {
        if (i + j <= s.knowledge()) out[i + j] += ra * rb;
      }
    }
    return GradedDims(s, std::move(out));
  }

 private:
  std::map<int, Dim> dims_;
  Support support_;
};

}  // namespace poincare
