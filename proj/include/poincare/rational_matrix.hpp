#pragma once

#include <gmpxx.h>

#include <Eigen/Core>

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  using Real = mpq_class;
  using NonInteger = mpq_class;
  using Nested = mpq_class;
  using Literal = long;

  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }

  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100,
  };
};

}  // namespace Eigen

#include <unsupported/Eigen/KroneckerProduct>

#include "poincare/rational.hpp"

namespace poincare {

/// Dense matrix over exact rationals, row-major semantics left to Eigen.
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Rank over Q by fraction-preserving Gaussian elimination. Pivots are the
/// first nonzero entry per column; no magnitude heuristics are needed with
/// exact arithmetic.
inline Eigen::Index rank(const RationalMatrix& input) {
  if (input.rows() == 0 || input.cols() == 0) return 0;
  RationalMatrix m = input;
  Eigen::Index r = 0;
  for (Eigen::Index col = 0; col < m.cols() && r < m.rows(); ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = r; i < m.rows(); ++i) {
      if (m(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != r) m.row(pivot).swap(m.row(r));
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      if (m(i, col) == 0) continue;
      const Rational factor = m(i, col) / m(r, col);
      for (Eigen::Index j = col; j < m.cols(); ++j) m(i, j) -= factor * m(r, j);
    }
    ++r;
  }
  return r;
}

inline RationalMatrix kronecker_product(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  if (out.size() > 0) out = Eigen::kroneckerProduct(a, b);
  return out;
}

inline RationalMatrix identity_matrix(Eigen::Index n) {
  return RationalMatrix::Identity(n, n);
}

inline bool is_zero_matrix(const RationalMatrix& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (m(i, j) != 0) return false;
  return true;
}

}  // namespace poincare
