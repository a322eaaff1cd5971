#pragma once

#include <cmath>
#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "poincare/graded_dims.hpp"
#include "poincare/rational.hpp"

namespace poincare {

/// Polynomial over Q with exact coefficients, stored sparsely.
class PolynomialQ {
 public:
  PolynomialQ() = default;

  explicit PolynomialQ(std::map<int, Rational> coeffs) {
    for (auto& [degree, c] : coeffs) {
      if (degree < 0) throw InvalidDegree("negative degree in polynomial");
      if (c != 0) coeffs_[degree] = canonical(c);
    }
  }

  static PolynomialQ constant(const Rational& c) { return PolynomialQ({{0, c}}); }

  static PolynomialQ monomial(int degree, const Rational& c) { return PolynomialQ({{degree, c}}); }

  static PolynomialQ one() { return constant(Rational(1)); }

  /// Generating polynomial of a fully known rank profile.
  static PolynomialQ from_dims(const GradedDims& dims) {
    if (!dims.support().finite()) {
      throw UnboundedSupport("generating polynomial requires FiniteUpTo support");
    }
    std::map<int, Rational> coeffs;
    for (auto& [degree, rank] : dims.entries()) coeffs[degree] = Rational(static_cast<long>(rank));
    return PolynomialQ(std::move(coeffs));
  }

  const std::map<int, Rational>& coeffs() const { return coeffs_; }

  Rational coeff(int degree) const {
    auto it = coeffs_.find(degree);
    return it == coeffs_.end() ? Rational(0) : it->second;
  }

  int degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
  bool is_zero() const { return coeffs_.empty(); }

  friend PolynomialQ operator+(const PolynomialQ& p, const PolynomialQ& q) {
    std::map<int, Rational> out = p.coeffs_;
    for (auto& [d, c] : q.coeffs_) out[d] += c;
    return PolynomialQ(std::move(out));
  }

  friend PolynomialQ operator-(const PolynomialQ& p, const PolynomialQ& q) {
    std::map<int, Rational> out = p.coeffs_;
    for (auto& [d, c] : q.coeffs_) out[d] -= c;
    return PolynomialQ(std::move(out));
  }

  friend PolynomialQ operator-(const PolynomialQ& p) {
    std::map<int, Rational> out;
    for (auto& [d, c] : p.coeffs_) out[d] = -c;
    return PolynomialQ(std::move(out));
  }

  friend PolynomialQ operator*(const PolynomialQ& p, const PolynomialQ& q) {
    std::map<int, Rational> out;
    for (auto& [i, a] : p.coeffs_)
      for (auto& [j, b] : q.coeffs_) out[i + j] += a * b;
    return PolynomialQ(std::move(out));
  }

  PolynomialQ scale(const Rational& c) const {
    std::map<int, Rational> out;
    for (auto& [d, a] : coeffs_) out[d] = a * c;
    return PolynomialQ(std::move(out));
  }

  PolynomialQ pow(unsigned long n) const {
    PolynomialQ result = one();
    PolynomialQ base = *this;
    while (n > 0) {
      if (n & 1) result = result * base;
      base = base * base;
      n >>= 1;
    }
    return result;
  }

  /// Exact evaluation: sparse Horner over descending degrees.
  Rational operator()(const Rational& point) const {
    const Rational t = canonical(point);
    Rational acc(0);
    int prev = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (prev >= 0) acc *= pow_rational(t, static_cast<unsigned long>(prev - it->first));
      acc += it->second;
      prev = it->first;
    }
    if (prev > 0) acc *= pow_rational(t, static_cast<unsigned long>(prev));
    return acc;
  }

  double operator()(double t) const {
    double acc = 0.0;
    int prev = -1;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      if (prev >= 0) acc *= std::pow(t, prev - it->first);
      acc += to_double(it->second);
      prev = it->first;
    }
    if (prev > 0) acc *= std::pow(t, prev);
    return acc;
  }

  friend bool operator==(const PolynomialQ&, const PolynomialQ&) = default;

  /// Human form, e.g. "1 + 2t^2 + t^5".
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto& [d, c] : coeffs_) {
      Rational a = c;
      if (!first) {
        out << (a < 0 ? " - " : " + ");
        if (a < 0) a = -a;
      }
      first = false;
      if (d == 0) {
        out << to_string(a);
      } else {
        if (a != 1) out << to_string(a);
        out << "t";
        if (d != 1) out << "^" << d;
      }
    }
    return out.str();
  }

 private:
  std::map<int, Rational> coeffs_;  // nonzero coefficients only
};

}  // namespace poincare
