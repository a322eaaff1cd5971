#pragma once

#include <map>
#include <string>
#include <vector>

#include "poincare/graded_dims.hpp"
#include "poincare/rational.hpp"
#include "poincare/truncated_series.hpp"

namespace poincare {

namespace detail {

/// In-place truncated multiply of a dense series by (1 + t^k)^l (odd k,
/// exterior generators) or (1 - t^k)^(-l) (even k, polynomial generators).
inline void multiply_generator_factor(std::vector<Rational>& series, int k, long long l) {
  const int n = static_cast<int>(series.size()) - 1;
  std::vector<Rational> factor(static_cast<std::size_t>(n) + 1, Rational(0));
  const bool exterior = (k % 2 == 1);
  mpz_class count(static_cast<long>(l));
  for (int j = 0; j * k <= n; ++j) {
    if (exterior && j > l) break;
    mpz_class binom;
    if (exterior) {
      mpz_bin_ui(binom.get_mpz_t(), count.get_mpz_t(), static_cast<unsigned long>(j));
    } else {
      mpz_class top = count + j - 1;
      mpz_bin_ui(binom.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(j));
    }
    factor[static_cast<std::size_t>(j) * k] = Rational(binom);
  }
  std::vector<Rational> out(static_cast<std::size_t>(n) + 1, Rational(0));
  for (int i = 0; i <= n; ++i) {
    if (series[i] == 0) continue;
    for (int j = 0; i + j * k <= n; ++j) {
      const auto& f = factor[static_cast<std::size_t>(j) * k];
      if (f != 0) out[i + j * k] += series[i] * f;
    }
  }
  series = std::move(out);
}

}  // namespace detail

/// Reads graded Lie generator counts l_k off a tensor-algebra Hilbert series:
/// the unique l with
///   prod_{k odd} (1 + t^k)^{l_k} * prod_{k even} (1 - t^k)^{-l_k} == u
/// through the truncation. Parity convention: odd loop degree k is an
/// exterior generator, even k a polynomial one; for a loop space this puts
/// dim(pi_{k+1} tensor Q) = l_k.
///
/// Extraction is degree-by-degree: with l_1..l_{k-1} fixed, the degree-k
/// coefficient of the partial product differs from u_k by exactly l_k.
inline GradedDims pbw_extract(const TruncatedSeriesQ& u) {
  const int n = u.truncation();
  if (u.coeff(0) != 1) throw NotRealizable("Hilbert series must have constant term 1");
  for (auto& [d, c] : u.coeffs()) {
    if (c < 0 || !is_integer(c)) {
      throw NotRealizable("Hilbert series coefficients must be nonnegative integers");
    }
  }

  std::vector<Rational> product(static_cast<std::size_t>(n) + 1, Rational(0));
  product[0] = 1;
  std::map<int, GradedDims::Dim> generators;
  for (int k = 1; k <= n; ++k) {
    const Rational lk = u.coeff(k) - product[static_cast<std::size_t>(k)];
    if (lk < 0 || !is_integer(lk)) {
      throw NotRealizable("series is not realizable at degree " + std::to_string(k));
    }
    if (lk == 0) continue;
    const long long l = to_int64(lk);
    generators[k] = l;
    detail::multiply_generator_factor(product, k, l);
  }
  return GradedDims(Support::truncated_at(n), std::move(generators));
}

/// Re-expansion of the PBW product of a generator profile, for roundtrips.
inline TruncatedSeriesQ pbw_expand(const GradedDims& generators, int truncation) {
  std::vector<Rational> product(static_cast<std::size_t>(truncation) + 1, Rational(0));
  product[0] = 1;
  for (auto& [k, l] : generators.entries()) {
    if (k > truncation) break;
    detail::multiply_generator_factor(product, k, l);
  }
  std::map<int, Rational> coeffs;
  for (int d = 0; d <= truncation; ++d) {
    if (product[static_cast<std::size_t>(d)] != 0) coeffs[d] = product[static_cast<std::size_t>(d)];
  }
  return TruncatedSeriesQ(truncation, std::move(coeffs));
}

}  // namespace poincare
