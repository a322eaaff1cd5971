// Test-only oracles, deliberately independent of the library's computation
// paths: Bareiss integer elimination for ranks, brute-force Lyndon word
// counting and the Witt formula for free Lie algebra dimensions, and direct
// PBW re-expansion. Expected values frozen in the suites come from these.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "poincare/graded_linear_map.hpp"
#include "poincare/rational.hpp"
#include "poincare/rational_matrix.hpp"

namespace oracles {

/// Rank over Q via Bareiss fraction-free elimination on an integer matrix
/// obtained by clearing row denominators (row scaling preserves rank).
inline int bareiss_rank(const poincare::RationalMatrix& input) {
  const int rows = static_cast<int>(input.rows());
  const int cols = static_cast<int>(input.cols());
  if (rows == 0 || cols == 0) return 0;

  std::vector<std::vector<mpz_class>> m(rows, std::vector<mpz_class>(cols));
  for (int i = 0; i < rows; ++i) {
    mpz_class lcm = 1;
    for (int j = 0; j < cols; ++j) {
      mpz_class den = input(i, j).get_den();
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    for (int j = 0; j < cols; ++j) {
      mpq_class scaled = input(i, j) * mpq_class(lcm);
      m[i][j] = scaled.get_num();
    }
  }

  int rank = 0;
  mpz_class prev_pivot = 1;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (m[i][col] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[pivot], m[rank]);
    for (int i = rank + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j) {
        m[i][j] = (m[rank][col] * m[i][j] - m[i][col] * m[rank][j]) / prev_pivot;
      }
      m[i][col] = 0;
    }
    prev_pivot = m[rank][col];
    ++rank;
  }
  return rank;
}

/// Whether a word is a Lyndon word: strictly smaller than all proper rotations.
inline bool is_lyndon(const std::vector<int>& w) {
  for (std::size_t r = 1; r < w.size(); ++r) {
    std::vector<int> rotated(w.begin() + static_cast<long>(r), w.end());
    rotated.insert(rotated.end(), w.begin(), w.begin() + static_cast<long>(r));
    if (!(w < rotated)) return false;
  }
  return true;
}

/// Number of Lyndon words of length m over a k-letter alphabet, by brute
/// force enumeration. Equals the rank of the free Lie algebra in weight m.
inline long long lyndon_count(int alphabet, int length) {
  long long total = 0;
  std::vector<int> word(static_cast<std::size_t>(length), 0);
  while (true) {
    if (is_lyndon(word)) ++total;
    int pos = length - 1;
    while (pos >= 0 && word[static_cast<std::size_t>(pos)] == alphabet - 1) {
      word[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++word[static_cast<std::size_t>(pos)];
  }
  return total;
}

/// Witt formula: (1/m) sum_{d | m} mu(d) k^(m/d).
inline long long witt_number(int alphabet, int m) {
  auto mobius = [](int n) {
    int result = 1;
    for (int p = 2; p * p <= n; ++p) {
      if (n % p == 0) {
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
      }
    }
    if (n > 1) result = -result;
    return result;
  };
  long long acc = 0;
  for (int d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = mobius(d);
    if (mu == 0) continue;
    long long power = 1;
    for (int i = 0; i < m / d; ++i) power *= alphabet;
    acc += mu * power;
  }
  return acc / m;
}

/// Dense truncated expansion of
///   prod_{k odd} (1+t^k)^{l_k} * prod_{k even} (1-t^k)^{-l_k},
/// written directly from the definition (term-by-term geometric/binomial
/// factors), for roundtrip checks against pbw_extract.
inline std::vector<mpq_class> pbw_reexpand(const std::map<int, long long>& generators, int n) {
  std::vector<mpq_class> series(static_cast<std::size_t>(n) + 1, 0);
  series[0] = 1;
  for (auto& [k, count] : generators) {
    for (long long copy = 0; copy < count; ++copy) {
      std::vector<mpq_class> next(static_cast<std::size_t>(n) + 1, 0);
      if (k % 2 == 1) {
        // multiply by (1 + t^k)
        for (int i = 0; i <= n; ++i) {
          if (series[static_cast<std::size_t>(i)] == 0) continue;
          next[static_cast<std::size_t>(i)] += series[static_cast<std::size_t>(i)];
          if (i + k <= n) next[static_cast<std::size_t>(i + k)] += series[static_cast<std::size_t>(i)];
        }
      } else {
        // multiply by 1/(1 - t^k) = sum_j t^(jk)
        for (int i = 0; i <= n; ++i) {
          if (series[static_cast<std::size_t>(i)] == 0) continue;
          for (int j = 0; i + j * k <= n; ++j) {
            next[static_cast<std::size_t>(i + j * k)] += series[static_cast<std::size_t>(i)];
          }
        }
      }
      series = std::move(next);
    }
  }
  return series;
}

/// Random small rational matrix: integer entries in [-3, 3] with an
/// occasional denominator of 2 or 3.
inline poincare::RationalMatrix random_matrix(std::mt19937& rng, int rows, int cols) {
  std::uniform_int_distribution<int> entry(-3, 3);
  std::uniform_int_distribution<int> den_pick(0, 9);
  poincare::RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) {
      const int den = den_pick(rng) == 0 ? 2 + den_pick(rng) % 2 : 1;
      m(i, j) = mpq_class(entry(rng), den);
      m(i, j).canonicalize();
    }
  }
  return m;
}

/// Random graded map with FiniteUpTo source/target dims bounded by max_dim in
/// degrees up to max_degree. Degree 0 gets the forced 1x1 isomorphism shape
/// when include_degree_zero is set.
inline poincare::GradedLinearMap random_graded_map(std::mt19937& rng, int max_degree, int max_dim,
                                                   bool include_degree_zero = false) {
  using poincare::GradedDims;
  std::uniform_int_distribution<int> dim(0, max_dim);
  std::map<int, GradedDims::Dim> src, tgt;
  if (include_degree_zero) {
    src[0] = 1;
    tgt[0] = 1;
  }
  for (int d = 2; d <= max_degree; ++d) {
    if (int s = dim(rng); s > 0) src[d] = s;
    if (int t = dim(rng); t > 0) tgt[d] = t;
  }
  poincare::GradedLinearMap f(GradedDims::finite(std::move(src)), GradedDims::finite(std::move(tgt)));
  if (include_degree_zero) {
    poincare::RationalMatrix one(1, 1);
    one(0, 0) = 1;
    f.add_block(0, std::move(one));
  }
  std::uniform_int_distribution<int> keep(0, 4);
  for (int d = 2; d <= max_degree; ++d) {
    const int rows = static_cast<int>(f.target().at(d));
    const int cols = static_cast<int>(f.source().at(d));
    if (rows == 0 || cols == 0 || keep(rng) == 0) continue;  // leave some zero blocks implicit
    f.add_block(d, random_matrix(rng, rows, cols));
  }
  return f;
}

}  // namespace oracles
