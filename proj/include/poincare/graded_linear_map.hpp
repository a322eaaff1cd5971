#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "poincare/graded_dims.hpp"
#include "poincare/rational_matrix.hpp"

namespace poincare {

enum class Exactness {
  Exact,           // require FiniteUpTo support everywhere
  AllowTruncated,  // propagate truncation windows instead
};

/// A degreewise linear map between two graded Q-vector spaces. Absent blocks
/// denote zero maps. Treated as immutable once populated.
class GradedLinearMap {
 public:
  using Dim = GradedDims::Dim;

  GradedLinearMap(GradedDims source, GradedDims target)
      : source_(std::move(source)), target_(std::move(target)) {}

  const GradedDims& source() const { return source_; }
  const GradedDims& target() const { return target_; }

  /// Highest degree for which the block is declared.
  int window() const {
    return std::min(source_.support().knowledge(), target_.support().knowledge());
  }

  void add_block(int degree, RationalMatrix block) {
    if (degree > window()) {
      throw DegreeOutOfWindow("block at degree " + std::to_string(degree) +
                              " beyond the declared window");
    }
    if (block.rows() != static_cast<Eigen::Index>(target_.at(degree)) ||
        block.cols() != static_cast<Eigen::Index>(source_.at(degree))) {
      throw InvalidModel("block shape mismatch at degree " + std::to_string(degree));
    }
    if (block.size() == 0) return;  // zero-sized blocks stay implicit
    blocks_[degree] = std::move(block);
  }

  bool has_block(int degree) const { return blocks_.count(degree) != 0; }

  const RationalMatrix& block(int degree) const { return blocks_.at(degree); }

  /// The block at a degree, materializing zeros for absent ones.
  RationalMatrix block_or_zero(int degree) const {
    auto it = blocks_.find(degree);
    if (it != blocks_.end()) return it->second;
    return RationalMatrix::Zero(static_cast<Eigen::Index>(target_.at(degree)),
                                static_cast<Eigen::Index>(source_.at(degree)));
  }

  const std::map<int, RationalMatrix>& blocks() const { return blocks_; }

 private:
  GradedDims source_;
  GradedDims target_;
  std::map<int, RationalMatrix> blocks_;
};

inline GradedDims::Dim rank_at(const GradedLinearMap& f, int degree) {
  if (!f.source().known(degree) || !f.target().known(degree)) {
    throw DegreeOutOfWindow("rank at degree " + std::to_string(degree) +
                            " beyond the declared window");
  }
  if (f.source().at(degree) == 0 || f.target().at(degree) == 0 || !f.has_block(degree)) return 0;
  return static_cast<GradedDims::Dim>(rank(f.block(degree)));
}

/// dim Ker of the degree-i block, by rank-nullity. A degree with source rank
/// zero contributes kernel zero even beyond the target's window.
inline GradedDims::Dim kernel_dim(const GradedLinearMap& f, int degree) {
  if (!f.source().known(degree)) {
    throw DegreeOutOfWindow("kernel dim at degree " + std::to_string(degree) +
                            " beyond the source window");
  }
  const auto s = f.source().at(degree);
  if (s == 0) return 0;
  return s - rank_at(f, degree);
}

inline GradedDims::Dim cokernel_dim(const GradedLinearMap& f, int degree) {
  if (!f.target().known(degree)) {
    throw DegreeOutOfWindow("cokernel dim at degree " + std::to_string(degree) +
                            " beyond the target window");
  }
  const auto t = f.target().at(degree);
  if (t == 0) return 0;
  return t - rank_at(f, degree);
}

namespace detail {

/// Support of the kernel profile: fully known when the source is finite and
/// every potentially nonzero block lies inside the window.
inline Support kernel_profile_support(const GradedDims& carrier, int window) {
  if (carrier.support().finite() && carrier.support().bound <= window) {
    return Support::finite_up_to(carrier.support().bound);
  }
  return Support::truncated_at(std::min(window, carrier.support().knowledge()));
}

}  // namespace detail

inline GradedDims kernel_dims(const GradedLinearMap& f) {
  Support s = detail::kernel_profile_support(f.source(), f.window());
  std::map<int, GradedDims::Dim> out;
  for (auto& [degree, dim] : f.source().entries()) {
    if (degree > s.knowledge()) continue;
    if (auto k = kernel_dim(f, degree); k > 0) out[degree] = k;
  }
  return GradedDims(s, std::move(out));
}

inline GradedDims cokernel_dims(const GradedLinearMap& f) {
  Support s = detail::kernel_profile_support(f.target(), f.window());
  std::map<int, GradedDims::Dim> out;
  for (auto& [degree, dim] : f.target().entries()) {
    if (degree > s.knowledge()) continue;
    if (auto c = cokernel_dim(f, degree); c > 0) out[degree] = c;
  }
  return GradedDims(s, std::move(out));
}

/// Degreewise block-diagonal sum; source and target dims add degreewise.
inline GradedLinearMap direct_sum(const GradedLinearMap& f, const GradedLinearMap& g) {
  GradedDims src = sum(f.source(), g.source());
  GradedDims tgt = sum(f.target(), g.target());
  GradedLinearMap out(std::move(src), std::move(tgt));

  std::set<int> degrees;
  for (auto& [d, b] : f.blocks()) degrees.insert(d);
  for (auto& [d, b] : g.blocks()) degrees.insert(d);
  for (int d : degrees) {
    if (d > out.window()) continue;
    const Eigen::Index tf = f.target().at(d), sf = f.source().at(d);
    const Eigen::Index tg = g.target().at(d), sg = g.source().at(d);
    RationalMatrix block = RationalMatrix::Zero(tf + tg, sf + sg);
    if (f.has_block(d) && tf > 0 && sf > 0) block.block(0, 0, tf, sf) = f.block(d);
    if (g.has_block(d) && tg > 0 && sg > 0) block.block(tf, sf, tg, sg) = g.block(d);
    out.add_block(d, std::move(block));
  }
  return out;
}

/// Kunneth tensor: the degree-i block is the direct sum over j+k=i of the
/// Kronecker products of the factors' blocks, ordered degree-lexicographically
/// (j ascending, then row-major Kronecker) so results are reproducible.
inline GradedLinearMap kunneth_tensor(const GradedLinearMap& f, const GradedLinearMap& g,
                                      Exactness mode = Exactness::Exact) {
  const bool all_finite = f.source().support().finite() && f.target().support().finite() &&
                          g.source().support().finite() && g.target().support().finite();
  if (mode == Exactness::Exact && !all_finite) {
    throw UnboundedSupport("Kunneth tensor requires FiniteUpTo support; use the truncated variant");
  }

  GradedDims src = convolve(f.source(), g.source());
  GradedDims tgt = convolve(f.target(), g.target());
  GradedLinearMap out(std::move(src), std::move(tgt));

  // Degrees at which either factor carries any dimension.
  std::set<int> fdegrees, gdegrees;
  for (auto& [d, r] : f.source().entries()) fdegrees.insert(d);
  for (auto& [d, r] : f.target().entries()) fdegrees.insert(d);
  for (auto& [d, r] : g.source().entries()) gdegrees.insert(d);
  for (auto& [d, r] : g.target().entries()) gdegrees.insert(d);

  const int top = all_finite ? std::max(out.source().support().bound, out.target().support().bound)
                             : out.window();
  for (int i = 0; i <= top; ++i) {
    const Eigen::Index rows = out.target().at(i);
    const Eigen::Index cols = out.source().at(i);
    if (rows == 0 && cols == 0) continue;
    RationalMatrix block = RationalMatrix::Zero(rows, cols);
    bool nonzero = false;
    Eigen::Index row_offset = 0, col_offset = 0;
    for (int j : fdegrees) {
      if (j > i) break;
      const int k = i - j;
      if (!gdegrees.count(k)) continue;
      const Eigen::Index sub_rows = f.target().at(j) * g.target().at(k);
      const Eigen::Index sub_cols = f.source().at(j) * g.source().at(k);
      if (sub_rows > 0 && sub_cols > 0 && f.has_block(j) && g.has_block(k)) {
        block.block(row_offset, col_offset, sub_rows, sub_cols) =
            kronecker_product(f.block(j), g.block(k));
        nonzero = true;
      }
      row_offset += sub_rows;
      col_offset += sub_cols;
    }
    if (nonzero) out.add_block(i, std::move(block));
  }
  return out;
}

}  // namespace poincare
