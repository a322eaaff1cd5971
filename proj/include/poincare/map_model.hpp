#pragma once

#include <string>
#include <utility>

#include "poincare/graded_linear_map.hpp"
#include "poincare/space_model.hpp"

namespace poincare {

/// Blocks larger than this are never materialized; catalog constructors give
/// a clean error instead of allocating absurd identity matrices.
inline constexpr GradedDims::Dim kMaxMaterializedDim = 4096;

/// A rational model of a map: degreewise induced matrices on homology and on
/// homotopy. H_0 always carries the forced isomorphism.
struct MapModel {
  std::string name;
  SpaceModel source;
  SpaceModel target;
  GradedLinearMap hmap;   // over the homology dims
  GradedLinearMap pimap;  // over the homotopy dims
};

namespace detail {

inline void force_h0_isomorphism(GradedLinearMap& hmap) {
  if (!hmap.has_block(0)) {
    RationalMatrix one(1, 1);
    one(0, 0) = 1;
    hmap.add_block(0, std::move(one));
  } else if (hmap.block(0)(0, 0) == 0) {
    throw InvalidModel("H_0 block must be an isomorphism");
  }
}

}  // namespace detail

inline MapModel make_map(std::string name, SpaceModel source, SpaceModel target,
                         GradedLinearMap hmap, GradedLinearMap pimap) {
  if (hmap.source() != source.homology || hmap.target() != target.homology) {
    throw InvalidModel("homology map dims do not match the spaces");
  }
  if (pimap.source() != source.homotopy || pimap.target() != target.homotopy) {
    throw InvalidModel("homotopy map dims do not match the spaces");
  }
  detail::force_h0_isomorphism(hmap);
  return MapModel{std::move(name), std::move(source), std::move(target), std::move(hmap),
                  std::move(pimap)};
}

// -- catalog maps -------------------------------------------------------------

inline MapModel constant_map(const SpaceModel& x, const SpaceModel& y) {
  GradedLinearMap hmap(x.homology, y.homology);
  GradedLinearMap pimap(x.homotopy, y.homotopy);
  return make_map("constant(" + x.name + " -> " + y.name + ")", x, y, std::move(hmap),
                  std::move(pimap));
}

inline MapModel identity_map(const SpaceModel& x) {
  GradedLinearMap hmap(x.homology, x.homology);
  for (auto& [degree, dim] : x.homology.entries()) {
    if (dim > kMaxMaterializedDim) throw InvalidModel("identity block too large to materialize");
    hmap.add_block(degree, identity_matrix(static_cast<Eigen::Index>(dim)));
  }
  GradedLinearMap pimap(x.homotopy, x.homotopy);
  for (auto& [degree, dim] : x.homotopy.entries()) {
    if (dim > kMaxMaterializedDim) throw InvalidModel("identity block too large to materialize");
    pimap.add_block(degree, identity_matrix(static_cast<Eigen::Index>(dim)));
  }
  return make_map("id(" + x.name + ")", x, x, std::move(hmap), std::move(pimap));
}

/// Component-wise product f1 x f2: Kunneth tensor on homology, direct sum on
/// homotopy. The exact form requires FiniteUpTo homology on both sources.
inline MapModel product_map(const MapModel& f, const MapModel& g,
                            Exactness mode = Exactness::Exact) {
  if (mode == Exactness::Exact && (!f.source.homology.support().finite() ||
                                   !g.source.homology.support().finite())) {
    throw UnboundedSupport("product map needs finite source homology in exact form");
  }
  SpaceModel src = product(f.source, g.source);
  SpaceModel tgt = product(f.target, g.target);
  GradedLinearMap hmap = kunneth_tensor(f.hmap, g.hmap, Exactness::AllowTruncated);
  GradedLinearMap pimap = direct_sum(f.pimap, g.pimap);
  return make_map(f.name + " x " + g.name, std::move(src), std::move(tgt), std::move(hmap),
                  std::move(pimap));
}

/// f^n by iterated binary product, left-associated; profile results are
/// order-independent.
inline MapModel power_map(const MapModel& f, int n, Exactness mode = Exactness::Exact) {
  if (n < 1) throw InvalidDegree("power needs n >= 1");
  MapModel out = f;
  for (int i = 1; i < n; ++i) out = product_map(out, f, mode);
  if (n > 1) out.name = f.name + "^" + std::to_string(n);
  return out;
}

/// Self-map of S^n of degree d. On the even sphere the top homotopy class is
/// carried with degree d^2 (from x -> d x in the minimal model (Lambda(x,y),
/// dy = x^2), which forces y -> d^2 y).
inline MapModel sphere_self_map(int n, long long d) {
  if (n < 2) throw InvalidDegree("sphere dimension must be >= 2");
  SpaceModel s = sphere(n);
  GradedLinearMap hmap(s.homology, s.homology);
  RationalMatrix deg(1, 1);
  deg(0, 0) = Rational(static_cast<long>(d));
  hmap.add_block(n, deg);
  GradedLinearMap pimap(s.homotopy, s.homotopy);
  pimap.add_block(n, deg);
  if (n % 2 == 0) {
    RationalMatrix sq(1, 1);
    sq(0, 0) = Rational(static_cast<long>(d)) * Rational(static_cast<long>(d));
    pimap.add_block(2 * n - 1, std::move(sq));
  }
  return make_map("deg-" + std::to_string(d) + "(S^" + std::to_string(n) + ")", s, s,
                  std::move(hmap), std::move(pimap));
}

/// The map S^n -> K(Q,n) carrying the fundamental class to a generator.
inline MapModel eilenberg_generator(int n, int truncation = kDefaultTruncation) {
  SpaceModel src = sphere(n);
  SpaceModel tgt = eilenberg_maclane_q(n, truncation);
  GradedLinearMap hmap(src.homology, tgt.homology);
  RationalMatrix one(1, 1);
  one(0, 0) = 1;
  hmap.add_block(n, one);
  GradedLinearMap pimap(src.homotopy, tgt.homotopy);
  pimap.add_block(n, one);
  return make_map("gen(S^" + std::to_string(n) + " -> K(Q," + std::to_string(n) + "))",
                  std::move(src), std::move(tgt), std::move(hmap), std::move(pimap));
}

/// a x b : S^4 x S^6 -> K(Q,4) x K(Q,6) with [a], [b] generators. Injective
/// on homology everywhere, yet pi_7 and pi_11 of the source die: the map is
/// elliptic with respect to kernel but not with respect to cokernel.
inline MapModel referee_counterexample(int truncation = kDefaultTruncation) {
  MapModel f = product_map(eilenberg_generator(4, truncation),
                           eilenberg_generator(6, truncation), Exactness::AllowTruncated);
  f.name = "S^4 x S^6 -> K(Q,4) x K(Q,6)";
  return f;
}

/// Canonical inclusion S^n v S^n -> S^n x S^n for odd n: an isomorphism on
/// homology below the top class and on pi_n, zero above (the target has no
/// homotopy there, so the kernel is forced to be the wedge's ranks).
inline MapModel wedge_inclusion(int n, int truncation = kDefaultTruncation) {
  if (n < 3 || n % 2 == 0) throw InvalidDegree("wedge inclusion is cataloged for odd n >= 3");
  if (truncation < 2 * n) throw InvalidDegree("truncation must reach degree 2n");
  SpaceModel src = wedge_of_spheres({n, n}, truncation);
  SpaceModel tgt = product(sphere(n), sphere(n));
  GradedLinearMap hmap(src.homology, tgt.homology);
  hmap.add_block(n, identity_matrix(2));
  GradedLinearMap pimap(src.homotopy, tgt.homotopy);
  pimap.add_block(n, identity_matrix(2));
  return make_map("S^" + std::to_string(n) + " v S^" + std::to_string(n) + " -> S^" +
                      std::to_string(n) + " x S^" + std::to_string(n),
                  std::move(src), std::move(tgt), std::move(hmap), std::move(pimap));
}

// -- kernel/cokernel calculus -------------------------------------------------

/// Degreewise kernel and cokernel dimensions of the induced maps.
struct KernelProfile {
  GradedDims h_kernel;
  GradedDims h_cokernel;
  GradedDims pi_kernel;
  GradedDims pi_cokernel;
};

inline KernelProfile kernel_profile(const MapModel& f) {
  return KernelProfile{kernel_dims(f.hmap), cokernel_dims(f.hmap), kernel_dims(f.pimap),
                       cokernel_dims(f.pimap)};
}

enum class Tri { Yes, No, Undetermined };

inline Tri tri_and(Tri a, Tri b) {
  if (a == Tri::No || b == Tri::No) return Tri::No;
  if (a == Tri::Yes && b == Tri::Yes) return Tri::Yes;
  return Tri::Undetermined;
}

namespace detail {

inline Tri finite_tri(Finiteness f) {
  switch (f) {
    case Finiteness::Finite: return Tri::Yes;
    case Finiteness::Infinite: return Tri::No;
    default: return Tri::Undetermined;
  }
}

/// Total kernel rank finiteness: bounded by the source; forced infinite when
/// an infinite source maps to a finite target.
inline Finiteness kernel_total(Finiteness source_total, Finiteness target_total) {
  if (source_total == Finiteness::Finite) return Finiteness::Finite;
  if (source_total == Finiteness::Infinite && target_total == Finiteness::Finite) {
    return Finiteness::Infinite;
  }
  return Finiteness::Unknown;
}

}  // namespace detail

/// Ellipticity data of a map per the four kernel/cokernel definitions. An
/// elliptic source forces ellipticity with respect to kernel, an elliptic
/// target with respect to cokernel.
struct MapClassification {
  Finiteness h_kernel_total = Finiteness::Unknown;
  Finiteness pi_kernel_total = Finiteness::Unknown;
  Finiteness h_cokernel_total = Finiteness::Unknown;
  Finiteness pi_cokernel_total = Finiteness::Unknown;

  Tri elliptic_wrt_kernel() const {
    return tri_and(detail::finite_tri(h_kernel_total), detail::finite_tri(pi_kernel_total));
  }
  Tri elliptic_wrt_cokernel() const {
    return tri_and(detail::finite_tri(h_cokernel_total), detail::finite_tri(pi_cokernel_total));
  }
  Tri elliptic() const { return tri_and(elliptic_wrt_kernel(), elliptic_wrt_cokernel()); }

  Tri hyperbolic_wrt_kernel() const {
    const Tri h = detail::finite_tri(h_kernel_total);
    const Tri pi_infinite = detail::finite_tri(pi_kernel_total) == Tri::No    ? Tri::Yes
                            : detail::finite_tri(pi_kernel_total) == Tri::Yes ? Tri::No
                                                                              : Tri::Undetermined;
    return tri_and(h, pi_infinite);
  }
  Tri hyperbolic_wrt_cokernel() const {
    const Tri h = detail::finite_tri(h_cokernel_total);
    const Tri pi_infinite = detail::finite_tri(pi_cokernel_total) == Tri::No    ? Tri::Yes
                            : detail::finite_tri(pi_cokernel_total) == Tri::Yes ? Tri::No
                                                                                : Tri::Undetermined;
    return tri_and(h, pi_infinite);
  }
  Tri hyperbolic() const { return tri_and(hyperbolic_wrt_kernel(), hyperbolic_wrt_cokernel()); }
};

inline MapClassification ellipticity_of_map(const MapModel& f) {
  MapClassification c;
  c.h_kernel_total = detail::kernel_total(f.source.homology_total, f.target.homology_total);
  c.pi_kernel_total = detail::kernel_total(f.source.homotopy_total, f.target.homotopy_total);
  c.h_cokernel_total = detail::kernel_total(f.target.homology_total, f.source.homology_total);
  c.pi_cokernel_total = detail::kernel_total(f.target.homotopy_total, f.source.homotopy_total);
  return c;
}

}  // namespace poincare
