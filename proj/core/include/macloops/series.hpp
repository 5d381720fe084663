#pragma once

#include <optional>

#include "macloops/decomposition.hpp"
#include "macloops/growth.hpp"
#include "macloops/rational_function.hpp"

namespace macloops {

// Hilbert-Poincare series of the moment-angle complex of an elliptic K,
// i.e. of a product of odd spheres and a disk: prod (1 + t^d).
FactoredSeries zk_series(const SphereProduct& sp);

// Based loop space of that product: prod 1/(1 - t^(d-1)), the disk factor
// contributing nothing.
FactoredSeries loop_zk_series(const SphereProduct& sp);

// Free loop space: the free loops on an odd sphere split off the sphere
// times its based loops once 2 is inverted, so the series is
// prod (1 + t^d)/(1 - t^(d-1)).
FactoredSeries free_loop_zk_series(const SphereProduct& sp);

// Hilbert series of the face ring of K with degree-2 generators:
// sum over faces of t^(2|sigma|)/(1-t^2)^|sigma|, presented over the common
// denominator (1-t^2)^n, n the largest face size.
FactoredSeries face_ring_series(const SimplicialComplex& K);

// Loops on the torus-bundle companion space of an elliptic K: the loop space
// splits as loops on the moment-angle complex times an m-torus, giving
// (1+t)^m * loop_zk_series.
FactoredSeries loop_dj_series(const SimplicialComplex& K);

// Coefficientwise upper bound for the free-loop series of that space in the
// elliptic case: the E2 page of the evaluation fibration is the face ring
// tensored with the loop-space algebra, and E2 dominates E-infinity. The
// spectral sequence frequently carries nontrivial differentials, so this is
// an upper bound, not the series itself.
FactoredSeries free_loop_dj_upper_series(const SimplicialComplex& K);

// Free loops on the m-fold product of infinite complex projective space:
// (1+t)^m/(1-t^2)^m, which reduces to 1/(1-t)^m.
FactoredSeries free_loop_cp_infty_power_series(int m);

// Growth report for the Hochschild homology of the face ring (equivalently
// the free-loop cohomology of the companion space). In the elliptic case the
// verdict is sub-exponential with the upper-bound series as evidence; in the
// hyperbolic case no bound is available and the verdict stays undetermined,
// while the free-loop growth of the moment-angle complex itself is
// exponential.
struct HochschildGrowthReport {
  Verdict::Kind zk_class;
  // Present exactly when elliptic; all poles of the evidence series lie on
  // the unit circle.
  std::optional<GrowthClass> dj_growth;
  std::optional<FactoredSeries> dj_evidence_series;
  // True when additionally K is a join of boundaries alone, so the series is
  // the rational function promised for polytopes that are simplex products.
  bool boundaries_only = false;
  GrowthClass lzk_growth;
};

HochschildGrowthReport hochschild_growth_verdict(const SimplicialComplex& K);

}  // namespace macloops
