#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "macloops/simplicial_complex.hpp"

namespace macloops {

// The minimal non-faces of a complex and the shape of their intersections.
// A minimal non-face is a vertex set that is not a face while every proper
// subset is one. Whether two of them meet decides everything downstream.
struct NonfaceProfile {
  std::vector<FaceSet> mnfs;  // sorted lexicographically
  bool pairwise_disjoint = true;
  // Indices into mnfs of the first intersecting pair, in lexicographic order
  // of (first, second); absent exactly when pairwise_disjoint.
  std::optional<std::pair<int, int>> intersecting_pair;
};

struct Verdict {
  enum class Kind { Elliptic, Hyperbolic };
  Kind kind;
  NonfaceProfile profile;

  bool elliptic() const { return kind == Kind::Elliptic; }
};

// Enumerates the inclusion-minimal non-faces. Subsets are scanned in
// size-ascending order with supersets of found minimal non-faces pruned;
// the codimension-1 minimality check is kept as a consistency guard.
NonfaceProfile minimal_non_faces(const SimplicialComplex& K);

// Elliptic iff the minimal non-faces are pairwise disjoint. Refuses
// complexes with ghost vertices: their moment-angle complex has circle
// factors and is not simply connected, so the dichotomy does not apply.
Verdict classify(const SimplicialComplex& K);

// True iff K has a pair of intersecting minimal non-faces while no proper
// full subcomplex has one. Since the minimal non-faces of K_I are exactly
// the minimal non-faces of K contained in I, this holds iff every union of
// an intersecting pair is the whole ground set.
bool is_minimal_intersecting(const SimplicialComplex& K);

// An inclusion-minimal vertex subset S whose full subcomplex still has an
// intersecting pair of minimal non-faces; K_S is then itself minimal in the
// sense of is_minimal_intersecting. Lexicographically smallest such S.
FaceSet minimal_witness_subset(const SimplicialComplex& K);

using CensusSink = std::function<void(const SimplicialComplex&, const Verdict&)>;

// Streams every labeled complex on exactly m vertices (no ghost vertices,
// no isomorphism reduction) with its verdict, in a fixed deterministic
// order. Feasible only for m <= 5.
void census(int m, const CensusSink& sink);

// Convenience form collecting the census into a vector.
std::vector<std::pair<SimplicialComplex, Verdict>> census(int m);

namespace detail {

// Enumerates every nonempty downward-closed family of subsets of {1..m},
// ghost-vertex families included, as complexes built with GhostPolicy::Allow.
// The count for m = 5 is 7580. Exposed for the census counting oracle.
void for_each_monotone_family(int m, const std::function<void(const SimplicialComplex&)>& sink);

}  // namespace detail

}  // namespace macloops
