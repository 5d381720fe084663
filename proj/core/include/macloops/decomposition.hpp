#pragma once

#include <utility>
#include <vector>

#include "macloops/nonface.hpp"

namespace macloops {

// Certificate that K is the join of a simplex with boundaries of simplices:
// the boundary factors are the minimal non-faces and the simplex factor is
// everything they miss. Exists exactly in the elliptic case.
struct JoinDecomposition {
  FaceSet simplex_vertices;               // possibly empty
  std::vector<FaceSet> boundary_factors;  // each of size >= 2, pairwise disjoint

  bool boundaries_only() const { return simplex_vertices.empty(); }
};

// Homotopy description of the moment-angle complex of an elliptic K: an
// even-dimensional disk times odd spheres, one sphere of dimension 2a-1 per
// boundary factor with a vertices.
struct SphereProduct {
  int disk_dimension = 0;            // 2 * |simplex_vertices|
  std::vector<int> sphere_dimensions;  // odd, each >= 3, sorted ascending
};

// Witness that the moment-angle complex of a hyperbolic K retracts onto a
// wedge of two odd spheres, extracted from the first intersecting pair of
// minimal non-faces.
struct WedgeWitness {
  FaceSet first;   // minimal non-face I
  FaceSet second;  // minimal non-face J
  int first_only;  // |I \ J|, >= 1
  int shared;      // |I ∩ J|, >= 1
  int second_only; // |J \ I|, >= 1
  std::pair<int, int> sphere_dims;  // (2(|I|)-1, 2(|J|)-1)
  FaceSet ambient_subset;           // I ∪ J
};

struct HiltonMilnorBound {
  long long lhs;  // top cell dimension over the I ∪ J vertex set
  long long rhs;  // least degree admitting a stably trivial nontrivial class
  bool ok;        // lhs < rhs
};

// Decomposes an elliptic complex into simplex * boundaries and re-checks the
// reconstruction against K's facets before returning.
JoinDecomposition join_decompose(const SimplicialComplex& K);

// Rebuilds the facet set a decomposition describes, in the original labels.
// Exposed so callers can replay certificates.
std::vector<FaceSet> reconstruct_facets(const JoinDecomposition& d);

SphereProduct moment_angle_type(const SimplicialComplex& K);

WedgeWitness wedge_retract_witness(const SimplicialComplex& K);

// lhs = 2(k+r+t)-1, rhs = 4(2k+3t+r-1)-1; strict inequality holds whenever
// k, t, r >= 1, which is what rules out rational attaching maps to the wedge.
HiltonMilnorBound hilton_milnor_bound(int k, int t, int r);

// For K asserted to be a polytopal sphere: true iff K is a join of
// boundaries of simplices alone, i.e. iff the dual simple polytope is a
// product of simplices. Sphereness itself is taken on the caller's word.
bool is_product_of_simplices_polytope(const SimplicialComplex& K,
                                      bool user_asserts_polytopal_sphere);

}  // namespace macloops
