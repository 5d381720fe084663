#include "macloops/decomposition.hpp"

#include <algorithm>

namespace macloops {

std::vector<FaceSet> reconstruct_facets(const JoinDecomposition& d) {
  // A facet of the join is the simplex block plus each boundary factor
  // minus one of its vertices. Walk the cartesian product of dropped-vertex
  // choices.
  std::vector<FaceSet> facets{d.simplex_vertices};
  for (FaceSet factor : d.boundary_factors) {
    std::vector<FaceSet> extended;
    extended.reserve(facets.size() * static_cast<std::size_t>(factor.size()));
    for (FaceSet base : facets)
      for (int dropped : factor.vertices()) {
        FaceSet part = factor;
        part.erase(dropped);
        extended.push_back(base | part);
      }
    facets = std::move(extended);
  }
  std::sort(facets.begin(), facets.end(), FaceSetLexLess{});
  return facets;
}

JoinDecomposition join_decompose(const SimplicialComplex& K) {
  Verdict verdict = classify(K);
  if (!verdict.elliptic())
    throw Error(Errc::NotElliptic, "complex has an intersecting pair of minimal non-faces");

  JoinDecomposition d;
  d.boundary_factors = verdict.profile.mnfs;
  FaceSet covered;
  for (FaceSet f : d.boundary_factors) covered = covered | f;
  d.simplex_vertices = K.ground_set() - covered;

  if (reconstruct_facets(d) != K.facets())
    throw Error(Errc::ReconstructionMismatch,
                "join of simplex and boundaries does not rebuild the input facets");
  return d;
}

SphereProduct moment_angle_type(const SimplicialComplex& K) {
  JoinDecomposition d = join_decompose(K);
  SphereProduct sp;
  sp.disk_dimension = 2 * d.simplex_vertices.size();
  sp.sphere_dimensions.reserve(d.boundary_factors.size());
  for (FaceSet factor : d.boundary_factors)
    sp.sphere_dimensions.push_back(2 * factor.size() - 1);
  std::sort(sp.sphere_dimensions.begin(), sp.sphere_dimensions.end());

  int dimension_sum = sp.disk_dimension;
  for (int dim : sp.sphere_dimensions) dimension_sum += dim + 1;
  if (dimension_sum != 2 * K.vertex_count())
    throw Error(Errc::WitnessInvariantViolation, "sphere/disk dimensions do not add up to 2m");
  return sp;
}

namespace {

bool is_boundary_of_simplex(const SimplicialComplex& K, FaceSet index_set) {
  return full_subcomplex(K, index_set).complex == boundary_simplex(index_set.size());
}

}  // namespace

WedgeWitness wedge_retract_witness(const SimplicialComplex& K) {
  Verdict verdict = classify(K);
  if (verdict.elliptic())
    throw Error(Errc::NotHyperbolic, "complex has pairwise disjoint minimal non-faces");

  const auto [i, j] = *verdict.profile.intersecting_pair;
  WedgeWitness w;
  w.first = verdict.profile.mnfs[static_cast<std::size_t>(i)];
  w.second = verdict.profile.mnfs[static_cast<std::size_t>(j)];
  w.first_only = (w.first - w.second).size();
  w.shared = (w.first & w.second).size();
  w.second_only = (w.second - w.first).size();
  w.sphere_dims = {2 * w.first.size() - 1, 2 * w.second.size() - 1};
  w.ambient_subset = w.first | w.second;

  // Re-verify what makes the witness a witness: each minimal non-face spans
  // a boundary-of-simplex full subcomplex (a sphere after realization), and
  // the dimension bound leaves no room for rational attaching maps.
  if (w.first_only < 1 || w.shared < 1 || w.second_only < 1)
    throw Error(Errc::WitnessInvariantViolation, "intersecting pair with a containment");
  if (!is_boundary_of_simplex(K, w.first) || !is_boundary_of_simplex(K, w.second))
    throw Error(Errc::WitnessInvariantViolation,
                "minimal non-face does not span a boundary of a simplex");
  if (!hilton_milnor_bound(w.first_only, w.shared, w.second_only).ok)
    throw Error(Errc::WitnessInvariantViolation, "dimension bound failed");
  return w;
}

HiltonMilnorBound hilton_milnor_bound(int k, int t, int r) {
  if (k < 1 || t < 1 || r < 1)
    throw Error(Errc::ParameterOutOfRange, "k, t, r must all be at least 1");
  HiltonMilnorBound b;
  b.lhs = 2LL * (k + r + t) - 1;
  b.rhs = 4LL * (2LL * k + 3LL * t + r - 1) - 1;
  b.ok = b.lhs < b.rhs;
  return b;
}

bool is_product_of_simplices_polytope(const SimplicialComplex& K,
                                      bool user_asserts_polytopal_sphere) {
  if (!user_asserts_polytopal_sphere)
    throw Error(Errc::AssertionRequired,
                "caller must assert that the complex is a polytopal sphere");
  if (!classify(K).elliptic()) return false;
  return join_decompose(K).boundaries_only();
}

}  // namespace macloops
