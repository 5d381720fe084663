#pragma once

#include <vector>

#include "macloops/face_set.hpp"

namespace macloops {

// A ghost vertex is a ground-set vertex lying in no facet. Such a vertex is a
// one-element minimal non-face and breaks the simple-connectivity assumption
// the classification rests on, so construction rejects it unless told not to.
enum class GhostPolicy { Reject, Allow };

// A finite simplicial complex on the labeled ground set {1..m}, stored by its
// facets (inclusion-maximal faces). The face set is the downward closure of
// the facets and is never materialized unless asked for.
//
// Canonical form: facets are pairwise incomparable, sorted lexicographically.
// The complex with no vertices is represented by the single facet {}.
class SimplicialComplex {
public:
  // The empty complex on 0 vertices.
  SimplicialComplex();

  // Builds the canonical complex from arbitrary input faces: duplicates and
  // dominated faces are dropped. Every vertex of {1..m} must be covered by
  // some facet unless `policy` admits ghost vertices.
  static SimplicialComplex normalize(int vertex_count, std::vector<FaceSet> raw_facets,
                                     GhostPolicy policy = GhostPolicy::Reject);

  int vertex_count() const { return m_; }
  const std::vector<FaceSet>& facets() const { return facets_; }
  FaceSet ground_set() const { return m_ == 0 ? FaceSet{} : FaceSet::full(m_); }

  // True iff sigma is contained in some facet. Requires sigma within {1..m}.
  bool is_face(FaceSet sigma) const;

  FaceSet ghost_vertices() const;
  bool has_ghost_vertices() const { return !ghost_vertices().empty(); }

  bool operator==(const SimplicialComplex&) const = default;

private:
  SimplicialComplex(int m, std::vector<FaceSet> canonical_facets);

  int m_;
  std::vector<FaceSet> facets_;
};

// Result of restricting to a vertex subset: the subcomplex is re-indexed to
// {1..|I|}; vertex_map[i-1] is the original label of its vertex i.
struct SubcomplexResult {
  SimplicialComplex complex;
  std::vector<int> vertex_map;
};

// The full subcomplex K_I: all faces of K contained in I, re-indexed.
SubcomplexResult full_subcomplex(const SimplicialComplex& K, FaceSet index_set);

// Join K * L on m_K + m_L vertices; L's vertices are shifted past K's.
// Faces of the join are exactly (face of K) ∪ (shifted face of L).
SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L);

// The full simplex on a vertices (one facet {1..a}), a >= 1.
SimplicialComplex simplex(int a);

// The boundary of the simplex on a vertices: all (a-1)-subsets of {1..a}.
// Requires a >= 2; the boundary of a point would be a ghost vertex.
SimplicialComplex boundary_simplex(int a);

// Face counts by cardinality: counts[k] = number of faces with k vertices,
// so counts[0] = 1 for the empty face and counts[1] = m.
struct FVector {
  std::vector<long> counts;

  int max_face_size() const { return static_cast<int>(counts.size()) - 1; }
  long total() const;
  bool operator==(const FVector&) const = default;
};

FVector f_vector(const SimplicialComplex& K);

// Every face of K, the empty face included. Exponential in general; meant
// for small complexes and for test oracles.
std::vector<FaceSet> all_faces(const SimplicialComplex& K);

}  // namespace macloops
