#include "macloops/simplicial_complex.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

namespace macloops {

SimplicialComplex::SimplicialComplex() : m_(0), facets_{FaceSet{}} {}

SimplicialComplex::SimplicialComplex(int m, std::vector<FaceSet> canonical_facets)
    : m_(m), facets_(std::move(canonical_facets)) {}

SimplicialComplex SimplicialComplex::normalize(int vertex_count, std::vector<FaceSet> raw_facets,
                                               GhostPolicy policy) {
  if (vertex_count < 0 || vertex_count > FaceSet::max_vertices)
    throw Error(Errc::ParameterOutOfRange,
                "vertex count must lie in 0..64, got " + std::to_string(vertex_count));

  const FaceSet ground = vertex_count == 0 ? FaceSet{} : FaceSet::full(vertex_count);
  for (FaceSet f : raw_facets) {
    if (!f.subset_of(ground))
      throw Error(Errc::VertexOutOfRange, "facet vertex exceeds ground set of size " +
                                              std::to_string(vertex_count));
  }

  // Drop duplicates and dominated faces; what survives is the antichain of
  // maximal faces.
  std::sort(raw_facets.begin(), raw_facets.end(),
            [](FaceSet a, FaceSet b) { return a.size() > b.size(); });
  std::vector<FaceSet> maximal;
  for (FaceSet f : raw_facets) {
    bool dominated = false;
    for (FaceSet g : maximal) {
      if (f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  if (maximal.empty()) maximal.push_back(FaceSet{});

  FaceSet covered;
  for (FaceSet f : maximal) covered = covered | f;
  if (policy == GhostPolicy::Reject) {
    FaceSet ghosts = ground - covered;
    if (!ghosts.empty())
      throw Error(Errc::GhostVertex,
                  "vertex " + std::to_string(ghosts.min_vertex()) + " lies in no facet");
  }

  std::sort(maximal.begin(), maximal.end(), FaceSetLexLess{});
  return SimplicialComplex(vertex_count, std::move(maximal));
}

bool SimplicialComplex::is_face(FaceSet sigma) const {
  if (!sigma.subset_of(ground_set()))
    throw Error(Errc::VertexOutOfRange, "queried face is not within the ground set");
  for (FaceSet f : facets_)
    if (sigma.subset_of(f)) return true;
  return false;
}

FaceSet SimplicialComplex::ghost_vertices() const {
  FaceSet covered;
  for (FaceSet f : facets_) covered = covered | f;
  return ground_set() - covered;
}

SubcomplexResult full_subcomplex(const SimplicialComplex& K, FaceSet index_set) {
  if (index_set.empty()) throw Error(Errc::EmptyIndexSet, "full subcomplex needs a nonempty index set");
  if (!index_set.subset_of(K.ground_set()))
    throw Error(Errc::VertexOutOfRange, "index set is not within the ground set");

  std::vector<int> old_labels = index_set.vertices();
  // new label = position of the old label in ascending order
  auto relabel = [&](FaceSet s) {
    FaceSet out;
    for (std::size_t i = 0; i < old_labels.size(); ++i)
      if (s.contains(old_labels[i])) out.insert(static_cast<int>(i) + 1);
    return out;
  };

  std::vector<FaceSet> restricted;
  restricted.reserve(K.facets().size());
  for (FaceSet f : K.facets()) restricted.push_back(relabel(f & index_set));

  auto sub = SimplicialComplex::normalize(static_cast<int>(old_labels.size()),
                                          std::move(restricted), GhostPolicy::Allow);
  return SubcomplexResult{std::move(sub), std::move(old_labels)};
}

SimplicialComplex join(const SimplicialComplex& K, const SimplicialComplex& L) {
  const int m = K.vertex_count() + L.vertex_count();
  std::vector<FaceSet> facets;
  facets.reserve(K.facets().size() * L.facets().size());
  for (FaceSet f : K.facets())
    for (FaceSet g : L.facets()) facets.push_back(f | g.shifted(K.vertex_count()));
  // Ghost freedom is inherited from the factors.
  return SimplicialComplex::normalize(m, std::move(facets), GhostPolicy::Allow);
}

SimplicialComplex simplex(int a) {
  if (a < 1) throw Error(Errc::ParameterOutOfRange, "simplex needs at least one vertex");
  return SimplicialComplex::normalize(a, {FaceSet::full(a)});
}

SimplicialComplex boundary_simplex(int a) {
  if (a < 2) throw Error(Errc::BoundaryOfPoint, "boundary of a simplex needs at least two vertices");
  std::vector<FaceSet> facets;
  facets.reserve(static_cast<std::size_t>(a));
  FaceSet full = FaceSet::full(a);
  for (int v = 1; v <= a; ++v) {
    FaceSet f = full;
    f.erase(v);
    facets.push_back(f);
  }
  return SimplicialComplex::normalize(a, std::move(facets));
}

std::vector<FaceSet> all_faces(const SimplicialComplex& K) {
  // Walk down from the facets, stripping one vertex at a time.
  std::unordered_set<std::uint64_t> seen;
  std::vector<FaceSet> stack(K.facets());
  for (FaceSet f : stack) seen.insert(f.mask());
  while (!stack.empty()) {
    FaceSet f = stack.back();
    stack.pop_back();
    for (int v : f.vertices()) {
      FaceSet g = f;
      g.erase(v);
      if (seen.insert(g.mask()).second) stack.push_back(g);
    }
  }
  std::vector<FaceSet> faces;
  faces.reserve(seen.size());
  for (std::uint64_t mask : seen) faces.push_back(FaceSet::from_mask(mask));
  std::sort(faces.begin(), faces.end(), [](FaceSet a, FaceSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return faces;
}

long FVector::total() const {
  return std::accumulate(counts.begin(), counts.end(), 0L);
}

FVector f_vector(const SimplicialComplex& K) {
  int max_size = 0;
  for (FaceSet f : K.facets()) max_size = std::max(max_size, f.size());
  FVector fv;
  fv.counts.assign(static_cast<std::size_t>(max_size) + 1, 0);
  for (FaceSet f : all_faces(K)) ++fv.counts[static_cast<std::size_t>(f.size())];
  return fv;
}

}  // namespace macloops
