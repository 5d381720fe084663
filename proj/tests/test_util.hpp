#pragma once

// Shared fixtures and definition-level oracles. Everything here recomputes
// results from first principles (exhaustive subset scans, direct monomial
// enumeration) so the library has something independent to be measured
// against.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include "macloops/nonface.hpp"
#include "macloops/simplicial_complex.hpp"

namespace testutil {

using namespace macloops;

inline SimplicialComplex complex_of(int m, const std::vector<std::vector<int>>& facets) {
  std::vector<FaceSet> fs;
  fs.reserve(facets.size());
  for (const auto& f : facets) fs.push_back(FaceSet::from_vertices(f));
  return SimplicialComplex::normalize(m, std::move(fs));
}

inline SimplicialComplex two_points() { return complex_of(2, {{1}, {2}}); }
inline SimplicialComplex edge_plus_point() { return complex_of(3, {{1, 2}, {3}}); }
inline SimplicialComplex four_cycle() { return complex_of(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}}); }
inline SimplicialComplex cone_over_edge_plus_point() {
  return complex_of(4, {{1, 2, 4}, {3, 4}});
}

// Random ghost-free complex on m vertices: random facets, then singleton
// facets for any vertex left uncovered.
inline SimplicialComplex random_complex(std::mt19937& rng, int m) {
  std::uniform_int_distribution<int> facet_count(1, 2 * m);
  std::uniform_int_distribution<int> vertex(1, m);
  std::vector<FaceSet> facets;
  int n = facet_count(rng);
  for (int i = 0; i < n; ++i) {
    std::uniform_int_distribution<int> size_dist(1, m);
    int size = size_dist(rng);
    FaceSet f;
    for (int j = 0; j < size; ++j) f.insert(vertex(rng));
    facets.push_back(f);
  }
  FaceSet covered;
  for (FaceSet f : facets) covered = covered | f;
  for (int v = 1; v <= m; ++v)
    if (!covered.contains(v)) facets.push_back(FaceSet::of({v}));
  return SimplicialComplex::normalize(m, std::move(facets));
}

// Definition-level minimal non-faces: scan all 2^m subsets and check
// minimality against every proper nonempty subset.
inline std::vector<FaceSet> brute_force_mnfs(const SimplicialComplex& K) {
  const int m = K.vertex_count();
  std::vector<FaceSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    FaceSet s = FaceSet::from_mask(mask);
    if (K.is_face(s)) continue;
    bool minimal = true;
    for (std::uint64_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask) {
      if (!K.is_face(FaceSet::from_mask(sub))) {
        minimal = false;
        break;
      }
    }
    if (minimal) out.push_back(s);
  }
  std::sort(out.begin(), out.end(), FaceSetLexLess{});
  return out;
}

inline bool has_intersecting_pair(const std::vector<FaceSet>& sets) {
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (sets[i].intersects(sets[j])) return true;
  return false;
}

// Definition-level version of is_minimal_intersecting: check every proper
// nonempty index set via full_subcomplex and the brute-force non-face scan.
inline bool brute_force_is_minimal_intersecting(const SimplicialComplex& K) {
  if (!has_intersecting_pair(brute_force_mnfs(K))) return false;
  const int m = K.vertex_count();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t mask = 1; mask < full; ++mask) {
    SubcomplexResult sub = full_subcomplex(K, FaceSet::from_mask(mask));
    if (has_intersecting_pair(brute_force_mnfs(sub.complex))) return false;
  }
  return true;
}

// Number of degree-q monomials in x_1..x_m whose support is a face of K,
// counted by direct enumeration of exponent vectors.
inline long count_face_supported_monomials(const SimplicialComplex& K, int q) {
  const int m = K.vertex_count();
  long count = 0;
  std::vector<int> exponents(static_cast<std::size_t>(m), 0);
  auto walk = [&](auto&& self, int index, int remaining) -> void {
    if (index == m) {
      if (remaining != 0) return;
      FaceSet support;
      for (int v = 1; v <= m; ++v)
        if (exponents[static_cast<std::size_t>(v - 1)] > 0) support.insert(v);
      if (K.is_face(support)) ++count;
      return;
    }
    for (int e = 0; e <= remaining; ++e) {
      exponents[static_cast<std::size_t>(index)] = e;
      self(self, index + 1, remaining - e);
    }
    exponents[static_cast<std::size_t>(index)] = 0;
  };
  walk(walk, 0, q);
  return count;
}

}  // namespace testutil
