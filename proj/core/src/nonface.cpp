#include "macloops/nonface.hpp"

#include <algorithm>

namespace macloops {

namespace {

// All size-k subsets of {1..m} in ascending mask order (Gosper's hack).
// Ascending mask order on fixed popcount is colexicographic, which is fine:
// minimal-non-face pruning only needs size-ascending passes, and the result
// list is re-sorted lexicographically afterwards.
template <typename Fn>
void for_each_subset_of_size(int m, int k, Fn&& fn) {
  if (k == 0) {
    fn(FaceSet{});
    return;
  }
  if (k > m) return;
  const std::uint64_t limit = (m == 64) ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
  std::uint64_t v = (std::uint64_t{1} << k) - 1;
  while (true) {
    fn(FaceSet::from_mask(v));
    if (v == (limit & ~((std::uint64_t{1} << (m - k)) - 1))) break;  // highest k bits reached
    std::uint64_t t = v | (v - 1);
    v = (t + 1) | (((~t & (t + 1)) - 1) >> (std::countr_zero(v) + 1));
  }
}

std::optional<std::pair<int, int>> first_intersecting_pair(const std::vector<FaceSet>& mnfs) {
  for (std::size_t i = 0; i < mnfs.size(); ++i)
    for (std::size_t j = i + 1; j < mnfs.size(); ++j)
      if (mnfs[i].intersects(mnfs[j]))
        return std::make_pair(static_cast<int>(i), static_cast<int>(j));
  return std::nullopt;
}

}  // namespace

NonfaceProfile minimal_non_faces(const SimplicialComplex& K) {
  const int m = K.vertex_count();
  std::vector<FaceSet> mnfs;

  for (int size = 1; size <= m; ++size) {
    for_each_subset_of_size(m, size, [&](FaceSet candidate) {
      for (FaceSet found : mnfs)
        if (found.subset_of(candidate)) return;  // contains a smaller non-face
      if (K.is_face(candidate)) return;
      // Minimality guard: every codimension-1 subset must be a face. The
      // pruning above already implies it; a violation would be a bug.
      for (int v : candidate.vertices()) {
        FaceSet below = candidate;
        below.erase(v);
        if (!K.is_face(below))
          throw Error(Errc::WitnessInvariantViolation,
                      "non-face survived pruning with a non-face codimension-1 subset");
      }
      mnfs.push_back(candidate);
    });
  }

  std::sort(mnfs.begin(), mnfs.end(), FaceSetLexLess{});
  NonfaceProfile profile;
  profile.mnfs = std::move(mnfs);
  profile.intersecting_pair = first_intersecting_pair(profile.mnfs);
  profile.pairwise_disjoint = !profile.intersecting_pair.has_value();
  return profile;
}

Verdict classify(const SimplicialComplex& K) {
  if (K.has_ghost_vertices())
    throw Error(Errc::NotSimplyConnectedAssumptionViolated,
                "ghost vertices give circle factors; the elliptic/hyperbolic dichotomy "
                "assumes a simply connected space");
  NonfaceProfile profile = minimal_non_faces(K);
  Verdict::Kind kind =
      profile.pairwise_disjoint ? Verdict::Kind::Elliptic : Verdict::Kind::Hyperbolic;
  return Verdict{kind, std::move(profile)};
}

namespace {

// Unions of intersecting minimal-non-face pairs. A full subcomplex K_I has an
// intersecting pair iff I contains one of these unions, because minimal
// non-faces restrict: mnfs(K_I) = { sigma in mnfs(K) : sigma within I }.
std::vector<FaceSet> intersecting_pair_unions(const NonfaceProfile& profile) {
  std::vector<FaceSet> unions;
  for (std::size_t i = 0; i < profile.mnfs.size(); ++i)
    for (std::size_t j = i + 1; j < profile.mnfs.size(); ++j)
      if (profile.mnfs[i].intersects(profile.mnfs[j]))
        unions.push_back(profile.mnfs[i] | profile.mnfs[j]);
  return unions;
}

}  // namespace

bool is_minimal_intersecting(const SimplicialComplex& K) {
  NonfaceProfile profile = minimal_non_faces(K);
  if (profile.pairwise_disjoint) return false;
  for (FaceSet u : intersecting_pair_unions(profile))
    if (u != K.ground_set()) return false;
  return true;
}

FaceSet minimal_witness_subset(const SimplicialComplex& K) {
  Verdict verdict = classify(K);
  if (verdict.elliptic())
    throw Error(Errc::NotHyperbolic, "complex has pairwise disjoint minimal non-faces");

  std::vector<FaceSet> unions = intersecting_pair_unions(verdict.profile);
  std::vector<FaceSet> minimal;
  for (FaceSet u : unions) {
    bool contains_smaller = false;
    for (FaceSet w : unions)
      if (w != u && w.subset_of(u)) {
        contains_smaller = true;
        break;
      }
    if (!contains_smaller) minimal.push_back(u);
  }
  return *std::min_element(minimal.begin(), minimal.end(), FaceSetLexLess{});
}

}  // namespace macloops
