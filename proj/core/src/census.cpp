#include <algorithm>

#include "macloops/nonface.hpp"

namespace macloops {

namespace {

// Order in which face/non-face decisions are made: all nonempty subsets of
// {1..m}, size first, then lexicographically. Downward closure only ever
// constrains a subset by strictly smaller ones, so every prefix of this
// order is decidable locally.
std::vector<FaceSet> decision_order(int m) {
  std::vector<FaceSet> order;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask)
    order.push_back(FaceSet::from_mask(mask));
  std::sort(order.begin(), order.end(), [](FaceSet a, FaceSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  return order;
}

struct FamilyEnumerator {
  int m;
  bool skip_ghost_families;
  std::vector<FaceSet> order;
  std::vector<FaceSet> chosen;  // faces accepted so far, in decision order
  const std::function<void(const SimplicialComplex&)>* sink;

  bool closure_consistent(FaceSet candidate) const {
    for (int v : candidate.vertices()) {
      FaceSet below = candidate;
      below.erase(v);
      if (below.empty()) continue;  // the empty face is always present
      if (std::find(chosen.begin(), chosen.end(), below) == chosen.end()) return false;
    }
    return true;
  }

  void emit() {
    // Facets = chosen faces not contained in a later (larger) chosen face.
    std::vector<FaceSet> facets;
    for (FaceSet f : chosen) {
      bool maximal = true;
      for (FaceSet g : chosen)
        if (f != g && f.subset_of(g)) {
          maximal = false;
          break;
        }
      if (maximal) facets.push_back(f);
    }
    (*sink)(SimplicialComplex::normalize(m, std::move(facets), GhostPolicy::Allow));
  }

  void walk(std::size_t index) {
    if (index == order.size()) {
      emit();
      return;
    }
    FaceSet candidate = order[index];
    if (closure_consistent(candidate)) {
      chosen.push_back(candidate);
      walk(index + 1);
      chosen.pop_back();
    }
    // Declining a singleton makes that vertex a ghost in every completion.
    if (skip_ghost_families && candidate.size() == 1) return;
    walk(index + 1);
  }
};

}  // namespace

namespace detail {

void for_each_monotone_family(int m, const std::function<void(const SimplicialComplex&)>& sink) {
  if (m < 1) throw Error(Errc::ParameterOutOfRange, "family enumeration needs m >= 1");
  if (m > 5) throw Error(Errc::CensusTooLarge, "family enumeration is feasible only for m <= 5");
  FamilyEnumerator e{m, false, decision_order(m), {}, &sink};
  e.walk(0);
}

}  // namespace detail

void census(int m, const CensusSink& sink) {
  if (m < 1) throw Error(Errc::ParameterOutOfRange, "census needs m >= 1");
  if (m > 5) throw Error(Errc::CensusTooLarge, "census is feasible only for m <= 5");
  std::function<void(const SimplicialComplex&)> inner = [&](const SimplicialComplex& K) {
    if (K.has_ghost_vertices()) return;
    sink(K, classify(K));
  };
  FamilyEnumerator e{m, true, decision_order(m), {}, &inner};
  e.walk(0);
}

std::vector<std::pair<SimplicialComplex, Verdict>> census(int m) {
  std::vector<std::pair<SimplicialComplex, Verdict>> out;
  census(m, [&](const SimplicialComplex& K, const Verdict& v) { out.emplace_back(K, v); });
  return out;
}

}  // namespace macloops
