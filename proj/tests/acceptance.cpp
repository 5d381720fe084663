// Acceptance suite: each criterion prints exactly one PASS/FAIL line and the
// process exits nonzero if any criterion fails. All checks are exact.

#include <cmath>
#include <iostream>
#include <sstream>
#include <vector>

#include "macloops/json_io.hpp"
#include "macloops/series.hpp"
#include "test_util.hpp"

using namespace macloops;
using namespace testutil;

namespace {

int failures = 0;

void report(int number, const std::string& label, bool ok, const std::string& detail) {
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << number << ": " << label;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << "\n";
  if (!ok) ++failures;
}

template <typename Fn>
void criterion(int number, const std::string& label, Fn&& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  report(number, label, ok, detail);
}

bool expect(bool condition, const std::string& message, std::string& detail) {
  if (!condition && detail.empty()) detail = message;
  return condition;
}

// --- criterion bodies -------------------------------------------------------

bool paper_examples(std::string& detail) {
  bool ok = true;

  Verdict two = classify(two_points());
  ok &= expect(two.elliptic(), "two points should be elliptic", detail);
  SphereProduct sp = moment_angle_type(two_points());
  ok &= expect(sp.disk_dimension == 0 && sp.sphere_dimensions == std::vector<int>{3},
               "two points should give S^3", detail);

  Verdict q = classify(edge_plus_point());
  ok &= expect(!q.elliptic(), "edge plus point should be hyperbolic", detail);
  WedgeWitness w = wedge_retract_witness(edge_plus_point());
  ok &= expect(w.sphere_dims == std::pair<int, int>{3, 3}, "witness should be S^3 v S^3",
               detail);

  HochschildGrowthReport ganea = hochschild_growth_verdict(two_points());
  ok &= expect(ganea.dj_growth.has_value() &&
                   ganea.dj_growth->kind == GrowthClass::Kind::SubExponential &&
                   ganea.dj_growth->evidence == "all poles on unit circle",
               "Ganea case should be sub-exponential with unit-circle poles", detail);
  return ok;
}

bool mnf_oracle_equivalence(std::string& detail) {
  bool ok = true;
  long checked = 0;
  for (int m = 1; m <= 4 && ok; ++m)
    for (const auto& [K, verdict] : census(m)) {
      ok &= expect(minimal_non_faces(K).mnfs == brute_force_mnfs(K),
                   "minimal non-faces disagree on " + complex_to_json(K), detail);
      ++checked;
      if (!ok) break;
    }
  if (ok) detail = std::to_string(checked) + " complexes";
  return ok;
}

// Independent reconstruction: assemble the join of a simplex and boundary
// simplices with the library's join, then relabel the blocks back to the
// original vertex labels.
SimplicialComplex replay_join(const JoinDecomposition& d, int m) {
  std::vector<int> new_to_old;
  SimplicialComplex assembled = d.simplex_vertices.empty()
                                    ? SimplicialComplex{}
                                    : simplex(d.simplex_vertices.size());
  for (int v : d.simplex_vertices.vertices()) new_to_old.push_back(v);
  for (FaceSet factor : d.boundary_factors) {
    assembled = join(assembled, boundary_simplex(factor.size()));
    for (int v : factor.vertices()) new_to_old.push_back(v);
  }
  std::vector<FaceSet> relabeled;
  for (FaceSet f : assembled.facets()) {
    FaceSet g;
    for (int v : f.vertices()) g.insert(new_to_old[static_cast<std::size_t>(v - 1)]);
    relabeled.push_back(g);
  }
  return SimplicialComplex::normalize(m, std::move(relabeled), GhostPolicy::Allow);
}

bool decomposition_equivalence(std::string& detail) {
  bool ok = true;
  long checked = 0, elliptic_count = 0;
  for (int m = 1; m <= 5 && ok; ++m)
    for (const auto& [K, verdict] : census(m)) {
      ++checked;
      bool decomposed = false;
      try {
        JoinDecomposition d = join_decompose(K);
        decomposed = true;
        ok &= expect(replay_join(d, m) == K,
                     "join replay differs from input on " + complex_to_json(K), detail);
      } catch (const Error& e) {
        ok &= expect(e.code() == Errc::NotElliptic, "unexpected decomposition error", detail);
      }
      ok &= expect(decomposed == verdict.elliptic(),
                   "decomposability must match the verdict on " + complex_to_json(K), detail);
      if (decomposed) ++elliptic_count;
      if (!ok) break;
    }
  if (ok)
    detail = std::to_string(checked) + " complexes, " + std::to_string(elliptic_count) +
             " elliptic";
  return ok;
}

bool series_coefficient_oracles(std::string& detail) {
  bool ok = true;

  // (a) 4-cycle: free-loop series of S^3 x S^3 against a hand convolution
  const int N = 20;
  std::vector<long> one_plus_t3(N + 1, 0), geometric_t2(N + 1, 0);
  one_plus_t3[0] = 1;
  one_plus_t3[3] = 1;
  for (int i = 0; i <= N; i += 2) geometric_t2[i] = 1;
  auto convolve = [N](const std::vector<long>& a, const std::vector<long>& b) {
    std::vector<long> c(N + 1, 0);
    for (int i = 0; i <= N; ++i)
      for (int j = 0; i + j <= N; ++j) c[i + j] += a[i] * b[j];
    return c;
  };
  std::vector<long> factor = convolve(one_plus_t3, geometric_t2);
  std::vector<long> expected = convolve(factor, factor);
  auto got = free_loop_zk_series(moment_angle_type(four_cycle())).expand(N);
  for (int i = 0; i <= N; ++i)
    ok &= expect(got[static_cast<std::size_t>(i)] == expected[static_cast<std::size_t>(i)],
                 "free-loop coefficient mismatch at degree " + std::to_string(i), detail);

  // (b) face-ring coefficients against direct monomial counts
  std::mt19937 rng(20250808);
  for (int trial = 0; trial < 10 && ok; ++trial) {
    int m = 1 + static_cast<int>(rng() % 4);
    SimplicialComplex K = random_complex(rng, m);
    auto coeffs = face_ring_series(K).expand(24);
    for (int q = 0; q <= 12; ++q) {
      ok &= expect(coeffs[static_cast<std::size_t>(2 * q)] ==
                       count_face_supported_monomials(K, q),
                   "face-ring coefficient mismatch on " + complex_to_json(K) + " at 2q = " +
                       std::to_string(2 * q),
                   detail);
      if (q >= 1)
        ok &= expect(coeffs[static_cast<std::size_t>(2 * q - 1)] == 0,
                     "odd-degree face-ring coefficient nonzero", detail);
    }
  }
  if (ok) detail = "convolution to degree 20; 10 random complexes to degree 24";
  return ok;
}

bool growth_classifier(std::string& detail) {
  bool ok = true;

  // empirical cross-check: log2 |a_N| / N at N = 200
  auto empirical_exponential = [](const RationalFunction& f) {
    auto coeffs = f.expand(200);
    double bits = 0;
    const mpz_class& top = coeffs.back();
    if (top != 0) bits = static_cast<double>(mpz_sizeinbase(top.get_mpz_t(), 2));
    return bits / 200.0 > 0.1;  // growth factor above 2^0.1 ~ 1.07
  };

  for (int d = 3; d <= 21; d += 2) {
    RationalFunction f(Polynomial::one_plus_power(d), Polynomial::one_minus_power(d - 1));
    GrowthClass g = growth_classify(f);
    ok &= expect(g.kind == GrowthClass::Kind::SubExponential,
                 "(1+t^d)/(1-t^(d-1)) should be sub-exponential at d = " + std::to_string(d),
                 detail);
    ok &= expect(!empirical_exponential(f), "empirical estimate disagrees at d = " +
                                                std::to_string(d),
                 detail);
  }

  RationalFunction doubling(Polynomial(1L), Polynomial::from_ints({1, -2}));
  ok &= expect(growth_classify(doubling).exponential(), "1/(1-2t) should be exponential",
               detail);
  ok &= expect(empirical_exponential(doubling), "2^n empirical estimate", detail);

  RationalFunction fibonacci(Polynomial(1L), Polynomial::from_ints({1, -1, -1}));
  ok &= expect(growth_classify(fibonacci).exponential(), "1/(1-t-t^2) should be exponential",
               detail);
  ok &= expect(empirical_exponential(fibonacci), "Fibonacci empirical estimate", detail);
  return ok;
}

bool dimension_bound_and_witnesses(std::string& detail) {
  bool ok = true;
  for (int k = 1; k <= 50 && ok; ++k)
    for (int t = 1; t <= 50 && ok; ++t)
      for (int r = 1; r <= 50; ++r) {
        HiltonMilnorBound b = hilton_milnor_bound(k, t, r);
        ok &= expect(b.ok, "bound fails at k,t,r = " + std::to_string(k) + "," +
                               std::to_string(t) + "," + std::to_string(r),
                     detail);
        if (!ok) break;
      }

  long hyperbolic_count = 0;
  for (int m = 1; m <= 5 && ok; ++m)
    for (const auto& [K, verdict] : census(m)) {
      if (verdict.elliptic()) continue;
      ++hyperbolic_count;
      WedgeWitness w = wedge_retract_witness(K);
      ok &= expect(full_subcomplex(K, w.first).complex == boundary_simplex(w.first.size()) &&
                       full_subcomplex(K, w.second).complex ==
                           boundary_simplex(w.second.size()),
                   "witness subcomplexes must be boundaries on " + complex_to_json(K), detail);
      ok &= expect(w.first_only >= 1 && w.shared >= 1 && w.second_only >= 1,
                   "witness counts must be positive", detail);
      if (!ok) break;
    }
  if (ok)
    detail = "125000 parameter triples; " + std::to_string(hyperbolic_count) +
             " hyperbolic complexes";
  return ok;
}

bool identity_suite(std::string& detail) {
  bool ok = true;
  long elliptic_count = 0;
  for (int m = 1; m <= 5 && ok; ++m)
    for (const auto& [K, verdict] : census(m)) {
      if (!verdict.elliptic()) continue;
      ++elliptic_count;
      SphereProduct sp = moment_angle_type(K);
      ok &= expect(free_loop_zk_series(sp).normalized() ==
                       zk_series(sp).normalized() * loop_zk_series(sp).normalized(),
                   "free loop != space times loops on " + complex_to_json(K), detail);
      if (!ok) break;
    }

  for (int m = 0; m <= 6 && ok; ++m) {
    RationalFunction reduced = free_loop_cp_infty_power_series(m).normalized();
    RationalFunction expected(Polynomial(1L), Polynomial::one_minus_power(1).pow(m));
    ok &= expect(reduced == expected,
                 "free loops on CP^inf^" + std::to_string(m) + " should reduce to 1/(1-t)^m",
                 detail);
  }
  if (ok) detail = std::to_string(elliptic_count) + " elliptic complexes; m <= 6 reductions";
  return ok;
}

}  // namespace

int main() {
  criterion(1, "paper examples reproduce exactly", paper_examples);
  criterion(2, "minimal non-faces agree with brute force (census m <= 4)",
            mnf_oracle_equivalence);
  criterion(3, "classification = decomposability = reconstruction (census m <= 5)",
            decomposition_equivalence);
  criterion(4, "series coefficients match independent oracles", series_coefficient_oracles);
  criterion(5, "growth classifier verdicts with empirical cross-check", growth_classifier);
  criterion(6, "dimension bound and witness invariants", dimension_bound_and_witnesses);
  criterion(7, "series identities hold as reduced rational functions", identity_suite);

  if (failures != 0) {
    std::cout << failures << " criterion(s) failed\n";
    return 1;
  }
  std::cout << "all criteria passed\n";
  return 0;
}
