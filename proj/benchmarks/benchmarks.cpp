#include <benchmark/benchmark.h>

#include <random>

#include "macloops/series.hpp"

using namespace macloops;

namespace {

SimplicialComplex join_of_boundaries(int factors, int factor_size) {
  SimplicialComplex K;
  for (int i = 0; i < factors; ++i) K = join(K, boundary_simplex(factor_size));
  return K;
}

}  // namespace

static void BM_MinimalNonFaces(benchmark::State& state) {
  // m = factors * 3 vertices, one minimal non-face per factor
  SimplicialComplex K = join_of_boundaries(static_cast<int>(state.range(0)), 3);
  for (auto _ : state) {
    NonfaceProfile p = minimal_non_faces(K);
    benchmark::DoNotOptimize(p);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_MinimalNonFaces)->DenseRange(2, 6)->Complexity();

static void BM_Census(benchmark::State& state) {
  for (auto _ : state) {
    long count = 0;
    census(static_cast<int>(state.range(0)),
           [&](const SimplicialComplex&, const Verdict&) { ++count; });
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_Census)->DenseRange(3, 5);

static void BM_FreeLoopUpperBoundExpansion(benchmark::State& state) {
  SimplicialComplex square =
      SimplicialComplex::normalize(4, {FaceSet::of({1, 2}), FaceSet::of({2, 3}),
                                       FaceSet::of({3, 4}), FaceSet::of({1, 4})});
  RationalFunction f = free_loop_dj_upper_series(square).normalized();
  for (auto _ : state) {
    auto coeffs = f.expand(static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(coeffs);
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_FreeLoopUpperBoundExpansion)->RangeMultiplier(4)->Range(256, 4096)->Complexity();

static void BM_GrowthClassifyStripped(benchmark::State& state) {
  // denominator entirely made of unit-circle factors
  SimplicialComplex K = join_of_boundaries(4, 3);
  RationalFunction f = free_loop_zk_series(moment_angle_type(K)).normalized();
  for (auto _ : state) {
    GrowthClass g = growth_classify(f);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GrowthClassifyStripped);

static void BM_GrowthClassifyBracket(benchmark::State& state) {
  // Fibonacci denominator exercises the Schur-Cohn bisection path
  RationalFunction f(Polynomial(1L), Polynomial::from_ints({1, -1, -1}));
  for (auto _ : state) {
    GrowthClass g = growth_classify(f);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_GrowthClassifyBracket);

BENCHMARK_MAIN();
