#include "macloops/series.hpp"

namespace macloops {

namespace {

void require_odd_sphere_dims(const SphereProduct& sp) {
  for (int d : sp.sphere_dimensions)
    if (d < 3 || d % 2 == 0)
      throw Error(Errc::ParameterOutOfRange,
                  "sphere dimensions must be odd and at least 3, got " + std::to_string(d));
}

}  // namespace

FactoredSeries zk_series(const SphereProduct& sp) {
  require_odd_sphere_dims(sp);
  FactoredSeries s;
  for (int d : sp.sphere_dimensions) s.multiply_one_plus(d);
  return s;
}

FactoredSeries loop_zk_series(const SphereProduct& sp) {
  require_odd_sphere_dims(sp);
  FactoredSeries s;
  for (int d : sp.sphere_dimensions) s.divide_one_minus(d - 1);
  return s;
}

FactoredSeries free_loop_zk_series(const SphereProduct& sp) {
  return zk_series(sp) * loop_zk_series(sp);
}

FactoredSeries face_ring_series(const SimplicialComplex& K) {
  FVector fv = f_vector(K);
  const int n = fv.max_face_size();
  Polynomial num;
  for (int q = 0; q <= n; ++q) {
    Polynomial term = Polynomial::monomial(fv.counts[static_cast<std::size_t>(q)], 2 * q) *
                      Polynomial::one_minus_power(2).pow(n - q);
    num = num + term;
  }
  FactoredSeries s{std::move(num)};
  s.divide_one_minus(2, n);
  return s;
}

FactoredSeries loop_dj_series(const SimplicialComplex& K) {
  Verdict verdict = classify(K);
  if (!verdict.elliptic())
    throw Error(Errc::NotElliptic,
                "closed-form loop-space series requires the elliptic case");
  FactoredSeries s = loop_zk_series(moment_angle_type(K));
  s.multiply_one_plus(1, K.vertex_count());
  return s;
}

FactoredSeries free_loop_dj_upper_series(const SimplicialComplex& K) {
  return face_ring_series(K) * loop_dj_series(K);
}

FactoredSeries free_loop_cp_infty_power_series(int m) {
  if (m < 0) throw Error(Errc::ParameterOutOfRange, "m must be >= 0");
  FactoredSeries s;
  if (m > 0) {
    s.multiply_one_plus(1, m);
    s.divide_one_minus(2, m);
  }
  return s;
}

HochschildGrowthReport hochschild_growth_verdict(const SimplicialComplex& K) {
  Verdict verdict = classify(K);
  HochschildGrowthReport report{verdict.kind, std::nullopt, std::nullopt, false,
                                GrowthClass{}};
  if (verdict.elliptic()) {
    FactoredSeries bound = free_loop_dj_upper_series(K);
    report.dj_growth = growth_classify(bound.normalized());
    report.dj_evidence_series = std::move(bound);
    report.boundaries_only = join_decompose(K).boundaries_only();
    report.lzk_growth = growth_classify(free_loop_zk_series(moment_angle_type(K)).normalized());
  } else {
    // The wedge-of-spheres retract forces exponential free-loop growth of
    // the moment-angle complex; for the companion space no series is
    // available, so its growth stays undetermined rather than extrapolated.
    WedgeWitness w = wedge_retract_witness(K);
    report.lzk_growth = GrowthClass{
        GrowthClass::Kind::Exponential,
        "wedge retract S^" + std::to_string(w.sphere_dims.first) + " v S^" +
            std::to_string(w.sphere_dims.second) + " forces exponential free-loop growth",
        std::nullopt};
  }
  return report;
}

}  // namespace macloops
