#include "macloops/growth.hpp"

#include <algorithm>
#include <map>

namespace macloops {

namespace detail {

namespace {

long euler_phi(long n) {
  long result = n;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

// k-th cyclotomic polynomial: (t^k - 1) divided by the cyclotomics of the
// proper divisors of k. Monic with small coefficients, so trial division
// against it never inflates anything.
const Polynomial& cyclotomic(long k, std::map<long, Polynomial>& cache) {
  auto it = cache.find(k);
  if (it != cache.end()) return it->second;
  Polynomial q = Polynomial::monomial(1, static_cast<int>(k)) - Polynomial(1L);
  for (long d = 1; d <= k / 2; ++d)
    if (k % d == 0) q = divexact(q, cyclotomic(d, cache));
  return cache.emplace(k, std::move(q)).first->second;
}

}  // namespace

Polynomial strip_roots_of_unity(Polynomial den) {
  const int original_degree = den.degree();
  if (original_degree < 1) return den;
  // A factor with a primitive k-th root of unity is divisible by the
  // cyclotomic Phi_k of degree phi(k); phi(k) >= sqrt(k/2) bounds k by
  // 2*deg^2. Divide each candidate out to full multiplicity.
  const long bound = 2L * original_degree * original_degree;
  std::map<long, Polynomial> cache;
  for (long k = 1; k <= bound && den.degree() >= 1; ++k) {
    if (euler_phi(k) > den.degree()) continue;
    const Polynomial& cyclo = cyclotomic(k, cache);
    while (den.degree() >= cyclo.degree()) {
      try {
        den = divexact(den, cyclo);
      } catch (const Error&) {
        break;
      }
    }
  }
  return den;
}

std::optional<int> schur_cohn_interior_roots(const Polynomial& p) {
  Polynomial q = p;
  int n = q.degree();
  if (n <= 0) return 0;
  mpz_class gamma = q.coeff(0) * q.coeff(0) - q.leading() * q.leading();
  if (gamma == 0) return std::nullopt;
  // One Schur transform step; the constant term of the transform is gamma,
  // so it is nonzero and the recursion is on a strictly smaller degree.
  Polynomial transform = q * q.coeff(0) - q.reversed() * q.leading();
  transform = transform.primitive_part();
  auto rest = schur_cohn_interior_roots(transform);
  if (!rest) return std::nullopt;
  return gamma > 0 ? *rest : n - *rest;
}

std::optional<int> roots_in_disk(const Polynomial& p, const mpq_class& radius) {
  if (p.degree() <= 0) return 0;
  mpq_class r = radius;
  r.canonicalize();
  const mpz_class& num = r.get_num();
  const mpz_class& den = r.get_den();
  // q(t) = p(radius * t), denominators cleared: coeff_i * num^i * den^(D-i).
  std::vector<mpz_class> scaled(static_cast<std::size_t>(p.degree()) + 1);
  mpz_class num_pow = 1;
  for (int i = 0; i <= p.degree(); ++i) {
    mpz_class den_pow;
    mpz_pow_ui(den_pow.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(p.degree() - i));
    scaled[static_cast<std::size_t>(i)] = p.coeff(i) * num_pow * den_pow;
    num_pow *= num;
  }
  Polynomial q = Polynomial(std::move(scaled)).primitive_part();
  // Roots exactly on the probe circle invalidate the count; they force a
  // common factor between q and its reversal, so that is the guard.
  if (gcd(q, q.reversed()).degree() >= 1) return std::nullopt;
  return schur_cohn_interior_roots(q);
}

namespace {

// Like roots_in_disk but retries with nudged radii inside (lo, hi) when a
// probe lands on a degenerate configuration. Returns the radius actually
// used alongside the count.
std::optional<std::pair<mpq_class, int>> robust_roots_in_disk(const Polynomial& p,
                                                              const mpq_class& center,
                                                              const mpq_class& lo,
                                                              const mpq_class& hi) {
  if (auto c = roots_in_disk(p, center)) return std::make_pair(center, *c);
  mpq_class step = (hi - lo) / 16;
  for (int attempt = 1; attempt <= 6; ++attempt) {
    for (int sign : {+1, -1}) {
      mpq_class candidate = center + step * sign * attempt;
      if (candidate <= lo || candidate >= hi) continue;
      if (auto c = roots_in_disk(p, candidate)) return std::make_pair(candidate, *c);
    }
  }
  return std::nullopt;
}

}  // namespace
}  // namespace detail

GrowthClass growth_classify(const RationalFunction& f) {
  if (f.is_zero())
    throw Error(Errc::ParameterOutOfRange, "growth of the zero series is undefined");

  const Polynomial& den = f.denominator();
  if (den.degree() < 1)
    return GrowthClass{GrowthClass::Kind::SubExponential, "polynomial denominator; no poles",
                       std::nullopt};

  Polynomial stripped = detail::strip_roots_of_unity(den);
  if (stripped.degree() < 1)
    return GrowthClass{GrowthClass::Kind::SubExponential, "all poles on unit circle",
                       std::nullopt};

  // Something survives stripping, so a pole must lie strictly inside the
  // disk; find a rational radius < 1 certifying it.
  std::optional<mpq_class> certified_radius;
  int interior_count = 0;
  mpq_class probe(1, 2);
  for (int s = 1; s <= 64 && !certified_radius; ++s) {
    if (auto count = detail::roots_in_disk(stripped, probe)) {
      if (*count >= 1) {
        certified_radius = probe;
        interior_count = *count;
        break;
      }
    }
    probe = (probe + 1) / 2;  // 1 - 2^-s
  }
  if (!certified_radius)
    throw Error(Errc::BoundaryRootUnresolved,
                "no Schur-Cohn certificate found for a pole inside the unit disk");

  // Bisect a bracket for the smallest pole modulus.
  mpq_class lo = 0, hi = *certified_radius;
  const mpq_class width_target(1, 64);
  while (hi - lo > width_target) {
    mpq_class mid = (lo + hi) / 2;
    auto probe_result = detail::robust_roots_in_disk(stripped, mid, lo, hi);
    if (!probe_result) break;  // keep the bracket we have
    if (probe_result->second >= 1)
      hi = probe_result->first;
    else
      lo = probe_result->first;
  }

  std::string evidence = "smallest pole modulus in [" + lo.get_str() + ", " + hi.get_str() +
                         "); " + std::to_string(interior_count) +
                         " pole(s) certified inside the unit disk";
  return GrowthClass{GrowthClass::Kind::Exponential, evidence,
                     std::make_pair(std::move(lo), std::move(hi))};
}

}  // namespace macloops
