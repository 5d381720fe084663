#pragma once

#include <optional>
#include <utility>

#include "macloops/rational_function.hpp"

namespace macloops {

// Coefficient-growth verdict for an integer power series given as a reduced
// rational function: the series grows exponentially exactly when the
// denominator has a root strictly inside the unit disk.
struct GrowthClass {
  enum class Kind { SubExponential, Exponential };
  Kind kind;
  std::string evidence;
  // For the exponential case: exact rationals lo <= hi < 1 with no pole
  // modulus below lo and at least one pole modulus below hi.
  std::optional<std::pair<mpq_class, mpq_class>> smallest_pole_modulus_bracket;

  bool exponential() const { return kind == Kind::Exponential; }
};

// Decides the growth class exactly, with no floating point:
//   1. strip from the reduced denominator every factor it shares with some
//      t^k - 1; this removes all root-of-unity poles (k ranges far enough
//      that any cyclotomic factor of the given degree is caught);
//   2. if anything is left, certify an interior root by an exact
//      Schur-Cohn count inside a circle of rational radius < 1 and bisect
//      a bracket for the smallest pole modulus.
// A denominator that strips to a constant has all poles on the unit circle,
// hence sub-exponential growth. If no certificate can be produced the
// classifier reports BoundaryRootUnresolved instead of guessing.
GrowthClass growth_classify(const RationalFunction& f);

namespace detail {

// Divides out of `den` every common factor with t^k - 1, k up to a bound
// large enough to cover all cyclotomic divisors of a polynomial of this
// degree (phi(k) <= deg forces k <= 2*deg^2).
Polynomial strip_roots_of_unity(Polynomial den);

// Number of roots of p in |z| < 1 via the Schur-Cohn chain, all integer
// arithmetic. nullopt when the chain degenerates (some gamma vanishes),
// which happens when roots sit on or pair up across the unit circle.
std::optional<int> schur_cohn_interior_roots(const Polynomial& p);

// Number of roots of p in |z| < radius for rational radius, guarded against
// roots exactly on the probe circle. nullopt if the guard or chain fails.
std::optional<int> roots_in_disk(const Polynomial& p, const mpq_class& radius);

}  // namespace detail

}  // namespace macloops
