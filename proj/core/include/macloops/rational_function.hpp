#pragma once

#include <map>
#include <string>
#include <vector>

#include "macloops/polynomial.hpp"

namespace macloops {

// Quotient of integer polynomials kept in reduced canonical form:
// gcd(numerator, denominator) = 1 and denominator(0) = 1 after content and
// sign normalization. The constant-term condition makes the power-series
// expansion integral and unique; inputs that cannot be normalized that way
// are rejected rather than silently approximated.
class RationalFunction {
public:
  RationalFunction();  // 0/1
  RationalFunction(Polynomial numerator, Polynomial denominator);

  static RationalFunction from_polynomial(Polynomial p);

  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  RationalFunction operator+(const RationalFunction& o) const;
  RationalFunction operator*(const RationalFunction& o) const;

  // Power-series coefficients a_0..a_N of the expansion at t = 0.
  std::vector<mpz_class> expand(int max_degree) const;

  std::string str() const;

  bool operator==(const RationalFunction&) const = default;

private:
  Polynomial num_;
  Polynomial den_;
};

// A series kept as  poly * prod (1+t^a)^e / prod (1-t^b)^f.
//
// Everything this library derives has that shape, the factored denominator
// makes the pole structure readable at a glance, and the pretty printer
// works straight off the factors. normalized() multiplies out and reduces.
class FactoredSeries {
public:
  FactoredSeries() : poly_(1L) {}
  explicit FactoredSeries(Polynomial p) : poly_(std::move(p)) {}

  FactoredSeries& multiply_poly(const Polynomial& p);
  FactoredSeries& multiply_one_plus(int k, int exponent = 1);  // * (1+t^k)^exponent
  FactoredSeries& divide_one_minus(int k, int exponent = 1);   // / (1-t^k)^exponent
  FactoredSeries operator*(const FactoredSeries& o) const;

  const Polynomial& poly() const { return poly_; }
  const std::map<int, int>& numerator_factors() const { return num_factors_; }
  const std::map<int, int>& denominator_factors() const { return den_factors_; }

  RationalFunction normalized() const;
  std::vector<mpz_class> expand(int max_degree) const;

  // Factored rendering, e.g. "(1+t^3)^2/(1-t^2)^2"; no reduction is applied.
  std::string str() const;

  bool operator==(const FactoredSeries&) const = default;

private:
  Polynomial poly_;
  std::map<int, int> num_factors_;  // k -> exponent of (1+t^k)
  std::map<int, int> den_factors_;  // k -> exponent of (1-t^k)
};

}  // namespace macloops
