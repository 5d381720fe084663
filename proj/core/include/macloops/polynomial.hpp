#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

#include "macloops/errors.hpp"

namespace macloops {

// Dense univariate polynomial in t with unbounded integer coefficients.
// Trailing zeros are always trimmed; the zero polynomial has an empty
// coefficient vector and degree() reports the sentinel -1.
class Polynomial {
public:
  Polynomial() = default;
  explicit Polynomial(long constant);
  explicit Polynomial(mpz_class constant);
  explicit Polynomial(std::vector<mpz_class> coefficients);

  static Polynomial from_ints(std::vector<long> coefficients);
  static Polynomial monomial(mpz_class coefficient, int degree);
  static Polynomial one_plus_power(int k);   // 1 + t^k
  static Polynomial one_minus_power(int k);  // 1 - t^k

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  const mpz_class& coeff(int i) const;
  const mpz_class& leading() const;
  const std::vector<mpz_class>& coefficients() const { return coeffs_; }

  mpz_class evaluate(const mpz_class& x) const;
  mpq_class evaluate(const mpq_class& x) const;

  // Coefficient reversal t^deg * p(1/t); maps each root to its reciprocal.
  Polynomial reversed() const;

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial operator*(const mpz_class& c) const;
  Polynomial pow(int exponent) const;

  // gcd of the coefficient magnitudes; 0 for the zero polynomial.
  mpz_class content() const;
  // The polynomial divided by its content, sign of the leading coefficient kept.
  Polynomial primitive_part() const;

  std::string str() const;

  bool operator==(const Polynomial&) const = default;

private:
  void trim();

  std::vector<mpz_class> coeffs_;
};

// Exact quotient; throws InexactDivision unless divisor divides dividend in Z[t].
Polynomial divexact(const Polynomial& dividend, const Polynomial& divisor);

// gcd in Z[t] (content included), normalized to a positive leading coefficient.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace macloops
