#include "macloops/rational_function.hpp"

#include <sstream>
#include <utility>

namespace macloops {

RationalFunction::RationalFunction() : num_(), den_(1L) {}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
  if (den_.is_zero())
    throw Error(Errc::InvalidRationalFunction, "zero denominator");
  if (num_.is_zero()) {
    den_ = Polynomial(1L);
    return;
  }
  Polynomial g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = divexact(num_, g);
    den_ = divexact(den_, g);
  }
  const mpz_class& c0 = den_.coeff(0);
  if (c0 == -1) {
    num_ = -num_;
    den_ = -den_;
  } else if (c0 != 1) {
    throw Error(Errc::InvalidRationalFunction,
                "reduced denominator has constant term " + c0.get_str() +
                    "; an integer power series needs constant term 1");
  }
}

RationalFunction RationalFunction::from_polynomial(Polynomial p) {
  return RationalFunction(std::move(p), Polynomial(1L));
}

RationalFunction RationalFunction::operator+(const RationalFunction& o) const {
  return RationalFunction(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

RationalFunction RationalFunction::operator*(const RationalFunction& o) const {
  return RationalFunction(num_ * o.num_, den_ * o.den_);
}

std::vector<mpz_class> RationalFunction::expand(int max_degree) const {
  if (max_degree < 0) throw Error(Errc::ParameterOutOfRange, "expansion degree must be >= 0");
  // a_n = num_n - sum_{k>=1} den_k a_{n-k}; integral because den(0) = 1.
  std::vector<mpz_class> a(static_cast<std::size_t>(max_degree) + 1, 0);
  for (int n = 0; n <= max_degree; ++n) {
    mpz_class acc = num_.coeff(n);
    int reach = std::min(n, den_.degree());
    for (int k = 1; k <= reach; ++k) acc -= den_.coeff(k) * a[static_cast<std::size_t>(n - k)];
    a[static_cast<std::size_t>(n)] = std::move(acc);
  }
  return a;
}

std::string RationalFunction::str() const {
  if (den_.is_one()) return num_.str();
  return "(" + num_.str() + ")/(" + den_.str() + ")";
}

FactoredSeries& FactoredSeries::multiply_poly(const Polynomial& p) {
  poly_ = poly_ * p;
  return *this;
}

FactoredSeries& FactoredSeries::multiply_one_plus(int k, int exponent) {
  if (k < 1 || exponent < 0) throw Error(Errc::ParameterOutOfRange, "bad series factor");
  if (exponent > 0) num_factors_[k] += exponent;
  return *this;
}

FactoredSeries& FactoredSeries::divide_one_minus(int k, int exponent) {
  if (k < 1 || exponent < 0) throw Error(Errc::ParameterOutOfRange, "bad series factor");
  if (exponent > 0) den_factors_[k] += exponent;
  return *this;
}

FactoredSeries FactoredSeries::operator*(const FactoredSeries& o) const {
  FactoredSeries out = *this;
  out.poly_ = out.poly_ * o.poly_;
  for (auto [k, e] : o.num_factors_) out.num_factors_[k] += e;
  for (auto [k, e] : o.den_factors_) out.den_factors_[k] += e;
  return out;
}

RationalFunction FactoredSeries::normalized() const {
  Polynomial num = poly_;
  for (auto [k, e] : num_factors_) num = num * Polynomial::one_plus_power(k).pow(e);
  Polynomial den(1L);
  for (auto [k, e] : den_factors_) den = den * Polynomial::one_minus_power(k).pow(e);
  return RationalFunction(std::move(num), std::move(den));
}

std::vector<mpz_class> FactoredSeries::expand(int max_degree) const {
  return normalized().expand(max_degree);
}

namespace {

void append_factor(std::ostream& out, const std::string& base, int exponent) {
  out << base;
  if (exponent > 1) out << "^" << exponent;
}

std::string power_name(int k, char sign) {
  std::string s = "(1";
  s += sign;
  s += (k == 1 ? "t" : "t^" + std::to_string(k));
  s += ")";
  return s;
}

}  // namespace

std::string FactoredSeries::str() const {
  std::ostringstream num;
  bool have_num = false;
  if (!poly_.is_one()) {
    if (poly_.degree() <= 0 && !poly_.is_zero())
      num << poly_.str();  // bare integer
    else
      num << "(" << poly_.str() << ")";
    have_num = true;
  }
  for (auto [k, e] : num_factors_) {
    append_factor(num, power_name(k, '+'), e);
    have_num = true;
  }
  if (!have_num) num << "1";

  if (den_factors_.empty()) return num.str();

  std::ostringstream den;
  for (auto [k, e] : den_factors_) append_factor(den, power_name(k, '-'), e);
  if (den_factors_.size() > 1) return num.str() + "/(" + den.str() + ")";
  return num.str() + "/" + den.str();
}

}  // namespace macloops
