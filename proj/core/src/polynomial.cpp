#include "macloops/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace macloops {

namespace {
const mpz_class kZero = 0;
}

Polynomial::Polynomial(long constant) {
  if (constant != 0) coeffs_.emplace_back(constant);
}

Polynomial::Polynomial(mpz_class constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Polynomial::Polynomial(std::vector<mpz_class> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::from_ints(std::vector<long> coefficients) {
  std::vector<mpz_class> c(coefficients.begin(), coefficients.end());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monomial(mpz_class coefficient, int degree) {
  if (degree < 0) throw Error(Errc::ParameterOutOfRange, "monomial degree must be >= 0");
  if (coefficient == 0) return {};
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, kZero);
  c.back() = std::move(coefficient);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::one_plus_power(int k) {
  return Polynomial(1L) + monomial(1, k);
}

Polynomial Polynomial::one_minus_power(int k) {
  return Polynomial(1L) - monomial(1, k);
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const mpz_class& Polynomial::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
  return coeffs_[static_cast<std::size_t>(i)];
}

const mpz_class& Polynomial::leading() const {
  if (coeffs_.empty()) return kZero;
  return coeffs_.back();
}

mpz_class Polynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpq_class Polynomial::evaluate(const mpq_class& x) const {
  mpq_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial Polynomial::reversed() const {
  std::vector<mpz_class> c(coeffs_.rbegin(), coeffs_.rend());
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  std::vector<mpz_class> c(std::max(coeffs_.size(), o.coeffs_.size()), kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i];
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) c[i] -= o.coeffs_[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  std::vector<mpz_class> c(coeffs_.size() + o.coeffs_.size() - 1, kZero);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const mpz_class& k) const {
  if (k == 0) return {};
  Polynomial out = *this;
  for (auto& c : out.coeffs_) c *= k;
  return out;
}

Polynomial Polynomial::pow(int exponent) const {
  if (exponent < 0) throw Error(Errc::ParameterOutOfRange, "negative polynomial power");
  Polynomial result(1L);
  Polynomial base = *this;
  for (int e = exponent; e > 0; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

mpz_class Polynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

Polynomial Polynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class c = content();
  Polynomial out = *this;
  for (auto& a : out.coeffs_) a /= c;
  return out;
}

std::string Polynomial::str() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? "-" : "+");
    }
    if (i == 0) {
      out << mag.get_str();
    } else {
      if (mag != 1) out << mag.get_str();
      out << (i == 1 ? "t" : "t^" + std::to_string(i));
    }
  }
  return out.str();
}

Polynomial divexact(const Polynomial& dividend, const Polynomial& divisor) {
  if (divisor.is_zero()) throw Error(Errc::InexactDivision, "division by the zero polynomial");
  if (dividend.is_zero()) return {};
  int dq = dividend.degree() - divisor.degree();
  if (dq < 0) throw Error(Errc::InexactDivision, "divisor degree exceeds dividend degree");

  std::vector<mpz_class> rest = dividend.coefficients();
  std::vector<mpz_class> quot(static_cast<std::size_t>(dq) + 1, 0);
  const mpz_class& lead = divisor.leading();
  for (int k = dq; k >= 0; --k) {
    mpz_class& top = rest[static_cast<std::size_t>(k + divisor.degree())];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t()))
      throw Error(Errc::InexactDivision, "leading coefficient does not divide");
    mpz_class q = top / lead;
    for (int i = 0; i <= divisor.degree(); ++i)
      rest[static_cast<std::size_t>(k + i)] -= q * divisor.coeff(i);
    quot[static_cast<std::size_t>(k)] = std::move(q);
  }
  for (const auto& r : rest)
    if (r != 0) throw Error(Errc::InexactDivision, "nonzero remainder");
  return Polynomial(std::move(quot));
}

namespace {

// Scaled remainder: repeatedly eliminates the top term after multiplying by
// the divisor's leading coefficient. Only used inside the primitive-PRS gcd,
// where the result is immediately reduced to its primitive part.
Polynomial scaled_pseudo_rem(Polynomial r, const Polynomial& d) {
  const mpz_class& lead = d.leading();
  while (!r.is_zero() && r.degree() >= d.degree()) {
    int shift = r.degree() - d.degree();
    Polynomial subtrahend = Polynomial::monomial(r.leading(), shift) * d;
    r = r * lead - subtrahend;
  }
  return r;
}

}  // namespace

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() && b.is_zero()) return {};
  if (a.is_zero()) return b.leading() < 0 ? -b : b;
  if (b.is_zero()) return a.leading() < 0 ? -a : a;

  mpz_class common_content;
  mpz_gcd(common_content.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());

  Polynomial f = a.primitive_part();
  Polynomial g = b.primitive_part();
  while (!g.is_zero()) {
    Polynomial r = scaled_pseudo_rem(f, g).primitive_part();
    f = std::move(g);
    g = std::move(r);
  }
  if (f.leading() < 0) f = -f;
  return f * common_content;
}

}  // namespace macloops
