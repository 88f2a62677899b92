#include "tropgw/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace tropgw {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) {
    throw std::invalid_argument("not a rational number: '" + text + "'");
  }
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator: '" + text + "'");
  r.canonicalize();
  return r;
}

Integer factorial(unsigned n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Integer binomial(unsigned n, unsigned k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

FormalSeries::FormalSeries(char variable, std::size_t order)
    : variable_(variable), coeffs_(order + 1, Rational(0)) {}

FormalSeries::FormalSeries(char variable, std::vector<Rational> coefficients)
    : variable_(variable), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty()) throw std::invalid_argument("series needs at least one coefficient");
}

FormalSeries FormalSeries::constant(char variable, std::size_t order, const Rational& c) {
  FormalSeries s(variable, order);
  s.coeffs_[0] = c;
  return s;
}

FormalSeries FormalSeries::truncated(std::size_t order) const {
  FormalSeries s(variable_, order);
  for (std::size_t i = 0; i <= std::min(order, this->order()); ++i) s.coeffs_[i] = coeffs_[i];
  return s;
}

namespace {

void check_compatible(const FormalSeries& a, const FormalSeries& b) {
  if (a.variable() != b.variable()) {
    throw std::invalid_argument(std::string("series variable mismatch: ") + a.variable() +
                                " vs " + b.variable());
  }
}

}  // namespace

FormalSeries operator+(const FormalSeries& a, const FormalSeries& b) {
  check_compatible(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  FormalSeries r(a.variable(), n);
  for (std::size_t i = 0; i <= n; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
  return r;
}

FormalSeries operator-(const FormalSeries& a, const FormalSeries& b) {
  return a + Rational(-1) * b;
}

FormalSeries operator*(const FormalSeries& a, const FormalSeries& b) {
  check_compatible(a, b);
  const std::size_t n = std::min(a.order(), b.order());
  FormalSeries r(a.variable(), n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

FormalSeries operator*(const Rational& c, const FormalSeries& a) {
  FormalSeries r = a;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

bool operator==(const FormalSeries& a, const FormalSeries& b) {
  return a.variable_ == b.variable_ && a.coeffs_ == b.coeffs_;
}

FormalSeries series_sinh_ratio(std::size_t order, char variable) {
  FormalSeries s(variable, order);
  // (z/2)^{2k}/(2k+1)! = z^{2k} / (4^k (2k+1)!)
  for (std::size_t k = 0; 2 * k <= order; ++k) {
    Integer den = factorial(static_cast<unsigned>(2 * k + 1));
    den <<= static_cast<mp_bitcnt_t>(2 * k);
    s[2 * k] = Rational(Integer(1), den);
  }
  return s;
}

FormalSeries series_invert(const FormalSeries& s) {
  if (sgn(s[0]) == 0) throw std::domain_error("non-invertible series");
  const std::size_t n = s.order();
  FormalSeries t(s.variable(), n);
  t[0] = 1 / s[0];
  for (std::size_t i = 1; i <= n; ++i) {
    Rational acc = 0;
    for (std::size_t j = 1; j <= i; ++j) acc += s[j] * t[i - j];
    t[i] = -acc / s[0];
  }
  return t;
}

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b) { return a + b; }
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b) { return a * b; }

FormalSeries series_scale_argument(const FormalSeries& s, const Rational& c) {
  FormalSeries r = s;
  Rational power = 1;
  for (std::size_t i = 0; i <= r.order(); ++i) {
    r[i] *= power;
    power *= c;
  }
  return r;
}

}  // namespace tropgw
