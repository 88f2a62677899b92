#pragma once

#include "tropgw/rational.hpp"

#include <cstddef>
#include <vector>

namespace tropgw {

/// Truncated univariate power series with exact rational coefficients.
///
/// The coefficient of x^i lives at index i; the series knows nothing beyond
/// its truncation order. Binary operations truncate to the smaller order and
/// require both operands to use the same variable tag.
class FormalSeries {
 public:
  FormalSeries(char variable, std::size_t order);
  FormalSeries(char variable, std::vector<Rational> coefficients);

  static FormalSeries constant(char variable, std::size_t order, const Rational& c);

  char variable() const { return variable_; }
  std::size_t order() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }
  Rational& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  FormalSeries truncated(std::size_t order) const;

  friend FormalSeries operator+(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator-(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const FormalSeries& a, const FormalSeries& b);
  friend FormalSeries operator*(const Rational& c, const FormalSeries& a);
  friend bool operator==(const FormalSeries& a, const FormalSeries& b);

 private:
  char variable_;
  std::vector<Rational> coeffs_;
};

/// sinh(z/2)/(z/2) = sum_k (z/2)^{2k}/(2k+1)!, truncated at `order`.
FormalSeries series_sinh_ratio(std::size_t order, char variable = 'z');

/// Multiplicative inverse; throws std::domain_error("non-invertible series")
/// when the constant term vanishes.
FormalSeries series_invert(const FormalSeries& s);

FormalSeries series_add(const FormalSeries& a, const FormalSeries& b);
FormalSeries series_mul(const FormalSeries& a, const FormalSeries& b);

/// Substitutes x -> c*x.
FormalSeries series_scale_argument(const FormalSeries& s, const Rational& c);

}  // namespace tropgw
