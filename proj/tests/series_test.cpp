#include "tropgw/series.hpp"

#include <doctest.h>

#include <random>

using namespace tropgw;

namespace {

// Independent oracle: sinh(z/2)/(z/2) from the exponential series,
// (e^{z/2} - e^{-z/2}) / z, coefficient by coefficient.
FormalSeries sinh_ratio_from_exp(std::size_t order) {
  FormalSeries s('z', order);
  for (std::size_t i = 0; i <= order; ++i) {
    // coefficient of z^{i+1} in e^{z/2} - e^{-z/2}
    const std::size_t m = i + 1;
    Rational c(Integer(1), factorial(static_cast<unsigned>(m)) * (Integer(1) << static_cast<mp_bitcnt_t>(m)));
    s[i] = (m % 2 == 1) ? Rational(2 * c) : Rational(0);
  }
  return s;
}

FormalSeries z_series(std::vector<Rational> c) { return FormalSeries('z', std::move(c)); }

}  // namespace

TEST_CASE("sinh ratio expansion") {
  CHECK(series_sinh_ratio(0) == z_series({1}));
  CHECK(series_sinh_ratio(2) == z_series({1, 0, make_rational(1, 24)}));
  CHECK(series_sinh_ratio(4) == z_series({1, 0, make_rational(1, 24), 0, make_rational(1, 1920)}));
  for (std::size_t n = 0; n <= 16; ++n) CHECK(series_sinh_ratio(n) == sinh_ratio_from_exp(n));
}

TEST_CASE("sinh ratio has positive even coefficients only") {
  const auto s = series_sinh_ratio(20);
  for (std::size_t i = 0; i <= 20; ++i) {
    if (i % 2 == 0) CHECK(sgn(s[i]) > 0);
    else CHECK(sgn(s[i]) == 0);
  }
}

TEST_CASE("series inversion") {
  CHECK(series_invert(z_series({1})) == z_series({1}));
  CHECK(series_invert(z_series({1, 0, make_rational(1, 24)})) == z_series({1, 0, make_rational(-1, 24)}));
  CHECK(series_invert(series_sinh_ratio(4)) ==
        z_series({1, 0, make_rational(-1, 24), 0, make_rational(7, 5760)}));
  CHECK_THROWS_WITH_AS(series_invert(z_series({0, 1})), "non-invertible series", std::domain_error);
}

TEST_CASE("inverse property on random unit series") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = trial % 9;
    FormalSeries s('z', n);
    for (std::size_t i = 0; i <= n; ++i) s[i] = make_rational(num(rng), den(rng));
    if (sgn(s[0]) == 0) s[0] = 1;
    CHECK(series_mul(s, series_invert(s)) == FormalSeries::constant('z', n, 1));
  }
}

TEST_CASE("argument scaling and products") {
  const auto s2 = series_sinh_ratio(2);
  CHECK(series_scale_argument(s2, 2) == z_series({1, 0, make_rational(4, 24)}));
  CHECK(series_mul(s2, series_invert(s2)) == z_series({1, 0, 0}));
  CHECK(series_mul(s2, series_scale_argument(s2, 2)) == z_series({1, 0, make_rational(5, 24)}));
}

TEST_CASE("binary operations truncate to the smaller order and check tags") {
  const auto a = series_sinh_ratio(6);
  const auto b = series_sinh_ratio(2);
  CHECK(series_add(a, b).order() == 2);
  CHECK(series_mul(a, b).order() == 2);
  CHECK_THROWS_AS(series_mul(a, series_sinh_ratio(2, 'u')), std::invalid_argument);
}
