#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace tropgw {

// Exact rational scalar. GMP keeps mpq_class canonical (lowest terms,
// positive denominator) after every arithmetic operation.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// "p/q", or "p" when q == 1.
inline std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(const std::string& text);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

}  // namespace tropgw
