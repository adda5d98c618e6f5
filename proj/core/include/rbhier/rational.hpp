#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace rbhier {

// Exact rationals over arbitrary-precision integers. mpq_class keeps values
// reduced with positive denominator, which is what structural equality of
// all higher-level containers relies on.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// base^exp with integer exponent; exp < 0 requires base != 0.
Rational rat_pow(const Rational& base, long exp);

Rational factorial(unsigned n);
Rational falling_factorial(unsigned n, unsigned i);
Rational binomial(unsigned n, unsigned k);

// "p" or "p/q" with q > 1.
std::string to_string(const Rational& r);
std::optional<Rational> parse_rational(std::string_view s);

}  // namespace rbhier
