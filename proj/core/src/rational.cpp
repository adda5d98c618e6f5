#include "rbhier/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace rbhier {

Rational rat_pow(const Rational& base, long exp) {
  if (exp == 0) return 1;
  bool invert = exp < 0;
  unsigned long e = invert ? -static_cast<unsigned long>(exp) : exp;
  if (invert && base == 0) throw std::domain_error("rat_pow: 0 to negative power");
  mpz_class num, den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num().get_mpz_t(), e);
  mpz_pow_ui(den.get_mpz_t(), base.get_den().get_mpz_t(), e);
  Rational r = invert ? Rational(den, num) : Rational(num, den);
  r.canonicalize();
  return r;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(f);
}

Rational falling_factorial(unsigned n, unsigned i) {
  if (i > n) return 0;
  mpz_class f = 1;
  for (unsigned j = 0; j < i; ++j) f *= (n - j);
  return Rational(f);
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational(b);
}

std::string to_string(const Rational& r) {
  std::string s = r.get_num().get_str();
  if (r.get_den() != 1) s += "/" + r.get_den().get_str();
  return s;
}

std::optional<Rational> parse_rational(std::string_view s) {
  if (s.empty()) return std::nullopt;
  size_t pos = 0;
  bool neg = false;
  if (s[pos] == '+' || s[pos] == '-') {
    neg = s[pos] == '-';
    ++pos;
  }
  auto digits = [&](mpz_class& out) -> bool {
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) return false;
    std::string d;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) d += s[pos++];
    out = mpz_class(d);
    return true;
  };
  mpz_class num, den = 1;
  if (!digits(num)) return std::nullopt;
  if (pos < s.size() && s[pos] == '/') {
    ++pos;
    if (!digits(den) || den == 0) return std::nullopt;
  }
  if (pos != s.size()) return std::nullopt;
  Rational r(num, den);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

}  // namespace rbhier
