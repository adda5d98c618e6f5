#pragma once

#include "rbhier/rational.hpp"

#include <map>
#include <string>
#include <utility>
#include <vector>

namespace rbhier {

// x^k exp(alpha x). (0, 0) is the unit. The basis is closed under
// multiplication, so products of basis elements never need expansion.
struct BasisFunction {
  unsigned k = 0;
  Rational alpha = 0;

  bool is_unit() const { return k == 0 && alpha == 0; }
  bool operator==(const BasisFunction& o) const { return k == o.k && alpha == o.alpha; }
  bool operator!=(const BasisFunction& o) const { return !(*this == o); }
  // Total order: lexicographic on (alpha, k).
  bool operator<(const BasisFunction& o) const {
    int c = cmp(alpha, o.alpha);
    if (c != 0) return c < 0;
    return k < o.k;
  }
};

inline BasisFunction bf(unsigned k, Rational alpha = 0) { return {k, std::move(alpha)}; }
inline BasisFunction bf_mul(const BasisFunction& a, const BasisFunction& b) {
  return {a.k + b.k, a.alpha + b.alpha};
}

// Finite Q-linear combination of basis functions; zero coefficients absent.
class Coefficient {
 public:
  Coefficient() = default;
  explicit Coefficient(const Rational& c) { add(BasisFunction{}, c); }
  explicit Coefficient(const BasisFunction& b, const Rational& c = 1) { add(b, c); }

  static Coefficient zero() { return Coefficient(); }
  static Coefficient one() { return Coefficient(Rational(1)); }

  bool is_zero() const { return terms_.empty(); }
  const std::map<BasisFunction, Rational>& terms() const { return terms_; }

  void add(const BasisFunction& b, const Rational& c);
  Coefficient& operator+=(const Coefficient& o);
  Coefficient& operator-=(const Coefficient& o);
  Coefficient operator+(const Coefficient& o) const;
  Coefficient operator-(const Coefficient& o) const;
  Coefficient operator*(const Rational& c) const;
  bool operator==(const Coefficient& o) const { return terms_ == o.terms_; }
  bool operator!=(const Coefficient& o) const { return !(*this == o); }

 private:
  std::map<BasisFunction, Rational> terms_;
};

using Tensor2 = std::map<std::pair<BasisFunction, BasisFunction>, Rational>;
using TensorN = std::map<std::vector<BasisFunction>, Rational>;

Coefficient multiply(const Coefficient& f, const Coefficient& g);

// f(x) -> f(lambda x); lambda = 0 gives the counit projection.
Coefficient scale_arg(const Rational& lambda, const Coefficient& f);
BasisFunction scale_arg_basis(const Rational& lambda, const BasisFunction& b, Rational& factor);

Tensor2 coproduct(const Coefficient& f);
TensorN iterated_coproduct(unsigned n, const Coefficient& f);

// Evaluation at 0.
Rational counit(const Coefficient& f);
Rational counit(const BasisFunction& b);

Coefficient integrate(const BasisFunction& b);
Coefficient integrate(const Coefficient& f);
Coefficient derivative(const Coefficient& f);
Coefficient antipode(const Coefficient& f);

// nabla (lambda* (x) mu*) Delta; agrees with scale_arg(lambda + mu, .).
Coefficient convolve_scalings(const Rational& lambda, const Rational& mu, const Coefficient& f);

std::string to_string(const BasisFunction& b, int axis = 1);
std::string to_string(const Coefficient& f, int axis = 1);

}  // namespace rbhier
