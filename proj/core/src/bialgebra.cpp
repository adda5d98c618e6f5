#include "rbhier/bialgebra.hpp"

#include <sstream>

namespace rbhier {

void Coefficient::add(const BasisFunction& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Coefficient& Coefficient::operator+=(const Coefficient& o) {
  for (const auto& [b, c] : o.terms_) add(b, c);
  return *this;
}

Coefficient& Coefficient::operator-=(const Coefficient& o) {
  for (const auto& [b, c] : o.terms_) add(b, -c);
  return *this;
}

Coefficient Coefficient::operator+(const Coefficient& o) const {
  Coefficient r = *this;
  r += o;
  return r;
}

Coefficient Coefficient::operator-(const Coefficient& o) const {
  Coefficient r = *this;
  r -= o;
  return r;
}

Coefficient Coefficient::operator*(const Rational& c) const {
  Coefficient r;
  if (c == 0) return r;
  for (const auto& [b, v] : terms_) r.add(b, v * c);
  return r;
}

Coefficient multiply(const Coefficient& f, const Coefficient& g) {
  Coefficient r;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) r.add(bf_mul(a, b), ca * cb);
  return r;
}

BasisFunction scale_arg_basis(const Rational& lambda, const BasisFunction& b, Rational& factor) {
  factor = rat_pow(lambda, b.k);
  return {b.k, lambda * b.alpha};
}

Coefficient scale_arg(const Rational& lambda, const Coefficient& f) {
  Coefficient r;
  if (lambda == 0) {
    r.add(BasisFunction{}, counit(f));
    return r;
  }
  for (const auto& [b, c] : f.terms()) {
    Rational factor;
    BasisFunction sb = scale_arg_basis(lambda, b, factor);
    r.add(sb, c * factor);
  }
  return r;
}

Tensor2 coproduct(const Coefficient& f) {
  Tensor2 t;
  for (const auto& [b, c] : f.terms()) {
    for (unsigned m = 0; m <= b.k; ++m) {
      auto key = std::make_pair(BasisFunction{m, b.alpha}, BasisFunction{b.k - m, b.alpha});
      Rational v = c * binomial(b.k, m);
      auto [it, inserted] = t.emplace(key, v);
      if (!inserted) {
        it->second += v;
        if (it->second == 0) t.erase(it);
      }
    }
  }
  return t;
}

TensorN iterated_coproduct(unsigned n, const Coefficient& f) {
  TensorN t;
  auto push = [&t](std::vector<BasisFunction> key, const Rational& v) {
    if (v == 0) return;
    auto [it, inserted] = t.emplace(std::move(key), v);
    if (!inserted) {
      it->second += v;
      if (it->second == 0) t.erase(it);
    }
  };
  if (n == 1) {
    for (const auto& [b, c] : f.terms()) push({b}, c);
    return t;
  }
  TensorN prev = iterated_coproduct(n - 1, f);
  for (const auto& [key, c] : prev) {
    // Delta^n = (Delta^{n-1} (x) id) Delta expands the leading leg; by
    // coassociativity expanding the last leg of the previous stage gives
    // the same result and is simpler to splice.
    BasisFunction last = key.back();
    for (unsigned m = 0; m <= last.k; ++m) {
      std::vector<BasisFunction> nk(key.begin(), key.end() - 1);
      nk.push_back({m, last.alpha});
      nk.push_back({last.k - m, last.alpha});
      push(std::move(nk), c * binomial(last.k, m));
    }
  }
  return t;
}

Rational counit(const BasisFunction& b) { return b.k == 0 ? Rational(1) : Rational(0); }

Rational counit(const Coefficient& f) {
  Rational r = 0;
  for (const auto& [b, c] : f.terms())
    if (b.k == 0) r += c;
  return r;
}

Coefficient integrate(const BasisFunction& b) {
  Coefficient r;
  if (b.alpha == 0) {
    r.add(BasisFunction{b.k + 1, 0}, Rational(1, b.k + 1));
    return r;
  }
  // int x^k e^{ax} = (-1)^{k+1} k! / a^{k+1}
  //                + sum_{i<=k} (-1)^i (k falling i) / a^{i+1} x^{k-i} e^{ax}
  Rational sign = (b.k % 2 == 0) ? -1 : 1;
  r.add(BasisFunction{}, sign * factorial(b.k) * rat_pow(b.alpha, -static_cast<long>(b.k) - 1));
  Rational s = 1;
  for (unsigned i = 0; i <= b.k; ++i) {
    r.add(BasisFunction{b.k - i, b.alpha},
          s * falling_factorial(b.k, i) * rat_pow(b.alpha, -static_cast<long>(i) - 1));
    s = -s;
  }
  return r;
}

Coefficient integrate(const Coefficient& f) {
  Coefficient r;
  for (const auto& [b, c] : f.terms()) r += integrate(b) * c;
  return r;
}

Coefficient derivative(const Coefficient& f) {
  Coefficient r;
  for (const auto& [b, c] : f.terms()) {
    if (b.k > 0) r.add(BasisFunction{b.k - 1, b.alpha}, c * b.k);
    if (b.alpha != 0) r.add(b, c * b.alpha);
  }
  return r;
}

Coefficient antipode(const Coefficient& f) { return scale_arg(-1, f); }

Coefficient convolve_scalings(const Rational& lambda, const Rational& mu, const Coefficient& f) {
  Coefficient r;
  for (const auto& [pair, c] : coproduct(f)) {
    Coefficient left = scale_arg(lambda, Coefficient(pair.first));
    Coefficient right = scale_arg(mu, Coefficient(pair.second));
    r += multiply(left, right) * c;
  }
  return r;
}

std::string to_string(const BasisFunction& b, int axis) {
  std::ostringstream os;
  std::string var = "x" + std::to_string(axis);
  bool have = false;
  if (b.k > 0) {
    os << var;
    if (b.k > 1) os << "^" << b.k;
    have = true;
  }
  if (b.alpha != 0) {
    if (have) os << "*";
    os << "exp(";
    if (b.alpha == 1)
      os << var;
    else if (b.alpha == -1)
      os << "-" << var;
    else
      os << rbhier::to_string(b.alpha) << "*" << var;
    os << ")";
    have = true;
  }
  if (!have) os << "1";
  return os.str();
}

std::string to_string(const Coefficient& f, int axis) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [b, c] : f.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || b.is_unit()) {
      os << rbhier::to_string(mag);
      if (!b.is_unit()) os << "*";
    }
    if (!b.is_unit()) os << to_string(b, axis);
  }
  return os.str();
}

}  // namespace rbhier
