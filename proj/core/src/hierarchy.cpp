#include "rbhier/hierarchy.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rbhier {

TensorMonomial::TensorMonomial(std::vector<BasisFunction> factors) : factors_(std::move(factors)) {
  while (!factors_.empty() && factors_.back().is_unit()) factors_.pop_back();
}

TensorMonomial TensorMonomial::at_axis(const BasisFunction& b, int axis) {
  std::vector<BasisFunction> f(axis);
  f[axis - 1] = b;
  return TensorMonomial(std::move(f));
}

BasisFunction TensorMonomial::factor(int axis) const {
  if (axis < 1 || axis > grade()) return BasisFunction{};
  return factors_[axis - 1];
}

std::set<int> TensorMonomial::support() const {
  std::set<int> s;
  for (int i = 1; i <= grade(); ++i)
    if (!factors_[i - 1].is_unit()) s.insert(i);
  return s;
}

TensorMonomial TensorMonomial::part_at(int axis) const {
  return TensorMonomial::at_axis(factor(axis), axis);
}

TensorMonomial TensorMonomial::part_off(int axis) const {
  std::vector<BasisFunction> f = factors_;
  if (axis >= 1 && axis <= grade()) f[axis - 1] = BasisFunction{};
  return TensorMonomial(std::move(f));
}

bool TensorMonomial::operator<(const TensorMonomial& o) const {
  return std::lexicographical_compare(factors_.begin(), factors_.end(), o.factors_.begin(),
                                      o.factors_.end());
}

TensorMonomial monomial_mul(const TensorMonomial& a, const TensorMonomial& b) {
  std::vector<BasisFunction> f(std::max(a.grade(), b.grade()));
  for (int i = 1; i <= static_cast<int>(f.size()); ++i) f[i - 1] = bf_mul(a.factor(i), b.factor(i));
  return TensorMonomial(std::move(f));
}

HierarchyElement HierarchyElement::from_coefficient(const Coefficient& f, int axis) {
  HierarchyElement r;
  for (const auto& [b, c] : f.terms()) r.add(TensorMonomial::at_axis(b, axis), c);
  return r;
}

int HierarchyElement::grade() const {
  int g = 0;
  for (const auto& [m, c] : terms_) g = std::max(g, m.grade());
  return g;
}

void HierarchyElement::add(const TensorMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

HierarchyElement& HierarchyElement::operator+=(const HierarchyElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

HierarchyElement& HierarchyElement::operator-=(const HierarchyElement& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

HierarchyElement HierarchyElement::operator+(const HierarchyElement& o) const {
  HierarchyElement r = *this;
  r += o;
  return r;
}

HierarchyElement HierarchyElement::operator-(const HierarchyElement& o) const {
  HierarchyElement r = *this;
  r -= o;
  return r;
}

HierarchyElement HierarchyElement::operator*(const Rational& c) const {
  HierarchyElement r;
  if (c == 0) return r;
  for (const auto& [m, v] : terms_) r.add(m, v * c);
  return r;
}

HierarchyElement multiply(const HierarchyElement& f, const HierarchyElement& g) {
  HierarchyElement r;
  for (const auto& [a, ca] : f.terms())
    for (const auto& [b, cb] : g.terms()) r.add(monomial_mul(a, b), ca * cb);
  return r;
}

namespace {

// Enumerates weak compositions k = l_1 + ... + l_s over the nonzero row
// positions, each contributing x_m^{l_m} e^{alpha row[m] x_m} with the
// multinomial coefficient and row[m]^{l_m}.
void expand_power(const std::vector<std::pair<int, Rational>>& entries, size_t idx, unsigned rest,
                  const Rational& scalar, std::vector<BasisFunction>& slots, const Rational& alpha,
                  HierarchyElement& out) {
  if (idx + 1 == entries.size()) {
    auto [m, a] = entries[idx];
    std::vector<BasisFunction> f = slots;
    if (static_cast<int>(f.size()) < m) f.resize(m);
    f[m - 1] = bf_mul(f[m - 1], BasisFunction{rest, alpha * a});
    out.add(TensorMonomial(std::move(f)), scalar * rat_pow(a, rest));
    return;
  }
  auto [m, a] = entries[idx];
  for (unsigned l = 0; l <= rest; ++l) {
    std::vector<BasisFunction> f = slots;
    if (static_cast<int>(f.size()) < m) f.resize(m);
    f[m - 1] = bf_mul(f[m - 1], BasisFunction{l, alpha * a});
    expand_power(entries, idx + 1, rest - l, scalar * binomial(rest, l) * rat_pow(a, l), f, alpha,
                 out);
  }
}

}  // namespace

HierarchyElement row_action(const std::vector<Rational>& row, const BasisFunction& b) {
  if (b.is_unit()) return HierarchyElement::one();
  std::vector<std::pair<int, Rational>> entries;
  for (int m = 1; m <= static_cast<int>(row.size()); ++m)
    if (row[m - 1] != 0) entries.emplace_back(m, row[m - 1]);
  if (entries.empty()) {
    // All coefficients vanish: the linear form is 0, so x^k picks up 0^k.
    return b.k == 0 ? HierarchyElement::one() : HierarchyElement::zero();
  }
  HierarchyElement out;
  std::vector<BasisFunction> slots;
  expand_power(entries, 0, b.k, 1, slots, b.alpha, out);
  return out;
}

HierarchyElement substitute(const SubstMatrix& m, const HierarchyElement& f) {
  HierarchyElement out;
  for (const auto& [mono, c] : f.terms()) {
    HierarchyElement prod = HierarchyElement::one();
    int n = std::max(mono.grade(), m.dim());
    for (int i = 1; i <= mono.grade(); ++i) {
      const BasisFunction& b = mono.factor(i);
      if (b.is_unit()) continue;
      prod = multiply(prod, row_action(m.row(i, n), b));
      if (prod.is_zero()) break;
    }
    out += prod * c;
  }
  return out;
}

HierarchyElement integrate_axis(int axis, const HierarchyElement& f) {
  if (axis < 1) throw std::invalid_argument("integrate_axis: axis must be positive");
  HierarchyElement out;
  for (const auto& [mono, c] : f.terms()) {
    Coefficient ib = integrate(mono.factor(axis));
    for (const auto& [b, cb] : ib.terms()) {
      std::vector<BasisFunction> fs = mono.factors();
      if (static_cast<int>(fs.size()) < axis) fs.resize(axis);
      fs[axis - 1] = b;
      out.add(TensorMonomial(std::move(fs)), c * cb);
    }
  }
  return out;
}

HierarchyElement evaluate_axis(int axis, const HierarchyElement& f) {
  HierarchyElement out;
  for (const auto& [mono, c] : f.terms()) {
    Rational e = counit(mono.factor(axis));
    if (e == 0) continue;
    std::vector<BasisFunction> fs = mono.factors();
    if (axis <= static_cast<int>(fs.size())) fs[axis - 1] = BasisFunction{};
    out.add(TensorMonomial(std::move(fs)), c * e);
  }
  return out;
}

std::set<int> variable_support(const HierarchyElement& f) {
  std::set<int> s;
  for (const auto& [mono, c] : f.terms()) {
    auto ms = mono.support();
    s.insert(ms.begin(), ms.end());
  }
  return s;
}

HierarchyElement ComponentExpansion::part_in(int mu) const {
  const Term& t = terms.at(mu);
  TensorMonomial m;
  for (const auto& [axis, b] : t.factors)
    if (split.count(axis)) m = monomial_mul(m, TensorMonomial::at_axis(b, axis));
  return HierarchyElement(m, t.coef);
}

HierarchyElement ComponentExpansion::part_out(int mu) const {
  const Term& t = terms.at(mu);
  TensorMonomial m;
  for (const auto& [axis, b] : t.factors)
    if (!split.count(axis)) m = monomial_mul(m, TensorMonomial::at_axis(b, axis));
  return HierarchyElement(m);
}

HierarchyElement ComponentExpansion::recombine() const {
  HierarchyElement r;
  for (int mu = 0; mu < length(); ++mu) r += multiply(part_in(mu), part_out(mu));
  return r;
}

ComponentExpansion component_expansion(const HierarchyElement& g, const std::set<int>& split) {
  ComponentExpansion e;
  e.split = split;
  for (const auto& [mono, c] : g.terms()) {
    ComponentExpansion::Term t;
    t.coef = c;
    for (int axis : mono.support()) t.factors[axis] = mono.factor(axis);
    e.terms.push_back(std::move(t));
  }
  return e;
}

Coefficient convolve(const Coefficient& f, const Coefficient& g) {
  HierarchyElement shifted =
      substitute(SubstMatrix::row_vector({Rational(1), Rational(-1)}),
                 HierarchyElement::from_coefficient(f, 1));
  HierarchyElement at_y = HierarchyElement::from_coefficient(g, 2);
  HierarchyElement integrated = integrate_axis(2, multiply(shifted, at_y));
  // Collapse the sweep variable back onto the first axis.
  HierarchyElement r = substitute(
      SubstMatrix::from_rows({{Rational(1), Rational(0)}, {Rational(1), Rational(0)}}), integrated);
  Coefficient out;
  for (const auto& [mono, c] : r.terms()) {
    if (mono.grade() > 1) throw std::logic_error("convolve: result not univariate");
    out.add(mono.factor(1), c);
  }
  return out;
}

std::string to_string(const TensorMonomial& m) {
  if (m.is_unit()) return "1";
  std::ostringstream os;
  bool first = true;
  for (int i = 1; i <= m.grade(); ++i) {
    if (m.factor(i).is_unit()) continue;
    if (!first) os << "*";
    os << to_string(m.factor(i), i);
    first = false;
  }
  return os.str();
}

std::string to_string(const HierarchyElement& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || m.is_unit()) {
      os << to_string(mag);
      if (!m.is_unit()) os << "*";
    }
    if (!m.is_unit()) os << to_string(m);
  }
  return os.str();
}

}  // namespace rbhier
