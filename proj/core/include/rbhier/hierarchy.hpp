#pragma once

#include "rbhier/bialgebra.hpp"
#include "rbhier/matrixsubst.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace rbhier {

// b_1 (x) ... (x) b_n with trailing units trimmed; the empty sequence is
// the scalar 1.
class TensorMonomial {
 public:
  TensorMonomial() = default;
  explicit TensorMonomial(std::vector<BasisFunction> factors);
  static TensorMonomial at_axis(const BasisFunction& b, int axis);

  int grade() const { return static_cast<int>(factors_.size()); }
  BasisFunction factor(int axis) const;  // unit beyond grade()
  bool is_unit() const { return factors_.empty(); }
  const std::vector<BasisFunction>& factors() const { return factors_; }

  std::set<int> support() const;
  // Factors at the given axis / away from it, as monomials.
  TensorMonomial part_at(int axis) const;
  TensorMonomial part_off(int axis) const;

  bool operator==(const TensorMonomial& o) const { return factors_ == o.factors_; }
  bool operator!=(const TensorMonomial& o) const { return !(*this == o); }
  bool operator<(const TensorMonomial& o) const;

 private:
  std::vector<BasisFunction> factors_;
};

TensorMonomial monomial_mul(const TensorMonomial& a, const TensorMonomial& b);

// Finite Q-linear combination of tensor monomials.
class HierarchyElement {
 public:
  HierarchyElement() = default;
  explicit HierarchyElement(const Rational& c) { add(TensorMonomial(), c); }
  explicit HierarchyElement(const TensorMonomial& m, const Rational& c = 1) { add(m, c); }

  static HierarchyElement zero() { return HierarchyElement(); }
  static HierarchyElement one() { return HierarchyElement(Rational(1)); }
  static HierarchyElement from_coefficient(const Coefficient& f, int axis);

  bool is_zero() const { return terms_.empty(); }
  int grade() const;
  const std::map<TensorMonomial, Rational>& terms() const { return terms_; }

  void add(const TensorMonomial& m, const Rational& c);
  HierarchyElement& operator+=(const HierarchyElement& o);
  HierarchyElement& operator-=(const HierarchyElement& o);
  HierarchyElement operator+(const HierarchyElement& o) const;
  HierarchyElement operator-(const HierarchyElement& o) const;
  HierarchyElement operator*(const Rational& c) const;
  bool operator==(const HierarchyElement& o) const { return terms_ == o.terms_; }
  bool operator!=(const HierarchyElement& o) const { return !(*this == o); }

 private:
  std::map<TensorMonomial, Rational> terms_;
};

HierarchyElement multiply(const HierarchyElement& f, const HierarchyElement& g);

// Row action of a linear form: b(sum_m row[m] x_m) expanded into tensor
// monomials. row is dense, 1-based via index 0 = axis 1.
HierarchyElement row_action(const std::vector<Rational>& row, const BasisFunction& b);

// Induced matrix action M^* f.
HierarchyElement substitute(const SubstMatrix& m, const HierarchyElement& f);

HierarchyElement integrate_axis(int axis, const HierarchyElement& f);
HierarchyElement evaluate_axis(int axis, const HierarchyElement& f);

std::set<int> variable_support(const HierarchyElement& f);

// Basis-aligned tensor expansion g = sum_mu coef_mu * in_mu * out_mu with
// in_mu supported inside `split` and out_mu outside. Not rank-minimal.
struct ComponentExpansion {
  std::set<int> split;
  struct Term {
    Rational coef;
    std::map<int, BasisFunction> factors;  // axis -> factor, units absent
  };
  std::vector<Term> terms;

  int length() const { return static_cast<int>(terms.size()); }
  HierarchyElement part_in(int mu) const;
  HierarchyElement part_out(int mu) const;
  HierarchyElement recombine() const;
};

ComponentExpansion component_expansion(const HierarchyElement& g, const std::set<int>& split);

// Duhamel convolution of univariate functions: (f * g)(x) = int_0^x f(x-y) g(y) dy,
// computed through the substitution/integration composite.
Coefficient convolve(const Coefficient& f, const Coefficient& g);

std::string to_string(const TensorMonomial& m);
std::string to_string(const HierarchyElement& f);

}  // namespace rbhier
