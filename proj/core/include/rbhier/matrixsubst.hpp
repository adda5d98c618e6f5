#pragma once

#include "rbhier/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rbhier {

// Sparse tail vector used by shear constructors: row index -> value,
// zero entries absent. Indices are 1-based throughout.
using SparseVec = std::map<int, Rational>;

// A finitely-perturbed identity matrix: equal to the infinite identity
// outside the leading dim() x dim() block. Canonical form trims trailing
// identity rows/columns, so dim 0 encodes the identity and structural
// equality decides monoid equality.
class SubstMatrix {
 public:
  SubstMatrix() = default;

  static SubstMatrix from_rows(const std::vector<std::vector<Rational>>& rows);
  // Identity with row i replaced; v maps column -> value, column i forced to 1.
  static SubstMatrix transvection(int i, const SparseVec& v);
  // Identity plus subdiagonal column-i entries w (keys > i).
  static SubstMatrix eliminant(int i, const SparseVec& w);
  static SubstMatrix scaling(int i, const Rational& lambda);
  static SubstMatrix evaluation(int i);
  static SubstMatrix transposition(int i, int j);
  // Permutation matrix with column j equal to e_{image[j-1]}.
  static SubstMatrix permutation(const std::vector<int>& image);
  // First row v, remaining rows identity; encodes a linear form.
  static SubstMatrix row_vector(const std::vector<Rational>& v);

  int dim() const { return dim_; }
  // 1-based access with identity extension beyond dim().
  Rational at(int i, int j) const;
  std::vector<Rational> row(int i, int n) const;

  bool is_identity() const { return dim_ == 0; }
  bool row_is_zero(int i) const;
  bool column_is_zero(int j) const;
  // True iff the matrix differs from the identity only below the diagonal
  // in column i.
  bool is_eliminant_at(int i) const;
  SparseVec eliminant_tail(int i) const;

  // First n rows kept, identity rows from n+1 on.
  SubstMatrix cutoff(int n) const;

  struct Pivot {
    int row;             // first nonzero row of the column
    SparseVec l;         // l_k = M_kj / M_ij for k > row
    SubstMatrix reduced; // L_row(-l) * M, column j cleared below the pivot
  };
  // nullopt when column j is identically zero.
  std::optional<Pivot> pivot_decompose(int j) const;

  bool operator==(const SubstMatrix& o) const { return dim_ == o.dim_ && a_ == o.a_; }
  bool operator!=(const SubstMatrix& o) const { return !(*this == o); }
  bool operator<(const SubstMatrix& o) const;

  std::string to_string() const;

 private:
  int dim_ = 0;
  std::vector<Rational> a_;  // row-major dim_ x dim_

  Rational& cell(int i, int j) { return a_[(i - 1) * dim_ + (j - 1)]; }
  const Rational& cell(int i, int j) const { return a_[(i - 1) * dim_ + (j - 1)]; }
  void trim();
  static SubstMatrix raw(int dim);

  friend SubstMatrix compose(const SubstMatrix& m, const SubstMatrix& n);
};

// Matrix product m * n, trimmed to canonical form.
SubstMatrix compose(const SubstMatrix& m, const SubstMatrix& n);

inline SubstMatrix eliminant_inverse(int i, const SparseVec& w) {
  SparseVec neg;
  for (const auto& [r, val] : w) neg[r] = -val;
  return SubstMatrix::eliminant(i, neg);
}

// w' with L_j(u) L_i(w) = L_i(w') L_j(u), for i < j.
SparseVec eliminant_commute(int j, const SparseVec& u, int i, const SparseVec& w);

}  // namespace rbhier
