#include "rbhier/matrixsubst.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace rbhier {

SubstMatrix SubstMatrix::raw(int dim) {
  SubstMatrix m;
  m.dim_ = dim;
  m.a_.assign(static_cast<size_t>(dim) * dim, Rational(0));
  for (int i = 1; i <= dim; ++i) m.cell(i, i) = 1;
  return m;
}

void SubstMatrix::trim() {
  while (dim_ > 0) {
    bool id_border = cell(dim_, dim_) == 1;
    for (int k = 1; id_border && k < dim_; ++k)
      id_border = cell(dim_, k) == 0 && cell(k, dim_) == 0;
    if (!id_border) break;
    int n = dim_ - 1;
    std::vector<Rational> b(static_cast<size_t>(n) * n);
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) b[(i - 1) * n + (j - 1)] = cell(i, j);
    dim_ = n;
    a_ = std::move(b);
  }
}

SubstMatrix SubstMatrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  int n = static_cast<int>(rows.size());
  for (const auto& r : rows)
    if (static_cast<int>(r.size()) != n) throw std::invalid_argument("SubstMatrix: ragged rows");
  SubstMatrix m = raw(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) m.cell(i, j) = rows[i - 1][j - 1];
  m.trim();
  return m;
}

SubstMatrix SubstMatrix::transvection(int i, const SparseVec& v) {
  int n = i;
  for (const auto& [c, val] : v)
    if (val != 0) n = std::max(n, c);
  SubstMatrix m = raw(n);
  for (const auto& [c, val] : v) {
    if (c == i) throw std::invalid_argument("transvection: entry at the axis itself");
    m.cell(i, c) = val;
  }
  m.trim();
  return m;
}

SubstMatrix SubstMatrix::eliminant(int i, const SparseVec& w) {
  int n = i;
  for (const auto& [r, val] : w)
    if (val != 0) n = std::max(n, r);
  SubstMatrix m = raw(n);
  for (const auto& [r, val] : w) {
    if (r <= i) throw std::invalid_argument("eliminant: entries must lie below the axis row");
    m.cell(r, i) = val;
  }
  m.trim();
  return m;
}

SubstMatrix SubstMatrix::scaling(int i, const Rational& lambda) {
  SubstMatrix m = raw(i);
  m.cell(i, i) = lambda;
  m.trim();
  return m;
}

SubstMatrix SubstMatrix::evaluation(int i) { return scaling(i, 0); }

SubstMatrix SubstMatrix::transposition(int i, int j) {
  if (i == j) return SubstMatrix();
  int n = std::max(i, j);
  SubstMatrix m = raw(n);
  m.cell(i, i) = 0;
  m.cell(j, j) = 0;
  m.cell(i, j) = 1;
  m.cell(j, i) = 1;
  return m;  // never trimmable below n
}

SubstMatrix SubstMatrix::permutation(const std::vector<int>& image) {
  int n = static_cast<int>(image.size());
  std::vector<bool> seen(n, false);
  SubstMatrix m = raw(n);
  for (int j = 1; j <= n; ++j) {
    int i = image[j - 1];
    if (i < 1 || i > n || seen[i - 1]) throw std::invalid_argument("permutation: not a bijection");
    seen[i - 1] = true;
    m.cell(j, j) = 0;
  }
  for (int j = 1; j <= n; ++j) m.cell(image[j - 1], j) = 1;
  m.trim();
  return m;
}

SubstMatrix SubstMatrix::row_vector(const std::vector<Rational>& v) {
  int n = std::max<int>(1, static_cast<int>(v.size()));
  SubstMatrix m = raw(n);
  for (int j = 1; j <= n; ++j) m.cell(1, j) = 0;
  for (int j = 1; j <= static_cast<int>(v.size()); ++j) m.cell(1, j) = v[j - 1];
  m.trim();
  return m;
}

Rational SubstMatrix::at(int i, int j) const {
  if (i <= dim_ && j <= dim_) return cell(i, j);
  return i == j ? Rational(1) : Rational(0);
}

std::vector<Rational> SubstMatrix::row(int i, int n) const {
  std::vector<Rational> r(n);
  for (int j = 1; j <= n; ++j) r[j - 1] = at(i, j);
  return r;
}

bool SubstMatrix::row_is_zero(int i) const {
  if (i > dim_) return false;
  for (int j = 1; j <= dim_; ++j)
    if (cell(i, j) != 0) return false;
  return true;
}

bool SubstMatrix::column_is_zero(int j) const {
  if (j > dim_) return false;
  for (int i = 1; i <= dim_; ++i)
    if (cell(i, j) != 0) return false;
  return true;
}

bool SubstMatrix::is_eliminant_at(int i) const {
  for (int r = 1; r <= dim_; ++r)
    for (int c = 1; c <= dim_; ++c) {
      if (r == c) {
        if (cell(r, c) != 1) return false;
      } else if (!(c == i && r > i)) {
        if (cell(r, c) != 0) return false;
      }
    }
  return true;
}

SparseVec SubstMatrix::eliminant_tail(int i) const {
  SparseVec w;
  for (int r = i + 1; r <= dim_; ++r)
    if (cell(r, i) != 0) w[r] = cell(r, i);
  return w;
}

SubstMatrix SubstMatrix::cutoff(int n) const {
  if (n >= dim_) return *this;
  SubstMatrix m = raw(dim_);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= dim_; ++j) m.cell(i, j) = cell(i, j);
  m.trim();
  return m;
}

std::optional<SubstMatrix::Pivot> SubstMatrix::pivot_decompose(int j) const {
  int pivot = 0;
  for (int i = 1; i <= std::max(dim_, j); ++i) {
    if (at(i, j) != 0) {
      pivot = i;
      break;
    }
  }
  if (pivot == 0) return std::nullopt;
  Pivot p;
  p.row = pivot;
  Rational mij = at(pivot, j);
  for (int k = pivot + 1; k <= dim_; ++k)
    if (at(k, j) != 0) p.l[k] = at(k, j) / mij;
  p.reduced = compose(eliminant_inverse(pivot, p.l), *this);
  return p;
}

bool SubstMatrix::operator<(const SubstMatrix& o) const {
  if (dim_ != o.dim_) return dim_ < o.dim_;
  for (size_t i = 0; i < a_.size(); ++i) {
    int c = cmp(a_[i], o.a_[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string SubstMatrix::to_string() const {
  int n = std::max(dim_, 1);
  std::ostringstream os;
  os << "[";
  for (int i = 1; i <= n; ++i) {
    os << (i > 1 ? ",[" : "[");
    for (int j = 1; j <= n; ++j) os << (j > 1 ? "," : "") << rbhier::to_string(at(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

SubstMatrix compose(const SubstMatrix& m, const SubstMatrix& n) {
  int d = std::max(m.dim_, n.dim_);
  SubstMatrix p = SubstMatrix::raw(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) {
      Rational s = 0;
      for (int k = 1; k <= d; ++k) s += m.at(i, k) * n.at(k, j);
      p.cell(i, j) = s;
    }
  p.trim();
  return p;
}

SparseVec eliminant_commute(int j, const SparseVec& u, int i, const SparseVec& w) {
  if (i >= j) throw std::invalid_argument("eliminant_commute: requires i < j");
  auto get = [](const SparseVec& v, int r) {
    auto it = v.find(r);
    return it == v.end() ? Rational(0) : it->second;
  };
  Rational wj = get(w, j);
  SparseVec out = w;
  for (const auto& [r, ur] : u) {
    Rational val = get(out, r) + ur * wj;
    if (val == 0)
      out.erase(r);
    else
      out[r] = val;
  }
  return out;
}

}  // namespace rbhier
