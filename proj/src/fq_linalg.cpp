#include "bedard/fq_linalg.hpp"

#include <algorithm>

#include "bedard/error.hpp"

namespace bedard {

Matrix Matrix::identity(int n) {
  Matrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<int> Matrix::row(int i) const {
  return {a.begin() + static_cast<std::ptrdiff_t>(i) * cols, a.begin() + static_cast<std::ptrdiff_t>(i + 1) * cols};
}

Matrix mat_mul(const FqField& f, const Matrix& x, const Matrix& y) {
  if (x.cols != y.rows) throw DimensionMismatch("matrix product shape mismatch");
  Matrix out(x.rows, y.cols);
  for (int i = 0; i < x.rows; ++i)
    for (int k = 0; k < x.cols; ++k) {
      const int c = x.at(i, k);
      if (c == 0) continue;
      for (int j = 0; j < y.cols; ++j) out.at(i, j) = f.add(out.at(i, j), f.mul(c, y.at(k, j)));
    }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols, m.rows);
  for (int i = 0; i < m.rows; ++i)
    for (int j = 0; j < m.cols; ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Matrix rref(const FqField& f, Matrix m) {
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pivot = -1;
    for (int i = r; i < m.rows; ++i)
      if (m.at(i, c) != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    for (int j = 0; j < m.cols; ++j) std::swap(m.at(r, j), m.at(pivot, j));
    const int s = f.inv(m.at(r, c));
    for (int j = 0; j < m.cols; ++j) m.at(r, j) = f.mul(m.at(r, j), s);
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c) == 0) continue;
      const int factor = m.at(i, c);
      for (int j = 0; j < m.cols; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(r, j)));
    }
    ++r;
  }
  m.rows = r;
  m.a.resize(static_cast<std::size_t>(r) * m.cols);
  return m;
}

int rank_of(const FqField& f, Matrix m) { return rref(f, std::move(m)).rows; }

bool is_invertible(const FqField& f, const Matrix& m) { return m.rows == m.cols && rank_of(f, m) == m.rows; }

Matrix mat_inverse(const FqField& f, const Matrix& m) {
  if (m.rows != m.cols) throw DimensionMismatch("inverse of a non-square matrix");
  const int n = m.rows;
  Matrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = 1;
  }
  const Matrix red = rref(f, aug);
  if (red.rows != n) throw Error("matrix is singular");
  for (int i = 0; i < n; ++i)
    if (red.at(i, i) != 1) throw Error("matrix is singular");
  Matrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = red.at(i, n + j);
  return inv;
}

Matrix frobenius(const FqField& f, const Matrix& m, int power) {
  Matrix out = m;
  for (int& x : out.a) x = f.frobenius(x, power);
  return out;
}

long long matrix_code(const FqField& f, const Matrix& m) {
  long long code = 0;
  for (int x : m.a) code = code * f.size() + x;
  return code;
}

Matrix matrix_from_code(const FqField& f, int n, long long code) {
  Matrix m(n, n);
  for (int i = n * n - 1; i >= 0; --i) {
    m.a[i] = static_cast<int>(code % f.size());
    code /= f.size();
  }
  return m;
}

std::string format_matrix(const Matrix& m) {
  std::string out = "[";
  for (int i = 0; i < m.rows; ++i) {
    out += i ? ",[" : "[";
    for (int j = 0; j < m.cols; ++j) out += (j ? "," : "") + std::to_string(m.at(i, j));
    out += "]";
  }
  return out + "]";
}

Subspace Subspace::span(const FqField& f, const Matrix& rows) {
  Subspace s;
  s.ambient_ = rows.cols;
  s.basis_ = rref(f, rows);
  return s;
}

Subspace Subspace::span(const FqField& f, int ambient, const std::vector<std::vector<int>>& vectors) {
  Matrix m(static_cast<int>(vectors.size()), ambient);
  for (int i = 0; i < m.rows; ++i) {
    if (static_cast<int>(vectors[i].size()) != ambient) throw DimensionMismatch("vector length mismatch");
    for (int j = 0; j < ambient; ++j) m.at(i, j) = vectors[i][j];
  }
  return span(f, m);
}

Subspace Subspace::zero(int ambient) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

Subspace Subspace::whole(int ambient) { return standard(ambient, ambient); }

Subspace Subspace::standard(int ambient, int d) {
  Subspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(d, ambient);
  for (int i = 0; i < d; ++i) s.basis_.at(i, i) = 1;
  return s;
}

bool Subspace::contains_vector(const FqField& f, const std::vector<int>& v) const {
  Matrix m = basis_;
  m.rows += 1;
  m.a.insert(m.a.end(), v.begin(), v.end());
  return rank_of(f, std::move(m)) == dim();
}

bool Subspace::contains(const FqField& f, const Subspace& other) const {
  if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces of different ambient spaces");
  if (other.dim() > dim()) return false;
  return sum(f, *this, other).dim() == dim();
}

Subspace sum(const FqField& f, const Subspace& x, const Subspace& y) {
  if (x.ambient() != y.ambient()) throw DimensionMismatch("subspaces of different ambient spaces");
  Matrix m = x.basis();
  m.rows += y.basis().rows;
  m.a.insert(m.a.end(), y.basis().a.begin(), y.basis().a.end());
  return Subspace::span(f, m);
}

Subspace orthogonal(const FqField& f, const Subspace& s) {
  const int n = s.ambient();
  const Matrix& b = s.basis();
  std::vector<int> pivots;
  std::vector<bool> is_pivot(n, false);
  for (int i = 0; i < b.rows; ++i)
    for (int j = 0; j < n; ++j)
      if (b.at(i, j) != 0) {
        pivots.push_back(j);
        is_pivot[j] = true;
        break;
      }
  // Null space of an RREF matrix: one vector per free column.
  std::vector<std::vector<int>> vectors;
  for (int c = 0; c < n; ++c) {
    if (is_pivot[c]) continue;
    std::vector<int> v(n, 0);
    v[c] = 1;
    for (int i = 0; i < b.rows; ++i) v[pivots[i]] = f.neg(b.at(i, c));
    vectors.push_back(std::move(v));
  }
  return Subspace::span(f, n, vectors);
}

Subspace intersect(const FqField& f, const Subspace& x, const Subspace& y) {
  return orthogonal(f, sum(f, orthogonal(f, x), orthogonal(f, y)));
}

Subspace apply(const FqField& f, const Matrix& g, const Subspace& s) {
  if (g.cols != s.ambient()) throw DimensionMismatch("matrix does not act on this space");
  return Subspace::span(f, mat_mul(f, s.basis(), transpose(g)));
}

Subspace frobenius(const FqField& f, const Subspace& s, int power) {
  return Subspace::span(f, frobenius(f, s.basis(), power));
}

std::vector<Subspace> enumerate_subspaces(const FqField& f, int n, int d) {
  std::vector<Subspace> out;
  if (d < 0 || d > n) return out;
  std::vector<int> pivots(static_cast<std::size_t>(d));
  // Every RREF matrix of rank d arises once from a pivot set and a choice of
  // the free entries to the right of each pivot.
  auto choose = [&](auto&& self, int idx, int start) -> void {
    if (idx == d) {
      std::vector<std::pair<int, int>> free;
      for (int i = 0; i < d; ++i)
        for (int c = pivots[i] + 1; c < n; ++c)
          if (std::find(pivots.begin(), pivots.end(), c) == pivots.end()) free.emplace_back(i, c);
      std::vector<int> digits(free.size(), 0);
      while (true) {
        Matrix m(d, n);
        for (int i = 0; i < d; ++i) m.at(i, pivots[i]) = 1;
        for (std::size_t t = 0; t < free.size(); ++t) m.at(free[t].first, free[t].second) = digits[t];
        out.push_back(Subspace::span(f, m));
        std::size_t t = 0;
        while (t < digits.size() && ++digits[t] == f.size()) digits[t++] = 0;
        if (t == digits.size()) break;
      }
      return;
    }
    for (int c = start; c <= n - (d - idx); ++c) {
      pivots[idx] = c;
      self(self, idx + 1, c + 1);
    }
  };
  choose(choose, 0, 0);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bedard
