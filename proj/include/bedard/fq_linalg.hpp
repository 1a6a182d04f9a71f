#pragma once

#include <compare>
#include <string>
#include <vector>

#include "bedard/field.hpp"

namespace bedard {

/// Dense matrix over an FqField, row-major.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<int> a;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
  static Matrix identity(int n);

  int& at(int i, int j) { return a[static_cast<std::size_t>(i) * cols + j]; }
  int at(int i, int j) const { return a[static_cast<std::size_t>(i) * cols + j]; }
  std::vector<int> row(int i) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;
  friend auto operator<=>(const Matrix&, const Matrix&) = default;
};

Matrix mat_mul(const FqField& f, const Matrix& x, const Matrix& y);
Matrix transpose(const Matrix& m);
/// Throws Error if singular.
Matrix mat_inverse(const FqField& f, const Matrix& m);
int rank_of(const FqField& f, Matrix m);
bool is_invertible(const FqField& f, const Matrix& m);
/// Entrywise x -> x^(p^power).
Matrix frobenius(const FqField& f, const Matrix& m, int power);

/// Row-major base-|F| code of a square matrix: the first entry is the most
/// significant digit, so codes order matrices lexicographically.
long long matrix_code(const FqField& f, const Matrix& m);
Matrix matrix_from_code(const FqField& f, int n, long long code);
/// "[[1,0],[0,1]]"
std::string format_matrix(const Matrix& m);

/// Subspace of F^n, stored as the nonzero rows of its reduced row-echelon
/// basis, so equal subspaces have identical representations.
class Subspace {
 public:
  Subspace() = default;
  /// Span of the rows of `rows`.
  static Subspace span(const FqField& f, const Matrix& rows);
  static Subspace span(const FqField& f, int ambient, const std::vector<std::vector<int>>& vectors);
  static Subspace zero(int ambient);
  static Subspace whole(int ambient);
  /// span(e_0, ..., e_{d-1})
  static Subspace standard(int ambient, int d);

  int ambient() const { return ambient_; }
  int dim() const { return basis_.rows; }
  const Matrix& basis() const { return basis_; }

  bool contains_vector(const FqField& f, const std::vector<int>& v) const;
  bool contains(const FqField& f, const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace& x, const Subspace& y) {
    if (auto c = x.ambient_ <=> y.ambient_; c != 0) return c;
    return x.basis_ <=> y.basis_;
  }

 private:
  int ambient_ = 0;
  Matrix basis_;
};

/// Reduced row-echelon form with zero rows removed.
Matrix rref(const FqField& f, Matrix m);
Subspace sum(const FqField& f, const Subspace& x, const Subspace& y);
Subspace intersect(const FqField& f, const Subspace& x, const Subspace& y);
/// {v : v . x = 0 for x in s} under the standard dot product.
Subspace orthogonal(const FqField& f, const Subspace& s);
/// Image g(s), vectors treated as columns.
Subspace apply(const FqField& f, const Matrix& g, const Subspace& s);
Subspace frobenius(const FqField& f, const Subspace& s, int power);
/// All subspaces of F^n of dimension d, in increasing order.
std::vector<Subspace> enumerate_subspaces(const FqField& f, int n, int d);

}  // namespace bedard
