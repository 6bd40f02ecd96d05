#pragma once

#include <optional>
#include <vector>

#include "axtk/scalar.hpp"

namespace axtk {

using Vec = std::vector<Scalar>;

Vec vec_add(const Vec& u, const Vec& v);
Vec vec_sub(const Vec& u, const Vec& v);
Vec vec_scale(const Scalar& c, const Vec& v);
bool vec_is_zero(const Vec& v);
Vec zero_vec(size_t n);
Vec unit_vec(size_t n, size_t i);
// Deterministic lexicographic comparison via Scalar::cmp.
int vec_cmp(const Vec& u, const Vec& v);
std::string vec_str(const Vec& v);

// Dense matrix of exact scalars, row-major.
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  static Matrix identity(size_t n);
  static Matrix from_columns(const std::vector<Vec>& cols);
  static Matrix from_rows(const std::vector<Vec>& rows);

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t r, size_t c) { return a_[r * cols_ + c]; }
  const Scalar& at(size_t r, size_t c) const { return a_[r * cols_ + c]; }

  Matrix operator*(const Matrix& o) const;
  Matrix operator+(const Matrix& o) const;
  Matrix operator-(const Matrix& o) const;
  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  Vec apply(const Vec& v) const;  // matrix * column vector
  Matrix transpose() const;
  Vec row(size_t r) const;
  Vec col(size_t c) const;

 private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Reduced row echelon form, computed deterministically: columns scanned left
// to right, pivot = first row with a nonzero entry, pivots normalized to 1,
// elimination above and below.  Returns the pivot columns.
std::vector<size_t> rref_in_place(Matrix& m);

size_t rank(const Matrix& m);
Scalar det(const Matrix& m);

// Canonical kernel basis: one vector per free column (ascending), with 1 in
// the free coordinate.
std::vector<Vec> kernel_basis(const Matrix& m);

// One solution of A x = b, if any (the one with all free coordinates 0).
std::optional<Vec> solve(const Matrix& a, const Vec& b);
std::optional<Matrix> inverse(const Matrix& m);

// Sylvester criterion via division-free pivots; requires a symmetric matrix
// with rational entries (extension entries are an error).
bool is_positive_definite(const Matrix& m);

// Echelonized subspace: vectors form the canonical RREF basis of their span.
struct SubspaceBasis {
  std::vector<Vec> vectors;
  size_t dim() const { return vectors.size(); }
};

SubspaceBasis span_of(const std::vector<Vec>& vectors, size_t ambient_dim);
bool subspace_contains(const SubspaceBasis& b, const Vec& v);
// Coordinates of v in the basis, if v lies in the span.
std::optional<Vec> coords_in(const SubspaceBasis& b, const Vec& v);
SubspaceBasis intersect(const SubspaceBasis& x, const SubspaceBasis& y, size_t ambient_dim);

}  // namespace axtk
