#include <sstream>

#include "axtk/matrix.hpp"

namespace axtk {

Vec vec_add(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw ArithmeticError("vector size mismatch");
  Vec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] + v[i];
  return r;
}

Vec vec_sub(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) throw ArithmeticError("vector size mismatch");
  Vec r(u.size());
  for (size_t i = 0; i < u.size(); ++i) r[i] = u[i] - v[i];
  return r;
}

Vec vec_scale(const Scalar& c, const Vec& v) {
  Vec r(v.size());
  for (size_t i = 0; i < v.size(); ++i) r[i] = c * v[i];
  return r;
}

bool vec_is_zero(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

Vec zero_vec(size_t n) { return Vec(n); }

Vec unit_vec(size_t n, size_t i) {
  Vec v(n);
  v[i] = Scalar(1);
  return v;
}

int vec_cmp(const Vec& u, const Vec& v) {
  if (u.size() != v.size()) return u.size() < v.size() ? -1 : 1;
  for (size_t i = 0; i < u.size(); ++i) {
    const int c = u[i].cmp(v[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::string vec_str(const Vec& v) {
  std::ostringstream os;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) os << ' ';
    os << v[i];
  }
  return os.str();
}

Matrix Matrix::identity(size_t n) {
  Matrix m(n, n);
  for (size_t i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols) {
  if (cols.empty()) return Matrix(0, 0);
  Matrix m(cols[0].size(), cols.size());
  for (size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != m.rows()) throw ArithmeticError("ragged column list");
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, j) = cols[j][i];
  }
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
  if (rows.empty()) return Matrix(0, 0);
  Matrix m(rows.size(), rows[0].size());
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw ArithmeticError("ragged row list");
    for (size_t j = 0; j < m.cols(); ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw ArithmeticError("matrix product shape mismatch");
  Matrix r(rows_, o.cols_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t k = 0; k < cols_; ++k) {
      const Scalar& x = at(i, k);
      if (x.is_zero()) continue;
      for (size_t j = 0; j < o.cols_; ++j) {
        if (o.at(k, j).is_zero()) continue;
        r.at(i, j) += x * o.at(k, j);
      }
    }
  return r;
}

Matrix Matrix::operator+(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArithmeticError("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
  return r;
}

Matrix Matrix::operator-(const Matrix& o) const {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw ArithmeticError("matrix shape mismatch");
  Matrix r(rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

Vec Matrix::apply(const Vec& v) const {
  if (v.size() != cols_) throw ArithmeticError("matrix apply shape mismatch");
  Vec r(rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) {
      if (at(i, j).is_zero() || v[j].is_zero()) continue;
      r[i] += at(i, j) * v[j];
    }
  return r;
}

Matrix Matrix::transpose() const {
  Matrix r(cols_, rows_);
  for (size_t i = 0; i < rows_; ++i)
    for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
  return r;
}

Vec Matrix::row(size_t r) const {
  Vec v(cols_);
  for (size_t j = 0; j < cols_; ++j) v[j] = at(r, j);
  return v;
}

Vec Matrix::col(size_t c) const {
  Vec v(rows_);
  for (size_t i = 0; i < rows_; ++i) v[i] = at(i, c);
  return v;
}

std::vector<size_t> rref_in_place(Matrix& m) {
  std::vector<size_t> pivots;
  size_t r = 0;
  for (size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    size_t p = r;
    while (p < m.rows() && m.at(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != r)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(p, j), m.at(r, j));
    const Scalar piv = m.at(r, c).inv();
    for (size_t j = c; j < m.cols(); ++j) m.at(r, j) = piv * m.at(r, j);
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      const Scalar f = m.at(i, c);
      for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

namespace {

// Fraction-free Bareiss rank over the integers; rows were pre-scaled by
// positive denominators so the rank is that of the original matrix.
size_t bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  if (m.empty()) return 0;
  const size_t rows = m.size(), cols = m[0].size();
  mpz_class prev(1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t p = r;
    while (p < rows && m[p][c] == 0) ++p;
    if (p == rows) continue;
    if (p != r) std::swap(m[p], m[r]);
    for (size_t i = r + 1; i < rows; ++i) {
      for (size_t j = c + 1; j < cols; ++j) {
        mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = t;
      }
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

// Row-wise integer scaling of a rational matrix (nullopt if any entry lies
// in an extension field).
std::optional<std::vector<std::vector<mpz_class>>> integer_scaled(const Matrix& m) {
  std::vector<std::vector<mpz_class>> z(m.rows(), std::vector<mpz_class>(m.cols()));
  for (size_t i = 0; i < m.rows(); ++i) {
    mpz_class l(1);
    for (size_t j = 0; j < m.cols(); ++j) {
      if (!m.at(i, j).is_rational()) return std::nullopt;
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).rat_part().get_den().get_mpz_t());
    }
    for (size_t j = 0; j < m.cols(); ++j) {
      const mpq_class& q = m.at(i, j).rat_part();
      z[i][j] = q.get_num() * (l / q.get_den());
    }
  }
  return z;
}

}  // namespace

size_t rank(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  if (auto z = integer_scaled(m)) return bareiss_rank(std::move(*z));
  Matrix c = m;
  return rref_in_place(c).size();
}

Scalar det(const Matrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("determinant of a non-square matrix");
  const size_t n = m.rows();
  Matrix a = m;
  Scalar d(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a.at(p, c).is_zero()) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      for (size_t j = 0; j < n; ++j) std::swap(a.at(p, j), a.at(c, j));
      d = -d;
    }
    d *= a.at(c, c);
    const Scalar piv = a.at(c, c).inv();
    for (size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      const Scalar f = a.at(i, c) * piv;
      for (size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return d;
}

std::vector<Vec> kernel_basis(const Matrix& m) {
  Matrix r = m;
  const std::vector<size_t> pivots = rref_in_place(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    Vec v(m.cols());
    v[f] = Scalar(1);
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  if (b.size() != a.rows()) throw ArithmeticError("solve shape mismatch");
  Matrix aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug.at(i, j) = a.at(i, j);
    aug.at(i, a.cols()) = b[i];
  }
  const std::vector<size_t> pivots = rref_in_place(aug);
  if (!pivots.empty() && pivots.back() == a.cols()) return std::nullopt;
  Vec x(a.cols());
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug.at(i, a.cols());
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("inverse of a non-square matrix");
  const size_t n = m.rows();
  Matrix aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, n + i) = Scalar(1);
  }
  auto pivots = rref_in_place(aug);
  // A singular left block pushes pivots into the identity half.
  if (pivots.size() != n || pivots.back() >= n) return std::nullopt;
  Matrix inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv.at(i, j) = aug.at(i, n + j);
  return inv;
}

bool is_positive_definite(const Matrix& m) {
  if (m.rows() != m.cols()) throw ArithmeticError("positive-definiteness of a non-square matrix");
  const size_t n = m.rows();
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (!m.at(i, j).is_rational())
        throw ArithmeticError("positive-definiteness over an extension field is not supported");
      if (m.at(i, j) != m.at(j, i)) throw ArithmeticError("matrix is not symmetric");
    }
  // Gaussian elimination without row swaps: the k-th pivot is the ratio of
  // consecutive leading principal minors, so all pivots positive is exactly
  // Sylvester's criterion.
  Matrix a = m;
  for (size_t c = 0; c < n; ++c) {
    if (a.at(c, c).is_rational() && a.at(c, c).sgn() <= 0) return false;
    const Scalar piv = a.at(c, c).inv();
    for (size_t i = c + 1; i < n; ++i) {
      if (a.at(i, c).is_zero()) continue;
      const Scalar f = a.at(i, c) * piv;
      for (size_t j = c; j < n; ++j) a.at(i, j) -= f * a.at(c, j);
    }
  }
  return true;
}

SubspaceBasis span_of(const std::vector<Vec>& vectors, size_t ambient_dim) {
  for (const Vec& v : vectors)
    if (v.size() != ambient_dim) throw ArithmeticError("span: vector dimension mismatch");
  if (vectors.empty()) return SubspaceBasis{};
  Matrix m = Matrix::from_rows(vectors);
  const size_t r = rref_in_place(m).size();
  SubspaceBasis b;
  for (size_t i = 0; i < r; ++i) b.vectors.push_back(m.row(i));
  return b;
}

bool subspace_contains(const SubspaceBasis& b, const Vec& v) {
  // Reduce v by the echelonized rows.
  Vec w = v;
  for (const Vec& row : b.vectors) {
    size_t lead = 0;
    while (lead < row.size() && row[lead].is_zero()) ++lead;
    if (lead == row.size()) continue;
    if (!w[lead].is_zero()) w = vec_sub(w, vec_scale(w[lead], row));
  }
  return vec_is_zero(w);
}

std::optional<Vec> coords_in(const SubspaceBasis& b, const Vec& v) {
  if (b.vectors.empty()) return vec_is_zero(v) ? std::optional<Vec>(Vec{}) : std::nullopt;
  return solve(Matrix::from_columns(b.vectors), v);
}

SubspaceBasis intersect(const SubspaceBasis& x, const SubspaceBasis& y, size_t ambient_dim) {
  if (x.vectors.empty() || y.vectors.empty()) return SubspaceBasis{};
  // Zassenhaus-style: kernel of [X^T | Y^T] stacked; a combination of x-rows
  // equal to a combination of y-rows is a point of the intersection.
  Matrix m(ambient_dim, x.dim() + y.dim());
  for (size_t j = 0; j < x.dim(); ++j)
    for (size_t i = 0; i < ambient_dim; ++i) m.at(i, j) = x.vectors[j][i];
  for (size_t j = 0; j < y.dim(); ++j)
    for (size_t i = 0; i < ambient_dim; ++i) m.at(i, x.dim() + j) = -y.vectors[j][i];
  std::vector<Vec> pts;
  for (const Vec& k : kernel_basis(m)) {
    Vec p(ambient_dim);
    for (size_t j = 0; j < x.dim(); ++j)
      if (!k[j].is_zero()) p = vec_add(p, vec_scale(k[j], x.vectors[j]));
    pts.push_back(std::move(p));
  }
  return span_of(pts, ambient_dim);
}

}  // namespace axtk
