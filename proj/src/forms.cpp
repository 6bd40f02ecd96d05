#include "axtk/forms.hpp"

namespace axtk {

namespace {
size_t tri_index(size_t i, size_t j) {
  if (i > j) std::swap(i, j);
  return j * (j + 1) / 2 + i;
}
}  // namespace

std::vector<Matrix> frobenius_space(const Algebra& alg) {
  const size_t n = alg.dim();
  const size_t t = n * (n + 1) / 2;
  // One equation per ordered triple (i, j, k): (b_i b_j, b_k) = (b_i, b_j b_k).
  std::vector<Vec> rows;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      for (size_t k = 0; k < n; ++k) {
        Vec row(t);
        const Vec& left = alg.basis_product(i, j);
        for (size_t r = 0; r < n; ++r)
          if (!left[r].is_zero()) row[tri_index(r, k)] += left[r];
        const Vec& right = alg.basis_product(j, k);
        for (size_t r = 0; r < n; ++r)
          if (!right[r].is_zero()) row[tri_index(i, r)] -= right[r];
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
  std::vector<Vec> sols;
  if (rows.empty()) {
    for (size_t v = 0; v < t; ++v) sols.push_back(unit_vec(t, v));
  } else {
    sols = kernel_basis(Matrix::from_rows(rows));
  }
  std::vector<Matrix> grams;
  for (const Vec& s : sols) {
    Matrix g(n, n);
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) g.at(i, j) = s[tri_index(i, j)];
    grams.push_back(std::move(g));
  }
  return grams;
}

SubspaceBasis orthogonal_complement(const Algebra& alg, const SubspaceBasis& u) {
  if (!alg.has_form()) throw FormsError("orthogonal complement needs a form");
  const size_t n = alg.dim();
  if (u.dim() == 0) {
    SubspaceBasis full;
    for (size_t i = 0; i < n; ++i) full.vectors.push_back(unit_vec(n, i));
    return full;
  }
  const Matrix g = alg.gram();
  std::vector<Vec> rows;
  for (const Vec& w : u.vectors) rows.push_back(g.apply(w));
  SubspaceBasis comp;
  comp.vectors = kernel_basis(Matrix::from_rows(rows));
  if (intersect(u, comp, n).dim() != 0)
    throw FormsError("form is degenerate on the subspace");
  return comp;
}

}  // namespace axtk
