#include "axtk/algebra.hpp"

#include <algorithm>
#include <set>

namespace axtk {

Algebra::Algebra(std::vector<std::string> basis_names, FieldPtr field)
    : names_(std::move(basis_names)), field_(std::move(field)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (n.empty()) throw AlgebraError("empty basis name");
    if (!seen.insert(n).second) throw AlgebraError("duplicate basis name '" + n + "'");
  }
  const size_t t = names_.size() * (names_.size() + 1) / 2;
  products_.resize(t);
  form_.resize(t);
  form_set_.resize(t, false);
}

size_t Algebra::tri(size_t i, size_t j) const {
  if (i > j) std::swap(i, j);
  if (j >= dim()) throw AlgebraError("basis index out of range");
  return j * (j + 1) / 2 + i;
}

size_t Algebra::index_of(const std::string& name) const {
  for (size_t i = 0; i < names_.size(); ++i)
    if (names_[i] == name) return i;
  throw AlgebraError("unknown basis name '" + name + "'");
}

void Algebra::set_product(size_t i, size_t j, Vec p) {
  if (p.size() != dim()) throw AlgebraError("product vector has wrong dimension");
  Vec& slot = products_[tri(i, j)];
  if (!slot.empty()) {
    if (vec_cmp(slot, p) != 0)
      throw AlgebraError("conflicting products for basis pair (" + names_[i] + ", " +
                         names_[j] + ")");
    return;
  }
  slot = std::move(p);
}

bool Algebra::product_set(size_t i, size_t j) const { return !products_[tri(i, j)].empty(); }

const Vec& Algebra::basis_product(size_t i, size_t j) const {
  const Vec& p = products_[tri(i, j)];
  if (p.empty())
    throw AlgebraError("product of basis pair (" + names_[i] + ", " + names_[j] +
                       ") is not defined");
  return p;
}

void Algebra::check_complete() const {
  for (size_t j = 0; j < dim(); ++j)
    for (size_t i = 0; i <= j; ++i) (void)basis_product(i, j);
}

bool Algebra::form_complete() const {
  if (!has_form_) return false;
  for (bool s : form_set_)
    if (!s) return false;
  return true;
}

void Algebra::set_form_entry(size_t i, size_t j, Scalar v) {
  const size_t t = tri(i, j);
  if (form_set_[t] && form_[t] != v)
    throw AlgebraError("conflicting form values for basis pair (" + names_[i] + ", " +
                       names_[j] + ")");
  form_[t] = std::move(v);
  form_set_[t] = true;
  has_form_ = true;
}

const Scalar& Algebra::form_entry(size_t i, size_t j) const {
  if (!has_form_) throw AlgebraError("algebra carries no form");
  return form_[tri(i, j)];
}

Matrix Algebra::gram() const {
  if (!has_form_) throw AlgebraError("algebra carries no form");
  Matrix g(dim(), dim());
  for (size_t i = 0; i < dim(); ++i)
    for (size_t j = 0; j < dim(); ++j) g.at(i, j) = form_[tri(i, j)];
  return g;
}

void Algebra::clear_form() {
  std::fill(form_.begin(), form_.end(), Scalar());
  std::fill(form_set_.begin(), form_set_.end(), false);
  has_form_ = false;
}

Vec Algebra::multiply(const Vec& u, const Vec& v) const {
  if (u.size() != dim() || v.size() != dim())
    throw AlgebraError("multiply: vector dimension mismatch");
  Vec r(dim());
  for (size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      const Scalar c = u[i] * v[j];
      const Vec& p = basis_product(i, j);
      for (size_t k = 0; k < dim(); ++k)
        if (!p[k].is_zero()) r[k] += c * p[k];
    }
  }
  return r;
}

Scalar Algebra::form(const Vec& u, const Vec& v) const {
  if (!has_form_) throw AlgebraError("algebra carries no form");
  if (u.size() != dim() || v.size() != dim())
    throw AlgebraError("form: vector dimension mismatch");
  Scalar r;
  for (size_t i = 0; i < dim(); ++i) {
    if (u[i].is_zero()) continue;
    for (size_t j = 0; j < dim(); ++j) {
      if (v[j].is_zero()) continue;
      r += u[i] * v[j] * form_[tri(i, j)];
    }
  }
  return r;
}

Matrix adjoint_matrix(const Algebra& alg, const Vec& a) {
  const size_t n = alg.dim();
  if (a.size() != n) throw AlgebraError("adjoint: vector dimension mismatch");
  Matrix m(n, n);
  for (size_t j = 0; j < n; ++j) {
    const Vec col = alg.multiply(a, unit_vec(n, j));
    for (size_t i = 0; i < n; ++i) m.at(i, j) = col[i];
  }
  return m;
}

SubspaceBasis eigenspace(const Algebra& alg, const Vec& a, const Scalar& lambda) {
  Matrix m = adjoint_matrix(alg, a);
  for (size_t i = 0; i < alg.dim(); ++i) m.at(i, i) -= lambda;
  SubspaceBasis b;
  b.vectors = kernel_basis(m);
  return b;
}

std::optional<Vec> identity_of(const Algebra& alg) {
  const size_t n = alg.dim();
  if (n == 0) return std::nullopt;
  // e * b_i = b_i for all i: stack the systems sum_k e_k (b_k b_i) = b_i.
  Matrix m(n * n, n);
  Vec rhs(n * n);
  for (size_t i = 0; i < n; ++i)
    for (size_t k = 0; k < n; ++k) {
      const Vec& p = alg.basis_product(k, i);
      for (size_t r = 0; r < n; ++r) m.at(i * n + r, k) = p[r];
      rhs[i * n + i] = Scalar(1);
    }
  return solve(m, rhs);
}

std::pair<SubspaceBasis, size_t> subalgebra_generated(const Algebra& alg,
                                                      const std::vector<Vec>& gens) {
  for (const Vec& g : gens)
    if (g.size() != alg.dim()) throw AlgebraError("generator dimension mismatch");
  SubspaceBasis current = span_of(gens, alg.dim());
  if (current.dim() == 0) return {current, 0};
  size_t degree = 1;
  while (true) {
    std::vector<Vec> next = current.vectors;
    for (size_t i = 0; i < current.dim(); ++i)
      for (size_t j = i; j < current.dim(); ++j)
        next.push_back(alg.multiply(current.vectors[i], current.vectors[j]));
    SubspaceBasis grown = span_of(next, alg.dim());
    if (grown.dim() == current.dim()) break;
    current = std::move(grown);
    ++degree;
  }
  return {current, degree};
}

Algebra direct_sum(const Algebra& a, const Algebra& b) {
  if (a.field() && b.field() && !a.field()->same(*b.field()))
    throw AlgebraError("direct sum of algebras over different extensions");
  const FieldPtr field = a.field() ? a.field() : b.field();
  std::vector<std::string> names = a.basis_names();
  const std::set<std::string> taken(names.begin(), names.end());
  for (const auto& n : b.basis_names()) {
    std::string m = n;
    while (taken.count(m)) m += "'";
    names.push_back(m);
  }
  Algebra s(names, field);
  const size_t da = a.dim(), n = da + b.dim();
  auto lift_a = [&](const Vec& v) {
    Vec r(n);
    for (size_t k = 0; k < da; ++k) r[k] = v[k];
    return r;
  };
  auto lift_b = [&](const Vec& v) {
    Vec r(n);
    for (size_t k = 0; k < v.size(); ++k) r[da + k] = v[k];
    return r;
  };
  for (size_t j = 0; j < da; ++j)
    for (size_t i = 0; i <= j; ++i) s.set_product(i, j, lift_a(a.basis_product(i, j)));
  for (size_t j = 0; j < b.dim(); ++j)
    for (size_t i = 0; i <= j; ++i)
      s.set_product(da + i, da + j, lift_b(b.basis_product(i, j)));
  for (size_t i = 0; i < da; ++i)
    for (size_t j = 0; j < b.dim(); ++j) s.set_product(i, da + j, zero_vec(n));
  if (a.has_form() && b.has_form()) {
    for (size_t j = 0; j < da; ++j)
      for (size_t i = 0; i <= j; ++i) s.set_form_entry(i, j, a.form_entry(i, j));
    for (size_t j = 0; j < b.dim(); ++j)
      for (size_t i = 0; i <= j; ++i) s.set_form_entry(da + i, da + j, b.form_entry(i, j));
    for (size_t i = 0; i < da; ++i)
      for (size_t j = 0; j < b.dim(); ++j) s.set_form_entry(i, da + j, Scalar(0));
  }
  return s;
}

Algebra subalgebra_view(const Algebra& alg, const SubspaceBasis& u,
                        const std::string& name_prefix) {
  std::vector<std::string> names;
  for (size_t i = 0; i < u.dim(); ++i) names.push_back(name_prefix + std::to_string(i));
  Algebra v(names, alg.field());
  for (size_t j = 0; j < u.dim(); ++j)
    for (size_t i = 0; i <= j; ++i) {
      const Vec p = alg.multiply(u.vectors[i], u.vectors[j]);
      const auto c = coords_in(u, p);
      if (!c)
        throw AlgebraError("subspace is not product-closed: basis pair (" +
                           std::to_string(i) + ", " + std::to_string(j) +
                           ") leaves the span");
      v.set_product(i, j, *c);
    }
  if (alg.has_form())
    for (size_t j = 0; j < u.dim(); ++j)
      for (size_t i = 0; i <= j; ++i)
        v.set_form_entry(i, j, alg.form(u.vectors[i], u.vectors[j]));
  return v;
}

Scalar length_of(const Algebra& alg, const Vec& v) { return alg.form(v, v); }

}  // namespace axtk
