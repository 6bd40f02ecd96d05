#include "axtk/fusion.hpp"

#include <algorithm>
#include <map>

namespace axtk {

FusionLaw::FusionLaw(std::vector<Scalar> eigenvalues,
                     std::vector<std::vector<std::set<size_t>>> table,
                     std::optional<std::vector<int>> grading)
    : eigenvalues_(std::move(eigenvalues)),
      table_(std::move(table)),
      grading_(std::move(grading)) {
  const size_t n = eigenvalues_.size();
  if (n == 0) throw FusionError("fusion law needs at least one eigenvalue");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (eigenvalues_[i] == eigenvalues_[j])
        throw FusionError("duplicate eigenvalue " + eigenvalues_[i].str());
  if (!index_of(Scalar(1))) throw FusionError("fusion law must contain eigenvalue 1");
  if (table_.size() != n) throw FusionError("fusion table has wrong size");
  for (size_t i = 0; i < n; ++i) {
    if (table_[i].size() != n) throw FusionError("fusion table has wrong size");
    for (size_t j = 0; j < n; ++j) {
      if (table_[i][j] != table_[j][i]) throw FusionError("fusion table is not symmetric");
      for (size_t k : table_[i][j])
        if (k >= n) throw FusionError("fusion table entry out of range");
    }
  }
  const size_t one = *index_of(Scalar(1));
  for (size_t k : table_[one][one])
    if (k != one) throw FusionError("1 * 1 must be contained in {1}");
  if (grading_) {
    if (grading_->size() != n) throw FusionError("grading has wrong size");
    for (int g : *grading_)
      if (g != 1 && g != -1) throw FusionError("grading values must be +1 or -1");
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j)
        for (size_t k : table_[i][j])
          if ((*grading_)[k] != (*grading_)[i] * (*grading_)[j])
            throw FusionError("grading is not a morphism of the fusion law");
  }
}

const std::set<size_t>& FusionLaw::fuse(size_t i, size_t j) const {
  if (i >= size() || j >= size()) throw FusionError("fusion index out of range");
  return table_[i][j];
}

int FusionLaw::grade(size_t i) const {
  if (!grading_) throw FusionError("fusion law has no grading");
  if (i >= size()) throw FusionError("fusion index out of range");
  return (*grading_)[i];
}

std::optional<size_t> FusionLaw::index_of(const Scalar& lambda) const {
  for (size_t i = 0; i < eigenvalues_.size(); ++i)
    if (eigenvalues_[i] == lambda) return i;
  return std::nullopt;
}

bool FusionLaw::seress() const {
  const auto zero = index_of(Scalar(0));
  if (!zero) return true;
  for (size_t j = 0; j < size(); ++j)
    for (size_t k : table_[*zero][j])
      if (k != j) return false;
  return true;
}

namespace {

// Eigenbases per law eigenvalue plus the change-of-basis data needed for
// fusion checks; only built fully when the adjoint is diagonalizable.
struct EigenData {
  std::vector<SubspaceBasis> bases;
  std::vector<size_t> dims;
  size_t total = 0;
};

EigenData eigen_data(const Algebra& alg, const Vec& a, const FusionLaw& law) {
  EigenData d;
  for (const Scalar& lam : law.eigenvalues()) {
    d.bases.push_back(eigenspace(alg, a, lam));
    d.dims.push_back(d.bases.back().dim());
    d.total += d.bases.back().dim();
  }
  return d;
}

Matrix eigenbasis_matrix(const EigenData& d, size_t dim) {
  std::vector<Vec> cols;
  for (const auto& b : d.bases)
    for (const Vec& v : b.vectors) cols.push_back(v);
  if (cols.size() != dim) throw FusionError("eigenbasis does not span");
  return Matrix::from_columns(cols);
}

}  // namespace

AxisReport check_axis(const Algebra& alg, const Vec& a, const FusionLaw& law) {
  if (a.size() != alg.dim()) throw FusionError("check_axis: vector dimension mismatch");
  if (vec_is_zero(a)) throw FusionError("check_axis: the zero vector is not an axis");
  AxisReport rep;
  rep.is_idempotent = vec_cmp(alg.multiply(a, a), a) == 0;
  const EigenData ed = eigen_data(alg, a, law);
  rep.eigen_dims = ed.dims;
  rep.missing_dim = alg.dim() - ed.total;
  const size_t one = *law.index_of(Scalar(1));
  rep.is_primitive = ed.dims[one] == 1;
  if (rep.missing_dim == 0) {
    const Matrix p = eigenbasis_matrix(ed, alg.dim());
    const auto pinv = inverse(p);
    if (!pinv) throw FusionError("eigenbasis is singular");  // unreachable
    // Block offsets per eigenvalue in the concatenated basis.
    std::vector<size_t> offset(law.size() + 1, 0);
    for (size_t t = 0; t < law.size(); ++t) offset[t + 1] = offset[t] + ed.dims[t];
    std::set<std::tuple<size_t, size_t, size_t>> seen;
    for (size_t i = 0; i < law.size(); ++i)
      for (size_t j = i; j < law.size(); ++j) {
        const auto& allowed = law.fuse(i, j);
        for (const Vec& u : ed.bases[i].vectors)
          for (const Vec& v : ed.bases[j].vectors) {
            const Vec c = pinv->apply(alg.multiply(u, v));
            for (size_t t = 0; t < law.size(); ++t) {
              if (allowed.count(t)) continue;
              bool nonzero = false;
              for (size_t k = offset[t]; k < offset[t + 1]; ++k)
                if (!c[k].is_zero()) nonzero = true;
              if (nonzero && seen.insert({i, j, t}).second)
                rep.violations.push_back({i, j, t});
            }
          }
      }
  }
  rep.is_axis = rep.is_idempotent && rep.missing_dim == 0 && rep.violations.empty();
  return rep;
}

bool is_automorphism(const Algebra& alg, const Matrix& m) {
  if (m.rows() != alg.dim() || m.cols() != alg.dim()) return false;
  if (rank(m) != alg.dim()) return false;
  const size_t n = alg.dim();
  std::vector<Vec> images(n);
  for (size_t i = 0; i < n; ++i) images[i] = m.col(i);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i; j < n; ++j) {
      const Vec lhs = m.apply(alg.basis_product(i, j));
      const Vec rhs = alg.multiply(images[i], images[j]);
      if (vec_cmp(lhs, rhs) != 0) return false;
    }
  return true;
}

namespace {

// Builds P * diag(signs per eigen block) * P^{-1}.
Matrix blockwise_sign_map(const Algebra& alg, const EigenData& ed,
                          const std::vector<int>& signs) {
  const Matrix p = eigenbasis_matrix(ed, alg.dim());
  const auto pinv = inverse(p);
  if (!pinv) throw FusionError("eigenbasis is singular");
  Matrix d(alg.dim(), alg.dim());
  size_t at = 0;
  for (size_t t = 0; t < signs.size(); ++t)
    for (size_t k = 0; k < ed.dims[t]; ++k, ++at) d.at(at, at) = Scalar(signs[t]);
  return p * d * *pinv;
}

}  // namespace

Automorphism miyamoto_map(const Algebra& alg, const Vec& a, const FusionLaw& law) {
  if (!law.graded()) throw FusionError("miyamoto_map requires a graded fusion law");
  const AxisReport rep = check_axis(alg, a, law);
  if (!rep.is_axis) throw FusionError("miyamoto_map: vector is not an axis");
  const EigenData ed = eigen_data(alg, a, law);
  std::vector<int> signs(law.size());
  for (size_t t = 0; t < law.size(); ++t) signs[t] = law.grade(t);
  Matrix m = blockwise_sign_map(alg, ed, signs);
  if (!is_automorphism(alg, m))
    throw FusionError("miyamoto map is not an automorphism");
  return Automorphism{std::move(m), "miyamoto"};
}

bool is_jordan_axis(const Algebra& alg, const Vec& a, const FusionLaw& law) {
  const AxisReport rep = check_axis(alg, a, law);
  if (!rep.is_axis) return false;
  // At most one eigenvalue besides 1 and 0 may carry a nonzero eigenspace,
  // and negating that eigenspace must be an automorphism.
  size_t extra = 0;
  for (size_t t = 0; t < law.size(); ++t) {
    const Scalar& lam = law.eigenvalues()[t];
    if (rep.eigen_dims[t] != 0 && lam != Scalar(1) && lam != Scalar(0)) ++extra;
  }
  if (extra > 1) return false;
  if (extra == 0) return true;
  const EigenData ed = eigen_data(alg, a, law);
  std::vector<int> signs(law.size());
  for (size_t t = 0; t < law.size(); ++t) {
    const Scalar& lam = law.eigenvalues()[t];
    signs[t] = (lam == Scalar(1) || lam == Scalar(0)) ? 1 : -1;
  }
  return is_automorphism(alg, blockwise_sign_map(alg, ed, signs));
}

Automorphism sigma_map(const Algebra& alg, const Vec& a, const FusionLaw& law) {
  if (!is_jordan_axis(alg, a, law))
    throw FusionError("sigma_map requires a Jordan axis");
  const EigenData ed = eigen_data(alg, a, law);
  std::vector<int> signs(law.size());
  for (size_t t = 0; t < law.size(); ++t) {
    const Scalar& lam = law.eigenvalues()[t];
    signs[t] = (lam == Scalar(1) || lam == Scalar(0)) ? 1 : -1;
  }
  Matrix m = blockwise_sign_map(alg, ed, signs);
  if (!is_automorphism(alg, m)) throw FusionError("sigma map is not an automorphism");
  return Automorphism{std::move(m), "sigma"};
}

AxetClosure axet_closure(const Algebra& alg, const std::vector<Vec>& seeds,
                         const FusionLaw& law, size_t cap) {
  if (seeds.empty()) throw FusionError("axet closure needs at least one seed");
  AxetClosure out;
  std::map<Vec, size_t, decltype([](const Vec& a, const Vec& b) {
             return vec_cmp(a, b) < 0;
           })>
      index;
  std::vector<Matrix> taus;
  auto push_axis = [&](const Vec& v) -> bool {
    if (index.count(v)) return false;
    if (out.axes.size() >= cap)
      throw FusionError("axet closure exceeded cap of " + std::to_string(cap));
    index.emplace(v, out.axes.size());
    out.axes.push_back(v);
    taus.push_back(miyamoto_map(alg, v, law).matrix);
    return true;
  };
  for (const Vec& s : seeds) push_axis(s);
  const size_t nseed = out.axes.size();
  // Orbit closure over a growing generator list: generator index gi sweeps
  // ascending, and for each generator every current axis is mapped.
  bool grew = true;
  while (grew) {
    grew = false;
    for (size_t gi = 0; gi < taus.size(); ++gi)
      for (size_t ai = 0; ai < out.axes.size(); ++ai)
        if (push_axis(taus[gi].apply(out.axes[ai]))) grew = true;
  }
  // Canonical order: the seeds first as given, then the discovered axes in
  // coordinate order.
  {
    std::vector<size_t> at(out.axes.size());
    for (size_t i = 0; i < at.size(); ++i) at[i] = i;
    std::sort(at.begin() + nseed, at.end(), [&](size_t a, size_t b) {
      return vec_cmp(out.axes[a], out.axes[b]) > 0;
    });
    std::vector<Vec> axes2;
    std::vector<Matrix> taus2;
    for (size_t i = 0; i < at.size(); ++i) {
      axes2.push_back(std::move(out.axes[at[i]]));
      taus2.push_back(std::move(taus[at[i]]));
    }
    out.axes = std::move(axes2);
    taus = std::move(taus2);
    index.clear();
    for (size_t i = 0; i < out.axes.size(); ++i) index.emplace(out.axes[i], i);
  }
  for (size_t gi = 0; gi < out.axes.size(); ++gi) {
    Perm p(out.axes.size());
    for (size_t ai = 0; ai < out.axes.size(); ++ai) {
      const Vec img = taus[gi].apply(out.axes[ai]);
      const auto it = index.find(img);
      if (it == index.end()) throw FusionError("axet is not closed");  // unreachable
      p[ai] = static_cast<int>(it->second);
    }
    out.tau_perms.push_back(std::move(p));
  }
  out.miyamoto = PermGroup(out.tau_perms, out.axes.size());
  return out;
}

std::vector<std::pair<size_t, size_t>> find_twins(const Algebra& alg,
                                                  const std::vector<Vec>& axes,
                                                  const FusionLaw& law) {
  std::vector<Matrix> taus;
  for (const Vec& a : axes) taus.push_back(miyamoto_map(alg, a, law).matrix);
  std::vector<std::pair<size_t, size_t>> twins;
  for (size_t i = 0; i < axes.size(); ++i)
    for (size_t j = i + 1; j < axes.size(); ++j)
      if (taus[i] == taus[j]) twins.emplace_back(i, j);
  return twins;
}

}  // namespace axtk
