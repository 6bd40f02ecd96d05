#include "axtk/decompose.hpp"

#include "axtk/forms.hpp"

namespace axtk {

namespace {

void decompose_rec(const Algebra& alg, const std::vector<Vec>& axes,
                   const FusionLaw& law, size_t depth, const SubspaceBasis& current,
                   std::vector<size_t>& tuple, JointDecomposition& out) {
  if (current.dim() == 0) return;
  if (depth == axes.size()) {
    out.summands.emplace_back(tuple, current);
    return;
  }
  for (size_t t = 0; t < law.size(); ++t) {
    const SubspaceBasis eig = eigenspace(alg, axes[depth], law.eigenvalues()[t]);
    const SubspaceBasis next = intersect(current, eig, alg.dim());
    tuple.push_back(t);
    decompose_rec(alg, axes, law, depth + 1, next, tuple, out);
    tuple.pop_back();
  }
}

}  // namespace

JointDecomposition joint_decomposition(const Algebra& alg, const std::vector<Vec>& axes,
                                       const FusionLaw& law, bool use_form) {
  for (const Vec& a : axes) {
    const AxisReport rep = check_axis(alg, a, law);
    if (!rep.is_axis)
      throw DecomposeError("joint decomposition requires verified axes");
  }
  JointDecomposition out;
  out.axes = axes;
  SubspaceBasis full;
  for (size_t i = 0; i < alg.dim(); ++i) full.vectors.push_back(unit_vec(alg.dim(), i));
  std::vector<size_t> tuple;
  decompose_rec(alg, axes, law, 0, full, tuple, out);
  size_t total = 0;
  for (const auto& [t, s] : out.summands) total += s.dim();
  if (use_form && alg.has_form() && total < alg.dim()) {
    std::vector<Vec> all;
    for (const auto& [t, s] : out.summands)
      for (const Vec& v : s.vectors) all.push_back(v);
    const SubspaceBasis sum = span_of(all, alg.dim());
    SubspaceBasis res = orthogonal_complement(alg, sum);
    if (sum.dim() + res.dim() != alg.dim())
      throw DecomposeError("form is degenerate on the summand sum");
    out.residual = std::move(res);
  }
  return out;
}

SubspaceBasis fixed_subalgebra(const Algebra& alg, const std::vector<Matrix>& maps) {
  const size_t n = alg.dim();
  SubspaceBasis fixed;
  for (size_t i = 0; i < n; ++i) fixed.vectors.push_back(unit_vec(n, i));
  for (const Matrix& m : maps) {
    if (!is_automorphism(alg, m))
      throw DecomposeError("fixed_subalgebra requires verified automorphisms");
    SubspaceBasis ker;
    ker.vectors = kernel_basis(m - Matrix::identity(n));
    fixed = intersect(fixed, ker, n);
  }
  for (size_t i = 0; i < fixed.dim(); ++i)
    for (size_t j = i; j < fixed.dim(); ++j) {
      const Vec p = alg.multiply(fixed.vectors[i], fixed.vectors[j]);
      if (!subspace_contains(fixed, p))
        throw DecomposeError("fixed space is not product-closed");
    }
  return fixed;
}

ExtensionSpace extension_space(const Algebra& alg, const SubspaceBasis& u,
                               const Matrix& psi, const SubspaceBasis& w) {
  const size_t n = alg.dim();
  const size_t du = u.dim(), dw = w.dim();
  if (psi.rows() != du || psi.cols() != du)
    throw DecomposeError("psi must be square on the subalgebra basis");
  // Validates product closure of U and that psi is an automorphism of it.
  const Algebra uview = [&] {
    try {
      return subalgebra_view(alg, u);
    } catch (const AlgebraError& e) {
      throw DecomposeError(e.what());
    }
  }();
  if (!is_automorphism(uview, psi))
    throw DecomposeError("psi is not an automorphism of the subalgebra");

  // W-coordinates of u_i * w_s (module check) and of psi(u_i) * w_s.
  auto module_coords = [&](const Vec& x, size_t i, size_t s) {
    const auto c = coords_in(w, x);
    if (!c)
      throw DecomposeError("W is not a module: product of subalgebra basis " +
                           std::to_string(i) + " with module basis " + std::to_string(s) +
                           " leaves W");
    return *c;
  };
  std::vector<Matrix> mmat(du, Matrix(dw, dw)), nmat(du, Matrix(dw, dw));
  for (size_t i = 0; i < du; ++i) {
    Vec psi_u(n);
    for (size_t s = 0; s < du; ++s)
      if (!psi.at(s, i).is_zero())
        psi_u = vec_add(psi_u, vec_scale(psi.at(s, i), u.vectors[s]));
    for (size_t s = 0; s < dw; ++s) {
      const Vec mc = module_coords(alg.multiply(u.vectors[i], w.vectors[s]), i, s);
      const Vec nc = module_coords(alg.multiply(psi_u, w.vectors[s]), i, s);
      for (size_t r = 0; r < dw; ++r) {
        mmat[i].at(r, s) = mc[r];
        nmat[i].at(r, s) = nc[r];
      }
    }
  }
  // Solve N_i Phi = Phi M_i for all i; unknown Phi[r][s] at index r*dw + s.
  std::vector<Vec> rows;
  for (size_t i = 0; i < du; ++i)
    for (size_t r = 0; r < dw; ++r)
      for (size_t j = 0; j < dw; ++j) {
        Vec row(dw * dw);
        for (size_t s = 0; s < dw; ++s) {
          row[s * dw + j] += nmat[i].at(r, s);
          row[r * dw + s] -= mmat[i].at(s, j);
        }
        if (!vec_is_zero(row)) rows.push_back(std::move(row));
      }
  ExtensionSpace out;
  out.u = u;
  out.w = w;
  out.psi = psi;
  std::vector<Vec> sols = rows.empty()
                              ? [&] {
                                  std::vector<Vec> id;
                                  for (size_t v = 0; v < dw * dw; ++v)
                                    id.push_back(unit_vec(dw * dw, v));
                                  return id;
                                }()
                              : kernel_basis(Matrix::from_rows(rows));
  for (const Vec& s : sols) {
    Matrix phi(dw, dw);
    for (size_t r = 0; r < dw; ++r)
      for (size_t c = 0; c < dw; ++c) phi.at(r, c) = s[r * dw + c];
    out.basis.push_back(std::move(phi));
  }
  return out;
}

namespace {

// Echelonized list of (vector, image) rows supporting joint reduction.
struct GraphRows {
  std::vector<Vec> v, img;

  // Reduces (x, y) by the stored rows; returns the residue.
  void reduce(Vec& x, Vec& y) const {
    for (size_t r = 0; r < v.size(); ++r) {
      const size_t lead = lead_col(v[r]);
      if (!x[lead].is_zero()) {
        const Scalar f = x[lead];
        x = vec_sub(x, vec_scale(f, v[r]));
        y = vec_sub(y, vec_scale(f, img[r]));
      }
    }
  }

  static size_t lead_col(const Vec& row) {
    for (size_t i = 0; i < row.size(); ++i)
      if (!row[i].is_zero()) return i;
    throw DecomposeError("zero row in echelon set");
  }

  // Returns true if the row was new, false if it reduced to zero; errors via
  // the callback when the vector part vanishes but the image does not.
  template <typename OnConflict>
  bool insert(Vec x, Vec y, OnConflict&& on_conflict) {
    reduce(x, y);
    if (vec_is_zero(x)) {
      if (!vec_is_zero(y)) on_conflict();
      return false;
    }
    const size_t lead = lead_col(x);
    const Scalar p = x[lead].inv();
    x = vec_scale(p, x);
    y = vec_scale(p, y);
    // Back-substitute into existing rows to keep full reduction.
    for (size_t r = 0; r < v.size(); ++r) {
      if (v[r][lead].is_zero()) continue;
      const Scalar f = v[r][lead];
      v[r] = vec_sub(v[r], vec_scale(f, x));
      img[r] = vec_sub(img[r], vec_scale(f, y));
    }
    // Insert keeping rows ordered by leading column.
    size_t pos = 0;
    while (pos < v.size() && lead_col(v[pos]) < lead) ++pos;
    v.insert(v.begin() + pos, std::move(x));
    img.insert(img.begin() + pos, std::move(y));
    return true;
  }
};

}  // namespace

AssembleResult assemble_automorphism(const Algebra& alg,
                                     const std::vector<AutomorphismPiece>& pieces) {
  const size_t n = alg.dim();
  GraphRows rows;
  for (const auto& piece : pieces) {
    if (piece.images.rows() != n || piece.images.cols() != piece.space.dim())
      throw DecomposeError("piece image matrix has wrong shape");
    for (size_t j = 0; j < piece.space.dim(); ++j)
      rows.insert(piece.space.vectors[j], piece.images.col(j), [] {
        throw DecomposeError("pieces are inconsistent on overlapping vectors");
      });
  }
  // Close under products; a conflict here is a multiplicative inconsistency.
  std::string failure;
  bool grew = true;
  while (grew && failure.empty()) {
    grew = false;
    const size_t m = rows.v.size();
    for (size_t i = 0; i < m && failure.empty(); ++i)
      for (size_t j = i; j < m && failure.empty(); ++j) {
        const Vec p = alg.multiply(rows.v[i], rows.v[j]);
        const Vec q = alg.multiply(rows.img[i], rows.img[j]);
        const bool added = rows.insert(p, q, [&] {
          failure = "multiplicative inconsistency: the product of rows " +
                    std::to_string(i) + " and " + std::to_string(j) +
                    " has a forced image that contradicts the pieces";
        });
        if (added) grew = true;
      }
  }
  if (!failure.empty()) return {std::nullopt, failure};
  if (rows.v.size() != n)
    throw DecomposeError("pieces fail to generate the algebra (closure has dimension " +
                         std::to_string(rows.v.size()) + " of " + std::to_string(n) + ")");
  const Matrix vmat = Matrix::from_columns(rows.v);
  const Matrix imat = Matrix::from_columns(rows.img);
  const auto vinv = inverse(vmat);
  if (!vinv) throw DecomposeError("echelon rows are singular");  // unreachable
  Matrix m = imat * *vinv;
  if (!is_automorphism(alg, m))
    return {std::nullopt, "assembled linear map is not an automorphism"};
  return {Automorphism{std::move(m), "assembled"}, ""};
}

}  // namespace axtk
