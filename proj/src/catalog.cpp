#include "axtk/catalog.hpp"

#include <algorithm>
#include <map>

namespace axtk {

const std::vector<NSType>& all_ns_types() {
  static const std::vector<NSType> ts = {NSType::T2A, NSType::T2B, NSType::T3A,
                                         NSType::T3C, NSType::T4A, NSType::T4B,
                                         NSType::T5A, NSType::T6A};
  return ts;
}

std::string ns_type_name(NSType t) {
  switch (t) {
    case NSType::T2A: return "2A";
    case NSType::T2B: return "2B";
    case NSType::T3A: return "3A";
    case NSType::T3C: return "3C";
    case NSType::T4A: return "4A";
    case NSType::T4B: return "4B";
    case NSType::T5A: return "5A";
    case NSType::T6A: return "6A";
  }
  throw CatalogError("bad type");
}

NSType ns_type_from_name(const std::string& name) {
  for (NSType t : all_ns_types())
    if (ns_type_name(t) == name) return t;
  throw CatalogError("unknown dihedral algebra type '" + name + "'");
}

namespace {

// Symbolic basis element: an indexed axis a_k or an extra basis vector.
struct Sym {
  bool axis;
  int v;  // axis subscript k, or extra id
};
using SymExpr = std::vector<std::pair<Sym, Scalar>>;

Sym ax(int k) { return {true, k}; }
Sym ex(int id) { return {false, id}; }

struct NSData {
  int n = 0;     // number of indexed axes; subscripts live in [kmin, kmin + n)
  int kmin = 0;
  std::vector<std::string> extra_names;
  std::vector<int> extra_axes;  // extra ids that are axes of the algebra
  std::vector<std::tuple<Sym, Sym, SymExpr>> products;
  std::vector<std::tuple<Sym, Sym, Scalar>> form;
};

NSData ns_data(NSType t) {
  NSData d;
  const Scalar one(1);
  // Common seeds: a0 is idempotent of norm 1.
  auto common = [&d, &one]() {
    d.products.push_back({ax(0), ax(0), {{ax(0), one}}});
    d.form.push_back({ax(0), ax(0), one});
  };
  switch (t) {
    case NSType::T2A: {
      d.n = 2;
      d.kmin = 0;
      d.extra_names = {"arho"};
      d.extra_axes = {0};
      common();
      d.products.push_back(
          {ax(0), ax(1), {{ax(0), frac(1, 8)}, {ax(1), frac(1, 8)}, {ex(0), frac(-1, 8)}}});
      d.products.push_back(
          {ax(0), ex(0), {{ax(0), frac(1, 8)}, {ex(0), frac(1, 8)}, {ax(1), frac(-1, 8)}}});
      d.products.push_back({ex(0), ex(0), {{ex(0), one}}});
      d.form.push_back({ax(0), ax(1), frac(1, 8)});
      d.form.push_back({ax(0), ex(0), frac(1, 8)});
      d.form.push_back({ex(0), ex(0), one});
      break;
    }
    case NSType::T2B: {
      d.n = 2;
      d.kmin = 0;
      common();
      d.products.push_back({ax(0), ax(1), {}});
      d.form.push_back({ax(0), ax(1), Scalar(0)});
      break;
    }
    case NSType::T3A: {
      d.n = 3;
      d.kmin = -1;
      d.extra_names = {"urho"};
      common();
      d.products.push_back({ax(0), ax(1),
                            {{ax(0), frac(1, 16)},
                             {ax(1), frac(1, 16)},
                             {ax(-1), frac(1, 32)},
                             {ex(0), frac(-135, 2048)}}});
      d.products.push_back({ax(0), ex(0),
                            {{ax(0), frac(2, 9)},
                             {ax(1), frac(-1, 9)},
                             {ax(-1), frac(-1, 9)},
                             {ex(0), frac(5, 32)}}});
      d.products.push_back({ex(0), ex(0), {{ex(0), one}}});
      d.form.push_back({ax(0), ax(1), frac(13, 256)});
      d.form.push_back({ax(0), ex(0), frac(1, 4)});
      d.form.push_back({ex(0), ex(0), frac(8, 5)});
      break;
    }
    case NSType::T3C: {
      d.n = 3;
      d.kmin = -1;
      common();
      d.products.push_back(
          {ax(0), ax(1),
           {{ax(0), frac(1, 64)}, {ax(1), frac(1, 64)}, {ax(-1), frac(-1, 64)}}});
      d.form.push_back({ax(0), ax(1), frac(1, 64)});
      break;
    }
    case NSType::T4A: {
      d.n = 4;
      d.kmin = -1;
      d.extra_names = {"vrho"};
      common();
      d.products.push_back({ax(0), ax(1),
                            {{ax(0), frac(3, 64)},
                             {ax(1), frac(3, 64)},
                             {ax(-1), frac(1, 64)},
                             {ax(2), frac(1, 64)},
                             {ex(0), frac(-3, 64)}}});
      d.products.push_back({ax(0), ax(2), {}});
      d.products.push_back({ax(0), ex(0),
                            {{ax(0), frac(5, 16)},
                             {ax(1), frac(-1, 8)},
                             {ax(2), frac(-1, 16)},
                             {ax(-1), frac(-1, 8)},
                             {ex(0), frac(3, 16)}}});
      d.products.push_back({ex(0), ex(0), {{ex(0), one}}});
      d.form.push_back({ax(0), ax(1), frac(1, 32)});
      d.form.push_back({ax(0), ax(2), Scalar(0)});
      d.form.push_back({ax(0), ex(0), frac(3, 8)});
      d.form.push_back({ex(0), ex(0), Scalar(2)});
      break;
    }
    case NSType::T4B: {
      d.n = 4;
      d.kmin = -1;
      d.extra_names = {"arho2"};
      d.extra_axes = {0};
      common();
      d.products.push_back({ax(0), ax(1),
                            {{ax(0), frac(1, 64)},
                             {ax(1), frac(1, 64)},
                             {ax(-1), frac(-1, 64)},
                             {ax(2), frac(-1, 64)},
                             {ex(0), frac(1, 64)}}});
      d.products.push_back(
          {ax(0), ax(2), {{ax(0), frac(1, 8)}, {ax(2), frac(1, 8)}, {ex(0), frac(-1, 8)}}});
      d.products.push_back(
          {ax(0), ex(0), {{ax(0), frac(1, 8)}, {ex(0), frac(1, 8)}, {ax(2), frac(-1, 8)}}});
      d.products.push_back({ex(0), ex(0), {{ex(0), one}}});
      d.form.push_back({ax(0), ax(1), frac(1, 64)});
      d.form.push_back({ax(0), ax(2), frac(1, 8)});
      d.form.push_back({ax(0), ex(0), frac(1, 8)});
      d.form.push_back({ex(0), ex(0), one});
      break;
    }
    case NSType::T5A: {
      d.n = 5;
      d.kmin = -2;
      d.extra_names = {"wrho"};
      common();
      d.products.push_back({ax(0), ax(1),
                            {{ax(0), frac(3, 128)},
                             {ax(1), frac(3, 128)},
                             {ax(2), frac(-1, 128)},
                             {ax(-1), frac(-1, 128)},
                             {ax(-2), frac(-1, 128)},
                             {ex(0), one}}});
      d.products.push_back({ax(0), ax(2),
                            {{ax(0), frac(3, 128)},
                             {ax(2), frac(3, 128)},
                             {ax(1), frac(-1, 128)},
                             {ax(-1), frac(-1, 128)},
                             {ax(-2), frac(-1, 128)},
                             {ex(0), Scalar(-1)}}});
      d.products.push_back({ax(0), ex(0),
                            {{ax(1), frac(7, 4096)},
                             {ax(-1), frac(7, 4096)},
                             {ax(2), frac(-7, 4096)},
                             {ax(-2), frac(-7, 4096)},
                             {ex(0), frac(7, 32)}}});
      d.products.push_back({ex(0), ex(0),
                            {{ax(-2), frac(175, 524288)},
                             {ax(-1), frac(175, 524288)},
                             {ax(0), frac(175, 524288)},
                             {ax(1), frac(175, 524288)},
                             {ax(2), frac(175, 524288)}}});
      d.form.push_back({ax(0), ax(1), frac(3, 128)});
      d.form.push_back({ax(0), ax(2), frac(3, 128)});
      d.form.push_back({ax(0), ex(0), Scalar(0)});
      d.form.push_back({ex(0), ex(0), frac(875, 524288)});
      break;
    }
    case NSType::T6A: {
      d.n = 6;
      d.kmin = -2;
      d.extra_names = {"arho3", "urho2"};
      d.extra_axes = {0};
      common();
      d.products.push_back({ax(0), ax(1),
                            {{ax(0), frac(1, 64)},
                             {ax(1), frac(1, 64)},
                             {ax(-2), frac(-1, 64)},
                             {ax(-1), frac(-1, 64)},
                             {ax(2), frac(-1, 64)},
                             {ax(3), frac(-1, 64)},
                             {ex(0), frac(1, 64)},
                             {ex(1), frac(45, 2048)}}});
      d.products.push_back({ax(0), ax(2),
                            {{ax(0), frac(1, 16)},
                             {ax(2), frac(1, 16)},
                             {ax(-2), frac(1, 32)},
                             {ex(1), frac(-135, 2048)}}});
      d.products.push_back(
          {ax(0), ax(3), {{ax(0), frac(1, 8)}, {ax(3), frac(1, 8)}, {ex(0), frac(-1, 8)}}});
      d.products.push_back(
          {ax(0), ex(0), {{ax(0), frac(1, 8)}, {ex(0), frac(1, 8)}, {ax(3), frac(-1, 8)}}});
      d.products.push_back({ax(0), ex(1),
                            {{ax(0), frac(2, 9)},
                             {ax(2), frac(-1, 9)},
                             {ax(-2), frac(-1, 9)},
                             {ex(1), frac(5, 32)}}});
      d.products.push_back({ex(0), ex(0), {{ex(0), one}}});
      d.products.push_back({ex(1), ex(1), {{ex(1), one}}});
      d.products.push_back({ex(0), ex(1), {}});
      d.form.push_back({ax(0), ax(1), frac(5, 256)});
      d.form.push_back({ax(0), ax(2), frac(13, 256)});
      d.form.push_back({ax(0), ax(3), frac(1, 8)});
      d.form.push_back({ax(0), ex(0), frac(1, 8)});
      d.form.push_back({ax(0), ex(1), frac(1, 4)});
      d.form.push_back({ex(0), ex(0), one});
      d.form.push_back({ex(0), ex(1), Scalar(0)});
      d.form.push_back({ex(1), ex(1), frac(8, 5)});
      break;
    }
  }
  return d;
}

}  // namespace

NortonSakuma norton_sakuma(NSType t) {
  const NSData d = ns_data(t);
  const size_t dim = d.n + d.extra_names.size();

  auto axis_name = [](int k) { return "a" + std::to_string(k); };
  std::vector<std::string> names;
  for (int k = d.kmin; k < d.kmin + d.n; ++k) names.push_back(axis_name(k));
  for (const auto& e : d.extra_names) names.push_back(e);

  // Reduce an arbitrary subscript into the stored window [kmin, kmin + n).
  auto norm_k = [&](int k) {
    int r = (k - d.kmin) % d.n;
    if (r < 0) r += d.n;
    return r + d.kmin;
  };
  auto index_of = [&](const Sym& s) -> size_t {
    if (s.axis) return static_cast<size_t>(norm_k(s.v) - d.kmin);
    return static_cast<size_t>(d.n + s.v);
  };
  // Index symmetry (s, eps): a_k -> a_{eps*k + s}, extras fixed.
  auto map_sym = [&](const Sym& x, int s, int eps) -> Sym {
    if (!x.axis) return x;
    return ax(eps * x.v + s);
  };

  Algebra alg(names);
  for (int s = 0; s < d.n; ++s)
    for (int eps : {1, -1}) {
      for (const auto& [x, y, expr] : d.products) {
        Vec val(dim);
        for (const auto& [sym, c] : expr) val[index_of(map_sym(sym, s, eps))] += c;
        alg.set_product(index_of(map_sym(x, s, eps)), index_of(map_sym(y, s, eps)),
                        std::move(val));
      }
      for (const auto& [x, y, c] : d.form)
        alg.set_form_entry(index_of(map_sym(x, s, eps)), index_of(map_sym(y, s, eps)), c);
    }
  alg.check_complete();
  if (!alg.form_complete())
    throw CatalogError("form of " + ns_type_name(t) + " is incomplete");

  NortonSakuma ns;
  ns.type = t;
  ns.axes.push_back(unit_vec(dim, index_of(ax(0))));
  ns.axis_names.push_back(axis_name(0));
  ns.axes.push_back(unit_vec(dim, index_of(ax(1))));
  ns.axis_names.push_back(axis_name(1));
  for (int k = d.kmin; k < d.kmin + d.n; ++k) {
    if (k == 0 || k == 1) continue;
    ns.axes.push_back(unit_vec(dim, index_of(ax(k))));
    ns.axis_names.push_back(axis_name(k));
  }
  for (int id : d.extra_axes) {
    ns.axes.push_back(unit_vec(dim, index_of(ex(id))));
    ns.axis_names.push_back(d.extra_names[id]);
  }
  ns.algebra = std::move(alg);
  return ns;
}

Scalar identity_length(NSType t) {
  const NortonSakuma ns = norton_sakuma(t);
  const auto e = identity_of(ns.algebra);
  if (!e) throw CatalogError(ns_type_name(t) + " has no identity");
  return ns.algebra.form(*e, *e);
}

FusionLaw make_law(LawKind kind, const std::vector<Scalar>& params) {
  const size_t want = kind == LawKind::jordan ? 1 : 2;
  if (params.size() != want)
    throw CatalogError("law takes " + std::to_string(want) + " parameter(s)");
  for (const Scalar& p : params)
    if (p == Scalar(0) || p == Scalar(1))
      throw CatalogError("law parameters must avoid 0 and 1");
  if (want == 2 && params[0] == params[1])
    throw CatalogError("law parameters must be distinct");

  const Scalar one(1), zero(0);
  auto tbl = [](size_t n) {
    return std::vector<std::vector<std::set<size_t>>>(
        n, std::vector<std::set<size_t>>(n));
  };
  if (kind == LawKind::jordan) {
    // eigenvalues [1, 0, alpha], alpha negatively graded
    auto t = tbl(3);
    t[0][0] = {0};
    t[0][2] = t[2][0] = {2};
    t[1][1] = {1};
    t[1][2] = t[2][1] = {2};
    t[2][2] = {0, 1};
    return FusionLaw({one, zero, params[0]}, t, std::vector<int>{1, 1, -1});
  }
  // eigenvalues [1, 0, alpha, beta], beta negatively graded
  auto t = tbl(4);
  t[0][0] = {0};
  t[0][2] = t[2][0] = {2};
  t[0][3] = t[3][0] = {3};
  t[1][1] = {1};
  t[1][2] = t[2][1] = {2};
  t[1][3] = t[3][1] = {3};
  t[2][2] = kind == LawKind::almost_monster ? std::set<size_t>{0, 1, 2}
                                            : std::set<size_t>{0, 1};
  t[2][3] = t[3][2] = {3};
  t[3][3] = {0, 1, 2};
  return FusionLaw({one, zero, params[0], params[1]}, t, std::vector<int>{1, 1, 1, -1});
}

FusionLaw monster_law() { return make_law(LawKind::monster, {frac(1, 4), frac(1, 32)}); }

MatsuoAlgebra matsuo_algebra(const PermGroup& g, const Perm& class_rep, const Scalar& eta) {
  if (eta == Scalar(0) || eta == Scalar(1))
    throw CatalogError("matsuo parameter must avoid 0 and 1");
  if (perm_is_identity(class_rep) || perm_order(class_rep) != 2)
    throw CatalogError("matsuo class representative must be an involution");
  MatsuoAlgebra m;
  m.transpositions = conjugacy_class(g, class_rep);
  const size_t dim = m.transpositions.size();
  auto index_of = [&](const Perm& p) -> size_t {
    const auto it =
        std::lower_bound(m.transpositions.begin(), m.transpositions.end(), p);
    if (it == m.transpositions.end() || *it != p)
      throw CatalogError("matsuo class is not closed");
    return static_cast<size_t>(it - m.transpositions.begin());
  };
  std::vector<std::string> names;
  for (size_t i = 0; i < dim; ++i) names.push_back("t" + std::to_string(i));
  Algebra alg(names);
  const Scalar half_eta = eta / Scalar(2);
  for (size_t i = 0; i < dim; ++i)
    for (size_t j = i; j < dim; ++j) {
      Vec p(dim);
      Scalar f;
      if (i == j) {
        p[i] = Scalar(1);
        f = Scalar(1);
      } else {
        const Perm prod = perm_mul(m.transpositions[i], m.transpositions[j]);
        const size_t ord = perm_order(prod);
        if (ord == 2) {
          f = Scalar(0);
        } else if (ord == 3) {
          const size_t k = index_of(perm_conj(m.transpositions[j], m.transpositions[i]));
          p[i] += half_eta;
          p[j] += half_eta;
          p[k] -= half_eta;
          f = half_eta;
        } else {
          throw CatalogError("not a 3-transposition class: a product has order " +
                             std::to_string(ord));
        }
      }
      alg.set_product(i, j, std::move(p));
      alg.set_form_entry(i, j, f);
    }
  for (size_t i = 0; i < dim; ++i) m.axes.push_back(unit_vec(dim, i));
  m.algebra = std::move(alg);
  return m;
}

}  // namespace axtk
