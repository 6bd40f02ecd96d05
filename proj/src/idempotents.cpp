#include "axtk/idempotents.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "axtk/fusion.hpp"
#include "axtk/polysolve.hpp"

namespace axtk {

namespace {

constexpr mp_bitcnt_t kPrec = 512;

struct VecLess {
  bool operator()(const Vec& a, const Vec& b) const { return vec_cmp(a, b) < 0; }
};

using VecSet = std::set<Vec, VecLess>;

const mpq_class& rational_of(const Scalar& s, const char* what) {
  if (!s.is_rational())
    throw IdempotentError(std::string(what) + " must be rational for idempotent search");
  return s.rat_part();
}

// ---------------------------------------------------------------------------
// exact_small: the polynomial system v*v - v = 0 (plus the optional length
// equation) solved exhaustively over Q by lex Groebner elimination.

IdempotentResult exact_backend(const Algebra& alg, const IdempotentQuery& query) {
  const size_t n = alg.dim();
  if (n > 4)
    throw IdempotentError("exact_small backend handles dimension <= 4 (got " +
                          std::to_string(n) + "); use newton_reconstruct");
  std::vector<Poly> sys;
  for (size_t k = 0; k < n; ++k) {
    Poly p(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i; j < n; ++j) {
        const mpq_class& c =
            rational_of(alg.basis_product(i, j)[k], "structure constants");
        if (c == 0) continue;
        Mono m(n, 0);
        m[i] += 1;
        m[j] += 1;
        p.add_term(m, i == j ? c : mpq_class(2 * c));
      }
    }
    Mono mk(n, 0);
    mk[k] = 1;
    p.add_term(mk, -1);
    if (!p.is_zero()) sys.push_back(p);
  }
  if (query.target_length) {
    Poly p(n);
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = i; j < n; ++j) {
        const mpq_class& g = rational_of(alg.form_entry(i, j), "the form");
        if (g == 0) continue;
        Mono m(n, 0);
        m[i] += 1;
        m[j] += 1;
        p.add_term(m, i == j ? g : mpq_class(2 * g));
      }
    }
    p.add_term(Mono(n, 0), -rational_of(*query.target_length, "the target length"));
    sys.push_back(p);
  }

  SolveResult sr = solve_system_rational(sys, n);
  IdempotentResult res;
  res.complete = sr.complete;
  for (const auto& sol : sr.solutions) {
    Vec v(n);
    for (size_t i = 0; i < n; ++i) v[i] = Scalar(sol[i]);
    if (!verify_idempotent(alg, v))
      throw IdempotentError("solver returned a non-idempotent; this is a bug");
    res.found.push_back(std::move(v));
  }
  std::sort(res.found.begin(), res.found.end(), VecLess{});
  return res;
}

// ---------------------------------------------------------------------------
// newton_reconstruct: double-precision Newton iteration from a deterministic
// lattice of starting points, 512-bit refinement, continued-fraction rational
// reconstruction, exact verification of every candidate.

double inf_norm(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::fabs(x));
  return m;
}

// Partial-pivot LU solve of a*x = rhs (a row-major, consumed).
bool solve_dense(std::vector<double> a, std::vector<double> rhs, size_t n,
                 std::vector<double>& out) {
  for (size_t col = 0; col < n; ++col) {
    size_t best = col;
    double bv = std::fabs(a[col * n + col]);
    for (size_t r = col + 1; r < n; ++r) {
      const double v = std::fabs(a[r * n + col]);
      if (v > bv) {
        bv = v;
        best = r;
      }
    }
    if (bv < 1e-14) return false;
    if (best != col) {
      for (size_t c = col; c < n; ++c) std::swap(a[best * n + c], a[col * n + c]);
      std::swap(rhs[best], rhs[col]);
    }
    for (size_t r = col + 1; r < n; ++r) {
      const double f = a[r * n + col] / a[col * n + col];
      if (f == 0.0) continue;
      for (size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.assign(n, 0.0);
  for (size_t r = n; r-- > 0;) {
    double s = rhs[r];
    for (size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * out[c];
    out[r] = s / a[r * n + r];
  }
  return true;
}

struct NumCtx {
  size_t n = 0;
  std::vector<double> cd;      // cd[(i*n+j)*n+k]: coefficient of b_k in b_i*b_j
  std::vector<mpf_class> cf;   // same constants at 512-bit precision

  double c(size_t i, size_t j, size_t k) const { return cd[(i * n + j) * n + k]; }
  const mpf_class& f(size_t i, size_t j, size_t k) const {
    return cf[(i * n + j) * n + k];
  }
};

NumCtx make_ctx(const Algebra& alg) {
  NumCtx ctx;
  const size_t n = alg.dim();
  ctx.n = n;
  ctx.cd.assign(n * n * n, 0.0);
  ctx.cf.assign(n * n * n, mpf_class(0, kPrec));
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = i; j < n; ++j) {
      const Vec& p = alg.basis_product(i, j);
      for (size_t k = 0; k < n; ++k) {
        const mpq_class& c = rational_of(p[k], "structure constants");
        const size_t ij = (i * n + j) * n + k, ji = (j * n + i) * n + k;
        ctx.cd[ij] = ctx.cd[ji] = mpq_class(c).get_d();
        ctx.cf[ij] = ctx.cf[ji] = mpf_class(c, kPrec);
      }
    }
  }
  return ctx;
}

// F(v) = v*v - v in doubles.
std::vector<double> residual_d(const NumCtx& ctx, const std::vector<double>& v) {
  const size_t n = ctx.n;
  std::vector<double> r(n, 0.0);
  for (size_t i = 0; i < n; ++i) {
    if (v[i] == 0.0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (v[j] == 0.0) continue;
      const double w = v[i] * v[j];
      for (size_t k = 0; k < n; ++k) r[k] += w * ctx.c(i, j, k);
    }
  }
  for (size_t k = 0; k < n; ++k) r[k] -= v[k];
  return r;
}

std::optional<std::vector<double>> newton_double(const NumCtx& ctx,
                                                 std::vector<double> v) {
  const size_t n = ctx.n;
  for (int it = 0; it < 40; ++it) {
    const std::vector<double> f = residual_d(ctx, v);
    if (inf_norm(f) < 1e-13) return v;
    // J(v) = 2 ad_v - I.
    std::vector<double> jac(n * n, 0.0);
    for (size_t k = 0; k < n; ++k) {
      for (size_t j = 0; j < n; ++j) {
        double s = 0.0;
        for (size_t i = 0; i < n; ++i) s += v[i] * ctx.c(i, j, k);
        jac[k * n + j] = 2.0 * s - (k == j ? 1.0 : 0.0);
      }
    }
    std::vector<double> dx;
    if (!solve_dense(std::move(jac), f, n, dx)) return std::nullopt;
    for (size_t i = 0; i < n; ++i) v[i] -= dx[i];
    if (inf_norm(v) > 1e6) return std::nullopt;
  }
  return std::nullopt;
}

mpf_class abs_f(const mpf_class& x) { return x >= 0 ? x : mpf_class(-x, kPrec); }

// Partial-pivot elimination at 512 bits.
bool solve_dense_f(std::vector<mpf_class> a, std::vector<mpf_class> rhs, size_t n,
                   std::vector<mpf_class>& out) {
  const mpf_class tiny(std::ldexp(1.0, -480), kPrec);
  for (size_t col = 0; col < n; ++col) {
    size_t best = col;
    mpf_class bv = abs_f(a[col * n + col]);
    for (size_t r = col + 1; r < n; ++r) {
      mpf_class v = abs_f(a[r * n + col]);
      if (v > bv) {
        bv = v;
        best = r;
      }
    }
    if (bv < tiny) return false;
    if (best != col) {
      for (size_t c = col; c < n; ++c) std::swap(a[best * n + c], a[col * n + c]);
      std::swap(rhs[best], rhs[col]);
    }
    for (size_t r = col + 1; r < n; ++r) {
      if (a[r * n + col] == 0) continue;
      mpf_class f(a[r * n + col] / a[col * n + col], kPrec);
      for (size_t c = col; c < n; ++c) a[r * n + c] -= f * a[col * n + c];
      rhs[r] -= f * rhs[col];
    }
  }
  out.assign(n, mpf_class(0, kPrec));
  for (size_t r = n; r-- > 0;) {
    mpf_class s(rhs[r], kPrec);
    for (size_t c = r + 1; c < n; ++c) s -= a[r * n + c] * out[c];
    out[r] = s / a[r * n + r];
  }
  return true;
}

std::vector<mpf_class> residual_f(const NumCtx& ctx, const std::vector<mpf_class>& v) {
  const size_t n = ctx.n;
  std::vector<mpf_class> r(n, mpf_class(0, kPrec));
  for (size_t i = 0; i < n; ++i) {
    if (v[i] == 0) continue;
    for (size_t j = 0; j < n; ++j) {
      if (v[j] == 0) continue;
      mpf_class w(v[i] * v[j], kPrec);
      for (size_t k = 0; k < n; ++k) {
        if (ctx.f(i, j, k) != 0) r[k] += w * ctx.f(i, j, k);
      }
    }
  }
  for (size_t k = 0; k < n; ++k) r[k] -= v[k];
  return r;
}

std::optional<std::vector<mpf_class>> refine_mpf(const NumCtx& ctx,
                                                 const std::vector<double>& v0) {
  const size_t n = ctx.n;
  std::vector<mpf_class> v;
  v.reserve(n);
  for (double x : v0) v.emplace_back(x, kPrec);
  for (int it = 0; it < 6; ++it) {
    std::vector<mpf_class> f = residual_f(ctx, v);
    std::vector<mpf_class> jac(n * n, mpf_class(0, kPrec));
    for (size_t k = 0; k < n; ++k) {
      for (size_t j = 0; j < n; ++j) {
        mpf_class s(0, kPrec);
        for (size_t i = 0; i < n; ++i) {
          if (ctx.f(i, j, k) != 0) s += v[i] * ctx.f(i, j, k);
        }
        jac[k * n + j] = 2 * s - (k == j ? 1 : 0);
      }
    }
    std::vector<mpf_class> dx;
    if (!solve_dense_f(std::move(jac), std::move(f), n, dx)) return std::nullopt;
    for (size_t i = 0; i < n; ++i) v[i] -= dx[i];
  }
  const mpf_class bound(std::ldexp(1.0, -300), kPrec);
  for (const mpf_class& r : residual_f(ctx, v)) {
    if (abs_f(r) >= bound) return std::nullopt;
  }
  return v;
}

// Best rational approximation of x by continued fractions: the first
// convergent within tol, provided its denominator stays under den_cap.
std::optional<mpq_class> reconstruct_rational(const mpq_class& x,
                                              const mpz_class& den_cap,
                                              const mpq_class& tol) {
  mpz_class h_prev = 1, h_pprev = 0, k_prev = 0, k_pprev = 1;
  mpq_class r = x;
  for (int it = 0; it < 2000; ++it) {
    mpz_class a;
    mpz_fdiv_q(a.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
    const mpz_class h = a * h_prev + h_pprev;
    const mpz_class k = a * k_prev + k_pprev;
    if (k > den_cap) return std::nullopt;
    mpq_class conv(h, k);
    conv.canonicalize();
    if (abs(mpq_class(x - conv)) < tol) return conv;
    const mpq_class fracpart = r - mpq_class(a);
    if (fracpart == 0) return std::nullopt;  // exact expansion ended off-target
    r = mpq_class(1) / fracpart;
    h_pprev = h_prev;
    h_prev = h;
    k_pprev = k_prev;
    k_prev = k;
  }
  return std::nullopt;
}

std::optional<Vec> reconstruct_vec(const std::vector<mpf_class>& v) {
  const mpz_class den_cap = mpz_class(1) << 128;
  const mpq_class tol(std::ldexp(1.0, -200));
  Vec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    auto q = reconstruct_rational(mpq_class(v[i]), den_cap, tol);
    if (!q) return std::nullopt;
    out[i] = Scalar(*q);
  }
  return out;
}

// Subset indicator masks in (popcount, value) order.  Gosper's hack steps
// through the masks of one popcount in ascending value.
class MaskStream {
 public:
  explicit MaskStream(size_t n) : bits_(std::min<size_t>(n, 63)) {}

  std::optional<unsigned long long> next() {
    while (pc_ <= bits_) {
      if (fresh_) {
        cur_ = pc_ == 0 ? 0ULL : ((1ULL << pc_) - 1);
        fresh_ = false;
        return cur_;
      }
      if (pc_ == 0) {
        ++pc_;
        fresh_ = true;
        continue;
      }
      const unsigned long long c = cur_ & (0ULL - cur_);
      const unsigned long long r = cur_ + c;
      const unsigned long long nxt = (((r ^ cur_) >> 2) / c) | r;
      if (nxt >= (1ULL << bits_)) {
        ++pc_;
        fresh_ = true;
        continue;
      }
      cur_ = nxt;
      return cur_;
    }
    return std::nullopt;
  }

 private:
  size_t bits_;
  size_t pc_ = 0;
  unsigned long long cur_ = 0;
  bool fresh_ = true;
};

std::vector<double> vec_to_doubles(const Vec& v) {
  std::vector<double> d(v.size());
  for (size_t i = 0; i < v.size(); ++i) {
    d[i] = v[i].is_rational() ? v[i].to_double() : 0.0;
  }
  return d;
}

bool near(const std::vector<double>& a, const std::vector<double>& b) {
  for (size_t i = 0; i < a.size(); ++i) {
    if (std::fabs(a[i] - b[i]) > 1e-7) return false;
  }
  return true;
}

IdempotentResult newton_backend(const Algebra& alg, const IdempotentQuery& query) {
  const size_t n = alg.dim();
  const NumCtx ctx = make_ctx(alg);

  size_t subset_budget = size_t(1) << std::min<size_t>(n, 10);
  size_t random_budget = 64;
  if (query.budget > 0) {
    subset_budget = std::min(subset_budget, query.budget);
    random_budget = query.budget - subset_budget;
  }

  IdempotentResult res;
  res.complete = false;
  VecSet found;
  std::vector<std::vector<double>> found_d;
  std::vector<std::vector<double>> numeric;

  auto consider_exact = [&](const Vec& v) {
    if (!verify_idempotent(alg, v)) return false;
    if (query.target_length && length_of(alg, v) != *query.target_length) return false;
    if (found.insert(v).second) found_d.push_back(vec_to_doubles(v));
    return true;
  };

  auto handle_start = [&](const std::vector<double>& start) {
    auto sol = newton_double(ctx, start);
    if (!sol) return;
    for (const auto& d : found_d) {
      if (near(*sol, d)) return;
    }
    for (const auto& d : numeric) {
      if (near(*sol, d)) return;
    }
    auto refined = refine_mpf(ctx, *sol);
    if (!refined) return;
    std::vector<double> rd(n);
    for (size_t i = 0; i < n; ++i) rd[i] = (*refined)[i].get_d();
    if (auto exact = reconstruct_vec(*refined)) {
      if (consider_exact(*exact)) return;
      // Reconstructed but rejected: either reconstruction missed the true
      // value or the length filter excluded it.  If it genuinely fails the
      // idempotent equations, keep the numeric witness.
      if (!verify_idempotent(alg, *exact)) numeric.push_back(rd);
      return;
    }
    numeric.push_back(rd);
  };

  MaskStream masks(n);
  for (size_t used = 0; used < subset_budget; ++used) {
    auto m = masks.next();
    if (!m) break;
    std::vector<double> start(n, 0.0);
    for (size_t i = 0; i < std::min<size_t>(n, 63); ++i) {
      if (*m & (1ULL << i)) start[i] = 1.0;
    }
    handle_start(start);
  }
  std::mt19937_64 rng(query.seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  for (size_t t = 0; t < random_budget; ++t) {
    std::vector<double> start(n);
    for (size_t i = 0; i < n; ++i) start[i] = dist(rng);
    handle_start(start);
  }

  // Propagate through the supplied symmetries (verified automorphisms).
  if (!query.symmetries.empty()) {
    for (const Matrix& m : query.symmetries) {
      if (m.rows() != n || m.cols() != n)
        throw IdempotentError("symmetry matrix has the wrong dimensions");
      if (!is_automorphism(alg, m))
        throw IdempotentError("a supplied symmetry is not an algebra automorphism");
    }
    std::vector<Vec> work(found.begin(), found.end());
    while (!work.empty()) {
      const Vec v = std::move(work.back());
      work.pop_back();
      for (const Matrix& m : query.symmetries) {
        Vec w = m.apply(v);
        if (found.count(w)) continue;
        if (consider_exact(w)) work.push_back(std::move(w));
        if (found.size() > 100000)
          throw IdempotentError("symmetry closure exceeded 100000 idempotents");
      }
    }
  }

  // Numeric leftovers that match an exact solution are not "unreconstructed".
  for (const auto& d : numeric) {
    bool dup = false;
    for (const auto& e : found_d) {
      if (near(d, e)) {
        dup = true;
        break;
      }
    }
    if (!dup) res.numeric_only.push_back(d);
  }
  std::sort(res.numeric_only.begin(), res.numeric_only.end());
  res.found.assign(found.begin(), found.end());
  return res;
}

}  // namespace

bool verify_idempotent(const Algebra& alg, const Vec& v) {
  if (v.size() != alg.dim())
    throw IdempotentError("vector dimension does not match the algebra");
  return alg.multiply(v, v) == v;
}

IdempotentResult find_idempotents(const Algebra& alg, const IdempotentQuery& query) {
  alg.check_complete();
  const size_t n = alg.dim();
  if (query.target_length) {
    if (!alg.has_form() || !alg.form_complete())
      throw IdempotentError("length-constrained search requires a complete bilinear form");
    if (!is_positive_definite(alg.gram()))
      throw IdempotentError(
          "length-constrained search requires a positive-definite form");
    const mpq_class& len = rational_of(*query.target_length, "the target length");
    if (len < 0) {
      // Positive definiteness leaves nothing to find.
      IdempotentResult res;
      res.complete = true;
      return res;
    }
    if (len == 0) {
      // (v, v) = 0 forces v = 0, which is idempotent.
      IdempotentResult res;
      res.found.push_back(zero_vec(n));
      res.complete = true;
      return res;
    }
  }
  switch (query.backend) {
    case IdemBackend::exact_small:
      return exact_backend(alg, query);
    case IdemBackend::newton_reconstruct:
      return newton_backend(alg, query);
  }
  throw IdempotentError("unknown backend");
}

}  // namespace axtk
