#include "axtk/polysolve.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

namespace axtk {

bool MonoLexGreater::operator()(const Mono& a, const Mono& b) const {
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

Poly Poly::constant(size_t nvars, const mpq_class& c) {
  Poly p(nvars);
  p.add_term(Mono(nvars, 0), c);
  return p;
}

Poly Poly::variable(size_t nvars, size_t i) {
  if (i >= nvars) throw PolyError("variable index out of range");
  Poly p(nvars);
  Mono m(nvars, 0);
  m[i] = 1;
  p.add_term(m, 1);
  return p;
}

bool Poly::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 &&
         std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                     [](unsigned e) { return e == 0; });
}

const Mono& Poly::leading_mono() const {
  if (terms_.empty()) throw PolyError("leading term of zero polynomial");
  return terms_.begin()->first;
}

const mpq_class& Poly::leading_coeff() const {
  if (terms_.empty()) throw PolyError("leading term of zero polynomial");
  return terms_.begin()->second;
}

void Poly::add_term(const Mono& m, const mpq_class& c) {
  if (m.size() != nvars_) throw PolyError("monomial arity mismatch");
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  Poly r(nvars_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : o.terms_) {
      Mono m(nvars_);
      for (size_t i = 0; i < nvars_; ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

Poly Poly::scaled(const mpq_class& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [m, co] : terms_) r.add_term(m, co * c);
  return r;
}

size_t Poly::degree_in(size_t var) const {
  size_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max<size_t>(d, m[var]);
  return d;
}

Poly Poly::substituted(size_t var, const mpq_class& value) const {
  Poly r(nvars_);
  for (const auto& [m, c] : terms_) {
    mpq_class coeff = c;
    for (unsigned e = 0; e < m[var]; ++e) coeff *= value;
    Mono mm = m;
    mm[var] = 0;
    r.add_term(mm, coeff);
  }
  return r;
}

bool Poly::univariate_in(size_t var) const {
  for (const auto& [m, c] : terms_)
    for (size_t i = 0; i < nvars_; ++i)
      if (i != var && m[i] != 0) return false;
  return true;
}

std::vector<mpq_class> Poly::univariate_coeffs(size_t var) const {
  if (!univariate_in(var)) throw PolyError("polynomial is not univariate");
  std::vector<mpq_class> c(degree_in(var) + 1, mpq_class(0));
  for (const auto& [m, co] : terms_) c[m[var]] = co;
  return c;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << c.get_str();
    for (size_t i = 0; i < nvars_; ++i)
      if (m[i]) os << "*x" << i << "^" << m[i];
  }
  return os.str();
}

namespace {

bool mono_divides(const Mono& a, const Mono& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Mono mono_div(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

Mono mono_lcm(const Mono& a, const Mono& b) {
  Mono r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

Poly mono_poly(size_t nvars, const Mono& m, const mpq_class& c) {
  Poly p(nvars);
  p.add_term(m, c);
  return p;
}

}  // namespace

Poly reduce(const Poly& f, const std::vector<Poly>& g) {
  Poly rem(f.nvars());
  Poly work = f;
  while (!work.is_zero()) {
    bool divided = false;
    for (const Poly& d : g) {
      if (d.is_zero()) continue;
      if (mono_divides(d.leading_mono(), work.leading_mono())) {
        const Mono q = mono_div(work.leading_mono(), d.leading_mono());
        const mpq_class c = work.leading_coeff() / d.leading_coeff();
        work = work - d * mono_poly(f.nvars(), q, c);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem.add_term(work.leading_mono(), work.leading_coeff());
      Poly next(f.nvars());
      bool first = true;
      for (const auto& [m, c] : work.terms()) {
        if (first) {
          first = false;
          continue;
        }
        next.add_term(m, c);
      }
      work = std::move(next);
    }
  }
  return rem;
}

std::vector<Poly> groebner(std::vector<Poly> gens) {
  std::vector<Poly> basis;
  for (Poly& p : gens)
    if (!p.is_zero()) basis.push_back(p.scaled(1 / p.leading_coeff()));
  if (basis.empty()) return basis;
  const size_t nvars = basis[0].nvars();

  std::vector<std::pair<size_t, size_t>> pairs;
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) pairs.emplace_back(i, j);

  while (!pairs.empty()) {
    const auto [i, j] = pairs.back();
    pairs.pop_back();
    const Mono lcm = mono_lcm(basis[i].leading_mono(), basis[j].leading_mono());
    // Buchberger's coprimality criterion.
    {
      Mono prod(nvars);
      bool coprime = true;
      for (size_t v = 0; v < nvars; ++v) {
        prod[v] = basis[i].leading_mono()[v] + basis[j].leading_mono()[v];
        if (prod[v] != lcm[v]) coprime = false;
      }
      if (coprime) continue;
    }
    const Poly spoly =
        basis[i] * mono_poly(nvars, mono_div(lcm, basis[i].leading_mono()), 1) -
        basis[j] * mono_poly(nvars, mono_div(lcm, basis[j].leading_mono()), 1);
    Poly r = reduce(spoly, basis);
    if (r.is_zero()) continue;
    r = r.scaled(1 / r.leading_coeff());
    for (size_t k = 0; k < basis.size(); ++k) pairs.emplace_back(k, basis.size());
    basis.push_back(std::move(r));
  }

  // Minimalize: drop polys whose lead is divisible by another lead.
  std::vector<Poly> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(basis[j].leading_mono(), basis[i].leading_mono())) {
        // Tie-break equal leads so exactly one survives.
        if (basis[i].leading_mono() == basis[j].leading_mono())
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  // Inter-reduce for a canonical reduced basis.
  std::vector<Poly> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Poly> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly r = reduce(minimal[i], others);
    if (!r.is_zero()) reduced.push_back(r.scaled(1 / r.leading_coeff()));
  }
  std::sort(reduced.begin(), reduced.end(), [](const Poly& a, const Poly& b) {
    return MonoLexGreater()(b.leading_mono(), a.leading_mono());
  });
  return reduced;
}

namespace {

// ---- exact univariate machinery (integer polynomials, ascending) ----

using ZPoly = std::vector<mpz_class>;  // ascending, normalized (back() != 0)

void znormalize(ZPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

void zstrip_content(ZPoly& p) {
  mpz_class g(0);
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0 || g == 1) return;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly zderivative(const ZPoly& p) {
  ZPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(mpz_class(p[i] * (long)i));
  znormalize(d);
  return d;
}

// Signed pseudo-remainder with positive scalings only (Sturm-safe):
// repeatedly scale by |lc(g)| and subtract a multiple of g.
ZPoly zpseudo_rem(ZPoly f, const ZPoly& g) {
  znormalize(f);
  const mpz_class lg = g.back();
  const mpz_class alg_ = abs(lg);
  const int sg = sgn(lg);
  (void)sg;
  while (f.size() >= g.size() && !f.empty()) {
    for (auto& c : f) c *= alg_;
    // After scaling by |lc(g)| the leading coefficient is divisible by lc(g).
    mpz_class qq;
    mpz_divexact(qq.get_mpz_t(), f.back().get_mpz_t(), lg.get_mpz_t());
    const size_t shift = f.size() - g.size();
    for (size_t i = 0; i < g.size(); ++i) f[shift + i] -= qq * g[i];
    znormalize(f);
  }
  return f;
}

// Sturm chain of a squarefree integer polynomial.
std::vector<ZPoly> sturm_chain(const ZPoly& p) {
  std::vector<ZPoly> chain;
  chain.push_back(p);
  ZPoly d = zderivative(p);
  if (d.empty()) return chain;
  zstrip_content(d);
  chain.push_back(d);
  while (chain.back().size() > 1) {
    ZPoly r = zpseudo_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) throw PolyError("sturm chain hit a repeated root");
    for (auto& c : r) c = -c;
    zstrip_content(r);
    chain.push_back(std::move(r));
  }
  return chain;
}

// Evaluates p at m + 1/2.
mpq_class zeval_half(const ZPoly& p, const mpz_class& m) {
  const mpq_class x = mpq_class(2 * m + 1) / 2;
  mpq_class v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + mpq_class(p[i]);
  return v;
}

int variations_at_half(const std::vector<ZPoly>& chain, const mpz_class& m) {
  int count = 0, last = 0;
  for (const ZPoly& p : chain) {
    const int s = sgn(zeval_half(p, m));
    if (s == 0) continue;
    if (last != 0 && s != last) ++count;
    last = s;
  }
  return count;
}

mpz_class zeval_int(const ZPoly& p, const mpz_class& x) {
  mpz_class v(0);
  for (size_t i = p.size(); i-- > 0;) v = v * x + p[i];
  return v;
}

// All integer roots of a squarefree monic integer polynomial, via Sturm
// counts on half-integer endpoints (never roots of a monic polynomial) and
// bisection down to unit intervals.
std::vector<mpz_class> integer_roots_monic(const ZPoly& p) {
  std::vector<mpz_class> roots;
  if (p.size() <= 1) return roots;
  const std::vector<ZPoly> chain = sturm_chain(p);
  mpz_class bound(1);
  for (size_t i = 0; i + 1 < p.size(); ++i) {
    const mpz_class a = abs(p[i]);
    if (a >= bound) bound = a + 1;
  }
  // Intervals (lo + 1/2, hi + 1/2] stored as integer endpoint pairs.
  std::vector<std::pair<mpz_class, mpz_class>> stack;
  stack.emplace_back(-bound - 1, bound);
  while (!stack.empty()) {
    auto [lo, hi] = stack.back();
    stack.pop_back();
    const int nroots = variations_at_half(chain, lo) - variations_at_half(chain, hi);
    if (nroots <= 0) continue;
    if (hi - lo == 1) {
      if (zeval_int(p, hi) == 0) roots.push_back(hi);
      continue;
    }
    const mpz_class mid = lo + (hi - lo) / 2;
    stack.emplace_back(lo, mid);
    stack.emplace_back(mid, hi);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Exact division of univariate rationals (error if not divisible).
std::vector<mpq_class> qpoly_divide(const std::vector<mpq_class>& num,
                                    const std::vector<mpq_class>& den) {
  std::vector<mpq_class> n = num, d = den;
  while (!n.empty() && n.back() == 0) n.pop_back();
  while (!d.empty() && d.back() == 0) d.pop_back();
  if (d.empty()) throw PolyError("division by zero polynomial");
  if (n.size() < d.size()) throw PolyError("inexact polynomial division");
  std::vector<mpq_class> q(n.size() - d.size() + 1, mpq_class(0));
  while (n.size() >= d.size() && !n.empty()) {
    const mpq_class c = n.back() / d.back();
    const size_t shift = n.size() - d.size();
    q[shift] = c;
    for (size_t i = 0; i < d.size(); ++i) n[shift + i] -= c * d[i];
    while (!n.empty() && n.back() == 0) n.pop_back();
  }
  if (!n.empty()) throw PolyError("inexact polynomial division");
  return q;
}

std::vector<mpq_class> qpoly_rem(std::vector<mpq_class> n, const std::vector<mpq_class>& d) {
  while (!n.empty() && n.back() == 0) n.pop_back();
  while (n.size() >= d.size() && !n.empty()) {
    const mpq_class c = n.back() / d.back();
    const size_t shift = n.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i) n[shift + i] -= c * d[i];
    while (!n.empty() && n.back() == 0) n.pop_back();
  }
  return n;
}

std::vector<mpq_class> qpoly_gcd(std::vector<mpq_class> a, std::vector<mpq_class> b) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  while (!b.empty() && b.back() == 0) b.pop_back();
  while (!b.empty()) {
    auto r = qpoly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const mpq_class lc = a.back();
    for (auto& c : a) c /= lc;
  }
  return a;
}

}  // namespace

std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs) {
  std::vector<mpq_class> p = coeffs;
  while (!p.empty() && p.back() == 0) p.pop_back();
  if (p.empty()) throw PolyError("rational_roots of the zero polynomial");
  std::vector<mpq_class> roots;
  if (p.size() == 1) return roots;

  // Factor out x^k.
  size_t k = 0;
  while (k < p.size() && p[k] == 0) ++k;
  if (k > 0) {
    roots.push_back(0);
    p.erase(p.begin(), p.begin() + k);
  }
  if (p.size() > 1) {
    // Squarefree part.
    std::vector<mpq_class> deriv;
    for (size_t i = 1; i < p.size(); ++i) deriv.push_back(p[i] * (long)i);
    const auto g = qpoly_gcd(p, deriv);
    if (g.size() > 1) p = qpoly_divide(p, g);
  }
  if (p.size() > 1) {
    // Integerize and take the primitive part.
    mpz_class den(1);
    for (const auto& c : p) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den().get_mpz_t());
    ZPoly z;
    for (const auto& c : p) z.push_back(mpz_class(c.get_num() * (den / c.get_den())));
    zstrip_content(z);
    // Monic substitution y = lc * x: rational roots of z correspond to
    // integer roots of h(y) = lc^{deg-1} z(y / lc), h_i = z_i lc^{deg-1-i}.
    const mpz_class lc = z.back();
    const size_t deg = z.size() - 1;
    ZPoly h(z.size());
    h[deg] = 1;
    mpz_class pow(1);
    for (size_t i = deg; i-- > 0;) {
      h[i] = z[i] * pow;
      pow *= lc;
    }
    for (const mpz_class& y : integer_roots_monic(h)) {
      mpq_class r(y, lc);
      r.canonicalize();
      roots.push_back(r);
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

namespace {

// ---- graded reverse lexicographic Groebner machinery for solving ----
//
// Lex bases are what the elimination-theoretic API above exposes, but they
// are a poor fit for actually solving: lex Buchberger runs produce huge
// intermediate polynomials even on four quadratics.  The solver below works
// in degrevlex, where degrees stay at the Bezout level, and then extracts
// the candidates for one coordinate at a time as rational roots of that
// coordinate's minimal polynomial on the (finite-dimensional) quotient.

struct MonoDrlGreater {
  bool operator()(const Mono& a, const Mono& b) const {
    unsigned long da = 0, db = 0;
    for (unsigned e : a) da += e;
    for (unsigned e : b) db += e;
    if (da != db) return da > db;
    // Ties break reverse-lexicographically: larger means a smaller exponent
    // at the last position where the monomials differ.
    for (size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i];
    }
    return false;
  }
};

using GMap = std::map<Mono, mpq_class, MonoDrlGreater>;

void gp_add(GMap& f, const Mono& m, const mpq_class& c) {
  if (c == 0) return;
  auto [it, fresh] = f.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) f.erase(it);
  }
}

// f -= c * x^shift * g.
void gp_sub_scaled(GMap& f, const GMap& g, const Mono& shift, const mpq_class& c) {
  for (const auto& [m, co] : g) {
    Mono mm(m.size());
    for (size_t i = 0; i < m.size(); ++i) mm[i] = m[i] + shift[i];
    gp_add(f, mm, -c * co);
  }
}

GMap to_gmap(const Poly& p) {
  GMap f;
  for (const auto& [m, c] : p.terms()) f.emplace(m, c);
  return f;
}

// Full normal form of f modulo a monic basis.
GMap gp_reduce(GMap f, const std::vector<GMap>& basis) {
  GMap rem;
  while (!f.empty()) {
    const Mono lead = f.begin()->first;
    const mpq_class lc = f.begin()->second;
    bool divided = false;
    for (const GMap& d : basis) {
      if (d.empty()) continue;
      if (mono_divides(d.begin()->first, lead)) {
        gp_sub_scaled(f, d, mono_div(lead, d.begin()->first), lc / d.begin()->second);
        divided = true;
        break;
      }
    }
    if (!divided) {
      rem.emplace(lead, lc);
      f.erase(f.begin());
    }
  }
  return rem;
}

// Reduced degrevlex Groebner basis, monic, normal pair selection with
// Buchberger's coprimality criterion.
std::vector<GMap> gp_groebner(const std::vector<Poly>& gens) {
  std::vector<GMap> basis;
  for (const Poly& p : gens) {
    if (p.is_zero()) continue;
    GMap f = to_gmap(p);
    const mpq_class lc = f.begin()->second;
    for (auto& [m, c] : f) c /= lc;
    basis.push_back(std::move(f));
  }
  if (basis.empty()) return basis;
  const size_t nvars = basis[0].begin()->first.size();

  struct Pair {
    size_t i, j;
    Mono lcm;
    unsigned long deg;
  };
  std::vector<Pair> pairs;
  auto push_pair = [&](size_t i, size_t j) {
    const Mono& a = basis[i].begin()->first;
    const Mono& b = basis[j].begin()->first;
    Pair p{i, j, mono_lcm(a, b), 0};
    bool coprime = true;
    for (size_t v = 0; v < nvars; ++v) {
      p.deg += p.lcm[v];
      if (a[v] != 0 && b[v] != 0) coprime = false;
    }
    if (!coprime) pairs.push_back(std::move(p));
  };
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = i + 1; j < basis.size(); ++j) push_pair(i, j);

  while (!pairs.empty()) {
    // Normal selection: smallest lcm first keeps reductions short.
    size_t best = 0;
    for (size_t k = 1; k < pairs.size(); ++k) {
      if (pairs[k].deg < pairs[best].deg ||
          (pairs[k].deg == pairs[best].deg &&
           MonoDrlGreater{}(pairs[best].lcm, pairs[k].lcm)))
        best = k;
    }
    const Pair pr = pairs[best];
    pairs[best] = pairs.back();
    pairs.pop_back();

    GMap s;
    gp_sub_scaled(s, basis[pr.i], mono_div(pr.lcm, basis[pr.i].begin()->first), -1);
    gp_sub_scaled(s, basis[pr.j], mono_div(pr.lcm, basis[pr.j].begin()->first), 1);
    GMap r = gp_reduce(std::move(s), basis);
    if (r.empty()) continue;
    const mpq_class lc = r.begin()->second;
    for (auto& [m, c] : r) c /= lc;
    basis.push_back(std::move(r));
    for (size_t i = 0; i + 1 < basis.size(); ++i) push_pair(i, basis.size() - 1);
  }

  // Minimalize and inter-reduce.
  std::vector<GMap> minimal;
  for (size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < basis.size() && !redundant; ++j) {
      if (i == j) continue;
      if (mono_divides(basis[j].begin()->first, basis[i].begin()->first)) {
        if (basis[i].begin()->first == basis[j].begin()->first)
          redundant = j < i;
        else
          redundant = true;
      }
    }
    if (!redundant) minimal.push_back(basis[i]);
  }
  std::vector<GMap> reduced;
  for (size_t i = 0; i < minimal.size(); ++i) {
    std::vector<GMap> others;
    for (size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    GMap r = gp_reduce(minimal[i], others);
    if (r.empty()) continue;
    const mpq_class lc = r.begin()->second;
    for (auto& [m, c] : r) c /= lc;
    reduced.push_back(std::move(r));
  }
  return reduced;
}

// The monomials below the staircase of the leading terms.  Empty optional
// when some variable that occurs in the basis has no pure leading power
// (the quotient is infinite-dimensional) or the count exceeds the cap.
std::optional<std::vector<Mono>> standard_monomials(const std::vector<GMap>& gb,
                                                    size_t nvars) {
  std::vector<unsigned> bound(nvars, 0);
  std::vector<bool> occurs(nvars, false);
  for (const GMap& g : gb)
    for (const auto& [m, c] : g)
      for (size_t v = 0; v < nvars; ++v)
        if (m[v] != 0) occurs[v] = true;
  for (const GMap& g : gb) {
    const Mono& lm = g.begin()->first;
    size_t nz = 0, var = 0;
    for (size_t v = 0; v < nvars; ++v) {
      if (lm[v] != 0) {
        ++nz;
        var = v;
      }
    }
    if (nz == 1 && (bound[var] == 0 || lm[var] < bound[var])) bound[var] = lm[var];
  }
  for (size_t v = 0; v < nvars; ++v)
    if (occurs[v] && bound[v] == 0) return std::nullopt;

  unsigned long long count = 1;
  for (size_t v = 0; v < nvars; ++v) {
    count *= occurs[v] ? bound[v] : 1;
    if (count > 4096) return std::nullopt;
  }
  std::vector<Mono> box{Mono(nvars, 0)};
  for (size_t v = 0; v < nvars; ++v) {
    if (!occurs[v]) continue;
    std::vector<Mono> next;
    for (const Mono& m : box) {
      for (unsigned e = 0; e < bound[v]; ++e) {
        Mono mm = m;
        mm[v] = e;
        next.push_back(std::move(mm));
      }
    }
    box = std::move(next);
  }
  std::vector<Mono> standard;
  for (const Mono& m : box) {
    bool reducible = false;
    for (const GMap& g : gb) {
      if (mono_divides(g.begin()->first, m)) {
        reducible = true;
        break;
      }
    }
    if (!reducible) standard.push_back(m);
  }
  std::sort(standard.begin(), standard.end(), [](const Mono& a, const Mono& b) {
    return MonoDrlGreater{}(b, a);
  });
  return standard;
}

// Minimal polynomial of the coordinate x_var on Q[x]/I, as ascending
// coefficients.  Every solution's x_var value is a root of it.
std::vector<mpq_class> quotient_minpoly(const std::vector<GMap>& gb,
                                        const std::vector<Mono>& std_monos,
                                        size_t nvars, size_t var) {
  std::map<Mono, size_t, MonoDrlGreater> index;
  for (size_t i = 0; i < std_monos.size(); ++i) index.emplace(std_monos[i], i);
  const size_t dim = std_monos.size();

  // Echelon rows over the quotient coordinates, augmented by the power
  // combination that produced them.
  struct Row {
    std::vector<mpq_class> vec;
    std::vector<mpq_class> aug;
    size_t pivot;
  };
  std::vector<Row> rows;

  GMap power;  // normal form of x_var^k
  power.emplace(Mono(nvars, 0), mpq_class(1));
  for (size_t k = 0;; ++k) {
    std::vector<mpq_class> vec(dim, mpq_class(0));
    for (const auto& [m, c] : power) vec[index.at(m)] = c;
    std::vector<mpq_class> aug(k + 1, mpq_class(0));
    aug[k] = 1;
    for (const Row& r : rows) {
      if (vec[r.pivot] == 0) continue;
      const mpq_class f = vec[r.pivot];
      for (size_t i = 0; i < dim; ++i) vec[i] -= f * r.vec[i];
      for (size_t i = 0; i < r.aug.size(); ++i) aug[i] -= f * r.aug[i];
    }
    size_t pivot = dim;
    for (size_t i = 0; i < dim; ++i) {
      if (vec[i] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot == dim) return aug;  // dependence: the minimal polynomial
    const mpq_class pc = vec[pivot];
    for (auto& c : vec) c /= pc;
    for (auto& c : aug) c /= pc;
    rows.push_back(Row{std::move(vec), std::move(aug), pivot});
    if (k > dim) throw PolyError("minimal polynomial search failed to close");

    // power *= x_var, then reduce.
    GMap shifted;
    for (const auto& [m, c] : power) {
      Mono mm = m;
      mm[var] += 1;
      shifted.emplace(std::move(mm), c);
    }
    power = gp_reduce(std::move(shifted), gb);
  }
}

void solve_rec(const std::vector<Poly>& system, size_t nvars, size_t active,
               std::vector<mpq_class>& assignment, SolveResult& out) {
  // assignment holds values for variables active..nvars-1 (in reverse order
  // of substitution); polys have those variables already substituted.
  std::vector<Poly> live;
  for (const Poly& p : system) {
    if (p.is_zero()) continue;
    if (p.is_constant()) return;  // inconsistent branch, no solutions
    live.push_back(p);
  }
  if (live.empty()) {
    if (active == 0) {
      // All variables assigned and all constraints vanished.
      std::vector<mpq_class> sol(assignment.rbegin(), assignment.rend());
      out.solutions.push_back(std::move(sol));
    } else {
      // Remaining variables are unconstrained: positive-dimensional.
      out.complete = false;
    }
    return;
  }
  if (active == 0) return;  // unsatisfied constraints with nothing left to set

  const size_t var = active - 1;
  const std::vector<GMap> gb = gp_groebner(live);
  if (gb.size() == 1 && gb[0].size() == 1 &&
      std::all_of(gb[0].begin()->first.begin(), gb[0].begin()->first.end(),
                  [](unsigned e) { return e == 0; }))
    return;  // 1 lies in the ideal: no solutions

  bool var_constrained = false;
  for (const GMap& g : gb) {
    for (const auto& [m, c] : g)
      if (m[var] != 0) {
        var_constrained = true;
        break;
      }
    if (var_constrained) break;
  }
  if (!var_constrained) {
    // The ideal does not involve this coordinate, so solutions come in
    // one-parameter families.  Probing the zero slice decides whether the
    // rest of the system is rationally solvable at all: if it is, the branch
    // is genuinely infinite and completeness is lost; if not, it is empty.
    const size_t before = out.solutions.size();
    std::vector<Poly> next;
    for (const Poly& p : live) next.push_back(p.substituted(var, 0));
    assignment.push_back(0);
    solve_rec(next, nvars, active - 1, assignment, out);
    assignment.pop_back();
    if (out.solutions.size() > before) out.complete = false;
    return;
  }

  const auto std_monos = standard_monomials(gb, nvars);
  if (!std_monos) {
    // Positive-dimensional (or out of range): cannot enumerate this branch.
    out.complete = false;
    return;
  }
  const auto minpoly = quotient_minpoly(gb, *std_monos, nvars, var);
  for (const mpq_class& r : rational_roots(minpoly)) {
    std::vector<Poly> next;
    for (const Poly& p : live) next.push_back(p.substituted(var, r));
    assignment.push_back(r);
    solve_rec(next, nvars, active - 1, assignment, out);
    assignment.pop_back();
  }
}

}  // namespace

SolveResult solve_system_rational(const std::vector<Poly>& system, size_t nvars) {
  for (const Poly& p : system)
    if (p.nvars() != nvars) throw PolyError("system arity mismatch");
  SolveResult out;
  std::vector<mpq_class> assignment;
  solve_rec(system, nvars, nvars, assignment, out);
  std::sort(out.solutions.begin(), out.solutions.end());
  out.solutions.erase(std::unique(out.solutions.begin(), out.solutions.end()),
                      out.solutions.end());
  return out;
}

}  // namespace axtk
