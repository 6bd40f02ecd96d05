#pragma once

#include <gmpxx.h>

#include <map>
#include <vector>

#include "axtk/scalar.hpp"

namespace axtk {

struct PolyError : Error {
  using Error::Error;
};

// Monomial as an exponent vector; compared in lexicographic order with
// variable 0 most significant.
using Mono = std::vector<unsigned>;

struct MonoLexGreater {
  bool operator()(const Mono& a, const Mono& b) const;
};

// Multivariate polynomial over Q with a fixed number of variables; terms
// kept sorted with the leading term first.
class Poly {
 public:
  explicit Poly(size_t nvars) : nvars_(nvars) {}
  static Poly constant(size_t nvars, const mpq_class& c);
  static Poly variable(size_t nvars, size_t i);

  size_t nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  const Mono& leading_mono() const;
  const mpq_class& leading_coeff() const;
  const std::map<Mono, mpq_class, MonoLexGreater>& terms() const { return terms_; }

  void add_term(const Mono& m, const mpq_class& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const mpq_class& c) const;

  size_t degree_in(size_t var) const;
  // Substitutes var := value; the variable disappears from all monomials.
  Poly substituted(size_t var, const mpq_class& value) const;
  // True when every monomial uses only the given variable.
  bool univariate_in(size_t var) const;
  // Ascending coefficient vector of a poly univariate in var.
  std::vector<mpq_class> univariate_coeffs(size_t var) const;

  std::string str() const;

 private:
  size_t nvars_;
  std::map<Mono, mpq_class, MonoLexGreater> terms_;
};

// Full reduction of f modulo the set g (multivariate division remainder).
Poly reduce(const Poly& f, const std::vector<Poly>& g);

// Buchberger's algorithm in lex order; returns a reduced Groebner basis.
std::vector<Poly> groebner(std::vector<Poly> gens);

// All rational roots of a nonzero univariate polynomial (ascending
// coefficients), found by squarefree reduction, the monic substitution
// y = lc * x and Sturm-bisection integer root isolation; exact and
// exhaustive.  Roots are returned sorted and distinct.
std::vector<mpq_class> rational_roots(const std::vector<mpq_class>& coeffs);

struct SolveResult {
  std::vector<std::vector<mpq_class>> solutions;  // sorted lexicographically
  // True when the solver certifies it found every rational solution; false
  // when a positive-dimensional branch was detected and abandoned.
  bool complete = true;
};

// All rational solutions of a polynomial system, by lex Groebner elimination
// and recursive back-substitution over the rational roots of each branch's
// eliminant.
SolveResult solve_system_rational(const std::vector<Poly>& system, size_t nvars);

}  // namespace axtk
