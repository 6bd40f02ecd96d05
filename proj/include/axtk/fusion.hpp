#pragma once

#include <set>

#include "axtk/algebra.hpp"
#include "axtk/perm.hpp"

namespace axtk {

struct FusionError : Error {
  using Error::Error;
};

// Fusion law: distinct eigenvalues (1 required), a symmetric table of
// allowed eigenvalue sets per pair, and an optional Z/2 grading that must be
// a morphism of the law.
class FusionLaw {
 public:
  FusionLaw(std::vector<Scalar> eigenvalues,
            std::vector<std::vector<std::set<size_t>>> table,
            std::optional<std::vector<int>> grading);

  size_t size() const { return eigenvalues_.size(); }
  const std::vector<Scalar>& eigenvalues() const { return eigenvalues_; }
  const std::set<size_t>& fuse(size_t i, size_t j) const;
  bool graded() const { return grading_.has_value(); }
  int grade(size_t i) const;
  std::optional<size_t> index_of(const Scalar& lambda) const;
  // Seress: 0 * lambda is contained in {lambda} for every lambda (vacuous
  // when 0 is not an eigenvalue).
  bool seress() const;

 private:
  std::vector<Scalar> eigenvalues_;
  std::vector<std::vector<std::set<size_t>>> table_;
  std::optional<std::vector<int>> grading_;
};

// A verified linear automorphism of an algebra.
struct Automorphism {
  Matrix matrix;
  std::string provenance;
  Vec apply(const Vec& v) const { return matrix.apply(v); }
};

struct FusionViolation {
  size_t lam, mu, nu;  // A_lam * A_mu produced a component in A_nu outside the law
};

struct AxisReport {
  bool is_idempotent = false;
  bool is_axis = false;
  bool is_primitive = false;
  std::vector<size_t> eigen_dims;  // indexed like law.eigenvalues()
  size_t missing_dim = 0;          // dim minus sum of eigenspace dims
  std::vector<FusionViolation> violations;
};

// Full axis analysis of a nonzero vector: idempotency, eigenspace
// dimensions over the law's eigenvalues, diagonalizability deficit and
// fusion-law confinement.  a = 0 is an error; a non-idempotent a yields a
// report with is_idempotent = false, never an exception.
AxisReport check_axis(const Algebra& alg, const Vec& a, const FusionLaw& law);

bool is_automorphism(const Algebra& alg, const Matrix& m);

// Miyamoto involution of an axis: negates the negatively graded part.
// Errors: law not graded, a fails check_axis, or result not an automorphism.
Automorphism miyamoto_map(const Algebra& alg, const Vec& a, const FusionLaw& law);

// Jordan axis test: a passes check_axis and the negatively graded part is
// zero.  For such an axis sigma_map negates every eigenspace outside {1, 0}.
bool is_jordan_axis(const Algebra& alg, const Vec& a, const FusionLaw& law);
Automorphism sigma_map(const Algebra& alg, const Vec& a, const FusionLaw& law);

struct AxetClosure {
  std::vector<Vec> axes;          // breadth-first discovery order, seeds first
  std::vector<Perm> tau_perms;    // action of tau_{axes[i]} on the axet
  PermGroup miyamoto;             // group generated by the tau permutations
};

// Closes the seed axes under all Miyamoto involutions of discovered axes.
// Discovery order: seeds in input order, then images ordered by generator
// index and source index; duplicates recognized by exact coordinates.
// Exceeding the cap is an error.
AxetClosure axet_closure(const Algebra& alg, const std::vector<Vec>& seeds,
                         const FusionLaw& law, size_t cap = 10000);

// Pairs of distinct axet members with identical Miyamoto involutions.
std::vector<std::pair<size_t, size_t>> find_twins(const Algebra& alg,
                                                  const std::vector<Vec>& axes,
                                                  const FusionLaw& law);

}  // namespace axtk
