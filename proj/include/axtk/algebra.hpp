#pragma once

#include <string>
#include <vector>

#include "axtk/matrix.hpp"

namespace axtk {

struct AlgebraError : Error {
  using Error::Error;
};

// Finite-dimensional commutative (not associative) algebra given by its
// structure constants, with an optional symmetric bilinear form.  Products
// are stored per unordered basis pair.
class Algebra {
 public:
  Algebra() = default;
  Algebra(std::vector<std::string> basis_names, FieldPtr field = nullptr);

  size_t dim() const { return names_.size(); }
  const std::vector<std::string>& basis_names() const { return names_; }
  const FieldPtr& field() const { return field_; }
  size_t index_of(const std::string& name) const;  // error if absent

  // Build-time: set b_i * b_j (= b_j * b_i).  Re-setting a pair is an error.
  void set_product(size_t i, size_t j, Vec p);
  bool product_set(size_t i, size_t j) const;
  const Vec& basis_product(size_t i, size_t j) const;  // error if unset
  // Verifies every unordered pair has a product.
  void check_complete() const;

  bool has_form() const { return has_form_; }
  // True when every unordered pair has received a form value.
  bool form_complete() const;
  void set_form_entry(size_t i, size_t j, Scalar v);
  const Scalar& form_entry(size_t i, size_t j) const;
  Matrix gram() const;
  void clear_form();

  Vec multiply(const Vec& u, const Vec& v) const;
  Scalar form(const Vec& u, const Vec& v) const;  // error if no form

 private:
  std::vector<std::string> names_;
  FieldPtr field_;
  std::vector<Vec> products_;      // triangular index, empty = unset
  std::vector<Scalar> form_;       // triangular index
  std::vector<bool> form_set_;
  bool has_form_ = false;

  size_t tri(size_t i, size_t j) const;
};

// Left-multiplication matrix ad_a : x -> a*x in the basis of alg.
Matrix adjoint_matrix(const Algebra& alg, const Vec& a);

// Eigenspace of ad_a for the given eigenvalue (canonical kernel basis).
SubspaceBasis eigenspace(const Algebra& alg, const Vec& a, const Scalar& lambda);

// The two-sided identity, if one exists.
std::optional<Vec> identity_of(const Algebra& alg);

// Smallest subalgebra containing the generators, with its closure degree:
// the least k such that the span of all degree-<=k products stabilizes.
// No generators gives the zero subspace with degree 0.
std::pair<SubspaceBasis, size_t> subalgebra_generated(const Algebra& alg,
                                                      const std::vector<Vec>& gens);

// Orthogonal direct sum; forms combine when both summands carry one.  Basis
// names from the right summand get a prime appended on collision.
Algebra direct_sum(const Algebra& a, const Algebra& b);

// A product-closed subspace re-expressed as a standalone algebra on the
// basis of u (error if not closed).  The embedding of the view's basis
// vector j into alg is u.vectors[j]; the form (if any) restricts.
Algebra subalgebra_view(const Algebra& alg, const SubspaceBasis& u,
                        const std::string& name_prefix = "u");

// Length (v, v) w.r.t. the algebra's form.
Scalar length_of(const Algebra& alg, const Vec& v);

}  // namespace axtk
