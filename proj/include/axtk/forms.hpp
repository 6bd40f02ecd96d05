#pragma once

#include "axtk/algebra.hpp"

namespace axtk {

struct FormsError : Error {
  using Error::Error;
};

// Basis of the space of Frobenius forms: symmetric bilinear forms with
// (xy, z) = (x, yz) for all basis triples.  Returned as Gram matrices from
// the canonical kernel basis of the defining linear system (unknowns are the
// upper-triangular entries in column-major triangular order).
std::vector<Matrix> frobenius_space(const Algebra& alg);

// Orthogonal complement of a subspace w.r.t. the algebra's form; errors if
// the algebra has no form or the form is degenerate on the subspace (the
// subspace meets its own complement).
SubspaceBasis orthogonal_complement(const Algebra& alg, const SubspaceBasis& u);

}  // namespace axtk
