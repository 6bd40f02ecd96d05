#pragma once

#include "axtk/fusion.hpp"

namespace axtk {

struct DecomposeError : Error {
  using Error::Error;
};

struct JointDecomposition {
  std::vector<Vec> axes;
  // Nonzero joint eigenspaces, keyed by the tuple of eigenvalue indices
  // (one per axis, indexing law.eigenvalues()); sorted lexicographically.
  std::vector<std::pair<std::vector<size_t>, SubspaceBasis>> summands;
  // Orthogonal complement of the sum, when a form is available and the sum
  // is proper; absent otherwise.
  std::optional<SubspaceBasis> residual;
};

// Simultaneous eigenspace decomposition w.r.t. a set of axes (each must pass
// check_axis).  Branches of the intersection tree are cut as soon as they
// collapse to zero.
JointDecomposition joint_decomposition(const Algebra& alg, const std::vector<Vec>& axes,
                                       const FusionLaw& law, bool use_form = true);

// Intersection of the fixed spaces of verified automorphisms, checked to be
// product-closed.  No maps fixes everything.
SubspaceBasis fixed_subalgebra(const Algebra& alg, const std::vector<Matrix>& maps);

struct ExtensionSpace {
  SubspaceBasis u, w;
  Matrix psi;                 // automorphism of U, in U-basis coordinates
  std::vector<Matrix> basis;  // solutions phi (w.dim x w.dim, W-basis coords)
};

// Linear maps phi of the U-module W compatible with the subalgebra
// automorphism psi: psi(u) * phi(x) = phi(u * x) for u in U, x in W.
// Errors: U not product-closed, psi not an automorphism of U, or W not a
// U-module (reported with a witnessing basis pair).
ExtensionSpace extension_space(const Algebra& alg, const SubspaceBasis& u,
                               const Matrix& psi, const SubspaceBasis& w);

// A partial linear map: images[ :, j] is the image of space.vectors[j].
struct AutomorphismPiece {
  SubspaceBasis space;
  Matrix images;
};

struct AssembleResult {
  std::optional<Automorphism> map;
  std::string failure;  // first multiplicative inconsistency, when map is absent
};

// Extends the pieces to a full algebra automorphism by closing under
// products.  Overlap inconsistencies between pieces and failure to generate
// the whole algebra are errors; a multiplicative inconsistency or a
// non-automorphism result is reported in AssembleResult::failure.
AssembleResult assemble_automorphism(const Algebra& alg,
                                     const std::vector<AutomorphismPiece>& pieces);

}  // namespace axtk
