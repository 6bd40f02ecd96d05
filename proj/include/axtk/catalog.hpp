#pragma once

#include "axtk/fusion.hpp"

namespace axtk {

struct CatalogError : Error {
  using Error::Error;
};

enum class NSType { T2A, T2B, T3A, T3C, T4A, T4B, T5A, T6A };

const std::vector<NSType>& all_ns_types();
std::string ns_type_name(NSType t);
NSType ns_type_from_name(const std::string& name);  // error if unknown

struct NortonSakuma {
  NSType type;
  Algebra algebra;          // carries the Frobenius form
  std::vector<Vec> axes;    // a0, a1 first, then the remaining axes
  std::vector<std::string> axis_names;
};

// The dihedral algebra of the given type, built by closing the defining
// products under the index symmetries; every basis pair acquires exactly one
// consistent product or construction fails.
NortonSakuma norton_sakuma(NSType t);

// Length of the algebra identity w.r.t. the built-in form (computed, and an
// error if the algebra had no identity).
Scalar identity_length(NSType t);

enum class LawKind { monster, almost_monster, jordan };

// Built-in fusion laws; parameters must be distinct and avoid 1 and 0.
// monster / almost_monster take (alpha, beta), jordan takes (alpha).
FusionLaw make_law(LawKind kind, const std::vector<Scalar>& params);
FusionLaw monster_law();  // make_law(monster, {1/4, 1/32})

struct MatsuoAlgebra {
  Algebra algebra;
  std::vector<Vec> axes;            // the basis vectors, in class order
  std::vector<Perm> transpositions; // the 3-transposition class, sorted
};

// Matsuo algebra of the conjugacy class of class_rep in g with parameter
// eta (not 0 or 1): basis = class, a*a = a, a*b = 0 when a,b commute and
// (eta/2)(a + b - aba) when |ab| = 3; |ab| > 3 is an error.
MatsuoAlgebra matsuo_algebra(const PermGroup& g, const Perm& class_rep, const Scalar& eta);

}  // namespace axtk
