#pragma once

#include "axtk/algebra.hpp"

namespace axtk {

struct IdempotentError : Error {
  using Error::Error;
};

enum class IdemBackend { exact_small, newton_reconstruct };

struct IdempotentQuery {
  // Restrict to idempotents of this length; requires a positive-definite
  // form on the algebra (indefinite forms are rejected).
  std::optional<Scalar> target_length;
  IdemBackend backend = IdemBackend::exact_small;
  uint64_t seed = 0;
  // Maximum number of Newton starting points; 0 selects the default
  // (2^min(dim,10) subset indicators plus 64 seeded starts).
  size_t budget = 0;
  // Known automorphisms used to propagate found idempotents through orbits.
  std::vector<Matrix> symmetries;
};

struct IdempotentResult {
  std::vector<Vec> found;  // exact, verified, sorted
  // True only when the backend certifies exhaustiveness over the rationals;
  // newton_reconstruct never certifies (outside the length-0 shortcut).
  bool complete = false;
  // Newton solutions that converged numerically but resisted exact rational
  // reconstruction; reported separately, never merged into `found`.
  std::vector<std::vector<double>> numeric_only;
};

// Searches for idempotents, optionally of a fixed length.  exact_small
// solves the polynomial system by Groebner elimination (dimension <= 4,
// rational structure constants) and certifies completeness over Q;
// newton_reconstruct runs high-precision Newton iteration from a
// deterministic lattice of starting points and reconstructs exact rational
// coordinates, verifying every candidate exactly.
IdempotentResult find_idempotents(const Algebra& alg, const IdempotentQuery& query);

bool verify_idempotent(const Algebra& alg, const Vec& v);

}  // namespace axtk
