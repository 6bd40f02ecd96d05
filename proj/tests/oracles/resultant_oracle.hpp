#pragma once

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "axtk/algebra.hpp"
#include "axtk/polysolve.hpp"

namespace axtk::oracle {

struct OracleResult {
  std::vector<std::vector<mpq_class>> solutions;  // sorted lexicographically
  bool complete = true;
};

// Independent cross-check solver for small rational polynomial systems:
// successive Sylvester resultants with leading-coefficient case splits
// produce a candidate superset, exhaustive back-substitution extends the
// partial points, and exact verification against the original system trims
// the extraneous candidates.  Shares only the univariate rational root
// finder with the library solver.
OracleResult oracle_solve(const std::vector<Poly>& system, size_t nvars);

// The idempotent system v*v - v = 0 (plus an optional length equation),
// assembled here independently of the library's search code.
std::vector<Poly> idempotent_system(const Algebra& alg,
                                    const std::optional<mpq_class>& length);

}  // namespace axtk::oracle
