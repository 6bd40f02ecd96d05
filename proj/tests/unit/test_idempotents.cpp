#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "axtk/catalog.hpp"
#include "axtk/idempotents.hpp"
#include "oracles/resultant_oracle.hpp"

using namespace axtk;

namespace {

std::vector<std::vector<mpq_class>> to_rational(const std::vector<Vec>& vs) {
  std::vector<std::vector<mpq_class>> out;
  for (const Vec& v : vs) {
    std::vector<mpq_class> r;
    for (const Scalar& s : v) r.push_back(s.as_rational());
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("2A idempotents, exact backend vs oracle") {
  auto ns = norton_sakuma(NSType::T2A);
  IdempotentQuery q;
  IdempotentResult r = find_idempotents(ns.algebra, q);
  CHECK(r.complete);
  // 0 and the axes are among the idempotents.
  CHECK(std::find(r.found.begin(), r.found.end(), zero_vec(3)) != r.found.end());
  for (const Vec& a : ns.axes)
    CHECK(std::find(r.found.begin(), r.found.end(), a) != r.found.end());
  auto id = identity_of(ns.algebra);
  REQUIRE(id.has_value());
  CHECK(std::find(r.found.begin(), r.found.end(), *id) != r.found.end());
  for (const Vec& v : r.found) CHECK(verify_idempotent(ns.algebra, v));
  // Complements of idempotents are idempotents: closed under 1 - e.
  for (const Vec& v : r.found)
    CHECK(std::find(r.found.begin(), r.found.end(), vec_sub(*id, v)) != r.found.end());

  oracle::OracleResult o = oracle::oracle_solve(
      oracle::idempotent_system(ns.algebra, std::nullopt), 3);
  REQUIRE(o.complete);
  CHECK(to_rational(r.found) == o.solutions);
}

TEST_CASE("2B idempotents of length 2") {
  auto ns = norton_sakuma(NSType::T2B);
  IdempotentQuery q;
  q.target_length = Scalar(2);
  IdempotentResult r = find_idempotents(ns.algebra, q);
  CHECK(r.complete);
  // Only a0 + a1 has length 2 in the 2B algebra.
  REQUIRE(r.found.size() == 1);
  CHECK(r.found[0] == vec_add(ns.axes[0], ns.axes[1]));

  oracle::OracleResult o = oracle::oracle_solve(
      oracle::idempotent_system(ns.algebra, mpq_class(2)), 2);
  REQUIRE(o.complete);
  CHECK(to_rational(r.found) == o.solutions);
}

TEST_CASE("length shortcuts") {
  auto ns = norton_sakuma(NSType::T2A);
  IdempotentQuery q;
  q.target_length = Scalar(0);
  IdempotentResult r = find_idempotents(ns.algebra, q);
  CHECK(r.complete);
  REQUIRE(r.found.size() == 1);
  CHECK(r.found[0] == zero_vec(3));
  // Negative length: empty, certified.
  q.target_length = Scalar(-1);
  IdempotentResult rn = find_idempotents(ns.algebra, q);
  CHECK(rn.complete);
  CHECK(rn.found.empty());
}

TEST_CASE("exact backend vs oracle across small catalog algebras") {
  for (NSType t : {NSType::T2A, NSType::T2B, NSType::T3C, NSType::T3A}) {
    auto ns = norton_sakuma(t);
    if (ns.algebra.dim() > 4) continue;
    IdempotentResult r = find_idempotents(ns.algebra, IdempotentQuery{});
    CHECK(r.complete);
    oracle::OracleResult o = oracle::oracle_solve(
        oracle::idempotent_system(ns.algebra, std::nullopt), ns.algebra.dim());
    REQUIRE(o.complete);
    CHECK(to_rational(r.found) == o.solutions);
    for (const Vec& v : r.found) CHECK(verify_idempotent(ns.algebra, v));
  }
}

TEST_CASE("exact backend refuses large dimensions") {
  auto ns = norton_sakuma(NSType::T4A);  // dim 5
  CHECK_THROWS_AS(find_idempotents(ns.algebra, IdempotentQuery{}), IdempotentError);
}

TEST_CASE("newton backend finds the known idempotents of 5A") {
  auto ns = norton_sakuma(NSType::T5A);
  IdempotentQuery q;
  q.backend = IdemBackend::newton_reconstruct;
  q.seed = 7;
  IdempotentResult r = find_idempotents(ns.algebra, q);
  CHECK_FALSE(r.complete);
  // The zero vector and the unit-vector axes sit on the start lattice, so
  // Newton recovers them immediately; everything found verifies exactly.
  CHECK(std::find(r.found.begin(), r.found.end(), zero_vec(6)) != r.found.end());
  for (const Vec& a : ns.axes)
    CHECK(std::find(r.found.begin(), r.found.end(), a) != r.found.end());
  for (const Vec& v : r.found) CHECK(verify_idempotent(ns.algebra, v));
}

TEST_CASE("newton backend propagates through symmetries") {
  auto ns = norton_sakuma(NSType::T6A);
  FusionLaw law = monster_law();
  IdempotentQuery q;
  q.backend = IdemBackend::newton_reconstruct;
  q.budget = 200;
  q.symmetries = {miyamoto_map(ns.algebra, ns.axes[0], law).matrix,
                  miyamoto_map(ns.algebra, ns.axes[1], law).matrix};
  IdempotentResult r = find_idempotents(ns.algebra, q);
  // The axes form orbits under the taus; whatever was found is closed.
  for (const Vec& v : r.found) {
    CHECK(verify_idempotent(ns.algebra, v));
    for (const Matrix& s : q.symmetries) {
      Vec img = s.apply(v);
      CHECK(std::find(r.found.begin(), r.found.end(), img) != r.found.end());
    }
  }
  // Non-automorphism symmetry is rejected.
  Matrix bogus(8, 8);
  bogus.at(0, 0) = Scalar(2);
  IdempotentQuery qb;
  qb.backend = IdemBackend::newton_reconstruct;
  qb.symmetries = {bogus};
  CHECK_THROWS_AS(find_idempotents(ns.algebra, qb), IdempotentError);
}

TEST_CASE("oracle agrees on a handcrafted system") {
  // x^2 - 1 = 0, (x - 1) y = 0, y^2 - y = 0:
  // solutions (1, 0), (1, 1), (-1, 0).
  Poly x = Poly::variable(2, 0), y = Poly::variable(2, 1);
  Poly one = Poly::constant(2, 1);
  std::vector<Poly> sys = {x * x - one, (x - one) * y, y * y - y};
  oracle::OracleResult o = oracle::oracle_solve(sys, 2);
  REQUIRE(o.complete);
  std::vector<std::vector<mpq_class>> want = {
      {mpq_class(-1), mpq_class(0)}, {mpq_class(1), mpq_class(0)}, {mpq_class(1), mpq_class(1)}};
  CHECK(o.solutions == want);
  // Library solver agrees.
  SolveResult s = solve_system_rational(sys, 2);
  CHECK(s.complete);
  REQUIRE(s.solutions.size() == 3);
}

TEST_CASE("target length requires a definite form") {
  Algebra a({"x", "y"});
  a.set_product(0, 0, Vec{Scalar(1), Scalar(0)});
  a.set_product(0, 1, Vec{Scalar(0), Scalar(0)});
  a.set_product(1, 1, Vec{Scalar(0), Scalar(1)});
  a.set_form_entry(0, 0, Scalar(1));
  a.set_form_entry(0, 1, Scalar(0));
  a.set_form_entry(1, 1, Scalar(-1));  // indefinite
  IdempotentQuery q;
  q.target_length = Scalar(1);
  CHECK_THROWS_AS(find_idempotents(a, q), IdempotentError);
}
