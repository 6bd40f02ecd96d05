#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>

#include "axtk/catalog.hpp"
#include "axtk/fixtures.hpp"

using namespace axtk;

TEST_CASE("type names round trip") {
  for (NSType t : all_ns_types()) CHECK(ns_type_from_name(ns_type_name(t)) == t);
  CHECK(ns_type_name(NSType::T2A) == "2A");
  CHECK_THROWS_AS(ns_type_from_name("7A"), CatalogError);
}

TEST_CASE("dimensions and axis counts") {
  // Axis counts include the extra basis axes a_rho (2A), a_rho^2 (4B) and
  // a_rho^3 (6A) on top of the dihedral family.
  const std::map<NSType, std::pair<size_t, size_t>> want = {
      {NSType::T2A, {3, 3}}, {NSType::T2B, {2, 2}}, {NSType::T3A, {4, 3}},
      {NSType::T3C, {3, 3}}, {NSType::T4A, {5, 4}}, {NSType::T4B, {5, 5}},
      {NSType::T5A, {6, 5}}, {NSType::T6A, {8, 7}},
  };
  for (auto [t, dims] : want) {
    auto ns = norton_sakuma(t);
    CHECK(ns.algebra.dim() == dims.first);
    CHECK(ns.axes.size() == dims.second);
    CHECK(ns.axis_names.size() == dims.second);
    ns.algebra.check_complete();
    CHECK(ns.algebra.form_complete());
  }
}

TEST_CASE("axes are idempotents of length 1") {
  for (NSType t : all_ns_types()) {
    auto ns = norton_sakuma(t);
    for (const Vec& a : ns.axes) {
      CHECK(ns.algebra.multiply(a, a) == a);
      CHECK(ns.algebra.form(a, a) == Scalar(1));
    }
  }
}

TEST_CASE("form values on the defining axis pair") {
  const std::map<NSType, Scalar> want = {
      {NSType::T2A, frac(1, 8)},   {NSType::T2B, Scalar(0)},
      {NSType::T3A, frac(13, 256)}, {NSType::T3C, frac(1, 64)},
      {NSType::T4A, frac(1, 32)},  {NSType::T4B, frac(1, 64)},
      {NSType::T5A, frac(3, 128)}, {NSType::T6A, frac(5, 256)},
  };
  for (auto& [t, v] : want) {
    auto ns = norton_sakuma(t);
    CHECK(ns.algebra.form(ns.axes[0], ns.axes[1]) == v);
  }
}

TEST_CASE("identity lengths") {
  CHECK(identity_length(NSType::T2A) == frac(12, 5));
  CHECK(identity_length(NSType::T2B) == Scalar(2));
  CHECK(identity_length(NSType::T3A) == frac(116, 35));
  CHECK(identity_length(NSType::T3C) == frac(32, 11));
  CHECK(identity_length(NSType::T4A) == Scalar(4));
  CHECK(identity_length(NSType::T4B) == frac(19, 5));
  CHECK(identity_length(NSType::T5A) == frac(32, 7));
  CHECK(identity_length(NSType::T6A) == frac(51, 10));
}

TEST_CASE("4B identity in closed form") {
  auto ns = norton_sakuma(NSType::T4B);
  auto id = identity_of(ns.algebra);
  REQUIRE(id.has_value());
  size_t am1 = ns.algebra.index_of("a-1");
  size_t a0 = ns.algebra.index_of("a0");
  size_t a1 = ns.algebra.index_of("a1");
  size_t a2 = ns.algebra.index_of("a2");
  size_t rho2 = ns.algebra.index_of("arho2");
  Vec want = zero_vec(5);
  for (size_t i : {am1, a0, a1, a2}) want[i] = frac(4, 5);
  want[rho2] = frac(3, 5);
  CHECK(*id == want);
}

TEST_CASE("frobenius property of the built-in form") {
  // (u*v, w) == (u, v*w) on all basis triples, for every catalog algebra.
  for (NSType t : all_ns_types()) {
    auto ns = norton_sakuma(t);
    const Algebra& A = ns.algebra;
    size_t n = A.dim();
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i)
      for (size_t j = 0; j < n && ok; ++j)
        for (size_t k = 0; k < n && ok; ++k) {
          Vec u = unit_vec(n, i), v = unit_vec(n, j), w = unit_vec(n, k);
          if (A.form(A.multiply(u, v), w) != A.form(u, A.multiply(v, w))) ok = false;
        }
    CHECK(ok);
  }
}

TEST_CASE("gram matrices are positive definite") {
  for (NSType t : all_ns_types()) CHECK(is_positive_definite(norton_sakuma(t).algebra.gram()));
}

TEST_CASE("fusion law construction") {
  FusionLaw m = monster_law();
  CHECK(m.size() == 4);
  CHECK(m.graded());
  // beta is the odd eigenvalue in the monster grading.
  CHECK(m.grade(m.index_of(frac(1, 32)).value()) == -1);
  CHECK(m.grade(m.index_of(frac(1, 4)).value()) == 1);
  CHECK(m.seress());
  // 1/4 * 1/4 = {1, 0} in the monster table.
  auto fused = m.fuse(m.index_of(frac(1, 4)).value(), m.index_of(frac(1, 4)).value());
  CHECK(fused.size() == 2);

  FusionLaw j = make_law(LawKind::jordan, {frac(1, 32)});
  CHECK(j.size() == 3);
  CHECK(j.grade(j.index_of(frac(1, 32)).value()) == -1);

  FusionLaw am = make_law(LawKind::almost_monster, {frac(1, 4), frac(1, 32)});
  CHECK(am.size() == 4);
  CHECK(am.seress());

  CHECK_THROWS_AS(make_law(LawKind::monster, {Scalar(1), frac(1, 32)}), CatalogError);
  CHECK_THROWS_AS(make_law(LawKind::monster, {frac(1, 4)}), CatalogError);
  CHECK_THROWS_AS(make_law(LawKind::jordan, {frac(1, 4), frac(1, 32)}), CatalogError);
}

TEST_CASE("matsuo algebra of S3 matches 3C") {
  PermGroup s3 = fixture_group("S3");
  // Transpositions: (0 1) as a representative.
  Perm rep{1, 0, 2};
  auto ma = matsuo_algebra(s3, rep, frac(1, 32));
  CHECK(ma.algebra.dim() == 3);
  CHECK(ma.transpositions.size() == 3);
  // a*b = eta/2 (a + b - c) with eta = 1/32; the 3C structure constants.
  auto ns = norton_sakuma(NSType::T3C);
  // Explicit bijection: both algebras have basis of three axes; map i -> i.
  for (size_t i = 0; i < 3; ++i)
    for (size_t j = i; j < 3; ++j)
      CHECK(ma.algebra.basis_product(i, j) == ns.algebra.basis_product(i, j));
}

TEST_CASE("matsuo algebra of 3^2:2 has dimension 9") {
  PermGroup g = fixture_group("3^2:2");
  auto cls = involution_classes(g);
  REQUIRE(cls.size() == 1);
  REQUIRE(cls[0].size() == 9);
  auto ma = matsuo_algebra(g, cls[0][0], frac(1, 32));
  CHECK(ma.algebra.dim() == 9);
  for (const Vec& a : ma.axes) CHECK(ma.algebra.multiply(a, a) == a);
}

TEST_CASE("matsuo rejects bad input") {
  PermGroup s5 = fixture_group("S5");
  // A 5-cycle is not an involution.
  Perm c5{1, 2, 3, 4, 0};
  CHECK_THROWS_AS(matsuo_algebra(s5, c5, frac(1, 32)), CatalogError);
  Perm t{1, 0, 2, 3, 4};
  CHECK_THROWS_AS(matsuo_algebra(s5, t, Scalar(1)), CatalogError);
  CHECK_THROWS_AS(matsuo_algebra(s5, t, Scalar(0)), CatalogError);
  // D14 reflections have products of order 7: not a 3-transposition class.
  PermGroup d14 = fixture_group("D14");
  auto dcls = involution_classes(d14);
  REQUIRE(!dcls.empty());
  CHECK_THROWS_AS(matsuo_algebra(d14, dcls[0][0], frac(1, 32)), CatalogError);
}
