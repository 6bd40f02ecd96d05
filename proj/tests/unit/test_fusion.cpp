#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "axtk/catalog.hpp"
#include "axtk/fixtures.hpp"

using namespace axtk;

TEST_CASE("axis reports on catalog axes") {
  FusionLaw law = monster_law();
  for (NSType t : all_ns_types()) {
    auto ns = norton_sakuma(t);
    for (const Vec& a : ns.axes) {
      AxisReport r = check_axis(ns.algebra, a, law);
      CHECK(r.is_idempotent);
      CHECK(r.is_axis);
      CHECK(r.is_primitive);
      CHECK(r.missing_dim == 0);
      CHECK(r.violations.empty());
      // Primitivity: the 1-eigenspace is the line through the axis.
      CHECK(r.eigen_dims[law.index_of(Scalar(1)).value()] == 1);
    }
  }
}

TEST_CASE("non-axes are reported, not thrown") {
  auto ns = norton_sakuma(NSType::T2A);
  FusionLaw law = monster_law();
  // Not an idempotent.
  Vec v = vec_scale(Scalar(2), ns.axes[0]);
  AxisReport r = check_axis(ns.algebra, v, law);
  CHECK_FALSE(r.is_idempotent);
  CHECK_FALSE(r.is_axis);
  // The identity is idempotent but not primitive for the monster law.
  auto id = identity_of(ns.algebra);
  REQUIRE(id.has_value());
  AxisReport ri = check_axis(ns.algebra, *id, law);
  CHECK(ri.is_idempotent);
  CHECK_FALSE(ri.is_primitive);
  // Zero vector is a usage error.
  CHECK_THROWS_AS(check_axis(ns.algebra, zero_vec(3), law), FusionError);
}

TEST_CASE("eigenspace dimensions of 2A axis") {
  auto ns = norton_sakuma(NSType::T2A);
  FusionLaw law = monster_law();
  AxisReport r = check_axis(ns.algebra, ns.axes[0], law);
  // For the 2A axis a0 the 1/32-part is empty (tau_{a0} acts trivially on
  // the algebra) and the three dimensions land on 1, 0, 1/4.
  CHECK(r.eigen_dims[law.index_of(Scalar(1)).value()] == 1);
  CHECK(r.eigen_dims[law.index_of(frac(1, 32)).value()] == 0);
  size_t total = 0;
  for (size_t d : r.eigen_dims) total += d;
  CHECK(total == 3);
}

TEST_CASE("miyamoto maps are involutive automorphisms") {
  FusionLaw law = monster_law();
  for (NSType t : {NSType::T3A, NSType::T4A, NSType::T5A, NSType::T6A}) {
    auto ns = norton_sakuma(t);
    Automorphism tau = miyamoto_map(ns.algebra, ns.axes[0], law);
    CHECK(is_automorphism(ns.algebra, tau.matrix));
    CHECK(tau.matrix * tau.matrix == Matrix::identity(ns.algebra.dim()));
    // tau fixes its own axis.
    CHECK(tau.apply(ns.axes[0]) == ns.axes[0]);
  }
  // On 2A the Miyamoto map is the identity (no 1/32-part anywhere).
  auto ns2a = norton_sakuma(NSType::T2A);
  CHECK(miyamoto_map(ns2a.algebra, ns2a.axes[0], law).matrix == Matrix::identity(3));
}

TEST_CASE("miyamoto map permutes the axes of 3A") {
  auto ns = norton_sakuma(NSType::T3A);
  FusionLaw law = monster_law();
  Automorphism tau = miyamoto_map(ns.algebra, ns.axes[0], law);
  // tau_{a0} swaps a1 and a_{-1}.
  CHECK(tau.apply(ns.axes[1]) == ns.axes[2]);
  CHECK(tau.apply(ns.axes[2]) == ns.axes[1]);
}

TEST_CASE("jordan axes") {
  FusionLaw law = monster_law();
  // In 2A every axis has empty 1/32-part, so a0 is a Jordan axis.
  auto ns = norton_sakuma(NSType::T2A);
  CHECK(is_jordan_axis(ns.algebra, ns.axes[0], law));
  // In 3A the 1/32-part of a0 is nonzero.
  auto ns3 = norton_sakuma(NSType::T3A);
  CHECK_FALSE(is_jordan_axis(ns3.algebra, ns3.axes[0], law));
  // sigma negates the 1/4-part: check it is an automorphism of order <= 2.
  Automorphism sg = sigma_map(ns.algebra, ns.axes[0], law);
  CHECK(is_automorphism(ns.algebra, sg.matrix));
  CHECK(sg.matrix * sg.matrix == Matrix::identity(3));
  CHECK(sg.matrix != Matrix::identity(3));
}

TEST_CASE("is_automorphism rejects non-maps") {
  auto ns = norton_sakuma(NSType::T2B);
  Matrix not_auto(2, 2);
  not_auto.at(0, 0) = Scalar(2);
  not_auto.at(1, 1) = Scalar(1);
  CHECK_FALSE(is_automorphism(ns.algebra, not_auto));
  // Swapping the two axes of 2B is an automorphism.
  Matrix swap(2, 2);
  swap.at(0, 1) = Scalar(1);
  swap.at(1, 0) = Scalar(1);
  CHECK(is_automorphism(ns.algebra, swap));
}

TEST_CASE("axet closure sizes and miyamoto groups") {
  FusionLaw law = monster_law();
  struct Want {
    NSType t;
    size_t axet;
    long group_order;
  };
  // Axet = number of axes.  The tau permutations generate: nothing for the
  // 2-types (both taus act trivially), the full dihedral group D_2n for odd
  // n (every tau is a distinct reflection), the Klein four-group for the
  // 4-types (tau_2 = tau_0, tau_3 = tau_1), and S3 for 6A (opposite axes
  // are twins, leaving three distinct reflections of the hexagon).
  std::vector<Want> table = {
      {NSType::T2A, 2, 1},  {NSType::T2B, 2, 1},  {NSType::T3A, 3, 6},
      {NSType::T3C, 3, 6},  {NSType::T4A, 4, 4},  {NSType::T4B, 4, 4},
      {NSType::T5A, 5, 10}, {NSType::T6A, 6, 6},
  };
  for (const auto& w : table) {
    auto ns = norton_sakuma(w.t);
    AxetClosure c = axet_closure(ns.algebra, {ns.axes[0], ns.axes[1]}, law);
    CHECK(c.axes.size() == w.axet);
    CHECK(c.miyamoto.order() == w.group_order);
    CHECK(c.tau_perms.size() == w.axet);
    // The closure recovers exactly the dihedral axes, which the catalog
    // lists first (extras such as a_rho lie outside the tau orbit).
    for (size_t i = 0; i < w.axet; ++i)
      CHECK(std::find(c.axes.begin(), c.axes.end(), ns.axes[i]) != c.axes.end());
    for (const Vec& a : c.axes)
      CHECK(std::find(ns.axes.begin(), ns.axes.end(), a) != ns.axes.end());
  }
}

TEST_CASE("twins") {
  FusionLaw law = monster_law();
  // 2B: both axes have trivial Miyamoto map, hence form a twin pair.
  auto ns2b = norton_sakuma(NSType::T2B);
  auto t2b = find_twins(ns2b.algebra, ns2b.axes, law);
  REQUIRE(t2b.size() == 1);
  CHECK(t2b[0] == std::pair<size_t, size_t>{0, 1});
  // 6A: opposite axes share a Miyamoto involution; axes listed as
  // a0, a1, a_{-2}, a_{-1}, a2, a3.
  auto ns6 = norton_sakuma(NSType::T6A);
  auto t6 = find_twins(ns6.algebra, ns6.axes, law);
  std::vector<std::pair<size_t, size_t>> want = {{0, 5}, {1, 2}, {3, 4}};
  std::sort(t6.begin(), t6.end());
  CHECK(t6 == want);
  // 5A has none.
  auto ns5 = norton_sakuma(NSType::T5A);
  CHECK(find_twins(ns5.algebra, ns5.axes, law).empty());
}

TEST_CASE("matsuo axes satisfy the jordan law") {
  PermGroup g = fixture_group("S3");
  auto ma = matsuo_algebra(g, Perm{1, 0, 2}, frac(1, 32));
  FusionLaw j = make_law(LawKind::jordan, {frac(1, 32)});
  for (const Vec& a : ma.axes) {
    AxisReport r = check_axis(ma.algebra, a, j);
    CHECK(r.is_axis);
    CHECK(r.is_primitive);
    CHECK(is_jordan_axis(ma.algebra, a, j));
  }
}
