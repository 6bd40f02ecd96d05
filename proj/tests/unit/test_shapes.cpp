#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "axtk/fixtures.hpp"
#include "axtk/shapes.hpp"

using namespace axtk;

namespace {

std::vector<size_t> orbit_sizes(const PairOrbits& o) {
  std::vector<size_t> s;
  for (const auto& n : o.nodes()) s.push_back(n.size);
  return s;
}

}  // namespace

TEST_CASE("pair orbits of M11") {
  PermGroup g = fixture_group("M11");
  auto cls = involution_classes(g).at(0);
  REQUIRE(cls.size() == 165);
  PairOrbits po = pair_orbits(g, cls);
  REQUIRE(po.node_count() == 6);
  // Frozen orbit profile: sizes sum to C(165,2) = 13530.
  std::vector<size_t> sizes = orbit_sizes(po);
  std::vector<size_t> sorted = sizes;
  std::sort(sorted.begin(), sorted.end());
  CHECK(sorted == std::vector<size_t>{660, 990, 1980, 1980, 3960, 3960});
  size_t total = 0;
  for (size_t s : sizes) total += s;
  CHECK(total == 13530);
  // Product orders present: 2 (once), 3 (twice), 4, 5, 6; nodes sorted by
  // (order, size, rep).
  std::vector<size_t> orders;
  for (const auto& n : po.nodes()) orders.push_back(n.order);
  CHECK(orders == std::vector<size_t>{2, 3, 3, 4, 5, 6});
  // node_of maps a representative pair back to its node.
  for (size_t k = 0; k < po.node_count(); ++k)
    CHECK(po.node_of(po.nodes()[k].rep_i, po.nodes()[k].rep_j) == k);
  CHECK_THROWS_AS(po.node_of(3, 3), ShapesError);
}

TEST_CASE("M11 diagram arcs and unique shape") {
  PermGroup g = fixture_group("M11");
  auto cls = involution_classes(g).at(0);
  ShapeDiagram d = shape_diagram(g, cls);
  // With nodes ordered 2, 3a, 3b, 4, 5, 6 the arcs run 2 -> 6, 3 -> 6,
  // 3 -> 6 and 2 -> 4.
  size_t n2 = 0, n3a = 1, n3b = 2, n4 = 3, n6 = 5;
  std::vector<std::pair<size_t, size_t>> want = {
      {n2, n4}, {n2, n6}, {n3a, n6}, {n3b, n6}};
  CHECK(d.edges == want);
  auto shapes = enumerate_shapes(d);
  REQUIRE(shapes.size() == 1);
  // Forced: the 5-node takes 5A, the 6-node 6A, its sub-pairs 2A/3A/3A, and
  // the 4-node must then host the 2A as well, forcing 4B.
  CHECK(shapes[0] == std::vector<NSType>{NSType::T2A, NSType::T3A, NSType::T3A,
                                         NSType::T4B, NSType::T5A, NSType::T6A});
}

TEST_CASE("L2(11) has isolated order-5 nodes and a unique shape") {
  PermGroup g = fixture_group("L2(11)");
  auto cls = involution_classes(g).at(0);
  REQUIRE(cls.size() == 55);
  ShapeDiagram d = shape_diagram(g, cls);
  REQUIRE(d.orbits.node_count() == 6);
  // Two order-5 nodes, neither with any incident edge.
  std::vector<size_t> fives;
  for (size_t k = 0; k < 6; ++k)
    if (d.orbits.nodes()[k].order == 5) fives.push_back(k);
  CHECK(fives.size() == 2);
  for (size_t f : fives)
    for (auto& e : d.edges) {
      CHECK(e.first != f);
      CHECK(e.second != f);
    }
  auto shapes = enumerate_shapes(d);
  CHECK(shapes.size() == 1);
}

TEST_CASE("M10 admits eight shapes over seven nodes") {
  PermGroup g = fixture_group("M10");
  auto cls = involution_classes(g).at(0);
  REQUIRE(cls.size() == 45);
  ShapeDiagram d = shape_diagram(g, cls);
  REQUIRE(d.orbits.node_count() == 7);
  auto shapes = enumerate_shapes(d);
  CHECK(shapes.size() == 8);
}

TEST_CASE("S5 transposition diagram") {
  PermGroup g = fixture_group("S5");
  auto cls = involution_classes(g);
  REQUIRE(cls.size() == 2);
  // Merge both classes: 10 transpositions + 15 double transpositions.
  std::vector<Perm> all;
  for (auto& c : cls) all.insert(all.end(), c.begin(), c.end());
  std::sort(all.begin(), all.end());
  ShapeDiagram d = shape_diagram(g, all);
  CHECK(d.orbits.node_count() == 8);
}

TEST_CASE("3^2:2 has four independent order-3 nodes") {
  PermGroup g = fixture_group("3^2:2");
  auto cls = involution_classes(g).at(0);
  REQUIRE(cls.size() == 9);
  ShapeDiagram d = shape_diagram(g, cls);
  REQUIRE(d.orbits.node_count() == 4);
  for (const auto& n : d.orbits.nodes()) CHECK(n.order == 3);
  CHECK(d.edges.empty());
  // 2^4 = 16 shapes freely.
  auto shapes = enumerate_shapes(d);
  CHECK(shapes.size() == 16);
  // Folding by the affine group of the plane leaves 5.
  PermGroup agl = fixture_group("AGL(2,3)");
  PermGroup action = induced_node_action(d.orbits, cls, agl.generators());
  auto folded = enumerate_shapes(d, &action);
  CHECK(folded.size() == 5);
}

TEST_CASE("S3wr2 on both transposition classes") {
  PermGroup g = fixture_group("S3wr2");
  auto cls = involution_classes(g);
  REQUIRE(cls.size() == 3);
  REQUIRE(cls[0].size() == 6);
  REQUIRE(cls[1].size() == 6);
  std::vector<Perm> axet;
  axet.insert(axet.end(), cls[0].begin(), cls[0].end());
  axet.insert(axet.end(), cls[1].begin(), cls[1].end());
  std::sort(axet.begin(), axet.end());
  ShapeDiagram d = shape_diagram(g, axet);
  // Five nodes: two isolated order-3 orbits and a 2 -> 4 <- 2 component.
  REQUIRE(d.orbits.node_count() == 5);
  std::vector<size_t> orders;
  for (const auto& n : d.orbits.nodes()) orders.push_back(n.order);
  CHECK(orders == std::vector<size_t>{2, 2, 3, 3, 4});
  std::vector<std::pair<size_t, size_t>> want = {{0, 4}, {1, 4}};
  CHECK(d.edges == want);
  auto shapes = enumerate_shapes(d);
  CHECK(shapes.size() == 8);
}

TEST_CASE("six transposition checks") {
  CHECK(six_transposition_check(involution_classes(fixture_group("M11")).at(0)) ==
        std::pair<bool, size_t>{true, 6});
  CHECK(six_transposition_check(involution_classes(fixture_group("L2(11)")).at(0)) ==
        std::pair<bool, size_t>{true, 6});
  // D14 reflections multiply to an order-7 rotation.
  auto d14 = six_transposition_check(involution_classes(fixture_group("D14")).at(0));
  CHECK_FALSE(d14.first);
  CHECK(d14.second == 7);
}

TEST_CASE("node possibilities and edge compatibility") {
  CHECK(node_possibilities(2) == std::vector<NSType>{NSType::T2A, NSType::T2B});
  CHECK(node_possibilities(3) == std::vector<NSType>{NSType::T3A, NSType::T3C});
  CHECK(node_possibilities(4) == std::vector<NSType>{NSType::T4A, NSType::T4B});
  CHECK(node_possibilities(5) == std::vector<NSType>{NSType::T5A});
  CHECK(node_possibilities(6) == std::vector<NSType>{NSType::T6A});
  CHECK(node_possibilities(7).empty());
  // 4A contains 2B, 4B contains 2A, 6A contains 2A and 3A; nothing else.
  CHECK(edge_compatible(NSType::T2B, NSType::T4A));
  CHECK_FALSE(edge_compatible(NSType::T2A, NSType::T4A));
  CHECK(edge_compatible(NSType::T2A, NSType::T4B));
  CHECK_FALSE(edge_compatible(NSType::T2B, NSType::T4B));
  CHECK(edge_compatible(NSType::T2A, NSType::T6A));
  CHECK(edge_compatible(NSType::T3A, NSType::T6A));
  CHECK_FALSE(edge_compatible(NSType::T2B, NSType::T6A));
  CHECK_FALSE(edge_compatible(NSType::T3C, NSType::T6A));
  // Equal orders: equality only.
  CHECK(edge_compatible(NSType::T2A, NSType::T2A));
  CHECK_FALSE(edge_compatible(NSType::T2A, NSType::T2B));
}

TEST_CASE("gram matrix from a shape") {
  PermGroup g = fixture_group("3^2:2");
  auto cls = involution_classes(g).at(0);
  ShapeDiagram d = shape_diagram(g, cls);
  // All-3C shape: Gram = I + (1/64)(J - I), strictly diagonally dominant,
  // hence positive definite of full rank 9.
  std::vector<NSType> all3c(4, NSType::T3C);
  Matrix m = gram_from_shape(d.orbits, all3c);
  REQUIRE(m.rows() == 9);
  CHECK(m.at(0, 0) == Scalar(1));
  CHECK(is_positive_definite(m));
  CHECK(rank(m) == 9);
  // All-3A shape: off-diagonal 13/256.
  std::vector<NSType> all3a(4, NSType::T3A);
  Matrix ma = gram_from_shape(d.orbits, all3a);
  bool off_ok = true;
  for (size_t i = 0; i < 9; ++i)
    for (size_t j = 0; j < 9; ++j)
      if (i != j && ma.at(i, j) != frac(13, 256)) off_ok = false;
  CHECK(off_ok);
  // Shape length must match the node count.
  CHECK_THROWS_AS(gram_from_shape(d.orbits, std::vector<NSType>(3, NSType::T3C)),
                  ShapesError);
}
