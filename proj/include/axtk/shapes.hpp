#pragma once

#include <optional>

#include "axtk/catalog.hpp"
#include "axtk/perm.hpp"

namespace axtk {

struct ShapesError : Error {
  using Error::Error;
};

// One orbit of unordered pairs from an involution class, under conjugation.
struct PairOrbit {
  size_t rep_i = 0, rep_j = 0;  // lexicographically least pair, as class indices
  size_t size = 0;              // number of pairs in the orbit
  size_t order = 0;             // order of the product of the pair
};

class PairOrbits {
 public:
  PairOrbits() = default;
  PairOrbits(std::vector<PairOrbit> nodes, std::vector<int> node_idx, size_t m);

  const std::vector<PairOrbit>& nodes() const { return nodes_; }
  size_t node_count() const { return nodes_.size(); }
  size_t class_size() const { return m_; }
  // Orbit (node) index of the pair {i, j}; i == j is an error.
  size_t node_of(size_t i, size_t j) const;

 private:
  std::vector<PairOrbit> nodes_;  // sorted by (order, size, rep)
  std::vector<int> node_idx_;     // m*m lookup, -1 on the diagonal
  size_t m_ = 0;
};

// Orbits of unordered pairs of the given involution set (sorted, closed under
// conjugation by the group) under the conjugation action.
PairOrbits pair_orbits(const PermGroup& g, const std::vector<Perm>& cls);

// Diagram whose vertices are the pair orbits and whose edges record dihedral
// containment: an edge u -> v (u listed first) says the closure of a pair in
// orbit v contains pairs of orbit u, so the algebra assigned to u embeds in
// the one assigned to v.  Equal product orders mean the two orbits generate
// the same dihedral group and must receive the same type.
struct ShapeDiagram {
  PairOrbits orbits;
  std::vector<std::pair<size_t, size_t>> edges;  // sorted, deduplicated
};

ShapeDiagram shape_diagram(const PermGroup& g, const std::vector<Perm>& cls);

// The dihedral types a pair-orbit of the given product order can carry.
const std::vector<NSType>& node_possibilities(size_t order);

// Leading number of the type (2 for 2A/2B, ..., 6 for 6A).
size_t ns_type_order(NSType t);

// Whether a dihedral algebra of type `small` occurs inside one of type `big`
// for pairs of axes of the smaller order (equal orders require equality).
bool edge_compatible(NSType small, NSType big);

// All assignments of types to the diagram's nodes consistent with the edge
// constraints, in lexicographic order.  With `up_to`, a permutation group on
// the node indices (which must preserve orders, sizes and edges), returns one
// lexicographically least representative per orbit of assignments.
std::vector<std::vector<NSType>> enumerate_shapes(const ShapeDiagram& diagram,
                                                  const PermGroup* up_to = nullptr);

// Scans all pairs from the involution set: returns (every product order <= 6,
// largest product order seen).
std::pair<bool, size_t> six_transposition_check(const std::vector<Perm>& cls);

// Gram matrix of the prospective axes (one per class element, length 1) when
// each pair takes the form value of its assigned dihedral type.
Matrix gram_from_shape(const PairOrbits& orbits, const std::vector<NSType>& shape);

// Action induced on the pair-orbit nodes by outer permutations that
// normalize the involution set (and the orbit partition); used to fold
// shape enumerations by a bigger symmetry group.
PermGroup induced_node_action(const PairOrbits& orbits,
                              const std::vector<Perm>& cls,
                              const std::vector<Perm>& outer_gens);

}  // namespace axtk
