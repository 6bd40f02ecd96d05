#include "axtk/shapes.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace axtk {

namespace {

size_t find_index(const std::vector<Perm>& cls, const Perm& p) {
  auto it = std::lower_bound(cls.begin(), cls.end(), p);
  if (it == cls.end() || *it != p)
    throw ShapesError("conjugation leaves the involution set; it must be closed");
  return size_t(it - cls.begin());
}

struct UnionFind {
  std::vector<size_t> parent;
  explicit UnionFind(size_t n) : parent(n) {
    for (size_t i = 0; i < n; ++i) parent[i] = i;
  }
  size_t find(size_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(size_t a, size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
};

void validate_class(const PermGroup& g, const std::vector<Perm>& cls) {
  if (!std::is_sorted(cls.begin(), cls.end()))
    throw ShapesError("the involution set must be sorted");
  if (std::adjacent_find(cls.begin(), cls.end()) != cls.end())
    throw ShapesError("the involution set contains duplicates");
  for (const Perm& p : cls) {
    if (p.size() != g.degree())
      throw ShapesError("involution degree does not match the group");
    if (perm_order(p) != 2)
      throw ShapesError("the set contains a non-involution");
  }
}

}  // namespace

PairOrbits::PairOrbits(std::vector<PairOrbit> nodes, std::vector<int> node_idx,
                       size_t m)
    : nodes_(std::move(nodes)), node_idx_(std::move(node_idx)), m_(m) {}

size_t PairOrbits::node_of(size_t i, size_t j) const {
  if (i >= m_ || j >= m_ || i == j)
    throw ShapesError("node_of needs two distinct class indices");
  const int v = node_idx_[i * m_ + j];
  return size_t(v);
}

PairOrbits pair_orbits(const PermGroup& g, const std::vector<Perm>& cls) {
  validate_class(g, cls);
  const size_t m = cls.size();
  // The set must be closed under the ambient group.
  for (const Perm& gen : g.generators())
    for (const Perm& p : cls) find_index(cls, perm_conj(p, gen));
  // Orbits are folded under the group generated by the involutions
  // themselves — the Miyamoto group of the prospective algebra.  It can be
  // smaller than g: in M10 the involutions generate an index-2 subgroup
  // isomorphic to A6, and the pair orbits split from 4 to 7.
  std::vector<std::vector<size_t>> act(m, std::vector<size_t>(m));
  for (size_t c = 0; c < m; ++c)
    for (size_t i = 0; i < m; ++i)
      act[c][i] = find_index(cls, perm_conj(cls[i], cls[c]));
  UnionFind uf(m * m);
  auto pid = [m](size_t i, size_t j) {
    return std::min(i, j) * m + std::max(i, j);
  };
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      for (size_t c = 0; c < m; ++c) {
        uf.unite(pid(i, j), pid(act[c][i], act[c][j]));
      }
    }
  }
  // Group pairs by root; the first pair scanned in lexicographic order is the
  // orbit representative.
  std::map<size_t, PairOrbit> orbits;
  std::map<size_t, size_t> root_slot;
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const size_t root = uf.find(pid(i, j));
      auto [it, fresh] = orbits.try_emplace(root);
      if (fresh) {
        it->second.rep_i = i;
        it->second.rep_j = j;
        it->second.order = perm_order(perm_mul(cls[i], cls[j]));
      }
      it->second.size += 1;
    }
  }
  std::vector<std::pair<PairOrbit, size_t>> sorted;  // (orbit, root)
  for (const auto& [root, orb] : orbits) sorted.push_back({orb, root});
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    const PairOrbit &x = a.first, &y = b.first;
    return std::tie(x.order, x.size, x.rep_i, x.rep_j) <
           std::tie(y.order, y.size, y.rep_i, y.rep_j);
  });
  std::map<size_t, size_t> root_to_node;
  std::vector<PairOrbit> nodes;
  for (size_t k = 0; k < sorted.size(); ++k) {
    root_to_node[sorted[k].second] = k;
    nodes.push_back(sorted[k].first);
  }
  std::vector<int> node_idx(m * m, -1);
  for (size_t i = 0; i < m; ++i) {
    for (size_t j = i + 1; j < m; ++j) {
      const int v = int(root_to_node.at(uf.find(pid(i, j))));
      node_idx[i * m + j] = v;
      node_idx[j * m + i] = v;
    }
  }
  return PairOrbits(std::move(nodes), std::move(node_idx), m);
}

ShapeDiagram shape_diagram(const PermGroup& g, const std::vector<Perm>& cls) {
  ShapeDiagram d;
  d.orbits = pair_orbits(g, cls);
  const auto& nodes = d.orbits.nodes();
  std::set<std::pair<size_t, size_t>> edges;
  for (size_t v = 0; v < nodes.size(); ++v) {
    const std::vector<Perm> closure =
        dihedral_closure(cls[nodes[v].rep_i], cls[nodes[v].rep_j]);
    std::vector<size_t> idx;
    idx.reserve(closure.size());
    for (const Perm& p : closure) idx.push_back(find_index(cls, p));
    for (size_t a = 0; a < idx.size(); ++a) {
      for (size_t b = a + 1; b < idx.size(); ++b) {
        const size_t o = d.orbits.node_of(idx[a], idx[b]);
        // Arcs join nodes of strictly smaller product order to larger.  A
        // closure can also contain pairs from a different node of the same
        // order (both order-5 orbits of L2(11) meet inside one D10), but
        // such nodes stay unlinked: their letters carry no extra constraint.
        if (nodes[o].order == nodes[v].order) continue;
        edges.insert({o, v});
      }
    }
  }
  d.edges.assign(edges.begin(), edges.end());
  return d;
}

const std::vector<NSType>& node_possibilities(size_t order) {
  static const std::vector<NSType> o2{NSType::T2A, NSType::T2B};
  static const std::vector<NSType> o3{NSType::T3A, NSType::T3C};
  static const std::vector<NSType> o4{NSType::T4A, NSType::T4B};
  static const std::vector<NSType> o5{NSType::T5A};
  static const std::vector<NSType> o6{NSType::T6A};
  static const std::vector<NSType> none{};
  switch (order) {
    case 2: return o2;
    case 3: return o3;
    case 4: return o4;
    case 5: return o5;
    case 6: return o6;
    default: return none;
  }
}

size_t ns_type_order(NSType t) {
  switch (t) {
    case NSType::T2A:
    case NSType::T2B: return 2;
    case NSType::T3A:
    case NSType::T3C: return 3;
    case NSType::T4A:
    case NSType::T4B: return 4;
    case NSType::T5A: return 5;
    case NSType::T6A: return 6;
  }
  throw ShapesError("unknown type");
}

bool edge_compatible(NSType small, NSType big) {
  if (ns_type_order(small) == ns_type_order(big)) return small == big;
  switch (big) {
    case NSType::T4A: return small == NSType::T2B;
    case NSType::T4B: return small == NSType::T2A;
    case NSType::T6A: return small == NSType::T2A || small == NSType::T3A;
    default: return false;
  }
}

namespace {

void validate_up_to(const ShapeDiagram& d, const PermGroup& q) {
  const auto& nodes = d.orbits.nodes();
  if (q.degree() != nodes.size())
    throw ShapesError("the action group must act on the diagram nodes");
  std::set<std::pair<size_t, size_t>> edges(d.edges.begin(), d.edges.end());
  for (const Perm& p : q.generators()) {
    for (size_t i = 0; i < nodes.size(); ++i) {
      const PairOrbit& a = nodes[i];
      const PairOrbit& b = nodes[size_t(p[int(i)])];
      if (a.order != b.order || a.size != b.size)
        throw ShapesError("the action does not preserve the node invariants");
    }
    for (const auto& [u, v] : d.edges) {
      size_t a = size_t(p[int(u)]), b = size_t(p[int(v)]);
      std::pair<size_t, size_t> img =
          nodes[a].order == nodes[b].order
              ? std::make_pair(std::min(a, b), std::max(a, b))
              : (nodes[a].order < nodes[b].order ? std::make_pair(a, b)
                                                 : std::make_pair(b, a));
      if (!edges.count(img))
        throw ShapesError("the action does not preserve the diagram edges");
    }
  }
}

}  // namespace

std::vector<std::vector<NSType>> enumerate_shapes(const ShapeDiagram& diagram,
                                                  const PermGroup* up_to) {
  const auto& nodes = diagram.orbits.nodes();
  const size_t n = nodes.size();
  if (up_to) validate_up_to(diagram, *up_to);

  // Edges whose later endpoint is i, for incremental checking.
  std::vector<std::vector<std::pair<size_t, size_t>>> by_last(n);
  for (const auto& e : diagram.edges) by_last[std::max(e.first, e.second)].push_back(e);

  std::vector<std::vector<NSType>> out;
  std::vector<NSType> cur(n, NSType::T2A);
  auto dfs = [&](auto&& self, size_t i) -> void {
    if (i == n) {
      out.push_back(cur);
      return;
    }
    for (NSType t : node_possibilities(nodes[i].order)) {
      cur[i] = t;
      bool ok = true;
      for (const auto& [u, v] : by_last[i]) {
        if (!edge_compatible(cur[u], cur[v])) {
          ok = false;
          break;
        }
      }
      if (ok) self(self, i + 1);
    }
  };
  dfs(dfs, 0);

  if (!up_to) return out;
  const std::vector<Perm> elems = up_to->elements();
  std::set<std::vector<NSType>> reps;
  for (const auto& a : out) {
    std::vector<NSType> best = a;
    for (const Perm& p : elems) {
      std::vector<NSType> b(n, NSType::T2A);
      for (size_t i = 0; i < n; ++i) b[size_t(p[int(i)])] = a[i];
      if (b < best) best = b;
    }
    reps.insert(best);
  }
  return {reps.begin(), reps.end()};
}

std::pair<bool, size_t> six_transposition_check(const std::vector<Perm>& cls) {
  for (const Perm& p : cls) {
    if (perm_order(p) != 2) throw ShapesError("the set contains a non-involution");
  }
  size_t max_order = 0;
  for (size_t i = 0; i < cls.size(); ++i) {
    for (size_t j = i + 1; j < cls.size(); ++j) {
      max_order = std::max(max_order, perm_order(perm_mul(cls[i], cls[j])));
    }
  }
  return {max_order <= 6, max_order};
}

namespace {

const Scalar& pair_value(NSType t) {
  static const std::map<NSType, Scalar> cache = [] {
    std::map<NSType, Scalar> m;
    for (NSType t : all_ns_types()) {
      NortonSakuma ns = norton_sakuma(t);
      m.emplace(t, ns.algebra.form(ns.axes[0], ns.axes[1]));
    }
    return m;
  }();
  return cache.at(t);
}

}  // namespace

PermGroup induced_node_action(const PairOrbits& orbits,
                              const std::vector<Perm>& cls,
                              const std::vector<Perm>& outer_gens) {
  const size_t n = orbits.node_count();
  const size_t m = orbits.class_size();
  std::vector<Perm> node_gens;
  for (const Perm& g : outer_gens) {
    std::vector<size_t> img(m);
    for (size_t i = 0; i < m; ++i) img[i] = find_index(cls, perm_conj(cls[i], g));
    Perm p(n, -1);
    for (size_t i = 0; i < m; ++i) {
      for (size_t j = i + 1; j < m; ++j) {
        const size_t k = orbits.node_of(i, j);
        const int target = int(orbits.node_of(img[i], img[j]));
        if (p[k] == -1) {
          p[k] = target;
        } else if (p[k] != target) {
          throw ShapesError(
              "an outer permutation splits a pair orbit; it must normalize the action");
        }
      }
    }
    if (!perm_valid(p))
      throw ShapesError("the outer permutations do not permute the pair orbits");
    node_gens.push_back(std::move(p));
  }
  return PermGroup(std::move(node_gens), n);
}

Matrix gram_from_shape(const PairOrbits& orbits, const std::vector<NSType>& shape) {
  if (shape.size() != orbits.node_count())
    throw ShapesError("one type per diagram node is required");
  const size_t m = orbits.class_size();
  Matrix g(m, m);
  for (size_t i = 0; i < m; ++i) {
    g.at(i, i) = Scalar(1);
    for (size_t j = i + 1; j < m; ++j) {
      const Scalar& v = pair_value(shape[orbits.node_of(i, j)]);
      g.at(i, j) = v;
      g.at(j, i) = v;
    }
  }
  return g;
}

}  // namespace axtk
