#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

#include "axtk/scalar.hpp"

namespace axtk {

struct GroupError : Error {
  using Error::Error;
};

// Permutation of {0..n-1} in image notation: p[i] is the image of i.
using Perm = std::vector<int>;

Perm perm_identity(size_t n);
bool perm_is_identity(const Perm& p);
// Composition acting on the left: (p * q)(x) = p(q(x)), i.e. q first.
Perm perm_mul(const Perm& p, const Perm& q);
Perm perm_inv(const Perm& p);
// Conjugate g a g^{-1}.
Perm perm_conj(const Perm& a, const Perm& g);
size_t perm_order(const Perm& p);
bool perm_valid(const Perm& p);
std::string perm_str(const Perm& p);

// Permutation group with a deterministically built Schreier-Sims stabilizer
// chain (base points and strong generators), constructed lazily.
class PermGroup {
 public:
  PermGroup() : degree_(0) {}
  PermGroup(std::vector<Perm> generators, size_t degree);

  size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }

  mpz_class order() const;
  bool contains(const Perm& p) const;
  // Pointwise stabilizer of a single point, via a chain based at it.
  PermGroup stabilizer(int point) const;
  // Full element enumeration (errors above cap); lexicographically sorted.
  std::vector<Perm> elements(size_t cap = 2000000) const;

  struct ChainLevel {
    int point = -1;
    std::vector<int> orbit;        // discovery order, base point first
    std::vector<Perm> gens;        // generators of this level's stabilizer
    std::vector<Perm> transversal; // indexed by point; empty = not in orbit
  };
  const std::vector<ChainLevel>& chain() const;

 private:
  size_t degree_;
  std::vector<Perm> gens_;
  mutable std::shared_ptr<std::vector<ChainLevel>> chain_;

  void build_chain(const std::vector<int>& preferred_base) const;
  friend PermGroup stabilizer_impl(const PermGroup&, int);
};

// Conjugacy class of x in g, sorted lexicographically (error if x not in g).
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x);

// All involutions of g grouped into conjugacy classes; classes sorted by
// (size, lexicographically smallest member), members sorted.
std::vector<std::vector<Perm>> involution_classes(const PermGroup& g);

// The union a^H + b^H for H = <a,b>; sorted.  Errors unless a, b are
// distinct involutions.
std::vector<Perm> dihedral_closure(const Perm& a, const Perm& b);

}  // namespace axtk
