#include "axtk/perm.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace axtk {

Perm perm_identity(size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

bool perm_is_identity(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return false;
  return true;
}

Perm perm_mul(const Perm& p, const Perm& q) {
  if (p.size() != q.size()) throw GroupError("permutation degree mismatch");
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

Perm perm_inv(const Perm& p) {
  Perm r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<int>(i);
  return r;
}

Perm perm_conj(const Perm& a, const Perm& g) {
  return perm_mul(perm_mul(g, a), perm_inv(g));
}

size_t perm_order(const Perm& p) {
  const size_t n = p.size();
  std::vector<bool> seen(n, false);
  size_t ord = 1;
  for (size_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    size_t len = 0;
    for (size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

bool perm_valid(const Perm& p) {
  std::vector<bool> hit(p.size(), false);
  for (int v : p) {
    if (v < 0 || v >= static_cast<int>(p.size()) || hit[v]) return false;
    hit[v] = true;
  }
  return true;
}

std::string perm_str(const Perm& p) {
  std::ostringstream os;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) os << ' ';
    os << p[i];
  }
  return os.str();
}

PermGroup::PermGroup(std::vector<Perm> generators, size_t degree)
    : degree_(degree), gens_(std::move(generators)) {
  for (const Perm& g : gens_) {
    if (g.size() != degree_) throw GroupError("generator degree mismatch");
    if (!perm_valid(g)) throw GroupError("invalid permutation " + perm_str(g));
  }
}

namespace {

// Sift p through the chain starting at level l; returns the residue and the
// level at which it stuck (chain size if fully sifted).
std::pair<Perm, size_t> sift_from(const std::vector<PermGroup::ChainLevel>& chain,
                                  size_t l, Perm p) {
  for (size_t k = l; k < chain.size(); ++k) {
    const auto& lev = chain[k];
    const int img = p[lev.point];
    if (lev.transversal[img].empty()) return {std::move(p), k};
    p = perm_mul(perm_inv(lev.transversal[img]), p);
  }
  return {std::move(p), chain.size()};
}

void recompute_orbit(PermGroup::ChainLevel& lev, size_t degree) {
  lev.orbit.clear();
  lev.transversal.assign(degree, Perm{});
  lev.orbit.push_back(lev.point);
  lev.transversal[lev.point] = perm_identity(degree);
  for (size_t qi = 0; qi < lev.orbit.size(); ++qi) {
    const int pt = lev.orbit[qi];
    for (const Perm& g : lev.gens) {
      const int img = g[pt];
      if (lev.transversal[img].empty()) {
        lev.transversal[img] = perm_mul(g, lev.transversal[pt]);
        lev.orbit.push_back(img);
      }
    }
  }
}

int first_moved(const Perm& p) {
  for (size_t i = 0; i < p.size(); ++i)
    if (p[i] != static_cast<int>(i)) return static_cast<int>(i);
  return -1;
}

}  // namespace

void PermGroup::build_chain(const std::vector<int>& preferred_base) const {
  auto chain = std::make_shared<std::vector<ChainLevel>>();
  auto& ch = *chain;
  // Pre-seed requested base points as levels with no generators yet.
  for (int b : preferred_base) {
    if (b < 0 || b >= static_cast<int>(degree_))
      throw GroupError("base point out of range");
    ChainLevel lev;
    lev.point = b;
    ch.push_back(std::move(lev));
  }
  // Nested generator sets: level l holds every generator fixing the base
  // points of levels 0..l-1, so <ch[l].gens> is the l-th chain subgroup.
  auto insert_gen = [&](const Perm& g, size_t from) {
    size_t l = from;
    while (l < ch.size() && g[ch[l].point] == ch[l].point) {
      ch[l].gens.push_back(g);
      ++l;
    }
    if (l == ch.size()) {
      ChainLevel lev;
      lev.point = first_moved(g);
      ch.push_back(std::move(lev));
    }
    ch[l].gens.push_back(g);
    return l;
  };
  for (const Perm& g : gens_)
    if (!perm_is_identity(g)) insert_gen(g, 0);
  for (auto& lev : ch) recompute_orbit(lev, degree_);

  // Bottom-up verification: levels deeper than i are clean (all their
  // Schreier generators sift to the identity).  A residue that sticks at
  // level j moves j's base point to a new orbit point, so registering it
  // touches only levels i+1..j; restarting at j keeps the invariant.  Each
  // registration strictly grows some orbit, so the loop terminates.
  long i = static_cast<long>(ch.size()) - 1;
  while (i >= 0) {
    bool clean = true;
    for (size_t qi = 0; clean && qi < ch[i].orbit.size(); ++qi) {
      const int pt = ch[i].orbit[qi];
      for (size_t si = 0; si < ch[i].gens.size(); ++si) {
        const Perm& s = ch[i].gens[si];
        Perm sg =
            perm_mul(perm_inv(ch[i].transversal[s[pt]]), perm_mul(s, ch[i].transversal[pt]));
        if (perm_is_identity(sg)) continue;
        auto [res, j] = sift_from(ch, static_cast<size_t>(i) + 1, std::move(sg));
        if (perm_is_identity(res)) continue;
        const size_t added_at = insert_gen(res, static_cast<size_t>(i) + 1);
        for (size_t l = static_cast<size_t>(i) + 1; l <= added_at; ++l)
          recompute_orbit(ch[l], degree_);
        (void)j;
        i = static_cast<long>(added_at);
        clean = false;
        break;
      }
    }
    if (clean) --i;
  }
  chain_ = std::move(chain);
}

const std::vector<PermGroup::ChainLevel>& PermGroup::chain() const {
  if (!chain_) build_chain({});
  return *chain_;
}

mpz_class PermGroup::order() const {
  mpz_class o(1);
  for (const auto& lev : chain()) o *= static_cast<unsigned long>(lev.orbit.size());
  return o;
}

bool PermGroup::contains(const Perm& p) const {
  if (p.size() != degree_) return false;
  if (!perm_valid(p)) throw GroupError("invalid permutation " + perm_str(p));
  auto [res, stuck] = sift_from(chain(), 0, p);
  (void)stuck;
  return perm_is_identity(res);
}

PermGroup PermGroup::stabilizer(int point) const {
  if (point < 0 || point >= static_cast<int>(degree_))
    throw GroupError("stabilizer point out of range");
  // Build a fresh chain based at the point; strong generators of levels > 0
  // generate the stabilizer.
  PermGroup tmp(gens_, degree_);
  tmp.build_chain({point});
  const auto& ch = *tmp.chain_;
  std::vector<Perm> sgens;
  std::set<Perm> uniq;
  for (size_t k = 1; k < ch.size(); ++k)
    for (const Perm& g : ch[k].gens) uniq.insert(g);
  sgens.assign(uniq.begin(), uniq.end());
  if (sgens.empty()) sgens.push_back(perm_identity(degree_));
  return PermGroup(sgens, degree_);
}

std::vector<Perm> PermGroup::elements(size_t cap) const {
  std::set<Perm> seen;
  std::vector<Perm> queue;
  seen.insert(perm_identity(degree_));
  queue.push_back(perm_identity(degree_));
  for (size_t qi = 0; qi < queue.size(); ++qi) {
    for (const Perm& g : gens_) {
      Perm next = perm_mul(g, queue[qi]);
      if (seen.insert(next).second) {
        if (seen.size() > cap) throw GroupError("group enumeration exceeds cap");
        queue.push_back(std::move(next));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x) {
  if (!g.contains(x)) throw GroupError("element is not in the group");
  std::set<Perm> seen{x};
  std::vector<Perm> queue{x};
  for (size_t qi = 0; qi < queue.size(); ++qi)
    for (const Perm& s : g.generators()) {
      Perm y = perm_conj(queue[qi], s);
      if (seen.insert(y).second) queue.push_back(std::move(y));
    }
  return {seen.begin(), seen.end()};
}

std::vector<std::vector<Perm>> involution_classes(const PermGroup& g) {
  const std::vector<Perm> all = g.elements();
  std::set<Perm> invs;
  for (const Perm& p : all)
    if (!perm_is_identity(p) && perm_order(p) == 2) invs.insert(p);
  std::vector<std::vector<Perm>> classes;
  while (!invs.empty()) {
    const Perm rep = *invs.begin();
    std::vector<Perm> cls = conjugacy_class(g, rep);
    for (const Perm& p : cls) invs.erase(p);
    classes.push_back(std::move(cls));
  }
  std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return classes;
}

std::vector<Perm> dihedral_closure(const Perm& a, const Perm& b) {
  if (a.size() != b.size()) throw GroupError("permutation degree mismatch");
  if (perm_is_identity(a) || perm_order(a) != 2 || perm_is_identity(b) || perm_order(b) != 2)
    throw GroupError("dihedral closure requires involutions");
  if (a == b) throw GroupError("dihedral closure requires distinct involutions");
  PermGroup h({a, b}, a.size());
  const std::vector<Perm> hs = h.elements();
  std::set<Perm> axes;
  for (const Perm& g : hs) {
    axes.insert(perm_conj(a, g));
    axes.insert(perm_conj(b, g));
  }
  return {axes.begin(), axes.end()};
}

}  // namespace axtk
