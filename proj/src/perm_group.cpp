#include "cslab/perm_group.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "cslab/errors.hpp"

namespace cslab {

bool PermGroup::contains(const Perm& g) const {
  return std::binary_search(elements_.begin(), elements_.end(), g);
}

int PermGroup::index_of(const Perm& g) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), g);
  if (it == elements_.end() || !(*it == g)) return -1;
  return static_cast<int>(it - elements_.begin());
}

bool PermGroup::is_subgroup_of(const PermGroup& other) const {
  if (degree_ != other.degree_) return false;
  for (const auto& e : elements_)
    if (!other.contains(e)) return false;
  return true;
}

PermGroup close_group(std::vector<Perm> gens, long limit) {
  if (gens.empty()) throw InvalidInput("EmptyGeneratorList", "need at least one generator");
  if (limit < 1) throw InvalidInput("BadParameter", "limit must be at least 1");
  const int degree = gens[0].degree();
  for (const auto& g : gens)
    if (g.degree() != degree)
      throw InvalidInput("DegreeMismatch", "generators act on different point counts");

  std::set<Perm> found;
  std::deque<Perm> queue;
  Perm id = Perm::identity(degree);
  found.insert(id);
  queue.push_back(id);
  while (!queue.empty()) {
    Perm cur = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      Perm next = cur * g;
      if (found.insert(next).second) {
        if (static_cast<long>(found.size()) > limit)
          throw LimitExceeded("OrderLimitExceeded",
                              "group closure exceeds limit " + std::to_string(limit));
        queue.push_back(std::move(next));
      }
    }
  }

  PermGroup out;
  out.degree_ = degree;
  out.generators_ = std::move(gens);
  out.elements_.assign(found.begin(), found.end());
  return out;
}

std::vector<int> orbit_of_point(const std::vector<Perm>& gens, int x) {
  if (gens.empty()) return {x};
  std::vector<bool> seen(static_cast<size_t>(gens[0].degree()), false);
  std::deque<int> queue{x};
  seen[static_cast<size_t>(x)] = true;
  std::vector<int> out;
  while (!queue.empty()) {
    int p = queue.front();
    queue.pop_front();
    out.push_back(p);
    for (const auto& g : gens) {
      int q = g(p);
      if (!seen[static_cast<size_t>(q)]) {
        seen[static_cast<size_t>(q)] = true;
        queue.push_back(q);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> orbit(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw InvalidInput("BadParameter", "point out of range");
  return orbit_of_point(g.generators(), x);
}

PermGroup stabilizer(const PermGroup& g, int x) {
  if (x < 0 || x >= g.degree()) throw InvalidInput("BadParameter", "point out of range");
  std::vector<Perm> fixing;
  for (const auto& e : g.elements())
    if (e(x) == x) fixing.push_back(e);
  return close_group(std::move(fixing), g.order());
}

bool is_normal(const PermGroup& g, const PermGroup& h) {
  if (!h.is_subgroup_of(g))
    throw InvalidInput("NotASubgroup", "H is not contained in G");
  for (const auto& gen : g.generators()) {
    Perm gen_inv = gen.inverse();
    for (const auto& e : h.elements())
      if (!h.contains(gen * e * gen_inv)) return false;
  }
  return true;
}

PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed, long limit) {
  for (const auto& s : seed)
    if (!g.contains(s))
      throw InvalidInput("NotASubgroup", "seed element outside the ambient group");

  // Alternate subgroup closure with conjugation by the ambient generators
  // until stable; exact at these orders.
  std::vector<Perm> gens = seed;
  if (gens.empty()) gens.push_back(Perm::identity(g.degree()));
  PermGroup current = close_group(gens, limit);
  for (;;) {
    bool grew = false;
    for (const auto& gen : g.generators()) {
      Perm gen_inv = gen.inverse();
      for (const auto& e : current.elements()) {
        Perm conj = gen * e * gen_inv;
        if (!current.contains(conj)) {
          gens.push_back(conj);
          grew = true;
        }
      }
    }
    if (!grew) return current;
    current = close_group(gens, limit);
  }
}

TransitivityProfile transitivity_profile(const PermGroup& g) {
  TransitivityProfile out;
  out.transitive = static_cast<int>(orbit(g, 0).size()) == g.degree();
  out.semiregular = true;
  for (int x = 0; x < g.degree() && out.semiregular; ++x)
    for (const auto& e : g.elements())
      if (e(x) == x && !e.is_identity()) {
        out.semiregular = false;
        break;
      }
  out.regular = out.transitive && out.semiregular;
  return out;
}

namespace {

// Finest partition containing the given pairs whose classes are permuted by
// every generator; fixpoint refinement over i ~ rep(i) => g(i) ~ g(rep(i)).
Partition invariant_closure(int degree, const std::vector<Perm>& gens,
                            const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(degree);
  for (auto [a, b] : pairs) uf.unite(a, b);
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& g : gens)
      for (int i = 0; i < degree; ++i) {
        int r = uf.find(i);
        if (r != i && uf.unite(g(i), g(r))) changed = true;
      }
  }
  return uf.to_partition();
}

}  // namespace

Partition minimal_block(const PermGroup& g, int x, int y) {
  if (!transitivity_profile(g).transitive)
    throw InvalidInput("NotTransitive", "minimal blocks need a transitive group");
  if (x == y) throw InvalidInput("BadParameter", "points must differ");
  return invariant_closure(g.degree(), g.generators(), {{x, y}});
}

std::vector<Partition> all_block_systems(const PermGroup& g) {
  if (!transitivity_profile(g).transitive)
    throw InvalidInput("NotTransitive", "block systems need a transitive group");
  // Every invariant partition is a join of minimal blocks through point 0.
  std::set<Partition> systems;
  for (int y = 1; y < g.degree(); ++y) {
    Partition p = minimal_block(g, 0, y);
    if (!p.is_full()) systems.insert(p);
  }
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Partition> current(systems.begin(), systems.end());
    for (size_t i = 0; i < current.size(); ++i)
      for (size_t j = i + 1; j < current.size(); ++j) {
        Partition joined = current[i].join(current[j]);
        if (!joined.is_full() && systems.insert(joined).second) grew = true;
      }
  }
  return {systems.begin(), systems.end()};
}

Partition orbit_partition(const PermGroup& h) {
  UnionFind uf(h.degree());
  for (const auto& g : h.generators())
    for (int x = 0; x < h.degree(); ++x) uf.unite(x, g(x));
  return uf.to_partition();
}

Partition sim_partition(const PermGroup& h) {
  const int n = h.degree();
  // Key each point by the set of elements fixing it.
  std::vector<std::vector<int>> stab_key(static_cast<size_t>(n));
  for (int idx = 0; idx < static_cast<int>(h.elements().size()); ++idx) {
    const Perm& e = h.elements()[static_cast<size_t>(idx)];
    for (int x = 0; x < n; ++x)
      if (e(x) == x) stab_key[static_cast<size_t>(x)].push_back(idx);
  }
  std::vector<int> ids(static_cast<size_t>(n));
  for (int x = 0; x < n; ++x) {
    ids[static_cast<size_t>(x)] = x;
    for (int y = 0; y < x; ++y)
      if (stab_key[static_cast<size_t>(y)] == stab_key[static_cast<size_t>(x)]) {
        ids[static_cast<size_t>(x)] = y;
        break;
      }
  }
  return Partition(std::move(ids));
}

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g, long limit) {
  // Normal closures of single nontrivial elements; inclusion-minimal members
  // of that family are exactly the minimal normal subgroups.
  std::vector<PermGroup> closures;
  std::set<std::vector<Perm>> seen;
  for (const auto& e : g.elements()) {
    if (e.is_identity()) continue;
    PermGroup ncl = normal_closure(g, {e}, limit);
    if (seen.insert(ncl.elements()).second) closures.push_back(std::move(ncl));
  }
  std::vector<PermGroup> minimal;
  for (const auto& cand : closures) {
    bool is_min = true;
    for (const auto& other : closures)
      if (other.order() < cand.order() && other.is_subgroup_of(cand)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(cand);
  }
  std::sort(minimal.begin(), minimal.end(), [](const PermGroup& a, const PermGroup& b) {
    return a.elements() < b.elements();
  });
  return minimal;
}

bool has_normal_sylow(const PermGroup& g, long p) {
  if (p < 2 || g.order() % p != 0)
    throw InvalidInput("BadParameter", "p must be a prime dividing the group order");
  long p_part = 1;
  long rest = g.order();
  while (rest % p == 0) {
    rest /= p;
    p_part *= p;
  }
  long count = 0;
  for (const auto& e : g.elements()) {
    int o = e.order();
    while (o % p == 0) o = o / static_cast<int>(p);
    if (o == 1) ++count;
  }
  // The p-power-order elements form the unique Sylow p-subgroup exactly when
  // their number equals the p-part of |G|.
  return count == p_part;
}

bool is_nilpotent(const PermGroup& g) {
  for (long p : prime_divisors(g.order()))
    if (!has_normal_sylow(g, p)) return false;
  return true;
}

std::map<int, long> order_profile(const PermGroup& g) {
  std::map<int, long> out;
  for (const auto& e : g.elements()) ++out[e.order()];
  return out;
}

std::vector<long> prime_divisors(long n) {
  std::vector<long> out;
  for (long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace cslab
