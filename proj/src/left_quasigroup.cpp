#include "cslab/left_quasigroup.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "cslab/errors.hpp"

namespace cslab {

LeftQuasigroup::LeftQuasigroup(std::vector<std::vector<int>> table) : table_(std::move(table)) {
  const int n = size();
  ldiv_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  for (int x = 0; x < n; ++x) {
    const auto& row = table_[static_cast<size_t>(x)];
    if (static_cast<int>(row.size()) != n || !is_permutation(row))
      throw InvalidInput("RowNotBijective", "row " + std::to_string(x) + " is not a bijection");
    for (int y = 0; y < n; ++y) ldiv_[static_cast<size_t>(x)][static_cast<size_t>(row[static_cast<size_t>(y)])] = y;
  }
}

Perm LeftQuasigroup::sigma(int x) const { return Perm(table_[static_cast<size_t>(x)]); }

std::vector<int> LeftQuasigroup::delta_images(int x) const {
  std::vector<int> img(static_cast<size_t>(size()));
  for (int y = 0; y < size(); ++y) img[static_cast<size_t>(y)] = op(y, x);
  return img;
}

PermGroup perm_group(const LeftQuasigroup& x, long limit) {
  std::vector<Perm> gens;
  gens.reserve(static_cast<size_t>(x.size()));
  for (int i = 0; i < x.size(); ++i) gens.push_back(x.sigma(i));
  return close_group(std::move(gens), limit);
}

PermGroup displacement_group(const LeftQuasigroup& x, long limit) {
  PermGroup g = perm_group(x, limit);
  std::vector<Perm> seed;
  Perm s0_inv = x.sigma(0).inverse();
  for (int i = 0; i < x.size(); ++i) seed.push_back(x.sigma(i) * s0_inv);
  return normal_closure(g, seed, limit);
}

PermGroup total_group(const LeftQuasigroup& x, long limit) {
  if (!is_latin(x)) throw InvalidInput("NotLatin", "total group needs a latin table");
  std::vector<Perm> gens;
  for (int i = 0; i < x.size(); ++i) gens.push_back(x.sigma(i));
  for (int i = 0; i < x.size(); ++i) gens.push_back(Perm(x.delta_images(i)));
  return close_group(std::move(gens), limit);
}

bool is_latin(const LeftQuasigroup& x) {
  for (int i = 0; i < x.size(); ++i)
    if (!is_permutation(x.delta_images(i))) return false;
  return true;
}

bool is_irretractable(const LeftQuasigroup& x) {
  std::set<std::vector<int>> rows(x.table().begin(), x.table().end());
  return static_cast<int>(rows.size()) == x.size();
}

bool is_indecomposable(const LeftQuasigroup& x) {
  std::vector<Perm> gens;
  for (int i = 0; i < x.size(); ++i) gens.push_back(x.sigma(i));
  return static_cast<int>(orbit_of_point(gens, 0).size()) == x.size();
}

Partition principal_congruence(const LeftQuasigroup& x, int a, int b) {
  const int n = x.size();
  if (a < 0 || a >= n || b < 0 || b >= n)
    throw InvalidInput("BadParameter", "point out of range");
  UnionFind uf(n);
  std::deque<std::pair<int, int>> work;
  if (uf.unite(a, b)) work.emplace_back(a, b);
  while (!work.empty()) {
    auto [u, v] = work.front();
    work.pop_front();
    for (int z = 0; z < n; ++z) {
      const std::pair<int, int> derived[4] = {
          {x.op(u, z), x.op(v, z)},
          {x.op(z, u), x.op(z, v)},
          {x.ldiv(u, z), x.ldiv(v, z)},
          {x.ldiv(z, u), x.ldiv(z, v)},
      };
      for (auto [p, q] : derived)
        if (uf.unite(p, q)) work.emplace_back(p, q);
    }
  }
  return uf.to_partition();
}

bool is_congruence(const LeftQuasigroup& x, const Partition& alpha) {
  const int n = x.size();
  if (alpha.size() != n) return false;
  for (int u = 0; u < n; ++u) {
    int v = alpha.rep(u);
    if (v == u) continue;
    for (int z = 0; z < n; ++z) {
      if (!alpha.same(x.op(u, z), x.op(v, z))) return false;
      if (!alpha.same(x.op(z, u), x.op(z, v))) return false;
      if (!alpha.same(x.ldiv(u, z), x.ldiv(v, z))) return false;
      if (!alpha.same(x.ldiv(z, u), x.ldiv(z, v))) return false;
    }
  }
  return true;
}

std::vector<Partition> congruences(const LeftQuasigroup& x, int max_size) {
  const int n = x.size();
  if (n > max_size)
    throw LimitExceeded("SizeLimitExceeded",
                        "congruence lattice limited to " + std::to_string(max_size) + " points");
  std::set<Partition> lattice;
  lattice.insert(Partition::singletons(n));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) lattice.insert(principal_congruence(x, a, b));
  // Close under join; a join of congruences is again a congruence.
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Partition> cur(lattice.begin(), lattice.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j)
        if (lattice.insert(cur[i].join(cur[j])).second) grew = true;
  }
  return {lattice.begin(), lattice.end()};
}

bool is_simple(const LeftQuasigroup& x) {
  if (!is_indecomposable(x)) return false;
  for (int a = 0; a < x.size(); ++a)
    for (int b = a + 1; b < x.size(); ++b)
      if (!principal_congruence(x, a, b).is_full()) return false;
  return true;
}

bool is_admissible(const LeftQuasigroup& x, const PermGroup& h) {
  PermGroup g = perm_group(x);
  if (!h.is_subgroup_of(g))
    throw InvalidInput("NotASubgroup", "H is not contained in G(X)");
  if (!is_normal(g, h)) return false;
  for (int p = 0; p < x.size(); ++p) {
    Perm sp_inv = x.sigma(p).inverse();
    for (const auto& e : h.elements())
      if (!h.contains(sp_inv * x.sigma(e(p)))) return false;
  }
  return true;
}

PermGroup kernel_subgroup(const LeftQuasigroup& x, const Partition& alpha, long limit) {
  if (!is_congruence(x, alpha))
    throw InvalidInput("NotACongruence", "kernel subgroup needs a congruence");
  PermGroup g = perm_group(x, limit);
  std::vector<Perm> members;
  for (const auto& e : g.elements()) {
    bool inside = true;
    for (int p = 0; p < x.size() && inside; ++p) inside = alpha.same(e(p), p);
    if (inside) members.push_back(e);
  }
  return close_group(std::move(members), limit);
}

PermGroup dis_alpha(const LeftQuasigroup& x, const Partition& alpha, long limit) {
  if (!is_congruence(x, alpha))
    throw InvalidInput("NotACongruence", "Dis_alpha needs a congruence");
  PermGroup g = perm_group(x, limit);
  std::vector<Perm> seed{Perm::identity(x.size())};
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (alpha.same(a, b)) seed.push_back(x.sigma(a) * x.sigma(b).inverse());
  return normal_closure(g, seed, limit);
}

QuotientResult quotient(const LeftQuasigroup& x, const Partition& alpha) {
  if (!is_congruence(x, alpha))
    throw InvalidInput("NotACongruence", "quotient needs a congruence");
  auto classes = alpha.classes();
  const int m = static_cast<int>(classes.size());
  std::vector<int> proj(static_cast<size_t>(x.size()));
  for (int c = 0; c < m; ++c)
    for (int p : classes[static_cast<size_t>(c)]) proj[static_cast<size_t>(p)] = c;
  std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          proj[static_cast<size_t>(x.op(classes[static_cast<size_t>(a)][0], classes[static_cast<size_t>(b)][0]))];
  return {LeftQuasigroup(std::move(table)), std::move(proj)};
}

bool is_morphism(const LeftQuasigroup& x, const LeftQuasigroup& y, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != x.size()) return false;
  for (int v : f)
    if (v < 0 || v >= y.size()) return false;
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      if (f[static_cast<size_t>(x.op(a, b))] !=
          y.op(f[static_cast<size_t>(a)], f[static_cast<size_t>(b)]))
        return false;
  return true;
}

bool is_epimorphism(const LeftQuasigroup& x, const LeftQuasigroup& y, const std::vector<int>& f) {
  if (!is_morphism(x, y, f)) return false;
  std::set<int> image(f.begin(), f.end());
  return static_cast<int>(image.size()) == y.size();
}

namespace {

// Backtracking isomorphism search. Candidate images are filtered by the row
// cycle type plus the idempotence flag, and partial products force images
// early, which keeps the 27-point searches shallow.
struct IsoSearch {
  const LeftQuasigroup& x;
  const LeftQuasigroup& y;
  std::vector<std::vector<int>> candidates;  // per source point
  std::vector<int> fwd, rev;
  bool collect_all = false;
  std::vector<std::vector<int>> found;

  IsoSearch(const LeftQuasigroup& x_, const LeftQuasigroup& y_) : x(x_), y(y_) {
    const int n = x.size();
    fwd.assign(static_cast<size_t>(n), -1);
    rev.assign(static_cast<size_t>(n), -1);
    auto fingerprint = [](const LeftQuasigroup& q, int p) {
      auto key = q.sigma(p).cycle_type();
      key.push_back(q.op(p, p) == p ? 1 : 0);
      return key;
    };
    candidates.resize(static_cast<size_t>(n));
    for (int a = 0; a < n; ++a) {
      auto ka = fingerprint(x, a);
      for (int b = 0; b < n; ++b)
        if (ka == fingerprint(y, b)) candidates[static_cast<size_t>(a)].push_back(b);
    }
  }

  bool assign(int a, int b, std::vector<int>& trail) {
    if (fwd[static_cast<size_t>(a)] >= 0) return fwd[static_cast<size_t>(a)] == b;
    if (rev[static_cast<size_t>(b)] >= 0) return false;
    fwd[static_cast<size_t>(a)] = b;
    rev[static_cast<size_t>(b)] = a;
    trail.push_back(a);
    return true;
  }

  // Propagate f(u*v) = f(u)*f(v) over all defined pairs; false on conflict.
  bool propagate(std::vector<int>& trail) {
    size_t scanned = 0;
    while (scanned < trail.size()) {
      int a = trail[scanned++];
      int fa = fwd[static_cast<size_t>(a)];
      for (size_t i = 0; i < trail.size(); ++i) {
        int u = trail[i];
        int fu = fwd[static_cast<size_t>(u)];
        if (!assign(x.op(a, u), y.op(fa, fu), trail)) return false;
        if (u == a) continue;
        if (!assign(x.op(u, a), y.op(fu, fa), trail)) return false;
      }
    }
    return true;
  }

  void undo(std::vector<int>& trail, size_t mark) {
    while (trail.size() > mark) {
      int a = trail.back();
      trail.pop_back();
      rev[static_cast<size_t>(fwd[static_cast<size_t>(a)])] = -1;
      fwd[static_cast<size_t>(a)] = -1;
    }
  }

  bool search(std::vector<int>& trail) {
    int next = -1;
    for (int a = 0; a < x.size(); ++a)
      if (fwd[static_cast<size_t>(a)] < 0) {
        next = a;
        break;
      }
    if (next < 0) {
      found.push_back(fwd);
      return !collect_all;
    }
    for (int b : candidates[static_cast<size_t>(next)]) {
      if (rev[static_cast<size_t>(b)] >= 0) continue;
      size_t mark = trail.size();
      if (assign(next, b, trail) && propagate(trail)) {
        if (search(trail)) return true;
      }
      undo(trail, mark);
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<int>> isomorphic(const LeftQuasigroup& x, const LeftQuasigroup& y,
                                           int max_size) {
  if (x.size() != y.size()) return std::nullopt;
  if (x.size() > max_size)
    throw LimitExceeded("SizeLimitExceeded",
                        "isomorphism search limited to " + std::to_string(max_size) + " points");
  IsoSearch s(x, y);
  std::vector<int> trail;
  if (s.search(trail)) return s.found.front();
  return std::nullopt;
}

std::vector<Perm> automorphisms(const LeftQuasigroup& x, int max_size) {
  if (x.size() > max_size)
    throw LimitExceeded("SizeLimitExceeded",
                        "automorphism search limited to " + std::to_string(max_size) + " points");
  IsoSearch s(x, x);
  s.collect_all = true;
  std::vector<int> trail;
  s.search(trail);
  std::vector<Perm> out;
  out.reserve(s.found.size());
  for (auto& images : s.found) out.emplace_back(std::move(images));
  std::sort(out.begin(), out.end());
  return out;
}

LeftQuasigroup deform(const LeftQuasigroup& x, const Perm& alpha) {
  if (alpha.degree() != x.size() ||
      !is_morphism(x, x, alpha.images()))
    throw InvalidInput("NotAnAutomorphism", "deformation needs an automorphism");
  std::vector<std::vector<int>> table(static_cast<size_t>(x.size()),
                                      std::vector<int>(static_cast<size_t>(x.size())));
  for (int a = 0; a < x.size(); ++a)
    for (int b = 0; b < x.size(); ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = alpha(x.op(a, b));
  return LeftQuasigroup(std::move(table));
}

bool is_covering(const LeftQuasigroup& x, const LeftQuasigroup& y, const std::vector<int>& p,
                 long limit) {
  if (!is_epimorphism(x, y, p))
    throw InvalidInput("NotAMorphism", "covering test needs an epimorphism");
  return perm_group(x, limit).order() == perm_group(y, limit).order();
}

CoverResult universal_cover(const LeftQuasigroup& x, int base_point, long limit) {
  if (!is_indecomposable(x))
    throw InvalidInput("NotIndecomposable", "universal cover needs an indecomposable table");
  if (base_point < 0 || base_point >= x.size())
    throw InvalidInput("BadParameter", "base point out of range");
  PermGroup g = perm_group(x, limit);
  if (g.order() > kDefaultTableLimit)
    throw LimitExceeded("OrderLimitExceeded", "cover carrier would exceed the table limit");
  const int m = static_cast<int>(g.order());
  std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  std::vector<int> proj(static_cast<size_t>(m));
  for (int a = 0; a < m; ++a) {
    const Perm& ga = g.elements()[static_cast<size_t>(a)];
    proj[static_cast<size_t>(a)] = ga(base_point);
    Perm row = x.sigma(ga(base_point));
    for (int b = 0; b < m; ++b) {
      int idx = g.index_of(row * g.elements()[static_cast<size_t>(b)]);
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = idx;
    }
  }
  CoverResult out{LeftQuasigroup(std::move(table)), std::move(proj), g.elements()};
  return out;
}

Partition kernel_of_map(int n, const std::vector<int>& f) {
  std::map<int, int> first;
  std::vector<int> ids(static_cast<size_t>(n));
  for (int p = 0; p < n; ++p) {
    auto it = first.find(f[static_cast<size_t>(p)]);
    if (it == first.end()) it = first.emplace(f[static_cast<size_t>(p)], p).first;
    ids[static_cast<size_t>(p)] = it->second;
  }
  return Partition(std::move(ids));
}

FactorizationResult factor_epimorphism(const LeftQuasigroup& x, const LeftQuasigroup& y,
                                       const std::vector<int>& p, long limit) {
  if (!is_epimorphism(x, y, p))
    throw InvalidInput("NotAMorphism", "factorization needs an epimorphism");
  if (!is_indecomposable(x) || !is_indecomposable(y))
    throw InvalidInput("NotIndecomposable", "factorization needs indecomposable tables");
  Partition ker = kernel_of_map(x.size(), p);
  PermGroup k = kernel_subgroup(x, ker, limit);
  Partition alpha = orbit_partition(k);
  QuotientResult through = quotient(x, alpha);
  // q([z]) := p(z) is well defined because alpha refines ker p.
  const int m = through.quotient.size();
  std::vector<int> q(static_cast<size_t>(m), -1);
  for (int z = 0; z < x.size(); ++z) {
    int cls = through.projection[static_cast<size_t>(z)];
    if (q[static_cast<size_t>(cls)] < 0) q[static_cast<size_t>(cls)] = p[static_cast<size_t>(z)];
    else if (q[static_cast<size_t>(cls)] != p[static_cast<size_t>(z)])
      throw InvalidInput("NotAMorphism", "kernel orbits do not refine ker p");
  }
  if (!is_covering(through.quotient, y, q, limit))
    throw InvalidInput("NotAMorphism", "residual map failed the covering check");
  return {std::move(alpha), std::move(through), std::move(q)};
}

}  // namespace cslab
