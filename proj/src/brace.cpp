#include "cslab/brace.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "cslab/cycle_set.hpp"
#include "cslab/errors.hpp"

namespace cslab {

namespace {

// Locates the neutral element of a group table, -1 if none.
int find_neutral(const std::vector<std::vector<int>>& t) {
  const int n = static_cast<int>(t.size());
  for (int e = 0; e < n; ++e) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = t[static_cast<size_t>(e)][static_cast<size_t>(x)] == x &&
           t[static_cast<size_t>(x)][static_cast<size_t>(e)] == x;
    if (ok) return e;
  }
  return -1;
}

bool is_group_table(const std::vector<std::vector<int>>& t, int neutral,
                    std::vector<int>* inverses) {
  const int n = static_cast<int>(t.size());
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != n || !is_permutation(row)) return false;
  // Columns bijective too (latin square), then associativity.
  for (int c = 0; c < n; ++c) {
    std::vector<int> col(static_cast<size_t>(n));
    for (int r = 0; r < n; ++r) col[static_cast<size_t>(r)] = t[static_cast<size_t>(r)][static_cast<size_t>(c)];
    if (!is_permutation(col)) return false;
  }
  if (neutral < 0) return false;
  inverses->assign(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (t[static_cast<size_t>(x)][static_cast<size_t>(y)] == neutral) {
        if (t[static_cast<size_t>(y)][static_cast<size_t>(x)] != neutral) return false;
        (*inverses)[static_cast<size_t>(x)] = y;
      }
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (t[static_cast<size_t>(t[static_cast<size_t>(x)][static_cast<size_t>(y)])][static_cast<size_t>(z)] !=
            t[static_cast<size_t>(x)][static_cast<size_t>(t[static_cast<size_t>(y)][static_cast<size_t>(z)])])
          return false;
  return true;
}

}  // namespace

FiniteBrace::FiniteBrace(std::vector<std::vector<int>> add_in, std::vector<std::vector<int>> mul_in)
    : add_(std::move(add_in)), mul_(std::move(mul_in)) {
  const int n = size();
  if (static_cast<int>(mul_.size()) != n)
    throw InvalidInput("NotAGroup", "additive and multiplicative tables differ in size");
  int zero_add = find_neutral(add_);
  if (zero_add < 0 || !is_group_table(add_, zero_add, &neg_))
    throw InvalidInput("NotAbelianGroup", "additive table is not a group");
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < x; ++y)
      if (add_[static_cast<size_t>(x)][static_cast<size_t>(y)] !=
          add_[static_cast<size_t>(y)][static_cast<size_t>(x)])
        throw InvalidInput("NotAbelianGroup", "additive table is not commutative");
  int zero_mul = find_neutral(mul_);
  if (zero_mul < 0 || !is_group_table(mul_, zero_mul, &inv_))
    throw InvalidInput("NotAGroup", "multiplicative table is not a group");
  if (zero_add != zero_mul)
    throw InvalidInput("NotAGroup", "the two neutral elements differ");
  zero_ = zero_add;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (add(mul(x, add(y, z)), x) != add(mul(x, y), mul(x, z)))
          throw InvalidInput("BraceLawFails",
                             "x o (y+z) + x != x o y + x o z at (" + std::to_string(x) + "," +
                                 std::to_string(y) + "," + std::to_string(z) + ")");
}

Perm FiniteBrace::lambda_of(int x) const {
  std::vector<int> img(static_cast<size_t>(size()));
  for (int y = 0; y < size(); ++y) img[static_cast<size_t>(y)] = add(neg(x), mul(x, y));
  return Perm(std::move(img));
}

int FiniteBrace::star(int x, int y) const { return add(add(neg(x), mul(x, y)), neg(y)); }

int FiniteBrace::additive_order(int x) const {
  int acc = x, ord = 1;
  while (acc != zero_) {
    acc = add(acc, x);
    ++ord;
  }
  return ord;
}

namespace {

bool contains_sorted(const std::vector<int>& s, int v) {
  return std::binary_search(s.begin(), s.end(), v);
}

bool is_mul_subgroup(const FiniteBrace& b, const std::vector<int>& s) {
  if (!contains_sorted(s, b.zero())) return false;
  for (int x : s) {
    if (!contains_sorted(s, b.inv(x))) return false;
    for (int y : s)
      if (!contains_sorted(s, b.mul(x, y))) return false;
  }
  return true;
}

}  // namespace

bool is_left_ideal(const FiniteBrace& b, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (!is_mul_subgroup(b, s)) return false;
  for (int x = 0; x < b.size(); ++x) {
    Perm lam = b.lambda_of(x);
    for (int y : s)
      if (!contains_sorted(s, lam(y))) return false;
  }
  return true;
}

bool is_ideal(const FiniteBrace& b, const std::vector<int>& subset) {
  std::vector<int> s = subset;
  std::sort(s.begin(), s.end());
  if (!is_left_ideal(b, s)) return false;
  for (int g = 0; g < b.size(); ++g)
    for (int y : s)
      if (!contains_sorted(s, b.mul(b.mul(g, y), b.inv(g)))) return false;
  return true;
}

std::vector<int> socle(const FiniteBrace& b) {
  std::vector<int> out;
  for (int x = 0; x < b.size(); ++x)
    if (b.lambda_of(x).is_identity()) out.push_back(x);
  return out;
}

std::vector<int> b_square(const FiniteBrace& b) {
  std::set<int> gens;
  for (int x = 0; x < b.size(); ++x)
    for (int y = 0; y < b.size(); ++y) gens.insert(b.star(x, y));
  // Additive closure.
  std::set<int> closed{b.zero()};
  std::deque<int> queue{b.zero()};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int g : gens) {
      int w = b.add(v, g);
      if (closed.insert(w).second) queue.push_back(w);
    }
  }
  return {closed.begin(), closed.end()};
}

std::vector<int> sylow_left_ideal(const FiniteBrace& b, long p) {
  std::vector<int> out;
  for (int x = 0; x < b.size(); ++x) {
    int o = b.additive_order(x);
    while (o % p == 0) o = o / static_cast<int>(p);
    if (o == 1) out.push_back(x);
  }
  return out;
}

std::vector<int> ideal_closure(const FiniteBrace& b, const std::vector<int>& seed) {
  // Grow under: mul-subgroup ops, mul-conjugation, lambda images, addition.
  std::set<int> s{b.zero()};
  std::deque<int> queue;
  for (int v : seed)
    if (s.insert(v).second) queue.push_back(v);
  std::vector<Perm> lambdas;
  for (int x = 0; x < b.size(); ++x) lambdas.push_back(b.lambda_of(x));
  bool stable = false;
  while (!stable) {
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      auto push = [&](int w) {
        if (s.insert(w).second) queue.push_back(w);
      };
      push(b.inv(v));
      push(b.neg(v));
      for (int g = 0; g < b.size(); ++g) {
        push(b.mul(b.mul(g, v), b.inv(g)));
        push(lambdas[static_cast<size_t>(g)](v));
      }
      for (int w : std::vector<int>(s.begin(), s.end())) {
        push(b.mul(v, w));
        push(b.add(v, w));
      }
    }
    // Re-check closure of the accumulated set under the binary ops.
    stable = true;
    for (int v : s)
      for (int w : s) {
        if (s.insert(b.mul(v, w)).second) {
          queue.push_back(b.mul(v, w));
          stable = false;
        }
        if (s.insert(b.add(v, w)).second) {
          queue.push_back(b.add(v, w));
          stable = false;
        }
      }
  }
  return {s.begin(), s.end()};
}

std::vector<std::vector<int>> ideals(const FiniteBrace& b) {
  std::set<std::vector<int>> found;
  found.insert({b.zero()});
  for (int x = 0; x < b.size(); ++x)
    if (x != b.zero()) found.insert(ideal_closure(b, {x}));
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<int>> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        std::vector<int> both = cur[i];
        both.insert(both.end(), cur[j].begin(), cur[j].end());
        if (found.insert(ideal_closure(b, both)).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

FiniteBrace quotient_brace(const FiniteBrace& b, const std::vector<int>& ideal) {
  if (!is_ideal(b, ideal)) throw InvalidInput("NotAnIdeal", "quotient needs an ideal");
  const int n = b.size();
  // Additive cosets; for an ideal they coincide with multiplicative cosets.
  std::vector<int> coset_rep(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    if (coset_rep[static_cast<size_t>(x)] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int i : ideal) coset_rep[static_cast<size_t>(b.add(x, i))] = idx;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> add(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  std::vector<std::vector<int>> mul = add;
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c) {
      add[static_cast<size_t>(a)][static_cast<size_t>(c)] =
          coset_rep[static_cast<size_t>(b.add(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(c)]))];
      mul[static_cast<size_t>(a)][static_cast<size_t>(c)] =
          coset_rep[static_cast<size_t>(b.mul(reps[static_cast<size_t>(a)], reps[static_cast<size_t>(c)]))];
    }
  return FiniteBrace(std::move(add), std::move(mul));
}

FiniteBrace trivial_brace_cyclic(int n) {
  std::vector<std::vector<int>> t(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) t[static_cast<size_t>(x)][static_cast<size_t>(y)] = (x + y) % n;
  auto copy = t;
  return FiniteBrace(std::move(t), std::move(copy));
}

PermutationBrace permutation_brace(const LeftQuasigroup& x, long limit) {
  if (!is_cycle_set(x) || !is_nondegenerate(x))
    throw InvalidInput("NotACycleSet", "permutation brace needs a non-degenerate cycle set");
  PermGroup g = perm_group(x, limit);
  const int m = static_cast<int>(g.order());
  const int n = x.size();

  std::vector<int> q_index(static_cast<size_t>(n));
  for (int y = 0; y < n; ++y) {
    int idx = g.index_of(x.sigma(y).inverse());
    if (idx < 0) throw InvalidInput("BraceConstructionFailed", "sigma inverse missing from closure");
    q_index[static_cast<size_t>(y)] = idx;
  }

  std::vector<std::vector<int>> mul(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a)
    for (int c = 0; c < m; ++c)
      mul[static_cast<size_t>(a)][static_cast<size_t>(c)] =
          g.index_of(g.elements()[static_cast<size_t>(a)] * g.elements()[static_cast<size_t>(c)]);

  const int zero = g.index_of(Perm::identity(x.size()));

  // a + q_y = a o q_{a^{-1}(y)}.
  auto add_gen = [&](int a, int y) {
    int pre = g.elements()[static_cast<size_t>(a)].inverse()(y);
    return mul[static_cast<size_t>(a)][static_cast<size_t>(q_index[static_cast<size_t>(pre)])];
  };

  // BFS from zero through generator additions; dec[b] = (previous, point).
  std::vector<std::pair<int, int>> dec(static_cast<size_t>(m), {-1, -1});
  std::vector<int> bfs_order{zero};
  std::vector<bool> reached(static_cast<size_t>(m), false);
  reached[static_cast<size_t>(zero)] = true;
  for (size_t head = 0; head < bfs_order.size(); ++head) {
    int a = bfs_order[head];
    for (int y = 0; y < n; ++y) {
      int b = add_gen(a, y);
      if (!reached[static_cast<size_t>(b)]) {
        reached[static_cast<size_t>(b)] = true;
        dec[static_cast<size_t>(b)] = {a, y};
        bfs_order.push_back(b);
      }
    }
  }
  if (static_cast<int>(bfs_order.size()) != m)
    throw InvalidInput("BraceConstructionFailed",
                       "generators do not additively span the permutation group");

  std::vector<std::vector<int>> add(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int a = 0; a < m; ++a) add[static_cast<size_t>(a)][static_cast<size_t>(zero)] = a;
  for (int b : bfs_order) {
    if (b == zero) continue;
    auto [prev, y] = dec[static_cast<size_t>(b)];
    for (int a = 0; a < m; ++a)
      add[static_cast<size_t>(a)][static_cast<size_t>(b)] =
          add_gen(add[static_cast<size_t>(a)][static_cast<size_t>(prev)], y);
  }

  PermutationBrace out;
  out.brace = FiniteBrace(std::move(add), std::move(mul));  // throws if inconsistent
  out.carrier = g.elements();
  out.sigma_inv_index = std::move(q_index);
  // The defining lambda rule must hold on the generators.
  for (int a = 0; a < m; ++a) {
    Perm lam = out.brace.lambda_of(a);
    const Perm& ga = out.carrier[static_cast<size_t>(a)];
    for (int y = 0; y < n; ++y)
      if (lam(out.sigma_inv_index[static_cast<size_t>(y)]) !=
          out.sigma_inv_index[static_cast<size_t>(ga(y))])
        throw InvalidInput("BraceConstructionFailed", "lambda rule fails on generators");
  }
  return out;
}

CycleBaseResult transitive_cycle_base(const PermutationBrace& pb, const LeftQuasigroup& x) {
  if (!is_irretractable(x))
    throw InvalidInput("NotIrretractable", "cycle base needs an irretractable cycle set");
  if (!is_indecomposable(x))
    throw InvalidInput("NotIndecomposable", "cycle base needs an indecomposable cycle set");
  const int n = x.size();
  CycleBaseResult out;
  out.base = pb.sigma_inv_index;
  std::vector<int> point_of(static_cast<size_t>(pb.brace.size()), -1);
  for (int y = 0; y < n; ++y) point_of[static_cast<size_t>(pb.sigma_inv_index[static_cast<size_t>(y)])] = y;
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a) {
    Perm lam_inv = pb.brace.lambda_of(pb.brace.inv(pb.sigma_inv_index[static_cast<size_t>(a)]));
    for (int b = 0; b < n; ++b) {
      int img = lam_inv(pb.sigma_inv_index[static_cast<size_t>(b)]);
      int pt = point_of[static_cast<size_t>(img)];
      if (pt < 0)
        throw InvalidInput("BraceConstructionFailed", "lambda orbit left the cycle base");
      table[static_cast<size_t>(a)][static_cast<size_t>(b)] = pt;
    }
  }
  out.base_table = LeftQuasigroup(std::move(table));
  auto iso = isomorphic(out.base_table, x);
  if (!iso)
    throw InvalidInput("BraceConstructionFailed", "cycle base table not isomorphic to X");
  out.iso_to_x = *iso;
  return out;
}

LeftQuasigroup cycle_set_from_brace(const FiniteBrace& b, int a, const std::vector<int>& k) {
  const int n = b.size();
  if (a < 0 || a >= n) throw InvalidInput("BadParameter", "base element out of range");
  // lambda-orbit of a must additively generate B (transitive cycle base).
  std::vector<bool> in_orbit(static_cast<size_t>(n), false);
  std::deque<int> queue{a};
  in_orbit[static_cast<size_t>(a)] = true;
  std::vector<int> orbit{a};
  while (!queue.empty()) {
    int v = queue.front();
    queue.pop_front();
    for (int g = 0; g < n; ++g) {
      int w = b.lambda_of(g)(v);
      if (!in_orbit[static_cast<size_t>(w)]) {
        in_orbit[static_cast<size_t>(w)] = true;
        orbit.push_back(w);
        queue.push_back(w);
      }
    }
  }
  std::set<int> span{b.zero()};
  std::deque<int> sq(span.begin(), span.end());
  while (!sq.empty()) {
    int v = sq.front();
    sq.pop_front();
    for (int w : orbit) {
      int u = b.add(v, w);
      if (span.insert(u).second) sq.push_back(u);
    }
  }
  if (static_cast<int>(span.size()) != n)
    throw InvalidInput("NotACycleBase", "lambda orbit does not additively generate the brace");

  std::vector<int> ks = k;
  std::sort(ks.begin(), ks.end());
  if (!is_mul_subgroup(b, ks))
    throw InvalidInput("NotCoreFree", "K is not a multiplicative subgroup");
  for (int v : ks)
    if (b.lambda_of(v)(a) != a)
      throw InvalidInput("NotInStabilizer", "K is not inside the lambda-stabilizer of a");
  // Core-free: no nontrivial mul-normal subgroup inside K. The core is the
  // intersection of all conjugates of K.
  std::vector<bool> core(static_cast<size_t>(n), false);
  for (int v : ks) core[static_cast<size_t>(v)] = true;
  for (int g = 0; g < n; ++g)
    for (int v = 0; v < n; ++v)
      if (core[static_cast<size_t>(v)] && !contains_sorted(ks, b.mul(b.mul(b.inv(g), v), g)))
        core[static_cast<size_t>(v)] = false;
  for (int v = 0; v < n; ++v)
    if (core[static_cast<size_t>(v)] && v != b.zero())
      throw InvalidInput("NotCoreFree", "K contains a nontrivial normal subgroup");

  // Left cosets x o K.
  std::vector<int> coset_of(static_cast<size_t>(n), -1);
  std::vector<int> reps;
  for (int v = 0; v < n; ++v) {
    if (coset_of[static_cast<size_t>(v)] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(v);
    for (int w : ks) coset_of[static_cast<size_t>(b.mul(v, w))] = idx;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::vector<int>> table(static_cast<size_t>(m), std::vector<int>(static_cast<size_t>(m)));
  for (int xi = 0; xi < m; ++xi) {
    int t = b.inv(b.lambda_of(reps[static_cast<size_t>(xi)])(a));
    for (int yi = 0; yi < m; ++yi)
      table[static_cast<size_t>(xi)][static_cast<size_t>(yi)] =
          coset_of[static_cast<size_t>(b.mul(t, reps[static_cast<size_t>(yi)]))];
  }
  LeftQuasigroup out{std::move(table)};
  if (!is_cycle_set(out) || !is_nondegenerate(out) || !is_indecomposable(out))
    throw InvalidInput("NotACycleBase", "coset construction did not yield an indecomposable cycle set");
  return out;
}

namespace {

// Splits x = x_p + x_coprime in the additive group.
std::pair<int, int> additive_p_split(const FiniteBrace& b, int x, long p) {
  int o = b.additive_order(x);
  int pa = 1;
  while (o % p == 0) {
    o /= static_cast<int>(p);
    pa *= static_cast<int>(p);
  }
  const int mcop = o;  // order = pa * mcop with gcd(pa, mcop) = 1
  // e = 1 mod pa, 0 mod mcop.
  int e = 0;
  for (int c = 0; c < pa; ++c)
    if ((static_cast<long>(c) * mcop) % pa == 1 % pa) {
      e = c * mcop;
      break;
    }
  auto scale = [&](int v, int times) {
    int acc = b.zero();
    for (int i = 0; i < times; ++i) acc = b.add(acc, v);
    return acc;
  };
  int xp = scale(x, e);
  return {xp, b.add(x, b.neg(xp))};
}

}  // namespace

DeformationDecomposition deformation_decomposition(const LeftQuasigroup& x, long limit) {
  const int n = x.size();
  if (!is_indecomposable(x) || !is_irretractable(x))
    throw InvalidInput("BadParameter", "decomposition needs an indecomposable irretractable cycle set");
  auto primes = prime_divisors(n);
  if (primes.size() != 1)
    throw InvalidInput("BadParameter", "carrier size is not a prime power");
  const long p = primes[0];

  PermutationBrace pb = permutation_brace(x, limit);
  const FiniteBrace& b = pb.brace;
  std::vector<int> bp = sylow_left_ideal(b, p);
  std::vector<int> bp_sorted = bp;
  std::sort(bp_sorted.begin(), bp_sorted.end());
  // Normality of the Sylow p left ideal in (B, o).
  for (int g = 0; g < b.size(); ++g)
    for (int v : bp)
      if (!contains_sorted(bp_sorted, b.mul(b.mul(g, v), b.inv(g))))
        throw InvalidInput("SylowNotNormal", "Sylow p left ideal is not mul-normal");

  if (static_cast<int>(bp.size()) == b.size())
    return {x, Perm::identity(n)};

  std::vector<int> coprime;  // complement Hall subgroup of (B,+)
  for (int v = 0; v < b.size(); ++v)
    if (b.additive_order(v) % p != 0) coprime.push_back(v);

  std::vector<Perm> lambdas;
  for (int v = 0; v < b.size(); ++v) lambdas.push_back(b.lambda_of(v));

  // Structured path from the theorem's proof: pick a base point whose cycle
  // base element is fixed by the lambda action of the coprime part.
  for (int w_star = 0; w_star < n; ++w_star) {
    int q_star = pb.sigma_inv_index[static_cast<size_t>(w_star)];
    bool fixed = true;
    for (int a : coprime)
      if (lambdas[static_cast<size_t>(a)](q_star) != q_star) {
        fixed = false;
        break;
      }
    if (!fixed) continue;

    auto [x1, t] = additive_p_split(b, q_star, p);
    int neg_t = b.neg(t);
    std::vector<int> y_part(static_cast<size_t>(n));
    std::vector<int> point_of(static_cast<size_t>(b.size()), -1);
    bool ok = true;
    for (int w = 0; w < n && ok; ++w) {
      int yw = b.add(pb.sigma_inv_index[static_cast<size_t>(w)], neg_t);
      if (!contains_sorted(bp_sorted, yw) || point_of[static_cast<size_t>(yw)] >= 0) ok = false;
      y_part[static_cast<size_t>(w)] = yw;
      point_of[static_cast<size_t>(yw)] = w;
    }
    if (!ok) continue;

    std::vector<std::vector<int>> ytab(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int w = 0; w < n && ok; ++w) {
      const Perm& lam_inv = lambdas[static_cast<size_t>(b.inv(y_part[static_cast<size_t>(w)]))];
      for (int v = 0; v < n; ++v) {
        int img = lam_inv(y_part[static_cast<size_t>(v)]);
        int pt = point_of[static_cast<size_t>(img)];
        if (pt < 0) {
          ok = false;
          break;
        }
        ytab[static_cast<size_t>(w)][static_cast<size_t>(v)] = pt;
      }
    }
    if (!ok) continue;

    std::vector<int> alpha_img(static_cast<size_t>(n));
    const Perm& lam_t_inv = lambdas[static_cast<size_t>(b.inv(t))];
    for (int w = 0; w < n && ok; ++w) {
      int pt = point_of[static_cast<size_t>(lam_t_inv(y_part[static_cast<size_t>(w)]))];
      if (pt < 0) ok = false;
      alpha_img[static_cast<size_t>(w)] = pt;
    }
    if (!ok) continue;

    LeftQuasigroup y{ytab};
    Perm alpha{alpha_img};
    if (!is_morphism(y, y, alpha.images())) continue;
    if (!(deform(y, alpha) == x)) continue;
    if (alpha.order() % p == 0) continue;
    bool alpha_fixes = false;
    for (int w = 0; w < n && !alpha_fixes; ++w) alpha_fixes = alpha(w) == w;
    if (!alpha_fixes) continue;
    long py_order = perm_group(y, limit).order();
    if (py_order != static_cast<long>(bp.size())) continue;
    return {std::move(y), std::move(alpha)};
  }

  // Brute-force fallback over automorphisms of X.
  if (n <= 27) {
    for (const Perm& beta : automorphisms(x)) {
      if (beta.order() % p == 0) continue;
      bool has_fixed = false;
      for (int w = 0; w < n; ++w)
        if (beta(w) == w) {
          has_fixed = true;
          break;
        }
      if (!has_fixed) continue;
      LeftQuasigroup y = deform(x, beta.inverse());
      long order = perm_group(y, limit).order();
      bool p_group = true;
      while (order % p == 0) order /= p;
      p_group = order == 1;
      if (!p_group) continue;
      return {std::move(y), beta};
    }
  }
  throw InvalidInput("SearchExhausted", "no deformation decomposition found");
}

}  // namespace cslab
