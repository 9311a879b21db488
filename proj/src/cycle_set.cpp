#include "cslab/cycle_set.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "cslab/errors.hpp"

namespace cslab {

std::vector<int> cycle_set_counterexample(const LeftQuasigroup& x) {
  const int n = x.size();
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int ab = x.op(a, b), ba = x.op(b, a);
      for (int c = 0; c < n; ++c)
        if (x.op(ab, x.op(a, c)) != x.op(ba, x.op(b, c))) return {a, b, c};
    }
  return {};
}

bool is_cycle_set(const LeftQuasigroup& x) { return cycle_set_counterexample(x).empty(); }

bool is_nondegenerate(const LeftQuasigroup& x) {
  std::vector<int> sq(static_cast<size_t>(x.size()));
  for (int a = 0; a < x.size(); ++a) sq[static_cast<size_t>(a)] = x.op(a, a);
  return is_permutation(sq);
}

SolutionPair to_solution(const LeftQuasigroup& x) {
  if (!is_cycle_set(x)) throw InvalidInput("NotACycleSet", "table fails the cycle-set law");
  if (!is_nondegenerate(x))
    throw InvalidInput("NotACycleSet", "squaring map is not bijective");
  const int n = x.size();
  SolutionPair s;
  s.n = n;
  s.lambda.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  s.rho.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int u = x.ldiv(a, b);  // sigma_a^{-1}(b)
      s.lambda[static_cast<size_t>(a)][static_cast<size_t>(b)] = u;
      s.rho[static_cast<size_t>(b)][static_cast<size_t>(a)] = x.op(u, a);
    }
  return s;
}

LeftQuasigroup from_solution(const SolutionPair& s) {
  const int n = s.n;
  if (static_cast<int>(s.lambda.size()) != n || static_cast<int>(s.rho.size()) != n)
    throw InvalidInput("NotInvolutive", "solution tables have wrong shape");
  for (int a = 0; a < n; ++a)
    if (!is_permutation(s.lambda[static_cast<size_t>(a)]) ||
        !is_permutation(s.rho[static_cast<size_t>(a)]))
      throw InvalidInput("NotInvolutive", "degenerate solution: component map not bijective");
  SolutionReport rep = verify_solution(s);
  if (!rep.involutive) throw InvalidInput("NotInvolutive", "r^2 is not the identity");
  // sigma_x = lambda_x^{-1} under the correspondence.
  std::vector<std::vector<int>> table(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      table[static_cast<size_t>(a)][static_cast<size_t>(s.lambda[static_cast<size_t>(a)][static_cast<size_t>(b)])] = b;
  LeftQuasigroup x{std::move(table)};
  if (!is_cycle_set(x) || !is_nondegenerate(x))
    throw InvalidInput("NotACycleSet", "solution does not come from a non-degenerate cycle set");
  if (!(to_solution(x) == s))
    throw InvalidInput("NotInvolutive", "rho table inconsistent with the correspondence");
  return x;
}

SolutionReport verify_solution(const SolutionPair& s) {
  const int n = s.n;
  SolutionReport rep;
  rep.nondegenerate = true;
  for (int a = 0; a < n && rep.nondegenerate; ++a)
    rep.nondegenerate = is_permutation(s.lambda[static_cast<size_t>(a)]) &&
                        is_permutation(s.rho[static_cast<size_t>(a)]);

  auto r = [&s](int x, int y) {
    return std::pair<int, int>(s.lambda[static_cast<size_t>(x)][static_cast<size_t>(y)],
                               s.rho[static_cast<size_t>(y)][static_cast<size_t>(x)]);
  };

  rep.involutive = true;
  for (int x = 0; x < n && rep.involutive; ++x)
    for (int y = 0; y < n && rep.involutive; ++y) {
      auto [u, v] = r(x, y);
      rep.involutive = r(u, v) == std::pair<int, int>(x, y);
    }

  rep.braid = true;
  for (int x = 0; x < n && rep.braid; ++x)
    for (int y = 0; y < n && rep.braid; ++y)
      for (int z = 0; z < n; ++z) {
        // L = (r x id)(id x r)(r x id), R = (id x r)(r x id)(id x r) on (x,y,z).
        auto [a1, b1] = r(x, y);
        auto [c1, d1] = r(b1, z);
        auto [e1, f1] = r(a1, c1);
        auto [a2, b2] = r(y, z);
        auto [c2, d2] = r(x, a2);
        auto [e2, f2] = r(d2, b2);
        bool same = e1 == c2 && f1 == e2 && d1 == f2;
        if (!same) {
          rep.braid = false;
          rep.witness[0] = x;
          rep.witness[1] = y;
          rep.witness[2] = z;
          break;
        }
      }
  return rep;
}

LeftQuasigroup trivial_cycle_set(int n, const Perm& gamma) {
  if (gamma.degree() != n) throw InvalidInput("BadParameter", "permutation degree mismatch");
  std::vector<std::vector<int>> table(static_cast<size_t>(n), gamma.images());
  return LeftQuasigroup(std::move(table));
}

RetractResult retract(const LeftQuasigroup& x) {
  if (!is_cycle_set(x) || !is_nondegenerate(x))
    throw InvalidInput("NotACycleSet", "retract needs a non-degenerate cycle set");
  const int n = x.size();
  std::vector<int> ids(static_cast<size_t>(n));
  for (int a = 0; a < n; ++a) {
    ids[static_cast<size_t>(a)] = a;
    for (int b = 0; b < a; ++b)
      if (x.table()[static_cast<size_t>(a)] == x.table()[static_cast<size_t>(b)]) {
        ids[static_cast<size_t>(a)] = b;
        break;
      }
  }
  Partition sim{std::move(ids)};
  if (!is_congruence(x, sim))
    throw InvalidInput("RetractNotCongruence", "sigma-equality is not a congruence here");
  QuotientResult q = quotient(x, sim);
  return {std::move(q.quotient), std::move(q.projection)};
}

std::vector<std::vector<int>> canonical_form(const LeftQuasigroup& x) {
  const int n = x.size();
  std::vector<int> relabel(static_cast<size_t>(n));
  std::iota(relabel.begin(), relabel.end(), 0);
  std::vector<std::vector<int>> best;
  std::vector<std::vector<int>> image(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
  do {
    std::vector<int> inv(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv[static_cast<size_t>(relabel[static_cast<size_t>(i)])] = i;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        image[static_cast<size_t>(a)][static_cast<size_t>(b)] =
            relabel[static_cast<size_t>(x.op(inv[static_cast<size_t>(a)], inv[static_cast<size_t>(b)]))];
    if (best.empty() || image < best) best = image;
  } while (std::next_permutation(relabel.begin(), relabel.end()));
  return best;
}

namespace {

struct RowSearch {
  int n;
  const EnumerationFilters& filters;
  std::vector<std::vector<int>> perms;     // all candidate rows, sorted
  std::vector<std::vector<int>> table;     // table[r] empty while unassigned
  std::vector<bool> assigned;
  int assigned_count = 0;
  std::vector<std::vector<int>> col_used;  // [col][val] counts for latin prune
  // sigma_a o sigma_x = sigma_b o sigma_y for a = t[x][y], b = t[y][x]; once
  // one outer row is known the other is forced.
  struct Relation {
    int a, b, x, y;
  };
  std::vector<Relation> relations;
  std::vector<LeftQuasigroup> out;

  RowSearch(int n_, const EnumerationFilters& f) : n(n_), filters(f) {
    std::vector<int> p(static_cast<size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    table.assign(static_cast<size_t>(n), {});
    assigned.assign(static_cast<size_t>(n), false);
    col_used.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
  }

  const std::vector<int>& row(int r) const { return table[static_cast<size_t>(r)]; }

  // rb o ry o rx^{-1}.
  std::vector<int> compose3(const std::vector<int>& rb, const std::vector<int>& ry,
                            const std::vector<int>& rx) {
    std::vector<int> inv_x(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) inv_x[static_cast<size_t>(rx[static_cast<size_t>(i)])] = i;
    std::vector<int> r(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i)
      r[static_cast<size_t>(i)] =
          rb[static_cast<size_t>(ry[static_cast<size_t>(inv_x[static_cast<size_t>(i)])])];
    return r;
  }

  // The row a relation dictates for its unassigned outer index.
  std::vector<int> dictated_row(const Relation& rel, int target) {
    // sigma_a o sigma_x = sigma_b o sigma_y.
    if (target == rel.a) return compose3(row(rel.b), row(rel.y), row(rel.x));
    return compose3(row(rel.a), row(rel.x), row(rel.y));
  }

  // Picks the next row index to assign; fills `forced` when relations pin it.
  // Returns -1 on contradiction between relations.
  int pick_target(std::vector<int>* forced) {
    forced->clear();
    int target = -1;
    for (const auto& rel : relations) {
      int open = -1;
      if (!assigned[static_cast<size_t>(rel.a)] && assigned[static_cast<size_t>(rel.b)]) open = rel.a;
      else if (!assigned[static_cast<size_t>(rel.b)] && assigned[static_cast<size_t>(rel.a)]) open = rel.b;
      else continue;
      if (target < 0) {
        target = open;
        *forced = dictated_row(rel, open);
      } else if (open == target) {
        if (dictated_row(rel, open) != *forced) return -1;
      }
    }
    if (target >= 0) return target;
    // Free choice: prefer the row most constrained by pending relations so
    // the assignment cascades; ties go to the smallest index.
    std::vector<int> weight(static_cast<size_t>(n), 0);
    for (const auto& rel : relations) {
      if (!assigned[static_cast<size_t>(rel.a)]) ++weight[static_cast<size_t>(rel.a)];
      if (!assigned[static_cast<size_t>(rel.b)]) ++weight[static_cast<size_t>(rel.b)];
    }
    int best = -1;
    for (int r = 0; r < n; ++r) {
      if (assigned[static_cast<size_t>(r)]) continue;
      if (best < 0 || weight[static_cast<size_t>(r)] > weight[static_cast<size_t>(best)]) best = r;
    }
    return best;
  }

  // Register relations created by assigning row r against all assigned rows.
  // A relation whose outer rows are both assigned is verified immediately.
  bool note_new_relations(int r, size_t* added) {
    *added = 0;
    for (int x = 0; x < n; ++x) {
      if (x == r || !assigned[static_cast<size_t>(x)]) continue;
      int a = row(x)[static_cast<size_t>(r)];
      int b = row(r)[static_cast<size_t>(x)];
      if (a == b) {
        if (row(x) != row(r)) return false;
        continue;
      }
      Relation rel{a, b, x, r};
      if (assigned[static_cast<size_t>(a)] && assigned[static_cast<size_t>(b)]) {
        if (dictated_row(rel, a) != row(a)) return false;
      }
      relations.push_back(rel);
      ++*added;
    }
    // Relations that were waiting on row r as an outer index.
    for (const auto& rel : relations) {
      if (rel.x == r || rel.y == r) continue;  // just added above
      if ((rel.a == r && assigned[static_cast<size_t>(rel.b)]) ||
          (rel.b == r && assigned[static_cast<size_t>(rel.a)])) {
        if (dictated_row(rel, r) != row(r)) return false;
      }
    }
    return true;
  }

  bool row_allowed(int r, const std::vector<int>& candidate) {
    if (filters.latin)
      for (int c = 0; c < n; ++c)
        if (col_used[static_cast<size_t>(c)][static_cast<size_t>(candidate[static_cast<size_t>(c)])])
          return false;
    if (filters.nondegenerate)
      for (int x = 0; x < n; ++x)
        if (assigned[static_cast<size_t>(x)] &&
            row(x)[static_cast<size_t>(x)] == candidate[static_cast<size_t>(r)])
          return false;
    if (filters.irretractable)
      for (int x = 0; x < n; ++x)
        if (assigned[static_cast<size_t>(x)] && row(x) == candidate) return false;
    return true;
  }

  void try_row(int r, const std::vector<int>& candidate) {
    if (!row_allowed(r, candidate)) return;
    table[static_cast<size_t>(r)] = candidate;
    assigned[static_cast<size_t>(r)] = true;
    ++assigned_count;
    if (filters.latin)
      for (int c = 0; c < n; ++c)
        ++col_used[static_cast<size_t>(c)][static_cast<size_t>(candidate[static_cast<size_t>(c)])];
    size_t added = 0;
    bool ok = !filters.cycle_set || note_new_relations(r, &added);
    if (ok) descend();
    relations.resize(relations.size() - added);
    if (filters.latin)
      for (int c = 0; c < n; ++c)
        --col_used[static_cast<size_t>(c)][static_cast<size_t>(candidate[static_cast<size_t>(c)])];
    assigned[static_cast<size_t>(r)] = false;
    --assigned_count;
    table[static_cast<size_t>(r)].clear();
  }

  void descend() {
    if (assigned_count == n) {
      emit();
      return;
    }
    std::vector<int> forced;
    int target = filters.cycle_set ? pick_target(&forced) : assigned_count;
    if (target < 0) return;            // contradictory forcings
    if (!forced.empty()) {
      try_row(target, forced);
      return;
    }
    for (const auto& candidate : perms) try_row(target, candidate);
  }

  void emit() {
    LeftQuasigroup x{table};
    if (filters.cycle_set && !is_cycle_set(x)) return;
    if (filters.nondegenerate && !is_nondegenerate(x)) return;
    if (filters.latin && !is_latin(x)) return;
    if (filters.indecomposable && !is_indecomposable(x)) return;
    if (filters.irretractable && !is_irretractable(x)) return;
    out.push_back(std::move(x));
  }
};

}  // namespace

std::vector<LeftQuasigroup> enumerate_left_quasigroups(int n, const EnumerationFilters& filters,
                                                       bool allow_long) {
  if (n < 1) throw InvalidInput("BadParameter", "size must be positive");
  int cap = filters.latin ? 8 : 6;
  if (n > cap)
    throw LimitExceeded("SizeLimitExceeded",
                        "enumeration limited to " + std::to_string(cap) + " points");
  if (filters.latin && n > 6 && !allow_long)
    throw LimitExceeded("SizeLimitExceeded",
                        "latin enumeration above size 6 is a long-running job");
  if (!filters.cycle_set && !filters.latin && n > 4)
    throw LimitExceeded("SizeLimitExceeded",
                        "unpruned enumeration above size 4; enable a structural filter");

  RowSearch search(n, filters);
  search.descend();
  std::vector<LeftQuasigroup> result = std::move(search.out);
  if (filters.up_to_iso) {
    std::set<std::vector<std::vector<int>>> seen;
    std::vector<LeftQuasigroup> dedup;
    for (const auto& x : result)
      if (seen.insert(canonical_form(x)).second) dedup.emplace_back(x);
    result = std::move(dedup);
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace cslab
