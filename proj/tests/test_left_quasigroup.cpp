#include <doctest.h>

#include <algorithm>
#include <set>
#include <vector>

#include "cslab/affine.hpp"
#include "cslab/cycle_set.hpp"
#include "cslab/errors.hpp"
#include "cslab/left_quasigroup.hpp"

using namespace cslab;

namespace {

LeftQuasigroup trivial3() { return trivial_cycle_set(3, Perm::from_cycles(3, {{0, 1, 2}})); }
LeftQuasigroup trivial4() { return trivial_cycle_set(4, Perm::from_cycles(4, {{0, 1, 2, 3}})); }

// Dihedral example table, rows sigma_0=(1,3), sigma_1=(0,1,2,3),
// sigma_2=(0,3,2,1), sigma_3=(0,2).
LeftQuasigroup d8_table() {
  return LeftQuasigroup({{0, 3, 2, 1}, {1, 2, 3, 0}, {3, 0, 1, 2}, {2, 1, 0, 3}});
}

LeftQuasigroup identity_rows(int n) {
  std::vector<std::vector<int>> t;
  for (int i = 0; i < n; ++i) {
    std::vector<int> row(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) row[static_cast<size_t>(j)] = j;
    t.push_back(row);
  }
  return LeftQuasigroup(t);
}

// The two order-4 irretractable indecomposable (latin) cycle sets.
std::vector<LeftQuasigroup> order4_reps() {
  std::vector<LeftQuasigroup> out;
  for (auto flag : {ConstantFlag::zero, ConstantFlag::e1})
    out.push_back(as_table(simple_pp_representative(2, 1, 1, flag)));
  return out;
}

// Oracle: congruence test straight from the definition, written independently
// of is_congruence.
bool congruence_oracle(const LeftQuasigroup& x, const Partition& alpha) {
  const int n = x.size();
  for (int a = 0; a < n; ++a)
    for (int a2 = 0; a2 < n; ++a2)
      for (int b = 0; b < n; ++b)
        for (int b2 = 0; b2 < n; ++b2) {
          if (!alpha.same(a, a2) || !alpha.same(b, b2)) continue;
          if (!alpha.same(x.op(a, b), x.op(a2, b2))) return false;
          if (!alpha.same(x.ldiv(a, b), x.ldiv(a2, b2))) return false;
        }
  return true;
}

std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  std::vector<int> label(static_cast<size_t>(n), 0);
  auto rec = [&](auto&& self, int pos, int max_used) -> void {
    if (pos == n) {
      std::vector<int> first_of(static_cast<size_t>(n), -1);
      std::vector<int> ids(static_cast<size_t>(n));
      for (int i = 0; i < n; ++i) {
        int l = label[static_cast<size_t>(i)];
        if (first_of[static_cast<size_t>(l)] < 0) first_of[static_cast<size_t>(l)] = i;
        ids[static_cast<size_t>(i)] = first_of[static_cast<size_t>(l)];
      }
      out.emplace_back(std::move(ids));
      return;
    }
    for (int c = 0; c <= max_used + 1 && c < n; ++c) {
      label[static_cast<size_t>(pos)] = c;
      self(self, pos + 1, std::max(max_used, c));
    }
  };
  rec(rec, 0, -1);
  return out;
}

// All subgroups of g, by join closure of the cyclic ones.
std::vector<PermGroup> all_subgroups(const PermGroup& g) {
  std::set<std::vector<Perm>> found;
  found.insert({Perm::identity(g.degree())});
  for (const auto& e : g.elements()) found.insert(close_group({e}, g.order()).elements());
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<std::vector<Perm>> cur(found.begin(), found.end());
    for (size_t i = 0; i < cur.size(); ++i)
      for (size_t j = i + 1; j < cur.size(); ++j) {
        auto gens = cur[i];
        gens.insert(gens.end(), cur[j].begin(), cur[j].end());
        if (found.insert(close_group(gens, g.order()).elements()).second) grew = true;
      }
  }
  std::vector<PermGroup> out;
  for (const auto& elems : found) out.push_back(close_group(elems, g.order()));
  return out;
}

}  // namespace

TEST_CASE("validation") {
  CHECK(LeftQuasigroup({{0, 1}, {1, 0}}).size() == 2);
  CHECK_THROWS_WITH_AS(LeftQuasigroup({{0, 0}, {1, 0}}),
                       "RowNotBijective: row 0 is not a bijection", InvalidInput);
  CHECK(d8_table().size() == 4);
}

TEST_CASE("derived groups") {
  CHECK(perm_group(d8_table()).order() == 8);
  CHECK(perm_group(trivial3()).order() == 3);
  CHECK(displacement_group(trivial3()).order() == 1);
  CHECK(perm_group(identity_rows(3)).order() == 1);
  CHECK_THROWS_AS(total_group(trivial3()), InvalidInput);

  for (const auto& x : order4_reps()) {
    PermGroup g = perm_group(x);
    PermGroup dis = displacement_group(x);
    CHECK(g.order() == 8);
    CHECK(dis.order() == 4);
    CHECK(transitivity_profile(dis).regular);
    CHECK(total_group(x).order() >= g.order());
    // G(X) = Dis(X) <sigma_x> for every x.
    for (int pt = 0; pt < x.size(); ++pt) {
      std::set<Perm> product;
      Perm s = x.sigma(pt);
      Perm acc = Perm::identity(x.size());
      for (int k = 0; k < s.order(); ++k) {
        for (const auto& d : dis.elements()) product.insert(d * acc);
        acc = acc * s;
      }
      CHECK(static_cast<long>(product.size()) == g.order());
    }
  }
}

TEST_CASE("latin irretractable indecomposable flags") {
  CHECK_FALSE(is_latin(trivial3()));
  CHECK_FALSE(is_irretractable(trivial3()));
  CHECK(is_indecomposable(trivial3()));
  for (const auto& x : order4_reps()) {
    CHECK(is_latin(x));
    CHECK(is_irretractable(x));
    CHECK(is_indecomposable(x));
  }
  CHECK_FALSE(is_latin(identity_rows(2)));
  CHECK_FALSE(is_irretractable(identity_rows(2)));
  CHECK_FALSE(is_indecomposable(identity_rows(2)));
}

TEST_CASE("principal congruences against the partition oracle") {
  // a = b gives the identity relation.
  CHECK(principal_congruence(trivial3(), 1, 1).is_singletons());

  // For the trivial 3-cycle cycle set the one-sided rule z*u ~ z*v forces
  // gamma-invariance, so identifying any two points collapses everything;
  // oracle: the finest congruence containing the pair over all partitions.
  for (const auto& x : {trivial3(), trivial4(), d8_table()}) {
    for (int a = 0; a < x.size(); ++a)
      for (int b = 0; b < x.size(); ++b) {
        if (a == b) continue;
        Partition computed = principal_congruence(x, a, b);
        CHECK(congruence_oracle(x, computed));
        Partition finest = Partition::full(x.size());
        for (const Partition& q : all_partitions(x.size()))
          if (q.same(a, b) && congruence_oracle(x, q) && q.refines(finest)) finest = q;
        CHECK(computed == finest);
      }
  }
  CHECK(principal_congruence(trivial3(), 0, 1).is_full());

  // Simple tables collapse on every pair.
  for (const auto& x : order4_reps())
    for (int a = 0; a < 4; ++a)
      for (int b = a + 1; b < 4; ++b) CHECK(principal_congruence(x, a, b).is_full());
}

TEST_CASE("congruence lattice") {
  for (const auto& x : order4_reps()) {
    auto lattice = congruences(x);
    REQUIRE(lattice.size() == 2);
    CHECK(lattice[0].is_full());  // class ids [0,0,..] sort first
    CHECK(lattice[1].is_singletons());
  }
  // Oracle: exactly the partitions passing the definition.
  for (const auto& x : {trivial3(), trivial4(), d8_table()}) {
    std::set<Partition> expected;
    for (const Partition& q : all_partitions(x.size()))
      if (congruence_oracle(x, q)) expected.insert(q);
    auto got = congruences(x);
    CHECK(std::set<Partition>(got.begin(), got.end()) == expected);
  }
  CHECK(congruences(trivial4()).size() == 3);  // 0, {{0,2},{1,3}}, 1
  LeftQuasigroup singleton(std::vector<std::vector<int>>{{0}});
  CHECK(congruences(singleton).size() == 1);
}

TEST_CASE("simplicity") {
  CHECK(is_simple(trivial3()));
  CHECK_FALSE(is_simple(trivial4()));
  for (const auto& x : order4_reps()) CHECK(is_simple(x));
  CHECK_FALSE(is_simple(identity_rows(3)));  // decomposable
}

TEST_CASE("admissible subgroups and the Galois pair") {
  for (const auto& x : order4_reps()) {
    PermGroup g = perm_group(x);
    PermGroup dis = displacement_group(x);
    CHECK(is_admissible(x, dis));
    CHECK(is_admissible(x, g));

    CHECK(kernel_subgroup(x, Partition::singletons(4)).order() == 1);
    CHECK(kernel_subgroup(x, Partition::full(4)).order() == g.order());
    CHECK(dis_alpha(x, Partition::singletons(4)).order() == 1);
    CHECK(dis_alpha(x, Partition::full(4)).elements() == dis.elements());

    // Galois inequalities.
    CHECK(dis.is_subgroup_of(kernel_subgroup(x, orbit_partition(dis))));
    for (const auto& alpha : congruences(x))
      CHECK(orbit_partition(kernel_subgroup(x, alpha)).refines(alpha));
  }
  CHECK_THROWS_AS(kernel_subgroup(trivial3(), Partition({0, 0, 2})), InvalidInput);
}

TEST_CASE("quotients") {
  auto x = trivial4();
  auto same = quotient(x, Partition::singletons(4));
  CHECK(same.quotient.size() == 4);
  CHECK(quotient(x, Partition::full(4)).quotient.size() == 1);
  auto halves = quotient(x, Partition({0, 1, 0, 1}));
  CHECK(halves.quotient.size() == 2);
  CHECK(halves.quotient.table() == std::vector<std::vector<int>>{{1, 0}, {1, 0}});
  CHECK_THROWS_AS(quotient(x, Partition({0, 0, 2, 3})), InvalidInput);
}

TEST_CASE("morphisms and isomorphisms") {
  auto x = trivial3();
  std::vector<int> id{0, 1, 2};
  CHECK(is_morphism(x, x, id));
  auto reps = order4_reps();
  CHECK_FALSE(isomorphic(reps[0], reps[1]).has_value());
  auto other = trivial_cycle_set(3, Perm::from_cycles(3, {{0, 2, 1}}));
  auto witness = isomorphic(x, other);
  REQUIRE(witness.has_value());
  CHECK(is_morphism(x, other, *witness));

  // Brute-force automorphism oracle on 4 points.
  for (const auto& rep : reps) {
    std::set<std::vector<int>> brute;
    std::vector<int> perm{0, 1, 2, 3};
    do {
      if (is_morphism(rep, rep, perm)) brute.insert(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    auto fast = automorphisms(rep);
    CHECK(fast.size() == brute.size());
    for (const auto& a : fast) CHECK(brute.count(a.images()) == 1);
  }
}

TEST_CASE("deformations") {
  auto x = trivial3();
  Perm alpha = Perm::from_cycles(3, {{0, 1, 2}});
  CHECK(deform(x, Perm::identity(3)) == x);
  auto deformed = deform(x, alpha);
  CHECK(deformed.table() == std::vector<std::vector<int>>{{2, 0, 1}, {2, 0, 1}, {2, 0, 1}});
  CHECK(deform(deformed, alpha.inverse()) == x);
  CHECK_THROWS_AS(deform(x, Perm::from_cycles(3, {{0, 1}})), InvalidInput);

  // Deformation invariants: latin, irretractable, displacement group.
  for (const auto& rep : order4_reps())
    for (const auto& a : automorphisms(rep)) {
      auto y = deform(rep, a);
      CHECK(is_latin(y) == is_latin(rep));
      CHECK(is_irretractable(y) == is_irretractable(rep));
      CHECK(displacement_group(y).elements() == displacement_group(rep).elements());
    }
}

TEST_CASE("coverings") {
  auto x = trivial4();
  std::vector<int> ident{0, 1, 2, 3};
  CHECK(is_covering(x, x, ident));
  auto halves = quotient(x, Partition({0, 1, 0, 1}));
  CHECK_FALSE(is_covering(x, halves.quotient, halves.projection));
  CHECK_THROWS_AS(is_covering(x, halves.quotient, std::vector<int>{0, 0, 0, 0}), InvalidInput);
}

TEST_CASE("universal cover") {
  auto cover3 = universal_cover(trivial3(), 0);
  CHECK(cover3.cover.size() == 3);
  CHECK(is_covering(cover3.cover, trivial3(), cover3.projection));

  auto cover_d8 = universal_cover(d8_table(), 0);
  CHECK(cover_d8.cover.size() == 8);
  CHECK(is_covering(cover_d8.cover, d8_table(), cover_d8.projection));

  for (const auto& rep : order4_reps()) {
    auto cov = universal_cover(rep, 0);
    CHECK(cov.cover.size() == 8);
    CHECK(is_covering(cov.cover, rep, cov.projection));
  }
  CHECK_THROWS_AS(universal_cover(identity_rows(2), 0), InvalidInput);
}

TEST_CASE("epimorphism factorization") {
  // Through an isomorphism: alpha = 0 and q = p.
  auto x = trivial3();
  auto other = trivial_cycle_set(3, Perm::from_cycles(3, {{0, 2, 1}}));
  auto iso = isomorphic(x, other);
  REQUIRE(iso.has_value());
  auto fact = factor_epimorphism(x, other, *iso);
  CHECK(fact.alpha.is_singletons());
  CHECK(fact.covering_map == *iso);

  // Trivial size 4 onto its size-2 quotient: alpha = ker p, residual bijective.
  auto t4 = trivial4();
  auto halves = quotient(t4, Partition({0, 1, 0, 1}));
  auto fact2 = factor_epimorphism(t4, halves.quotient, halves.projection);
  CHECK(fact2.alpha == Partition({0, 1, 0, 1}));
  CHECK(fact2.through.quotient.size() == 2);
  // p = q o r pointwise.
  for (int pt = 0; pt < 4; ++pt)
    CHECK(halves.projection[static_cast<size_t>(pt)] ==
          fact2.covering_map[static_cast<size_t>(fact2.through.projection[static_cast<size_t>(pt)])]);

  // Irretractable: every covering arising from a congruence is trivial.
  for (const auto& rep : order4_reps())
    for (const auto& alpha : congruences(rep)) {
      if (alpha.is_full()) continue;
      auto q = quotient(rep, alpha);
      if (is_covering(rep, q.quotient, q.projection)) CHECK(alpha.is_singletons());
    }
}

TEST_CASE("smallest admissible subgroup characterizes simplicity") {
  // Indecomposable irretractable corpus with subgroup lattices within reach.
  std::vector<LeftQuasigroup> corpus = order4_reps();
  EnumerationFilters f;
  f.cycle_set = f.nondegenerate = f.irretractable = f.indecomposable = true;
  f.up_to_iso = true;
  for (const auto& x : enumerate_left_quasigroups(4, f)) corpus.push_back(x);
  for (const auto& x : corpus) {
    PermGroup g = perm_group(x);
    if (g.order() > 200) continue;
    PermGroup dis = displacement_group(x);
    bool dis_minimal = dis.order() > 1;
    for (const auto& h : all_subgroups(g)) {
      if (h.order() == 1) continue;
      bool adm = false;
      try {
        adm = is_admissible(x, h);
      } catch (const InvalidInput&) {
        continue;
      }
      if (adm && !dis.is_subgroup_of(h)) {
        dis_minimal = false;
        break;
      }
    }
    CHECK(is_simple(x) == dis_minimal);
  }
}
