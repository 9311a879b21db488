// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Each criterion states its tolerance inline (all are exact).

#include <chrono>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <vector>

#include "cslab/affine.hpp"
#include "cslab/brace.hpp"
#include "cslab/cycle_set.hpp"
#include "cslab/errors.hpp"
#include "cslab/json_io.hpp"
#include "cslab/left_quasigroup.hpp"
#include "cslab/perm_group.hpp"

using namespace cslab;

namespace {

int failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds) {
  std::ostringstream line;
  line << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what << " ["
       << seconds << " s]";
  std::cout << line.str() << "\n";
  if (!ok) ++failures;
}

template <typename F>
void run(int criterion, const std::string& what, F&& body) {
  auto start = std::chrono::steady_clock::now();
  bool ok = false;
  std::string note;
  try {
    ok = body();
  } catch (const std::exception& e) {
    note = std::string(" (exception: ") + e.what() + ")";
  }
  double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  report(criterion, ok, what + note, seconds);
}

std::vector<LeftQuasigroup> small_corpus() {
  std::vector<LeftQuasigroup> corpus;
  EnumerationFilters f;
  f.cycle_set = f.nondegenerate = true;
  f.up_to_iso = true;
  for (int n : {2, 3, 4})
    for (const auto& x : enumerate_left_quasigroups(n, f)) corpus.push_back(x);
  return corpus;
}

}  // namespace

int main() {
  // 1. Classification counts with pairwise non-isomorphism certificates.
  run(1, "classification counts p(p-1) at p = 2, 3, 5 (exact)", [] {
    auto r2 = classify_pp(2, VerifyLevel::standard);
    auto r3 = classify_pp(3, VerifyLevel::standard);
    auto r5 = classify_pp(5, VerifyLevel::standard);
    bool ok = r2.size() == 2 && r3.size() == 6 && r5.size() == 20;
    for (const auto& r : r2) ok = ok && r.verified;
    for (const auto& r : r3) ok = ok && r.verified;
    for (const auto& r : r5) ok = ok && r.verified;
    // classify_pp already certifies pairwise non-isomorphism internally;
    // recheck a witness pair here through the public route.
    ok = ok && !iso_affine(r3[0].value, r3[1].value).has_value();
    return ok;
  });

  // 2. Simplicity oracle agreement at p = 3.
  run(2, "brute-force congruences = algebraic congruences on all 6 reps (exact)", [] {
    for (const auto& rep : classify_pp(3, VerifyLevel::algebraic)) {
      LeftQuasigroup t = as_table(rep.value);
      if (!is_simple(t)) return false;
      auto brute = congruences(t);
      if (brute.size() != 2) return false;
      auto algebraic = congruences_of(rep.value);
      if (std::set<Partition>(brute.begin(), brute.end()) !=
          std::set<Partition>(algebraic.begin(), algebraic.end()))
        return false;
    }
    return true;
  });

  // 3. Order-4 completeness.
  run(3, "enumerate(4, latin) = 2 classes = the p=2 classification (exact)", [] {
    EnumerationFilters f;
    f.cycle_set = f.nondegenerate = f.latin = true;
    f.up_to_iso = true;
    auto latin4 = enumerate_left_quasigroups(4, f);
    if (latin4.size() != 2) return false;
    auto reps = classify_pp(2, VerifyLevel::standard);
    if (reps.size() != 2) return false;
    std::vector<bool> used(2, false);
    for (const auto& rep : reps) {
      LeftQuasigroup t = as_table(rep.value);
      bool matched = false;
      for (size_t i = 0; i < latin4.size(); ++i) {
        if (used[i]) continue;
        if (isomorphic(t, latin4[i])) {
          used[i] = matched = true;
          break;
        }
      }
      if (!matched) return false;
    }
    return true;
  });

  // 4. Prime-size classification.
  run(4, "size-3 classes = deformed trivial; latin sizes 2,3,5 empty (exact)", [] {
    EnumerationFilters f;
    f.cycle_set = f.nondegenerate = f.indecomposable = true;
    f.up_to_iso = true;
    auto classes3 = enumerate_left_quasigroups(3, f);
    if (classes3.size() != 1) return false;
    auto trivial = trivial_cycle_set(3, Perm::from_cycles(3, {{0, 1, 2}}));
    if (!isomorphic(classes3[0], trivial)) return false;
    for (int n : {2, 3, 5}) {
      EnumerationFilters lf;
      lf.cycle_set = lf.nondegenerate = lf.latin = true;
      if (!enumerate_left_quasigroups(n, lf).empty()) return false;
    }
    return true;
  });

  // 5. The dihedral example.
  run(5, "dihedral example: order 8, profile, partitions, no congruence (exact)", [] {
    PermGroup g = close_group({Perm::from_cycles(4, {{1, 3}}), Perm::from_cycles(4, {{0, 1, 2, 3}}),
                               Perm::from_cycles(4, {{0, 3, 2, 1}}), Perm::from_cycles(4, {{0, 2}})});
    if (g.order() != 8) return false;
    if (order_profile(g) != std::map<int, long>{{1, 1}, {2, 5}, {4, 2}}) return false;
    PermGroup h = close_group(
        {Perm::from_cycles(4, {{0, 2}, {1, 3}}), Perm::from_cycles(4, {{1, 3}})});
    Partition expected({0, 1, 0, 1});
    if (!(orbit_partition(h) == expected) || !(sim_partition(h) == expected)) return false;
    LeftQuasigroup table({{0, 3, 2, 1}, {1, 2, 3, 0}, {3, 0, 1, 2}, {2, 1, 0, 3}});
    return !is_congruence(table, expected);
  });

  // 6. Weyl relation and the two centralizer lemmas.
  run(6, "Weyl relation p=2,3,5; centralizer = mu-circulants; scalar commutant (exact)", [] {
    for (long p : {2L, 3L, 5L})
      for (long lambda = 1; lambda < p; ++lambda)
        for (long mu = 1; mu < p; ++mu) {
          WeylPair w = weyl_matrices(p, lambda, mu);
          if (!(w.m_a * w.m_b - w.m_b * w.m_a == FpMatrix::identity(p, static_cast<int>(p))))
            return false;
        }
    // All 3^9 matrices at p = 3, against both values of mu.
    for (long mu : {1L, 2L}) {
      std::set<FpMatrix> circulants;
      for (int c0 = 0; c0 < 3; ++c0)
        for (int c1 = 0; c1 < 3; ++c1)
          for (int c2 = 0; c2 < 3; ++c2)
            circulants.insert(mu_circulant(3, mu, {c0, c1, c2}));
      long in_centralizer = 0;
      std::vector<int> digits(9, 0);
      for (long code = 0; code < 19683; ++code) {
        long rest = code;
        FpMatrix m(3, 3, 3);
        for (int i = 0; i < 9; ++i) {
          m.at(i / 3, i % 3) = static_cast<int>(rest % 3);
          rest /= 3;
        }
        if (is_in_centralizer_of_a_mu(m, mu)) {
          ++in_centralizer;
          if (circulants.count(m) == 0) return false;
        }
      }
      if (in_centralizer != 27) return false;
      // Among the 27 mu-circulants, commuting with Delta means scalar.
      FpMatrix delta = delta_matrix(3);
      for (const auto& c : circulants) {
        bool commutes = c * delta == delta * c;
        bool scalar = true;
        for (int i = 0; i < 3 && scalar; ++i)
          for (int j = 0; j < 3 && scalar; ++j)
            if (i != j) scalar = c.at(i, j) == 0;
        scalar = scalar && c.at(0, 0) == c.at(1, 1) && c.at(1, 1) == c.at(2, 2);
        if (commutes != scalar) return false;
      }
    }
    return true;
  });

  // 7. The fixed-point counterexample.
  run(7, "X(1,2,0) at p=3: unique fixed points, indecomposable, coprime cycle (exact)", [] {
    AffineCycleSet a = simple_pp_representative(3, 1, 2, ConstantFlag::zero);
    LeftQuasigroup t = as_table(a);
    if (!is_indecomposable(t)) return false;
    bool coprime_cycle = false;
    for (int x = 0; x < 27; ++x) {
      if (fixed_points(a, x).size() != 1) return false;
      Perm row = t.sigma(x);
      int fixed = 0;
      for (int y = 0; y < 27; ++y)
        if (row(y) == y) ++fixed;
      if (fixed != 1) return false;
      for (int len : row.cycle_type())
        if (len > 1 && std::gcd(len, 27) == 1) coprime_cycle = true;
    }
    return coprime_cycle;
  });

  // 8. The block-size witness.
  run(8, "X(1,1,0) at p=3 has 3 blocks of size 9 with 9 not dividing 3 (exact)", [] {
    AffineCycleSet a = simple_pp_representative(3, 1, 1, ConstantFlag::zero);
    for (const auto& system : blocks_of(a)) {
      auto sizes = system.class_sizes();
      if (sizes.size() == 3 && sizes[0] == 9 && sizes[1] == 9 && sizes[2] == 9)
        return 3 % 9 != 0;  // block size does not divide block count
    }
    return false;
  });

  // 9. The brace triangle at p = 3.
  run(9, "ideals inside Dis = congruences = 2; B^2 orbits = Dis orbits; |G| = 27*ord(psi)",
      [] {
        for (const auto& rep : classify_pp(3, VerifyLevel::algebraic)) {
          LeftQuasigroup t = as_table(rep.value);
          PermutationBrace pb = permutation_brace(t);
          PermGroup dis = displacement_group(t);
          std::set<Perm> dis_set(dis.elements().begin(), dis.elements().end());

          long inside = 0;
          for (const auto& ideal : ideals(pb.brace)) {
            bool contained = true;
            for (int idx : ideal)
              if (dis_set.count(pb.carrier[static_cast<size_t>(idx)]) == 0) contained = false;
            if (contained) ++inside;
          }
          if (inside != 2) return false;
          if (congruences(t).size() != 2) return false;

          std::vector<Perm> b2_perms;
          for (int idx : b_square(pb.brace))
            b2_perms.push_back(pb.carrier[static_cast<size_t>(idx)]);
          PermGroup b2 = close_group(b2_perms);
          if (!(orbit_partition(b2) == orbit_partition(dis))) return false;
          if (std::set<Perm>(b2.elements().begin(), b2.elements().end()) != dis_set)
            return false;

          RightLinearRepresentation rl = right_linear_rep(t, 0, 0);
          Perm psi_perm{rl.psi_ef};
          if (perm_group(t).order() != 27 * psi_perm.order()) return false;
        }
        return true;
      });

  // 10. Property suites over the corpus of constructed objects.
  run(10, "round trips, braid, deformation, Galois, brace axioms, coverings (exact)", [] {
    auto corpus = small_corpus();
    std::vector<LeftQuasigroup> reps;
    for (auto flag : {ConstantFlag::zero, ConstantFlag::e1})
      reps.push_back(as_table(simple_pp_representative(2, 1, 1, flag)));
    for (const auto& r : reps) corpus.push_back(r);

    for (const auto& x : corpus) {
      // Solution round trips and braid/involutivity on every conversion.
      SolutionPair s = to_solution(x);
      SolutionReport sr = verify_solution(s);
      if (!sr.braid || !sr.involutive || !sr.nondegenerate) return false;
      if (!(from_solution(s) == x)) return false;
      if (!(to_solution(from_solution(s)) == s)) return false;

      // Deformation invariance of Dis, latin, irretractable.
      auto dis_elems = displacement_group(x).elements();
      for (const auto& alpha : automorphisms(x)) {
        LeftQuasigroup y = deform(x, alpha);
        if (!is_cycle_set(y)) return false;
        if (is_latin(y) != is_latin(x)) return false;
        if (is_irretractable(y) != is_irretractable(x)) return false;
        if (displacement_group(y).elements() != dis_elems) return false;
      }

      // Galois inequalities between admissible subgroups and congruences.
      PermGroup dis = displacement_group(x);
      if (is_admissible(x, dis)) {
        Partition orbits = orbit_partition(dis);
        if (is_congruence(x, orbits)) {
          if (!dis.is_subgroup_of(kernel_subgroup(x, orbits))) return false;
        }
      }
      for (const auto& alpha : congruences(x))
        if (!orbit_partition(kernel_subgroup(x, alpha)).refines(alpha)) return false;

      // Covering factorization p = q o r on all quotient epimorphisms, and
      // coverings of irretractable objects are bijective.
      if (is_indecomposable(x)) {
        for (const auto& alpha : congruences(x)) {
          if (alpha.is_full()) continue;
          QuotientResult q = quotient(x, alpha);
          if (!is_indecomposable(q.quotient)) continue;
          FactorizationResult fact = factor_epimorphism(x, q.quotient, q.projection);
          for (int pt = 0; pt < x.size(); ++pt) {
            int through =
                fact.covering_map[static_cast<size_t>(fact.through.projection[static_cast<size_t>(pt)])];
            if (through != q.projection[static_cast<size_t>(pt)]) return false;
          }
          if (is_irretractable(x) && is_covering(x, q.quotient, q.projection) &&
              !alpha.is_singletons())
            return false;
        }
      }
    }

    // Brace axioms on every constructed brace: the constructor re-validates;
    // exercise it over the corpus braces plus quotients by their ideals.
    for (const auto& x : corpus) {
      if (!is_indecomposable(x)) continue;
      PermutationBrace pb = permutation_brace(x);
      FiniteBrace revalidated(pb.brace.add_table(), pb.brace.mul_table());
      if (revalidated.size() != pb.brace.size()) return false;
      for (const auto& ideal : ideals(pb.brace)) {
        FiniteBrace q = quotient_brace(pb.brace, ideal);
        if (q.size() * static_cast<int>(ideal.size()) != pb.brace.size()) return false;
      }
    }
    return true;
  });

  if (failures == 0) std::cout << "acceptance: all criteria passed\n";
  else std::cout << "acceptance: " << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
