#ifndef CSLAB_AFFINE_HPP
#define CSLAB_AFFINE_HPP

#include <optional>
#include <vector>

#include "cslab/fp_matrix.hpp"
#include "cslab/left_quasigroup.hpp"
#include "cslab/partition.hpp"

namespace cslab {

// x*y = phi(x) + psi(y) + c over (Z/pZ)^dim with phi, psi invertible and
// phi psi - psi phi = phi^2 (the affine cycle-set condition).
struct AffineCycleSet {
  long p = 2;
  int dim = 1;
  FpMatrix phi, psi;
  std::vector<int> c;

  long carrier_size() const;
  std::vector<int> op(const std::vector<int>& x, const std::vector<int>& y) const;
};

// Point encoding is little-endian: index = sum v_i p^i.
int encode_point(long p, const std::vector<int>& v);
std::vector<int> decode_point(long p, int dim, int index);

AffineCycleSet make_affine(long p, int dim, FpMatrix phi, FpMatrix psi, std::vector<int> c);
LeftQuasigroup as_table(const AffineCycleSet& a, long table_limit = kDefaultTableLimit);

// --- Weyl algebra machinery ---

struct WeylPair {
  FpMatrix m_a;  // = A_mu
  FpMatrix m_b;  // = lambda I + Delta
};

// The p x p canonical irreducible representation matrices; asserts the Weyl
// relation M_a M_b - M_b M_a = I.
WeylPair weyl_matrices(long p, long lambda, long mu);
FpMatrix delta_matrix(long p);
FpMatrix a_mu(long p, long mu);
FpMatrix mu_circulant(long p, long mu, const std::vector<int>& first_row);
bool is_in_centralizer_of_a_mu(const FpMatrix& m, long mu);

// --- invariant subspaces / irreducibility ---

inline constexpr long kDefaultSeedLimit = 1000000;

// All subspaces invariant under every matrix, as canonical RREF bases sorted
// by (dimension, basis); includes the zero and full subspaces.
std::vector<std::vector<std::vector<int>>> invariant_subspaces(
    long p, int dim, const std::vector<FpMatrix>& mats, long seed_limit = kDefaultSeedLimit);
bool is_irreducible_pair(const FpMatrix& m1, const FpMatrix& m2,
                         long seed_limit = kDefaultSeedLimit);

// --- blocks and congruences (algebraic criteria) ---

std::vector<Partition> blocks_of(const AffineCycleSet& a);
std::vector<Partition> congruences_of(const AffineCycleSet& a);

// --- the p^p classification ---

enum class ConstantFlag { zero, e1 };

AffineCycleSet simple_pp_representative(long p, long lambda, long mu, ConstantFlag c_flag);

struct ClassifiedRep {
  long lambda = 0;
  long mu = 0;
  std::vector<int> c;
  AffineCycleSet value;
  bool verified = false;
};

enum class VerifyLevel {
  algebraic,   // matrix-level checks only (p = 7)
  standard,    // + table-level latin/non-degeneracy/indecomposability checks
  exhaustive,  // + full triple check of the cycle-set law on the table
};

std::vector<ClassifiedRep> classify_pp(long p, VerifyLevel level);
VerifyLevel default_verify_level(long p);

// --- isomorphism / automorphisms (Drapal criterion) ---

struct AffineIso {
  FpMatrix alpha;
  std::vector<int> u;  // element of Im(id - phi - psi)
};

std::optional<AffineIso> iso_affine(const AffineCycleSet& a, const AffineCycleSet& b,
                                    long search_limit = kDefaultSeedLimit);

struct AffineAut {
  FpMatrix eta;        // commutes with phi and psi
  std::vector<int> g;  // translation part; map is x -> eta(x) + g
};

std::vector<AffineAut> aut_affine(const AffineCycleSet& a, long search_limit = kDefaultSeedLimit);
Perm affine_aut_to_perm(const AffineCycleSet& a, const AffineAut& f);

// Solutions y of phi(x) + psi(y) + c = y, encoded, sorted.
std::vector<int> fixed_points(const AffineCycleSet& a, int x);

// Affine restrictions to the minimal nonzero (phi,psi)-invariant subspaces.
std::vector<AffineCycleSet> simple_subquasigroups(const AffineCycleSet& a);

// --- right linear cycle sets over explicit groups ---

struct RightLinearCycleSet {
  std::vector<std::vector<int>> group;  // group table for o
  int neutral = 0;
  std::vector<int> phi;  // bijection of the carrier
  std::vector<int> psi;  // automorphism of (carrier, o)
};

RightLinearCycleSet make_right_linear(std::vector<std::vector<int>> group_table,
                                      std::vector<int> phi, std::vector<int> psi);
LeftQuasigroup as_table(const RightLinearCycleSet& r);

std::vector<Partition> blocks_of(const RightLinearCycleSet& r, long order_cap = 512);
std::vector<Partition> congruences_of(const RightLinearCycleSet& r, long order_cap = 512);

// --- right linear representation of an irretractable cycle set with regular
// displacement group ---

struct RightLinearRepresentation {
  int e = 0, f = 0;
  std::vector<std::vector<int>> group_table;  // x o_{e,f} y
  int neutral = 0;                            // = f*e
  std::vector<int> phi_ef;
  std::vector<int> psi_ef;
  std::vector<Perm> dis_labeling;  // rho_{e,f} : carrier point -> Dis(X) element
};

RightLinearRepresentation right_linear_rep(const LeftQuasigroup& x, int e, int f,
                                           long limit = kDefaultMaxGroupOrder);

}  // namespace cslab

#endif
