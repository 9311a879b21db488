#ifndef CSLAB_LEFT_QUASIGROUP_HPP
#define CSLAB_LEFT_QUASIGROUP_HPP

#include <optional>
#include <vector>

#include "cslab/partition.hpp"
#include "cslab/perm.hpp"
#include "cslab/perm_group.hpp"

namespace cslab {

// Size cap for the pairwise congruence/isomorphism machinery.
inline constexpr int kDefaultMaxCarrier = 64;
// Cap on carriers of generated tables (universal covers, affine exports).
inline constexpr long kDefaultTableLimit = 4096;

// Finite left quasigroup: table[x][y] = x*y with every row a permutation.
class LeftQuasigroup {
public:
  LeftQuasigroup() = default;
  // Validates that every row is bijective; throws RowNotBijective(x).
  explicit LeftQuasigroup(std::vector<std::vector<int>> table);

  int size() const { return static_cast<int>(table_.size()); }
  int op(int x, int y) const { return table_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  // Left division x\y = sigma_x^{-1}(y).
  int ldiv(int x, int y) const { return ldiv_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  Perm sigma(int x) const;                  // y -> x*y
  std::vector<int> delta_images(int x) const;  // y -> y*x, need not be bijective

  friend bool operator==(const LeftQuasigroup& a, const LeftQuasigroup& b) {
    return a.table_ == b.table_;
  }
  friend bool operator<(const LeftQuasigroup& a, const LeftQuasigroup& b) {
    return a.table_ < b.table_;
  }

private:
  std::vector<std::vector<int>> table_;
  std::vector<std::vector<int>> ldiv_;
};

// --- derived permutation groups ---

PermGroup perm_group(const LeftQuasigroup& x, long limit = kDefaultMaxGroupOrder);
PermGroup displacement_group(const LeftQuasigroup& x, long limit = kDefaultMaxGroupOrder);
// Requires a latin table (throws NotLatin).
PermGroup total_group(const LeftQuasigroup& x, long limit = kDefaultMaxGroupOrder);

bool is_latin(const LeftQuasigroup& x);
bool is_irretractable(const LeftQuasigroup& x);
bool is_indecomposable(const LeftQuasigroup& x);

// --- congruences ---

// Smallest congruence identifying a and b: union-find fixpoint closed under
// (u,v) -> (u*z, v*z), (z*u, z*v), (u\z, v\z), (z\u, z\v).
Partition principal_congruence(const LeftQuasigroup& x, int a, int b);
bool is_congruence(const LeftQuasigroup& x, const Partition& alpha);
// All congruences (joins of principal ones), 0_X and 1_X included, sorted.
std::vector<Partition> congruences(const LeftQuasigroup& x,
                                   int max_size = kDefaultMaxCarrier);
bool is_simple(const LeftQuasigroup& x);

// --- admissible subgroups and the Galois pair ---

bool is_admissible(const LeftQuasigroup& x, const PermGroup& h);
// G^alpha = {h : h(x) alpha x for all x}; alpha must be a congruence.
PermGroup kernel_subgroup(const LeftQuasigroup& x, const Partition& alpha,
                          long limit = kDefaultMaxGroupOrder);
// Normal closure of {sigma_x sigma_y^{-1} : x alpha y}.
PermGroup dis_alpha(const LeftQuasigroup& x, const Partition& alpha,
                    long limit = kDefaultMaxGroupOrder);

// --- quotients and morphisms ---

struct QuotientResult {
  LeftQuasigroup quotient;
  std::vector<int> projection;  // point -> class index in the quotient
};

QuotientResult quotient(const LeftQuasigroup& x, const Partition& alpha);

bool is_morphism(const LeftQuasigroup& x, const LeftQuasigroup& y,
                 const std::vector<int>& f);
bool is_epimorphism(const LeftQuasigroup& x, const LeftQuasigroup& y,
                    const std::vector<int>& f);
std::optional<std::vector<int>> isomorphic(const LeftQuasigroup& x, const LeftQuasigroup& y,
                                           int max_size = kDefaultMaxCarrier);
std::vector<Perm> automorphisms(const LeftQuasigroup& x,
                                int max_size = kDefaultMaxCarrier);

// Deformation x *_alpha y = alpha(x*y); alpha must be an automorphism.
LeftQuasigroup deform(const LeftQuasigroup& x, const Perm& alpha);

// --- coverings ---

bool is_covering(const LeftQuasigroup& x, const LeftQuasigroup& y,
                 const std::vector<int>& p, long limit = kDefaultMaxGroupOrder);

struct CoverResult {
  LeftQuasigroup cover;          // carrier: sorted element list of G(X)
  std::vector<int> projection;   // g -> g(x)
  std::vector<Perm> carrier;     // the group elements, in carrier order
};

CoverResult universal_cover(const LeftQuasigroup& x, int base_point,
                            long limit = kDefaultMaxGroupOrder);

struct FactorizationResult {
  Partition alpha;               // orbits of G^{ker p}
  QuotientResult through;        // X/alpha with canonical projection r
  std::vector<int> covering_map; // q : X/alpha -> Y with p = q o r
};

FactorizationResult factor_epimorphism(const LeftQuasigroup& x, const LeftQuasigroup& y,
                                       const std::vector<int>& p,
                                       long limit = kDefaultMaxGroupOrder);

// Kernel partition of a map (classes = fibers).
Partition kernel_of_map(int n, const std::vector<int>& f);

}  // namespace cslab

#endif
