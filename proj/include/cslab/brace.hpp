#ifndef CSLAB_BRACE_HPP
#define CSLAB_BRACE_HPP

#include <optional>
#include <vector>

#include "cslab/left_quasigroup.hpp"
#include "cslab/partition.hpp"
#include "cslab/perm.hpp"

namespace cslab {

// Finite left brace: one carrier {0..n-1} with an abelian group table (add),
// a group table (mul) and a shared neutral element.
class FiniteBrace {
public:
  FiniteBrace() = default;
  // Full validation: both group structures plus the brace law on all triples.
  FiniteBrace(std::vector<std::vector<int>> add, std::vector<std::vector<int>> mul);

  int size() const { return static_cast<int>(add_.size()); }
  int zero() const { return zero_; }
  int add(int x, int y) const { return add_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  int mul(int x, int y) const { return mul_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  int neg(int x) const { return neg_[static_cast<size_t>(x)]; }
  int inv(int x) const { return inv_[static_cast<size_t>(x)]; }
  const std::vector<std::vector<int>>& add_table() const { return add_; }
  const std::vector<std::vector<int>>& mul_table() const { return mul_; }

  // lambda_x(y) = -x + x o y, an additive automorphism.
  Perm lambda_of(int x) const;
  // x*y = -x + x o y - y.
  int star(int x, int y) const;

  int additive_order(int x) const;

private:
  std::vector<std::vector<int>> add_, mul_;
  std::vector<int> neg_, inv_;
  int zero_ = 0;
};

bool is_left_ideal(const FiniteBrace& b, const std::vector<int>& subset);
bool is_ideal(const FiniteBrace& b, const std::vector<int>& subset);

std::vector<int> socle(const FiniteBrace& b);
std::vector<int> b_square(const FiniteBrace& b);
// Elements of p-power additive order (a Sylow left ideal of (B,+)).
std::vector<int> sylow_left_ideal(const FiniteBrace& b, long p);

// Smallest ideal containing the seed.
std::vector<int> ideal_closure(const FiniteBrace& b, const std::vector<int>& seed);
// All ideals: join closure of the principal ones, sorted.
std::vector<std::vector<int>> ideals(const FiniteBrace& b);

FiniteBrace quotient_brace(const FiniteBrace& b, const std::vector<int>& ideal);

FiniteBrace trivial_brace_cyclic(int n);

// Brace on the element list of G(X) for a non-degenerate cycle set X.
// The addition is grown from the generator rule g + q_y = g o q_{g^{-1}(y)}
// with q_y = sigma_y^{-1}; every axiom is re-validated afterwards, so a
// convention error aborts instead of corrupting results.
struct PermutationBrace {
  FiniteBrace brace;
  std::vector<Perm> carrier;          // brace index -> permutation of X
  std::vector<int> sigma_inv_index;   // point y -> index of sigma_y^{-1}
};

PermutationBrace permutation_brace(const LeftQuasigroup& x, long limit = kDefaultMaxGroupOrder);

struct CycleBaseResult {
  std::vector<int> base;       // brace indices of the lambda-orbit {q_x}
  LeftQuasigroup base_table;   // x.y = lambda_x^{-1}(y) transported to points
  std::vector<int> iso_to_x;   // isomorphism base_table -> X
};

CycleBaseResult transitive_cycle_base(const PermutationBrace& pb, const LeftQuasigroup& x);

// Cycle set on the left cosets B/K per the cycle-base construction:
// sigma_{xK}(yK) = lambda_x(a)^- o y o K.
LeftQuasigroup cycle_set_from_brace(const FiniteBrace& b, int a, const std::vector<int>& k);

struct DeformationDecomposition {
  LeftQuasigroup base;  // Y with G(Y) a p-group
  Perm alpha;           // X = deform(Y, alpha); order coprime to p, has a fixed point
};

// Theorem-level decomposition of an indecomposable irretractable cycle set of
// size p^n whose Sylow p left ideal is mul-normal.
DeformationDecomposition deformation_decomposition(const LeftQuasigroup& x,
                                                   long limit = kDefaultMaxGroupOrder);

}  // namespace cslab

#endif
