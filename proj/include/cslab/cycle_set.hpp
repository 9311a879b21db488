#ifndef CSLAB_CYCLE_SET_HPP
#define CSLAB_CYCLE_SET_HPP

#include <cstdint>
#include <vector>

#include "cslab/left_quasigroup.hpp"

namespace cslab {

// Involutive solution tables: lambda[x] = images of lambda_x, rho[y] = images
// of rho_y, where r(x,y) = (lambda_x(y), rho_y(x)).
struct SolutionPair {
  int n = 0;
  std::vector<std::vector<int>> lambda;
  std::vector<std::vector<int>> rho;

  friend bool operator==(const SolutionPair& a, const SolutionPair& b) {
    return a.n == b.n && a.lambda == b.lambda && a.rho == b.rho;
  }
};

struct SolutionReport {
  bool braid = false;
  bool involutive = false;
  bool nondegenerate = false;
  // First braid-breaking triple when braid fails, else {-1,-1,-1}.
  int witness[3] = {-1, -1, -1};
};

bool is_cycle_set(const LeftQuasigroup& x);
// First triple violating the cycle-set law, empty if none.
std::vector<int> cycle_set_counterexample(const LeftQuasigroup& x);
bool is_nondegenerate(const LeftQuasigroup& x);

SolutionPair to_solution(const LeftQuasigroup& x);
LeftQuasigroup from_solution(const SolutionPair& s);
SolutionReport verify_solution(const SolutionPair& s);

LeftQuasigroup trivial_cycle_set(int n, const Perm& gamma);

struct RetractResult {
  LeftQuasigroup retract;
  std::vector<int> projection;
};

// Quotient by the sigma-equality relation; re-verifies it is a congruence.
RetractResult retract(const LeftQuasigroup& x);

struct EnumerationFilters {
  bool cycle_set = false;
  bool nondegenerate = false;
  bool latin = false;
  bool indecomposable = false;
  bool irretractable = false;
  bool up_to_iso = false;
};

// Bounded exhaustive enumeration over sigma-row assignments, deterministic
// output order. n <= 6 in general, n <= 8 with the latin filter.
std::vector<LeftQuasigroup> enumerate_left_quasigroups(int n, const EnumerationFilters& filters,
                                                       bool allow_long = false);

// Minimum table under simultaneous relabeling of points.
std::vector<std::vector<int>> canonical_form(const LeftQuasigroup& x);

}  // namespace cslab

#endif
