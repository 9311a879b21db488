#ifndef CSLAB_PERM_GROUP_HPP
#define CSLAB_PERM_GROUP_HPP

#include <map>
#include <optional>
#include <vector>

#include "cslab/partition.hpp"
#include "cslab/perm.hpp"

namespace cslab {

// Default cap on exhaustive group closure; override per call or via the
// CSLAB_MAX_GROUP_ORDER environment variable (read by the CLI).
inline constexpr long kDefaultMaxGroupOrder = 20000;

// Explicitly enumerated permutation group. Elements are kept sorted
// lexicographically on image sequences so all derived output is deterministic.
class PermGroup {
public:
  PermGroup() = default;

  int degree() const { return degree_; }
  long order() const { return static_cast<long>(elements_.size()); }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& g) const;
  // Position of g in the sorted element list, -1 when absent.
  int index_of(const Perm& g) const;
  bool is_subgroup_of(const PermGroup& other) const;

  friend PermGroup close_group(std::vector<Perm> gens, long limit);

private:
  int degree_ = 0;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
};

struct TransitivityProfile {
  bool transitive = false;
  bool semiregular = false;
  bool regular = false;
};

// Enumerates the subgroup generated by gens; throws OrderLimitExceeded past limit.
PermGroup close_group(std::vector<Perm> gens, long limit = kDefaultMaxGroupOrder);

std::vector<int> orbit(const PermGroup& g, int x);
// Orbit of x under the group generated by gens (no closure needed).
std::vector<int> orbit_of_point(const std::vector<Perm>& gens, int x);
PermGroup stabilizer(const PermGroup& g, int x);
bool is_normal(const PermGroup& g, const PermGroup& h);
PermGroup normal_closure(const PermGroup& g, const std::vector<Perm>& seed,
                         long limit = kDefaultMaxGroupOrder);
TransitivityProfile transitivity_profile(const PermGroup& g);

// Finest G-invariant partition with x and y in one class (G transitive).
Partition minimal_block(const PermGroup& g, int x, int y);
// All nontrivial G-invariant partitions, canonically sorted.
std::vector<Partition> all_block_systems(const PermGroup& g);

Partition orbit_partition(const PermGroup& h);
// Points with equal stabilizers H_x = H_y share a class.
Partition sim_partition(const PermGroup& h);

std::vector<PermGroup> minimal_normal_subgroups(const PermGroup& g,
                                                long limit = kDefaultMaxGroupOrder);

bool has_normal_sylow(const PermGroup& g, long p);
bool is_nilpotent(const PermGroup& g);
std::map<int, long> order_profile(const PermGroup& g);

std::vector<long> prime_divisors(long n);

}  // namespace cslab

#endif
