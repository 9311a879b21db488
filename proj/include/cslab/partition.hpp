#ifndef CSLAB_PARTITION_HPP
#define CSLAB_PARTITION_HPP

#include <vector>

#include "cslab/perm.hpp"

namespace cslab {

// Equivalence relation on {0..n-1}. class_id[x] is the smallest member of the
// class of x, so class_id[class_id[x]] == class_id[x].
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> class_id);
  static Partition singletons(int n);
  static Partition full(int n);
  // Classes generated by the given related pairs.
  static Partition from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  int size() const { return static_cast<int>(class_id_.size()); }
  int rep(int x) const { return class_id_[static_cast<size_t>(x)]; }
  bool same(int x, int y) const { return rep(x) == rep(y); }
  const std::vector<int>& class_ids() const { return class_id_; }

  int num_classes() const;
  std::vector<std::vector<int>> classes() const;  // sorted by representative
  std::vector<int> class_sizes() const;

  bool is_singletons() const { return num_classes() == size(); }
  bool is_full() const { return num_classes() == 1; }

  // True when every class of *this lies inside a class of `coarser`.
  bool refines(const Partition& coarser) const;
  Partition join(const Partition& other) const;
  Partition meet(const Partition& other) const;
  // Relation with blocks g(C) for classes C of *this.
  Partition apply(const Perm& g) const;
  bool invariant_under(const Perm& g) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.class_id_ == b.class_id_;
  }
  friend bool operator<(const Partition& a, const Partition& b) {
    return a.class_id_ < b.class_id_;
  }

private:
  std::vector<int> class_id_;
};

// Incremental union-find used by the congruence and block closures.
class UnionFind {
public:
  explicit UnionFind(int n);
  int find(int x);
  // Returns true when x and y were in distinct classes before the call.
  bool unite(int x, int y);
  Partition to_partition();

private:
  std::vector<int> parent_;
};

}  // namespace cslab

#endif
