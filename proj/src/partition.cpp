#include "cslab/partition.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cslab/errors.hpp"

namespace cslab {

namespace {

// Rewrite class ids so each class is labeled by its smallest member.
void canonicalize(std::vector<int>& class_id) {
  const int n = static_cast<int>(class_id.size());
  std::vector<int> smallest(static_cast<size_t>(n), -1);
  for (int x = 0; x < n; ++x) {
    int c = class_id[static_cast<size_t>(x)];
    if (smallest[static_cast<size_t>(c)] < 0) smallest[static_cast<size_t>(c)] = x;
  }
  for (int x = 0; x < n; ++x)
    class_id[static_cast<size_t>(x)] = smallest[static_cast<size_t>(class_id[static_cast<size_t>(x)])];
}

}  // namespace

Partition::Partition(std::vector<int> class_id) : class_id_(std::move(class_id)) {
  const int n = size();
  for (int x = 0; x < n; ++x) {
    int c = class_id_[static_cast<size_t>(x)];
    if (c < 0 || c >= n)
      throw InvalidInput("NotAPartition", "class id out of range");
  }
  canonicalize(class_id_);
}

Partition Partition::singletons(int n) {
  std::vector<int> ids(static_cast<size_t>(n));
  std::iota(ids.begin(), ids.end(), 0);
  return Partition(std::move(ids));
}

Partition Partition::full(int n) {
  return Partition(std::vector<int>(static_cast<size_t>(n), 0));
}

Partition Partition::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  UnionFind uf(n);
  for (auto [a, b] : pairs) uf.unite(a, b);
  return uf.to_partition();
}

int Partition::num_classes() const {
  int k = 0;
  for (int x = 0; x < size(); ++x)
    if (rep(x) == x) ++k;
  return k;
}

std::vector<std::vector<int>> Partition::classes() const {
  std::map<int, std::vector<int>> by_rep;
  for (int x = 0; x < size(); ++x) by_rep[rep(x)].push_back(x);
  std::vector<std::vector<int>> out;
  out.reserve(by_rep.size());
  for (auto& [r, cls] : by_rep) out.push_back(std::move(cls));
  return out;
}

std::vector<int> Partition::class_sizes() const {
  std::vector<int> out;
  for (const auto& cls : classes()) out.push_back(static_cast<int>(cls.size()));
  return out;
}

bool Partition::refines(const Partition& coarser) const {
  if (size() != coarser.size()) return false;
  for (int x = 0; x < size(); ++x)
    if (coarser.rep(x) != coarser.rep(rep(x))) return false;
  return true;
}

Partition Partition::join(const Partition& other) const {
  UnionFind uf(size());
  for (int x = 0; x < size(); ++x) {
    uf.unite(x, rep(x));
    uf.unite(x, other.rep(x));
  }
  return uf.to_partition();
}

Partition Partition::meet(const Partition& other) const {
  // Classes of the meet are intersections; label each point by the pair of reps.
  std::map<std::pair<int, int>, int> first_seen;
  std::vector<int> ids(static_cast<size_t>(size()));
  for (int x = 0; x < size(); ++x) {
    auto key = std::make_pair(rep(x), other.rep(x));
    auto it = first_seen.find(key);
    if (it == first_seen.end()) it = first_seen.emplace(key, x).first;
    ids[static_cast<size_t>(x)] = it->second;
  }
  return Partition(std::move(ids));
}

Partition Partition::apply(const Perm& g) const {
  std::vector<int> ids(static_cast<size_t>(size()));
  for (int x = 0; x < size(); ++x)
    ids[static_cast<size_t>(g(x))] = g(rep(x));
  return Partition(std::move(ids));
}

bool Partition::invariant_under(const Perm& g) const {
  for (int x = 0; x < size(); ++x)
    if (!same(g(x), g(rep(x)))) return false;
  return true;
}

UnionFind::UnionFind(int n) : parent_(static_cast<size_t>(n)) {
  std::iota(parent_.begin(), parent_.end(), 0);
}

int UnionFind::find(int x) {
  int root = x;
  while (parent_[static_cast<size_t>(root)] != root) root = parent_[static_cast<size_t>(root)];
  while (parent_[static_cast<size_t>(x)] != root) {
    int next = parent_[static_cast<size_t>(x)];
    parent_[static_cast<size_t>(x)] = root;
    x = next;
  }
  return root;
}

bool UnionFind::unite(int x, int y) {
  int rx = find(x), ry = find(y);
  if (rx == ry) return false;
  // Keep the smaller root so canonical labels stay stable.
  if (rx > ry) std::swap(rx, ry);
  parent_[static_cast<size_t>(ry)] = rx;
  return true;
}

Partition UnionFind::to_partition() {
  std::vector<int> ids(parent_.size());
  for (int x = 0; x < static_cast<int>(parent_.size()); ++x) ids[static_cast<size_t>(x)] = find(x);
  return Partition(std::move(ids));
}

}  // namespace cslab
