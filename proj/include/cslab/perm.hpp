#ifndef CSLAB_PERM_HPP
#define CSLAB_PERM_HPP

#include <cstddef>
#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace cslab {

// Permutation of {0..n-1}, stored as the image sequence.
class Perm {
public:
  Perm() = default;
  explicit Perm(std::vector<int> images);
  static Perm identity(int degree);
  // 0-based cycles, unmentioned points fixed.
  static Perm from_cycles(int degree, const std::vector<std::vector<int>>& cycles);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int x) const { return images_[static_cast<size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  Perm inverse() const;
  // Function composition: (a * b)(x) = a(b(x)).
  Perm operator*(const Perm& other) const;
  int order() const;

  std::vector<std::vector<int>> cycles() const;  // nontrivial cycles, canonical order
  std::vector<int> cycle_type() const;           // sorted lengths incl. fixed points
  // Human-facing 1-based disjoint-cycle string, e.g. "(1,2,3,4)"; "()" for id.
  std::string cycle_string() const;

  friend bool operator==(const Perm& a, const Perm& b) { return a.images_ == b.images_; }
  friend bool operator<(const Perm& a, const Perm& b) { return a.images_ < b.images_; }

private:
  std::vector<int> images_;
};

bool is_permutation(const std::vector<int>& images);

}  // namespace cslab

#endif
