#include "cslab/perm.hpp"

#include <algorithm>
#include <numeric>

#include "cslab/errors.hpp"

namespace cslab {

bool is_permutation(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int v : images) {
    if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
    seen[static_cast<size_t>(v)] = true;
  }
  return true;
}

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  if (!is_permutation(images_))
    throw InvalidInput("NotAPermutation", "image sequence is not a bijection");
}

Perm Perm::identity(int degree) {
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  return Perm(std::move(img));
}

Perm Perm::from_cycles(int degree, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> img(static_cast<size_t>(degree));
  std::iota(img.begin(), img.end(), 0);
  for (const auto& cyc : cycles) {
    for (size_t i = 0; i < cyc.size(); ++i) {
      int from = cyc[i];
      int to = cyc[(i + 1) % cyc.size()];
      if (from < 0 || from >= degree || to < 0 || to >= degree)
        throw InvalidInput("NotAPermutation", "cycle entry out of range");
      img[static_cast<size_t>(from)] = to;
    }
  }
  return Perm(std::move(img));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[static_cast<size_t>(i)] != i) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[static_cast<size_t>(images_[static_cast<size_t>(i)])] = i;
  return Perm(std::move(inv));
}

Perm Perm::operator*(const Perm& other) const {
  std::vector<int> img(images_.size());
  for (int i = 0; i < degree(); ++i)
    img[static_cast<size_t>(i)] = images_[static_cast<size_t>(other.images_[static_cast<size_t>(i)])];
  return Perm(std::move(img));
}

int Perm::order() const {
  int ord = 1;
  for (const auto& cyc : cycles()) ord = std::lcm(ord, static_cast<int>(cyc.size()));
  return ord;
}

std::vector<std::vector<int>> Perm::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)] || images_[static_cast<size_t>(start)] == start) continue;
    std::vector<int> cyc;
    int x = start;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      cyc.push_back(x);
      x = images_[static_cast<size_t>(x)];
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::vector<int> Perm::cycle_type() const {
  std::vector<int> lens;
  std::vector<bool> seen(images_.size(), false);
  for (int start = 0; start < degree(); ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    int len = 0, x = start;
    while (!seen[static_cast<size_t>(x)]) {
      seen[static_cast<size_t>(x)] = true;
      ++len;
      x = images_[static_cast<size_t>(x)];
    }
    lens.push_back(len);
  }
  std::sort(lens.begin(), lens.end());
  return lens;
}

std::string Perm::cycle_string() const {
  auto cycs = cycles();
  if (cycs.empty()) return "()";
  std::string s;
  for (const auto& cyc : cycs) {
    s += '(';
    for (size_t i = 0; i < cyc.size(); ++i) {
      if (i) s += ',';
      s += std::to_string(cyc[i] + 1);
    }
    s += ')';
  }
  return s;
}

}  // namespace cslab
