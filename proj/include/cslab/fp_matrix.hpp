#ifndef CSLAB_FP_MATRIX_HPP
#define CSLAB_FP_MATRIX_HPP

#include <optional>
#include <vector>

namespace cslab {

// Dense matrix over Z/pZ, row-major, entries reduced into [0, p).
class FpMatrix {
public:
  FpMatrix() = default;
  FpMatrix(long p, int rows, int cols);
  FpMatrix(long p, std::vector<std::vector<int>> entries);
  static FpMatrix identity(long p, int n);
  static FpMatrix zero(long p, int n) { return FpMatrix(p, n, n); }

  long p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return data_[static_cast<size_t>(r) * cols_ + c]; }
  int& at(int r, int c) { return data_[static_cast<size_t>(r) * cols_ + c]; }
  std::vector<std::vector<int>> row_vectors() const;

  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix operator*(const FpMatrix& o) const;
  bool operator==(const FpMatrix& o) const = default;
  auto operator<=>(const FpMatrix& o) const = default;

  std::vector<int> apply(const std::vector<int>& v) const;
  FpMatrix pow(long e) const;
  int rank() const;
  // Throws Singular on rank-deficient input.
  FpMatrix inverse() const;
  std::optional<FpMatrix> try_inverse() const;
  bool is_identity() const;
  // Multiplicative order; input must be invertible.
  long multiplicative_order(long cap = 1000000) const;

  std::vector<std::vector<int>> kernel_basis() const;
  std::vector<std::vector<int>> image_basis() const;

  // One solution of Ax = b, if any.
  std::optional<std::vector<int>> solve(const std::vector<int>& b) const;

  static FpMatrix block_diag(const FpMatrix& a, const FpMatrix& b);

private:
  long p_ = 2;
  int rows_ = 0, cols_ = 0;
  std::vector<int> data_;
};

// Row-reduce a list of vectors to a canonical (RREF, sorted-pivot) basis.
std::vector<std::vector<int>> rref_basis(long p, std::vector<std::vector<int>> vectors);

std::vector<int> vec_add(long p, const std::vector<int>& a, const std::vector<int>& b);
std::vector<int> vec_sub(long p, const std::vector<int>& a, const std::vector<int>& b);
bool in_span(long p, const std::vector<std::vector<int>>& basis, const std::vector<int>& v);

bool is_prime(long n);

}  // namespace cslab

#endif
