#include "cslab/fp_matrix.hpp"

#include <algorithm>

#include "cslab/errors.hpp"

namespace cslab {

namespace {

long mod_inverse(long a, long p) {
  // Fermat; p is prime here.
  long result = 1, base = a % p, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

bool is_prime(long n) {
  if (n < 2) return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FpMatrix::FpMatrix(long p, int rows, int cols)
    : p_(p), rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, 0) {
  if (!is_prime(p)) throw InvalidInput("BadParameter", "modulus must be prime");
}

FpMatrix::FpMatrix(long p, std::vector<std::vector<int>> entries) : p_(p) {
  if (!is_prime(p)) throw InvalidInput("BadParameter", "modulus must be prime");
  rows_ = static_cast<int>(entries.size());
  cols_ = rows_ ? static_cast<int>(entries[0].size()) : 0;
  data_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : entries) {
    if (static_cast<int>(row.size()) != cols_)
      throw InvalidInput("BadParameter", "ragged matrix");
    for (int v : row) data_.push_back(static_cast<int>(((v % p) + p) % p));
  }
}

FpMatrix FpMatrix::identity(long p, int n) {
  FpMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

std::vector<std::vector<int>> FpMatrix::row_vectors() const {
  std::vector<std::vector<int>> out(static_cast<size_t>(rows_));
  for (int r = 0; r < rows_; ++r)
    out[static_cast<size_t>(r)] = {data_.begin() + static_cast<long>(r) * cols_,
                                   data_.begin() + static_cast<long>(r + 1) * cols_};
  return out;
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw InvalidInput("BadParameter", "shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = static_cast<int>((data_[i] + o.data_[i]) % p_);
  return out;
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (p_ != o.p_ || rows_ != o.rows_ || cols_ != o.cols_)
    throw InvalidInput("BadParameter", "shape mismatch");
  FpMatrix out(p_, rows_, cols_);
  for (size_t i = 0; i < data_.size(); ++i)
    out.data_[i] = static_cast<int>(((data_[i] - o.data_[i]) % p_ + p_) % p_);
  return out;
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (p_ != o.p_ || cols_ != o.rows_) throw InvalidInput("BadParameter", "shape mismatch");
  FpMatrix out(p_, rows_, o.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      long a = at(i, k);
      if (!a) continue;
      for (int j = 0; j < o.cols_; ++j)
        out.at(i, j) = static_cast<int>((out.at(i, j) + a * o.at(k, j)) % p_);
    }
  return out;
}

std::vector<int> FpMatrix::apply(const std::vector<int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw InvalidInput("BadParameter", "shape mismatch");
  std::vector<int> out(static_cast<size_t>(rows_), 0);
  for (int i = 0; i < rows_; ++i) {
    long acc = 0;
    for (int j = 0; j < cols_; ++j) acc += static_cast<long>(at(i, j)) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = static_cast<int>(acc % p_);
  }
  return out;
}

FpMatrix FpMatrix::pow(long e) const {
  if (rows_ != cols_) throw InvalidInput("BadParameter", "power needs a square matrix");
  FpMatrix base = *this;
  if (e < 0) {
    base = base.inverse();
    e = -e;
  }
  FpMatrix acc = identity(p_, rows_);
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

namespace {

// Gauss-Jordan on rows; returns rank, optionally accumulating into `aug`.
int gauss_jordan(long p, std::vector<std::vector<long>>& m, std::vector<std::vector<long>>* aug) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (m[static_cast<size_t>(r)][static_cast<size_t>(col)] % p != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(m[static_cast<size_t>(pivot)], m[static_cast<size_t>(rank)]);
    if (aug) std::swap((*aug)[static_cast<size_t>(pivot)], (*aug)[static_cast<size_t>(rank)]);
    long inv = mod_inverse(m[static_cast<size_t>(rank)][static_cast<size_t>(col)], p);
    for (int c = 0; c < cols; ++c)
      m[static_cast<size_t>(rank)][static_cast<size_t>(c)] =
          m[static_cast<size_t>(rank)][static_cast<size_t>(c)] * inv % p;
    if (aug)
      for (auto& v : (*aug)[static_cast<size_t>(rank)]) v = v * inv % p;
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long f = m[static_cast<size_t>(r)][static_cast<size_t>(col)] % p;
      if (!f) continue;
      for (int c = 0; c < cols; ++c)
        m[static_cast<size_t>(r)][static_cast<size_t>(c)] =
            ((m[static_cast<size_t>(r)][static_cast<size_t>(c)] -
              f * m[static_cast<size_t>(rank)][static_cast<size_t>(c)]) % p + p * p) % p;
      if (aug)
        for (size_t c = 0; c < (*aug)[static_cast<size_t>(r)].size(); ++c)
          (*aug)[static_cast<size_t>(r)][c] =
              (((*aug)[static_cast<size_t>(r)][c] -
                f * (*aug)[static_cast<size_t>(rank)][c]) % p + p * p) % p;
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<long>> to_long(const FpMatrix& m) {
  std::vector<std::vector<long>> out(static_cast<size_t>(m.rows()),
                                     std::vector<long>(static_cast<size_t>(m.cols())));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) out[static_cast<size_t>(r)][static_cast<size_t>(c)] = m.at(r, c);
  return out;
}

}  // namespace

int FpMatrix::rank() const {
  auto m = to_long(*this);
  return gauss_jordan(p_, m, nullptr);
}

std::optional<FpMatrix> FpMatrix::try_inverse() const {
  if (rows_ != cols_) throw InvalidInput("BadParameter", "inverse needs a square matrix");
  auto m = to_long(*this);
  std::vector<std::vector<long>> aug(static_cast<size_t>(rows_),
                                     std::vector<long>(static_cast<size_t>(rows_), 0));
  for (int i = 0; i < rows_; ++i) aug[static_cast<size_t>(i)][static_cast<size_t>(i)] = 1;
  if (gauss_jordan(p_, m, &aug) != rows_) return std::nullopt;
  FpMatrix out(p_, rows_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      out.at(r, c) = static_cast<int>(aug[static_cast<size_t>(r)][static_cast<size_t>(c)] % p_);
  return out;
}

FpMatrix FpMatrix::inverse() const {
  auto inv = try_inverse();
  if (!inv) throw InvalidInput("Singular", "matrix is not invertible");
  return *inv;
}

bool FpMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (at(r, c) != (r == c ? 1 : 0)) return false;
  return true;
}

long FpMatrix::multiplicative_order(long cap) const {
  FpMatrix acc = *this;
  long ord = 1;
  while (!acc.is_identity()) {
    acc = acc * *this;
    if (++ord > cap) throw LimitExceeded("SizeLimitExceeded", "order exceeds cap");
  }
  return ord;
}

std::vector<std::vector<int>> FpMatrix::kernel_basis() const {
  auto m = to_long(*this);
  int rank = gauss_jordan(p_, m, nullptr);
  std::vector<int> pivot_col(static_cast<size_t>(rank));
  std::vector<bool> is_pivot(static_cast<size_t>(cols_), false);
  for (int r = 0, c = 0; r < rank; ++r) {
    while (m[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) ++c;
    pivot_col[static_cast<size_t>(r)] = c;
    is_pivot[static_cast<size_t>(c)] = true;
  }
  std::vector<std::vector<int>> basis;
  for (int free = 0; free < cols_; ++free) {
    if (is_pivot[static_cast<size_t>(free)]) continue;
    std::vector<int> v(static_cast<size_t>(cols_), 0);
    v[static_cast<size_t>(free)] = 1;
    for (int r = 0; r < rank; ++r) {
      long val = m[static_cast<size_t>(r)][static_cast<size_t>(free)] % p_;
      v[static_cast<size_t>(pivot_col[static_cast<size_t>(r)])] =
          static_cast<int>(((-val) % p_ + p_) % p_);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<std::vector<int>> FpMatrix::image_basis() const {
  // Column space: row-reduce the transpose.
  std::vector<std::vector<int>> cols_of(static_cast<size_t>(cols_),
                                        std::vector<int>(static_cast<size_t>(rows_)));
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) cols_of[static_cast<size_t>(c)][static_cast<size_t>(r)] = at(r, c);
  return rref_basis(p_, std::move(cols_of));
}

std::optional<std::vector<int>> FpMatrix::solve(const std::vector<int>& b) const {
  if (static_cast<int>(b.size()) != rows_) throw InvalidInput("BadParameter", "shape mismatch");
  auto m = to_long(*this);
  std::vector<std::vector<long>> aug(static_cast<size_t>(rows_), std::vector<long>(1));
  for (int r = 0; r < rows_; ++r) aug[static_cast<size_t>(r)][0] = b[static_cast<size_t>(r)];
  int rank = gauss_jordan(p_, m, &aug);
  std::vector<int> x(static_cast<size_t>(cols_), 0);
  for (int r = 0; r < rank; ++r) {
    int c = 0;
    while (m[static_cast<size_t>(r)][static_cast<size_t>(c)] == 0) ++c;
    x[static_cast<size_t>(c)] = static_cast<int>(aug[static_cast<size_t>(r)][0] % p_);
  }
  for (int r = rank; r < rows_; ++r)
    if (aug[static_cast<size_t>(r)][0] % p_ != 0) return std::nullopt;
  std::vector<int> reduced(b.size());
  for (size_t i = 0; i < b.size(); ++i) reduced[i] = static_cast<int>(((b[i] % p_) + p_) % p_);
  if (apply(x) != reduced) return std::nullopt;
  return x;
}

FpMatrix FpMatrix::block_diag(const FpMatrix& a, const FpMatrix& b) {
  if (a.p() != b.p()) throw InvalidInput("BadParameter", "modulus mismatch");
  FpMatrix out(a.p(), a.rows() + b.rows(), a.cols() + b.cols());
  for (int r = 0; r < a.rows(); ++r)
    for (int c = 0; c < a.cols(); ++c) out.at(r, c) = a.at(r, c);
  for (int r = 0; r < b.rows(); ++r)
    for (int c = 0; c < b.cols(); ++c) out.at(a.rows() + r, a.cols() + c) = b.at(r, c);
  return out;
}

std::vector<std::vector<int>> rref_basis(long p, std::vector<std::vector<int>> vectors) {
  if (vectors.empty()) return {};
  std::vector<std::vector<long>> m(vectors.size());
  for (size_t i = 0; i < vectors.size(); ++i)
    m[i].assign(vectors[i].begin(), vectors[i].end());
  int rank = gauss_jordan(p, m, nullptr);
  std::vector<std::vector<int>> out(static_cast<size_t>(rank));
  for (int r = 0; r < rank; ++r)
    out[static_cast<size_t>(r)].assign(m[static_cast<size_t>(r)].begin(), m[static_cast<size_t>(r)].end());
  return out;
}

std::vector<int> vec_add(long p, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<int>((a[i] + b[i]) % p);
  return out;
}

std::vector<int> vec_sub(long p, const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (size_t i = 0; i < a.size(); ++i) out[i] = static_cast<int>(((a[i] - b[i]) % p + p) % p);
  return out;
}

bool in_span(long p, const std::vector<std::vector<int>>& basis, const std::vector<int>& v) {
  auto with = basis;
  with.push_back(v);
  return rref_basis(p, with).size() == rref_basis(p, basis).size();
}

}  // namespace cslab
