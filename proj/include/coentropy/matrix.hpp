#pragma once

#include <cstdint>
#include <ostream>
#include <vector>

#include "coentropy/bignum.hpp"
#include "coentropy/errors.hpp"

namespace coentropy {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, T fill = T{}) : rows_(rows), cols_(cols), data_(std::size_t(rows) * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> init) {
    rows_ = static_cast<int>(init.size());
    cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
    for (const auto& row : init) {
      if (static_cast<int>(row.size()) != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(int n) {
    Matrix m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(int r, int c) { return data_[std::size_t(r) * cols_ + c]; }
  const T& operator()(int r, int c) const { return data_[std::size_t(r) * cols_ + c]; }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (int r = 0; r < rows_; ++r)
      for (int c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  T trace() const {
    T s{};
    for (int i = 0; i < std::min(rows_, cols_); ++i) s += (*this)(i, i);
    return s;
  }

  bool is_symmetric() const {
    if (!square()) return false;
    for (int r = 0; r < rows_; ++r)
      for (int c = r + 1; c < cols_; ++c)
        if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix p(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i)
      for (int k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (aik == T{}) continue;
        for (int j = 0; j < b.cols_; ++j) p(i, j) += aik * b(k, j);
      }
    return p;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

  friend std::ostream& operator<<(std::ostream& os, const Matrix& m) {
    os << '[';
    for (int r = 0; r < m.rows_; ++r) {
      os << (r ? ", [" : "[");
      for (int c = 0; c < m.cols_; ++c) os << (c ? ", " : "") << m(r, c);
      os << ']';
    }
    return os << ']';
  }

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<std::int64_t>;

/// Integer matrix that is square and symmetric by construction.
class IntSymMatrix {
 public:
  IntSymMatrix() = default;
  explicit IntSymMatrix(IntMatrix m) : m_(std::move(m)) {
    if (!m_.is_symmetric()) throw DimensionMismatch("matrix is not square and symmetric");
  }
  IntSymMatrix(std::initializer_list<std::initializer_list<std::int64_t>> init)
      : IntSymMatrix(IntMatrix(init)) {}

  int dim() const { return m_.rows(); }
  std::int64_t operator()(int r, int c) const { return m_(r, c); }
  const IntMatrix& matrix() const { return m_; }
  std::int64_t trace() const { return m_.trace(); }

  friend bool operator==(const IntSymMatrix&, const IntSymMatrix&) = default;
  friend std::ostream& operator<<(std::ostream& os, const IntSymMatrix& m) { return os << m.m_; }

 private:
  IntMatrix m_;
};

/// Exact rational-valued symmetric matrix stored as integer numerators over
/// one common positive divisor (e.g. the 1/2 in (1/2) B^T B).
struct ScaledSymMatrix {
  IntSymMatrix numerators;
  std::int64_t divisor = 1;

  int dim() const { return numerators.dim(); }
  BigRational at(int r, int c) const { return BigRational(numerators(r, c), divisor); }

  friend bool operator==(const ScaledSymMatrix& a, const ScaledSymMatrix& b) {
    if (a.dim() != b.dim()) return false;
    for (int r = 0; r < a.dim(); ++r)
      for (int c = 0; c < a.dim(); ++c)
        if (BigInt(a.numerators(r, c)) * b.divisor != BigInt(b.numerators(r, c)) * a.divisor) return false;
    return true;
  }
  friend bool operator==(const ScaledSymMatrix& a, const IntSymMatrix& b) {
    return a == ScaledSymMatrix{b, 1};
  }
};

/// Rank by fraction-free (Bareiss) elimination over big integers.
template <class T>
int exact_rank(const Matrix<T>& m) {
  const int rows = m.rows(), cols = m.cols();
  std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) a[r][c] = BigInt(m(r, c));
  BigInt prev = 1;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r)
      if (a[r][c] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = rank + 1; r < rows; ++r) {
      for (int k = c + 1; k < cols; ++k) a[r][k] = (a[rank][c] * a[r][k] - a[r][c] * a[rank][k]) / prev;
      a[r][c] = 0;
    }
    prev = a[rank][c];
    ++rank;
  }
  return rank;
}

inline int exact_rank(const IntSymMatrix& m) { return exact_rank(m.matrix()); }

}  // namespace coentropy
