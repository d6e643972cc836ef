#pragma once

#include <cstddef>
#include <vector>

#include "hyperlab/error.hpp"
#include "hyperlab/numerics/scalar.hpp"

namespace hyperlab {

/// Dense row-major matrix. 0x0 matrices are allowed; every matrix carries a
/// prototype value so generic code can build constants of matching precision.
template <class T>
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const T& fill)
      : rows_(rows), cols_(cols), proto_(fill), entries_(rows * cols, fill) {}

  Matrix(const std::vector<std::vector<T>>& rows, const T& proto) : rows_(rows.size()), proto_(proto) {
    cols_ = rows.empty() ? 0 : rows.front().size();
    entries_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw Error(ErrorCode::LengthMismatch, "ragged matrix rows");
      entries_.insert(entries_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n, const T& like) {
    Matrix m(n, n, from_int(0, like));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = from_int(1, like);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }
  const T& proto() const noexcept { return proto_; }

  T& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

  T& at(std::size_t i, std::size_t j) {
    check(i, j);
    return (*this)(i, j);
  }
  const T& at(std::size_t i, std::size_t j) const {
    check(i, j);
    return (*this)(i, j);
  }

  const std::vector<T>& entries() const noexcept { return entries_; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_ == b.entries_;
  }

 private:
  void check(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(ErrorCode::IndexOutOfBounds, "matrix index out of range");
  }

  std::size_t rows_;
  std::size_t cols_;
  T proto_;
  std::vector<T> entries_;
};

using Indices = std::vector<std::size_t>;

/// {begin, ..., end-1}.
Indices index_range(std::size_t begin, std::size_t end);
/// idx with position k removed (the "hat" notation).
Indices omit(const Indices& idx, std::size_t k);

template <class T>
Matrix<T> submatrix(const Matrix<T>& x, const Indices& rows, const Indices& cols);

template <class T>
Matrix<T> multiply(const Matrix<T>& a, const Matrix<T>& b);

template <class T>
Matrix<T> transpose(const Matrix<T>& a);

}  // namespace hyperlab
