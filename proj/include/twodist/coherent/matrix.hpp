#pragma once

#include <cstddef>
#include <vector>

#include "twodist/errors.hpp"

namespace twodist::coherent {

inline bool is_zero(int v) { return v == 0; }
inline bool is_zero(long v) { return v == 0; }

/// Dense row-major matrix over an exact scalar type.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transpose() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    }
    return out;
  }

  T trace() const {
    T acc{};
    for (std::size_t i = 0; i < rows_ && i < cols_; ++i) acc += (*this)(i, i);
    return acc;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }

  /// Skips zero entries of the left factor and zero rows of the right one;
  /// the idempotent-basis factors are block-sparse.
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    std::vector<char> row_nonzero(b.rows_, 0);
    for (std::size_t k = 0; k < b.rows_; ++k) {
      for (std::size_t c = 0; c < b.cols_; ++c) {
        if (!is_zero(b(k, c))) {
          row_nonzero[k] = 1;
          break;
        }
      }
    }
    Matrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& lhs = a(r, k);
        if (!row_nonzero[k] || is_zero(lhs)) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const T& rhs = b(k, c);
          if (!is_zero(rhs)) out(r, c) += lhs * rhs;
        }
      }
    }
    return out;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

}  // namespace twodist::coherent
