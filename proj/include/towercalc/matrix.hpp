#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "towercalc/integer.hpp"

namespace towercalc {

/// Dense row-major integer matrix. Zero-row and zero-column shapes are
/// legal and used for the boundary maps out of/into empty degrees.
template <class Int>
class BasicMatrix {
 public:
  BasicMatrix() = default;
  BasicMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, Int(0)) {}
  BasicMatrix(std::initializer_list<std::initializer_list<Int>> init);

  static BasicMatrix identity(std::size_t n) {
    BasicMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Int(1);
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  bool is_zero() const {
    for (const auto& v : data_)
      if (v != 0) return false;
    return true;
  }

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);

  BasicMatrix transposed() const;

  friend bool operator==(const BasicMatrix& a, const BasicMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

using Matrix = BasicMatrix<BigInt>;
using Vector = std::vector<BigInt>;

template <class Int>
BasicMatrix<Int>::BasicMatrix(
    std::initializer_list<std::initializer_list<Int>> init)
    : rows_(init.size()), cols_(init.size() ? init.begin()->size() : 0) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : init) {
    if (row.size() != cols_)
      throw Error(ErrorCode::ShapeMismatch, "ragged matrix initializer");
    for (const auto& v : row) data_.push_back(v);
  }
}

template <class Int>
void BasicMatrix<Int>::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

template <class Int>
void BasicMatrix<Int>::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, a), (*this)(r, b));
}

template <class Int>
BasicMatrix<Int> BasicMatrix<Int>::transposed() const {
  BasicMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix operator*(const Matrix& a, const Matrix& b);
Vector operator*(const Matrix& a, const Vector& v);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& m);

/// Block matrix [[a, b], [c, d]]; block shapes must agree.
Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d);

/// Columns [first, first+count) of m.
Matrix column_range(const Matrix& m, std::size_t first, std::size_t count);
/// Rows [first, first+count) of m.
Matrix row_range(const Matrix& m, std::size_t first, std::size_t count);

}  // namespace towercalc
