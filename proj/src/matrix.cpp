#include "towercalc/matrix.hpp"

#include <string>

namespace towercalc {

namespace {

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorCode::ShapeMismatch, what);
}

}  // namespace

Matrix operator*(const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), "matrix product: inner dimensions differ");
  Matrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const BigInt& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

Vector operator*(const Matrix& a, const Vector& v) {
  require(a.cols() == v.size(), "matrix-vector product: size mismatch");
  Vector r(a.rows(), BigInt(0));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) r[i] += a(i, k) * v[k];
  return r;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), "matrix sum: shapes differ");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

Matrix operator-(const Matrix& m) {
  Matrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = -m(i, j);
  return r;
}

Matrix block(const Matrix& a, const Matrix& b, const Matrix& c, const Matrix& d) {
  require(a.rows() == b.rows() && c.rows() == d.rows(), "block: row counts differ");
  require(a.cols() == c.cols() && b.cols() == d.cols(), "block: column counts differ");
  Matrix r(a.rows() + c.rows(), a.cols() + b.cols());
  auto put = [&r](const Matrix& m, std::size_t r0, std::size_t c0) {
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) r(r0 + i, c0 + j) = m(i, j);
  };
  put(a, 0, 0);
  put(b, 0, a.cols());
  put(c, a.rows(), 0);
  put(d, a.rows(), a.cols());
  return r;
}

Matrix column_range(const Matrix& m, std::size_t first, std::size_t count) {
  require(first + count <= m.cols(), "column_range out of bounds");
  Matrix r(m.rows(), count);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < count; ++j) r(i, j) = m(i, first + j);
  return r;
}

Matrix row_range(const Matrix& m, std::size_t first, std::size_t count) {
  require(first + count <= m.rows(), "row_range out of bounds");
  Matrix r(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(first + i, j);
  return r;
}

}  // namespace towercalc
