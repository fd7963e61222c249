#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "crossrank/errors.hpp"
#include "crossrank/scalar.hpp"

namespace crossrank {

/// Dense row-major matrix.
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ScalarMatrix = Matrix<Scalar>;

ScalarMatrix zero_matrix(Field f, std::size_t rows, std::size_t cols);
ScalarMatrix identity_matrix(Field f, std::size_t n);
/// Builds a matrix from integer rows; every row must have the same length.
ScalarMatrix make_matrix(Field f, const std::vector<std::vector<Rational>>& rows);

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix operator+(const ScalarMatrix& a, const ScalarMatrix& b);
ScalarMatrix transpose(const ScalarMatrix& m);
ScalarMatrix block_diagonal(const ScalarMatrix& a, const ScalarMatrix& b);
bool is_zero(const ScalarMatrix& m);

/// Exact rank by pivoted Gaussian elimination; the pivot row is normalized to
/// a leading 1 before it is used. The input is taken by value and consumed.
std::size_t matrix_rank(ScalarMatrix m);

std::string to_string(const ScalarMatrix& m);

/// Rank over Q of a row-major integer matrix by fraction-free elimination,
/// dividing every updated row by the gcd of its entries. Returns nullopt if an
/// intermediate value would overflow. The buffer is overwritten.
std::optional<std::size_t> integer_rank(std::vector<std::int64_t>& a, std::size_t rows, std::size_t cols);

/// Rank over F_p of a row-major matrix of residues in [0, p). The buffer is
/// overwritten.
std::size_t modular_rank(std::vector<std::uint32_t>& a, std::size_t rows, std::size_t cols, std::uint32_t p);

}  // namespace crossrank
