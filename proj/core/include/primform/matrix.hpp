#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "primform/rational.hpp"

namespace primform {

/// Small dense rational matrix. Used for the metric, exponent matrices and
/// weight systems; none of these exceed a few dozen rows.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Matrix transposed() const;
  bool is_symmetric() const;
  Rational determinant() const;
  /// nullopt when singular.
  std::optional<Matrix> inverse() const;
  std::size_t rank() const;
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form in place; `companion` (same row count, may be
/// null) receives the same row operations. Returns the pivot columns.
std::vector<std::size_t> reduce_to_rref(Matrix& m, Matrix* companion);

/// Exact solve of an overdetermined but consistent system
/// A x = b. Returns nullopt when the system is inconsistent or the solution
/// is not unique.
std::optional<std::vector<Rational>> solve_unique(const Matrix& a, const std::vector<Rational>& b);

}  // namespace primform
