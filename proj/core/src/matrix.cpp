#include "primform/matrix.hpp"

#include <utility>

#include "primform/error.hpp"

namespace primform {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Rational(1);
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

bool Matrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

namespace {

// Row-reduces `m` in place (and `aug` alongside, if non-null). Returns the
// pivot columns and the sign of the row permutation.
std::pair<std::vector<std::size_t>, int> row_reduce(Matrix& m, Matrix* aug) {
  std::vector<std::size_t> pivots;
  int sign = 1;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row) {
      sign = -sign;
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(p, c), m(row, c));
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c) std::swap((*aug)(p, c), (*aug)(row, c));
    }
    const Rational inv = Rational(1) / m(row, col);
    for (std::size_t c = 0; c < m.cols(); ++c) m(row, c) *= inv;
    if (aug)
      for (std::size_t c = 0; c < aug->cols(); ++c) (*aug)(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rational f = m(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
      if (aug)
        for (std::size_t c = 0; c < aug->cols(); ++c) (*aug)(r, c) -= f * (*aug)(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return {pivots, sign};
}

}  // namespace

std::vector<std::size_t> reduce_to_rref(Matrix& m, Matrix* companion) {
  if (companion && companion->rows() != m.rows())
    throw ContractViolation("reduce_to_rref: companion row count mismatch");
  return row_reduce(m, companion).first;
}

Rational Matrix::determinant() const {
  if (rows_ != cols_) throw ContractViolation("determinant of a non-square matrix");
  Matrix m = *this;
  Rational det(1);
  for (std::size_t col = 0; col < cols_; ++col) {
    std::size_t p = col;
    while (p < rows_ && m(p, col).is_zero()) ++p;
    if (p == rows_) return Rational(0);
    if (p != col) {
      det = -det;
      for (std::size_t c = 0; c < cols_; ++c) std::swap(m(p, c), m(col, c));
    }
    det *= m(col, col);
    const Rational inv = Rational(1) / m(col, col);
    for (std::size_t r = col + 1; r < rows_; ++r) {
      if (m(r, col).is_zero()) continue;
      const Rational f = m(r, col) * inv;
      for (std::size_t c = col; c < cols_; ++c) m(r, c) -= f * m(col, c);
    }
  }
  return det;
}

std::optional<Matrix> Matrix::inverse() const {
  if (rows_ != cols_) throw ContractViolation("inverse of a non-square matrix");
  Matrix m = *this;
  Matrix inv = identity(rows_);
  auto [pivots, sign] = row_reduce(m, &inv);
  (void)sign;
  if (pivots.size() != rows_) return std::nullopt;
  return inv;
}

std::size_t Matrix::rank() const {
  Matrix m = *this;
  return row_reduce(m, nullptr).first.size();
}

std::vector<Rational> Matrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != cols_) throw ContractViolation("Matrix::apply: dimension mismatch");
  std::vector<Rational> out(rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c)
      if (!(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw ContractViolation("Matrix product: dimension mismatch");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::optional<std::vector<Rational>> solve_unique(const Matrix& a, const std::vector<Rational>& b) {
  if (b.size() != a.rows()) throw ContractViolation("solve_unique: dimension mismatch");
  Matrix m = a;
  Matrix rhs(a.rows(), 1);
  for (std::size_t r = 0; r < a.rows(); ++r) rhs(r, 0) = b[r];
  auto [pivots, sign] = row_reduce(m, &rhs);
  (void)sign;
  if (pivots.size() != a.cols()) return std::nullopt;
  for (std::size_t r = pivots.size(); r < a.rows(); ++r)
    if (!rhs(r, 0).is_zero()) return std::nullopt;
  std::vector<Rational> x(a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = rhs(i, 0);
  return x;
}

}  // namespace primform
