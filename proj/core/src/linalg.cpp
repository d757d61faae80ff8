#include "arcbrick/linalg.hpp"

#include <utility>

#include "arcbrick/errors.hpp"

namespace arcbrick {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational");
  for (char c : text) {
    if (!((c >= '0' && c <= '9') || c == '/' || c == '-')) {
      throw ParseError("malformed rational '" + text + "'");
    }
  }
  Rational value;
  if (value.set_str(text, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (value.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  value.canonicalize();
  return value;
}

std::string to_string(const Rational& value) {
  Rational v = value;
  v.canonicalize();
  return v.get_str();
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix Matrix::identity(std::size_t size) {
  Matrix m(size, size);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = 1;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (x != 0) return false;
  return true;
}

Matrix Matrix::operator*(const Matrix& rhs) const {
  if (cols_ != rhs.rows_) throw PreconditionError("matrix product shape mismatch");
  Matrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(i, k);
      if (a == 0) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

Matrix Matrix::operator+(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) throw PreconditionError("matrix sum shape mismatch");
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] += rhs.data_[k];
  return out;
}

Matrix Matrix::operator-(const Matrix& rhs) const {
  if (rows_ != rhs.rows_ || cols_ != rhs.cols_) {
    throw PreconditionError("matrix difference shape mismatch");
  }
  Matrix out = *this;
  for (std::size_t k = 0; k < data_.size(); ++k) out.data_[k] -= rhs.data_[k];
  return out;
}

Matrix Matrix::scaled(const Rational& factor) const {
  Matrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

Matrix Matrix::columns(std::size_t first, std::size_t count) const {
  if (first + count > cols_) throw PreconditionError("column range out of bounds");
  Matrix out(rows_, count);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < count; ++j) out(i, j) = (*this)(i, first + j);
  return out;
}

Matrix Matrix::hstack(const Matrix& lhs, const Matrix& rhs) {
  if (lhs.rows_ != rhs.rows_) throw PreconditionError("hstack row mismatch");
  Matrix out(lhs.rows_, lhs.cols_ + rhs.cols_);
  for (std::size_t i = 0; i < lhs.rows_; ++i) {
    for (std::size_t j = 0; j < lhs.cols_; ++j) out(i, j) = lhs(i, j);
    for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, lhs.cols_ + j) = rhs(i, j);
  }
  return out;
}

Echelon rref(Matrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m(pivot, col) == 0) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(pivot, j), m(row, j));
    const Rational lead = m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) /= lead;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix nullspace(const Matrix& m) {
  const Echelon e = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : e.pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix basis(m.cols(), free_cols.size());
  for (std::size_t k = 0; k < free_cols.size(); ++k) {
    const std::size_t f = free_cols[k];
    basis(f, k) = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) basis(e.pivots[r], k) = -e.reduced(r, f);
  }
  return basis;
}

Matrix column_space(const Matrix& m) {
  const Echelon e = rref(m);
  Matrix out(m.rows(), e.pivots.size());
  for (std::size_t k = 0; k < e.pivots.size(); ++k)
    for (std::size_t i = 0; i < m.rows(); ++i) out(i, k) = m(i, e.pivots[k]);
  return out;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw PreconditionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const Echelon e = rref(Matrix::hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) {
    throw PreconditionError("matrix is singular");
  }
  return e.reduced.columns(n, n);
}

Matrix solve_in_basis(const Matrix& basis, const Matrix& rhs) {
  if (basis.rows() != rhs.rows()) throw PreconditionError("solve shape mismatch");
  const std::size_t k = basis.cols();
  const Echelon e = rref(Matrix::hstack(basis, rhs));
  // Full column rank on the basis part and no pivot in the right-hand side.
  std::size_t basis_pivots = 0;
  for (std::size_t p : e.pivots) {
    if (p >= k) throw InconsistencyError("right-hand side is not in the span of the basis");
    ++basis_pivots;
  }
  if (basis_pivots != k) throw InconsistencyError("basis columns are linearly dependent");
  Matrix out(k, rhs.cols());
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < rhs.cols(); ++j) out(r, j) = e.reduced(r, k + j);
  return out;
}

Matrix complement_basis(const Matrix& basis, std::size_t dim) {
  if (basis.rows() != dim) throw PreconditionError("complement_basis dimension mismatch");
  // Pivot columns of [basis | I] beyond the basis part pick the standard
  // vectors that complete it.
  const Echelon e = rref(Matrix::hstack(basis, Matrix::identity(dim)));
  std::vector<std::size_t> chosen;
  for (std::size_t p : e.pivots)
    if (p >= basis.cols()) chosen.push_back(p - basis.cols());
  Matrix out(dim, chosen.size());
  for (std::size_t k = 0; k < chosen.size(); ++k) out(chosen[k], k) = 1;
  return out;
}

}  // namespace arcbrick
