#pragma once

// Dense matrices over Q with exact (GMP) arithmetic.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <vector>

namespace arcbrick {

using Rational = mpq_class;

/// Parses "p/q" or "p"; throws ParseError.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& value);

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);

  static Matrix zero(std::size_t rows, std::size_t cols) { return Matrix(rows, cols); }
  static Matrix identity(std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;

  Matrix operator*(const Matrix& rhs) const;
  Matrix operator+(const Matrix& rhs) const;
  Matrix operator-(const Matrix& rhs) const;
  Matrix scaled(const Rational& factor) const;

  /// Columns [first, first + count).
  Matrix columns(std::size_t first, std::size_t count) const;
  /// Side-by-side concatenation; row counts must agree.
  static Matrix hstack(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of {x : m x = 0} as the columns of the result, one column per free
/// variable (free variable set to 1, other free variables 0), in increasing
/// order of the free column. Deterministic.
Matrix nullspace(const Matrix& m);

/// A basis of the column space: the pivot columns of `m`.
Matrix column_space(const Matrix& m);

/// Inverse of a square matrix; throws PreconditionError if singular.
Matrix inverse(const Matrix& m);

/// Solves a x = b for x when b lies in the column space of a and a has full
/// column rank; throws InconsistencyError otherwise.
Matrix solve_in_basis(const Matrix& basis, const Matrix& rhs);

/// Extends the columns of `basis` (linearly independent, in K^dim) by standard
/// basis vectors to a basis of K^dim; returns the chosen standard vectors as
/// columns.
Matrix complement_basis(const Matrix& basis, std::size_t dim);

}  // namespace arcbrick
