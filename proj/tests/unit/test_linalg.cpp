#include <gtest/gtest.h>

#include "arcbrick/errors.hpp"
#include "arcbrick/linalg.hpp"

using namespace arcbrick;

namespace {

Matrix M(std::size_t r, std::size_t c, std::initializer_list<long> values) {
  Matrix m(r, c);
  std::size_t k = 0;
  for (long v : values) {
    m(k / c, k % c) = v;
    ++k;
  }
  return m;
}

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
  EXPECT_EQ(parse_rational("-4"), Rational(-4));
  EXPECT_EQ(to_string(Rational(2, 4)), "1/2");
  EXPECT_EQ(to_string(Rational(3)), "3");
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
}

TEST(Matrix, Arithmetic) {
  const Matrix a = M(2, 2, {1, 2, 3, 4});
  const Matrix b = M(2, 2, {0, 1, 1, 0});
  EXPECT_EQ(a * b, M(2, 2, {2, 1, 4, 3}));
  EXPECT_EQ(a + b, M(2, 2, {1, 3, 4, 4}));
  EXPECT_EQ(a - a, Matrix::zero(2, 2));
  EXPECT_EQ(a * Matrix::identity(2), a);
  EXPECT_EQ(Matrix::hstack(a, b).cols(), 4U);
  EXPECT_EQ(Matrix::hstack(a, b).columns(2, 2), b);
}

TEST(Matrix, RankAndNullspace) {
  const Matrix a = M(2, 3, {1, 2, 3, 2, 4, 6});
  EXPECT_EQ(rank(a), 1U);
  const Matrix k = nullspace(a);
  EXPECT_EQ(k.cols(), 2U);
  EXPECT_TRUE((a * k).is_zero());
  EXPECT_EQ(rank(k), 2U);
  EXPECT_EQ(nullspace(Matrix::identity(3)).cols(), 0U);
  EXPECT_EQ(nullspace(Matrix(0, 3)).cols(), 3U);
}

TEST(Matrix, InverseAndSolve) {
  const Matrix a = M(2, 2, {2, 1, 1, 1});
  EXPECT_EQ(a * inverse(a), Matrix::identity(2));
  EXPECT_THROW(inverse(M(2, 2, {1, 2, 2, 4})), PreconditionError);
  const Matrix basis = M(3, 1, {1, 1, 0});
  EXPECT_EQ(solve_in_basis(basis, M(3, 1, {5, 5, 0})), M(1, 1, {5}));
  EXPECT_THROW(solve_in_basis(basis, M(3, 1, {1, 0, 0})), InconsistencyError);
}

TEST(Matrix, ColumnSpaceAndComplement) {
  const Matrix a = M(3, 2, {1, 2, 0, 0, 0, 0});
  const Matrix cs = column_space(a);
  EXPECT_EQ(cs.cols(), 1U);
  const Matrix comp = complement_basis(cs, 3);
  EXPECT_EQ(comp.cols(), 2U);
  EXPECT_EQ(rank(Matrix::hstack(cs, comp)), 3U);
}
