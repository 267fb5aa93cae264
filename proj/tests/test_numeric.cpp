#include <k3div/numeric.hpp>

#include <gtest/gtest.h>

using namespace k3div;

TEST(Numeric, ParseRational) {
  EXPECT_EQ(parse_rational("1/3"), make_rational(1, 3));
  EXPECT_EQ(parse_rational(" -4/6 "), make_rational(-2, 3));
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_THROW(parse_rational("1/0"), Error);
  EXPECT_THROW(parse_rational("abc"), Error);
  EXPECT_THROW(parse_rational(""), Error);
}

TEST(Numeric, FloorCeilNegative) {
  EXPECT_EQ(floor_of(make_rational(-1, 3)), -1);
  EXPECT_EQ(ceil_of(make_rational(-1, 3)), 0);
  EXPECT_EQ(floor_of(make_rational(7, 2)), 3);
  EXPECT_EQ(ceil_of(make_rational(7, 2)), 4);
  EXPECT_EQ(mod_positive(make_rational(-2, 3), 2), make_rational(4, 3));
}

TEST(Numeric, Isqrt) {
  EXPECT_EQ(isqrt(0), 0);
  EXPECT_EQ(isqrt(15), 3);
  EXPECT_EQ(isqrt(16), 4);
}

TEST(Numeric, BareissMatchesInverse) {
  IntMatrix m = IntMatrix::from_rows({{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}});
  EXPECT_EQ(bareiss_determinant(m), 4);
  auto inv = inverse(to_rational(m));
  ASSERT_TRUE(inv);
  EXPECT_EQ(to_rational(m) * *inv, RatMatrix::identity(3));
  EXPECT_EQ((*inv)(0, 0), make_rational(3, 4));
}

TEST(Numeric, SingularMatrix) {
  IntMatrix m = IntMatrix::from_rows({{1, 2}, {2, 4}});
  EXPECT_EQ(bareiss_determinant(m), 0);
  EXPECT_FALSE(inverse(to_rational(m)));
  EXPECT_EQ(rank_of(to_rational(m)), 1u);
}

TEST(Numeric, SolveAffineWithNullspace) {
  RatMatrix a = to_rational(IntMatrix::from_rows({{1, 1, 0}, {0, 0, 1}}));
  auto s = solve_affine(a, {Rational(2), Rational(3)});
  ASSERT_TRUE(s);
  EXPECT_EQ(multiply(a, s->particular), (RatVector{2, 3}));
  ASSERT_EQ(s->nullspace.size(), 1u);
  EXPECT_EQ(multiply(a, s->nullspace[0]), (RatVector{0, 0}));
  EXPECT_FALSE(solve_affine(to_rational(IntMatrix::from_rows({{1, 1}, {2, 2}})), {Rational(1), Rational(3)}));
}

TEST(Numeric, RaggedRows) { EXPECT_THROW(IntMatrix::from_rows({{1, 2}, {3}}), Error); }
