#include <k3div/discriminant.hpp>
#include <k3div/expression.hpp>

#include <gtest/gtest.h>

using namespace k3div;

TEST(Lattice, StandardDeterminants) {
  EXPECT_EQ(bareiss_determinant(make_standard(Symbol::A, 2).gram()), 3);
  EXPECT_EQ(bareiss_determinant(make_standard(Symbol::D, 4).gram()), 4);
  EXPECT_EQ(bareiss_determinant(make_standard(Symbol::E, 6).gram()), 3);
  EXPECT_EQ(bareiss_determinant(make_standard(Symbol::E, 7).gram()), -2);
  EXPECT_EQ(bareiss_determinant(make_standard(Symbol::E, 8).gram()), 1);
  EXPECT_EQ(bareiss_determinant(make_standard(Symbol::U, 2).gram()), -1);
  EXPECT_EQ(bareiss_determinant(make_standard(Symbol::U, 2, 3).gram()), -9);
}

TEST(Lattice, RootLatticesAreNegativeDefinite) {
  auto s = signature_of(to_rational(make_standard(Symbol::E, 8).gram()));
  EXPECT_EQ(s, (Signature{0, 8, 0}));
  EXPECT_EQ(make_standard(Symbol::A, 2).gram()(0, 0), -2);
}

TEST(Lattice, InvalidStandard) {
  EXPECT_THROW(make_standard(Symbol::E, 9), Error);
  EXPECT_THROW(make_standard(Symbol::D, 3), Error);
  EXPECT_THROW(make_standard(Symbol::A, 0), Error);
  EXPECT_THROW(make_standard(Symbol::A, 2, 0), Error);
}

TEST(Lattice, RejectsNonSymmetric) {
  EXPECT_THROW(Lattice(IntMatrix::from_rows({{0, 1}, {2, 0}})), Error);
  EXPECT_THROW(Lattice(IntMatrix::from_rows({{0, 1}, {1, 0}}), {"a", "a"}), Error);
  EXPECT_THROW(Lattice(IntMatrix::from_rows({{0, 1}, {1, 0}}), {"a"}), Error);
}

TEST(Lattice, Expression) {
  auto l = parse_lattice_expression("U(3)+6A2");
  auto inv = invariants(l);
  EXPECT_EQ(inv.rank, 14u);
  EXPECT_EQ(inv.signature, (Signature{1, 13, 0}));
  EXPECT_EQ(abs_of(inv.determinant), 9 * 729);
  EXPECT_EQ(parse_lattice_expression("2E6").rank(), 12u);
  EXPECT_EQ(parse_lattice_expression("E8(3)").gram()(0, 0), -6);
  EXPECT_THROW(parse_lattice_expression("F4"), Error);
  EXPECT_THROW(parse_lattice_expression("A2++A2"), Error);
}

TEST(Lattice, Sums) {
  auto l = direct_sum({make_standard(Symbol::A, 1), make_standard(Symbol::U, 2)});
  EXPECT_EQ(l.rank(), 3u);
  EXPECT_EQ(l.gram()(1, 2), 1);
  EXPECT_EQ(l.gram()(0, 1), 0);
  EXPECT_EQ(rescale(l, 3).gram()(0, 0), -6);
}

TEST(Lattice, PairingAndDual) {
  auto a2 = make_standard(Symbol::A, 2);
  EXPECT_EQ(a2.pair({1, 0}, {0, 1}), 1);
  EXPECT_EQ(a2.norm({1, 1}), -2);
  EXPECT_THROW(a2.pair({1}, {0, 1}), Error);
  // (e + 2e') / 3 lies in the dual of A2, e / 3 does not
  EXPECT_TRUE(in_dual(a2, {make_rational(1, 3), make_rational(2, 3)}));
  EXPECT_FALSE(in_dual(a2, {make_rational(1, 3), Rational(0)}));
}

TEST(Lattice, SignatureWithZeroDiagonal) {
  EXPECT_EQ(signature_of(to_rational(make_standard(Symbol::U, 2).gram())), (Signature{1, 1, 0}));
  EXPECT_EQ(signature_of(to_rational(IntMatrix::from_rows({{0, 0}, {0, 0}}))), (Signature{0, 0, 2}));
}

TEST(Discriminant, A2AndE6) {
  // negative definite: q = -2/3 on A2 and -4/3 on E6, reduced mod 2
  for (auto [l, q] : {std::pair{make_standard(Symbol::A, 2), make_rational(4, 3)},
                      std::pair{make_standard(Symbol::E, 6), make_rational(2, 3)}}) {
    auto d = discriminant_group(l);
    EXPECT_EQ(d.invariant_factors, (IntVector{3}));
    ASSERT_EQ(d.qvalues.size(), 1u);
    EXPECT_EQ(d.qvalues[0], q);
    EXPECT_EQ(p_length(d, 3), 1u);
    EXPECT_EQ(p_length(d, 2), 0u);
  }
}

TEST(Discriminant, D4AndUnimodular) {
  auto d = discriminant_group(make_standard(Symbol::D, 4));
  EXPECT_EQ(d.invariant_factors, (IntVector{2, 2}));
  EXPECT_EQ(p_length(d, 2), 2u);
  EXPECT_TRUE(discriminant_group(make_standard(Symbol::E, 8)).invariant_factors.empty());
  EXPECT_EQ(discriminant_group(make_standard(Symbol::U, 2, 3)).invariant_factors, (IntVector{3, 3}));
}

TEST(Discriminant, L6) {
  auto d = discriminant_group(glued_a2(6).lattice);
  EXPECT_EQ(d.invariant_factors, (IntVector{3, 3, 3, 3}));
  EXPECT_EQ(d.order(), 81);
}
