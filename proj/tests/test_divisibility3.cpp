#include <k3div/divisibility3.hpp>

#include <gtest/gtest.h>

using namespace k3div;

TEST(Coefficients, OnlyMixedPairs) {
  EXPECT_EQ(classify_coefficients(), (std::set<CoefficientPair>{{1, 2}, {2, 1}}));
}

TEST(AdmissibleN, ValuesAndTrace) {
  auto a = admissible_n();
  EXPECT_EQ(a.values, (std::set<int>{6, 9}));
  ASSERT_EQ(a.trace.size(), 3u);
  EXPECT_EQ(a.trace[0].key, kRuleRankBound);
  EXPECT_EQ(a.trace[1].key, kRuleIntegrality);
  EXPECT_EQ(a.trace[2].key, kRuleH1Nonnegative);
  ASSERT_EQ(a.trace[2].rejected.size(), 1u);
  EXPECT_EQ(a.trace[2].rejected[0].n, 3);
  // 2n = 22 would need a rank 22 negative definite sublattice
  EXPECT_EQ(a.trace[0].rejected.front().n, 11);
}

TEST(AdmissibleN, SmallerAmbientRank) {
  EXPECT_EQ(admissible_n(16).values, (std::set<int>{6}));
  EXPECT_TRUE(admissible_n(12).values.empty());
}

TEST(Ledger, GoldenValues) {
  auto l6 = cohomology_ledger(6);
  EXPECT_EQ(l6.m_square, -4);
  EXPECT_EQ(l6.h1_M, 0);
  EXPECT_EQ(l6.l_square, -10);
  EXPECT_EQ(l6.chi_L.at(-1), 0);
  EXPECT_EQ(l6.chi_L.at(-2), -12);
  EXPECT_EQ(l6.chi_OY, -10);
  EXPECT_EQ(l6.h1_OY, 12);
  auto l9 = cohomology_ledger(9);
  EXPECT_EQ(l9.m_square, -6);
  EXPECT_EQ(l9.h1_M, 1);
  EXPECT_EQ(l9.chi_OY, -18);
  EXPECT_EQ(l9.h1_OY, 20);
}

TEST(Ledger, ClosedFormsAgree) {
  for (int n = 3; n <= 60; n += 3) {
    auto l = cohomology_ledger(n);
    EXPECT_EQ(Rational(l.chi_OY), closed_form_chi_OY(n)) << n;
    EXPECT_EQ(Rational(l.h1_OY), closed_form_h1_OY(n)) << n;
    EXPECT_EQ(Rational(l.chi_OY), 2 + chi_line_power(n, -1) + chi_line_power(n, -2)) << n;
  }
}

TEST(Ledger, RejectsNonMultiples) {
  EXPECT_THROW(cohomology_ledger(4), Error);
  EXPECT_THROW(cohomology_ledger(0), Error);
  EXPECT_THROW(cohomology_ledger(-3), Error);
}

TEST(Ledger, SelfIntersections) {
  auto s = cohomology_ledger(6).selfints;
  EXPECT_EQ(s.cbar, -3);
  EXPECT_EQ(s.ebar, -1);
  EXPECT_EQ(s.ctilde, -1);
  EXPECT_EQ(s.etilde, -3);
}

TEST(IntersectionCalculus, Triple) {
  EXPECT_EQ(intersection_calculus(CurveOperation::Blowup, {-2, 1}), -3);
  EXPECT_EQ(intersection_calculus(CurveOperation::InseparablePullback, {3, 3, -3}), -1);
  EXPECT_EQ(intersection_calculus(CurveOperation::InseparablePullback, {3, 1, -1}), -3);
  EXPECT_THROW(intersection_calculus(CurveOperation::InseparablePullback, {3, 3, -2}), Error);
  EXPECT_THROW(intersection_calculus(CurveOperation::Blowup, {-2}), Error);
}

TEST(Eta, Degrees) {
  EXPECT_EQ(eta_degree(0, 6).degree, 6);
  EXPECT_TRUE(eta_degree(0, 6).valid);
  EXPECT_EQ(eta_degree(0, 9).degree, -3);
  EXPECT_FALSE(eta_degree(0, 9).valid);
  EXPECT_EQ(eta_degree(-4, 6).degree, 2);
}

TEST(F3Poly, ParseAndDerivatives) {
  auto f = F3Poly::parse("x^2+y^4");
  EXPECT_EQ(f.coeff(2, 0), 1);
  EXPECT_EQ(f.coeff(0, 4), 1);
  EXPECT_EQ(f.dx().coeff(1, 0), 2);
  EXPECT_EQ(f.dy().coeff(0, 3), 1);  // 4 = 1 mod 3
  EXPECT_TRUE(F3Poly::parse("x^3").dx().is_zero());
  EXPECT_TRUE(F3Poly::parse("3xy").is_zero());
  EXPECT_EQ(F3Poly::parse("2x^3y").coeff(3, 1), 2);
  EXPECT_EQ(F3Poly::parse("x*y").coeff(1, 1), 1);
  EXPECT_THROW(F3Poly::parse("x^"), Error);
  EXPECT_THROW(F3Poly::parse("z"), Error);
}

TEST(Jacobian, GoldenDimensions) {
  EXPECT_EQ(to_string(local_jacobian_dimension(F3Poly::parse("xy"))), "1");
  EXPECT_EQ(to_string(local_jacobian_dimension(F3Poly::parse("x^2+y^4"))), "3");
  EXPECT_EQ(to_string(local_jacobian_dimension(F3Poly::parse("x^2+y^5"))), "4");
  EXPECT_EQ(to_string(local_jacobian_dimension(F3Poly::parse("x^2+y^7"))), "6");
  EXPECT_TRUE(std::holds_alternative<Infinite>(local_jacobian_dimension(F3Poly::parse("x^2+y^6"))));
}

TEST(Jacobian, Errors) {
  EXPECT_THROW(local_jacobian_dimension(F3Poly::parse("0")), Error);
  EXPECT_THROW(local_jacobian_dimension(F3Poly::parse("xy"), 1), Error);
}

TEST(Jacobian, TruncationNonDecreasing) {
  for (const char* p : {"xy", "x^2+y^4", "x^2+y^6", "x^3+y^3"}) {
    auto f = F3Poly::parse(p);
    long prev = 0;
    for (int t = 1; t <= 10; ++t) {
      long d = truncated_jacobian_quotient(f, t);
      EXPECT_GE(d, prev) << p << " t=" << t;
      prev = d;
    }
  }
}

TEST(Verdict, Cases) {
  using S = Singularity;
  EXPECT_EQ(cover_verdict(true, std::vector<S>(6, S::A2)).verdict, CoverVerdict::K3);
  EXPECT_EQ(cover_verdict(false, std::vector<S>(6, S::A2)).verdict, CoverVerdict::Rational);
  EXPECT_EQ(cover_verdict(true, {S::E8, S::A2, S::A2}).verdict, CoverVerdict::K3);
  EXPECT_EQ(cover_verdict(true, {S::E6, S::E6}).verdict, CoverVerdict::K3);
  EXPECT_EQ(cover_verdict(true, std::vector<S>(5, S::A2)).verdict, CoverVerdict::Invalid);
  EXPECT_EQ(cover_verdict(true, std::vector<S>(7, S::A2)).verdict, CoverVerdict::Invalid);
  EXPECT_EQ(cover_verdict(true, {S::Elliptic}).verdict, CoverVerdict::Rational);
  EXPECT_EQ(cover_verdict(true, {S::E6, S::A2, S::A2, S::A2}).budget, 6);
}
