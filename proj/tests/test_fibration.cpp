#include <k3div/models.hpp>

#include <gtest/gtest.h>

using namespace k3div;

TEST(Fibres, Layouts) {
  auto iv = fibre_layout(FibreType::IV);
  EXPECT_EQ(iv.names.size(), 3u);
  EXPECT_EQ(iv.pair(0, 1), 1);
  EXPECT_EQ(iv.pair(0, 0), -2);
  auto star = fibre_layout(FibreType::IVstar);
  EXPECT_EQ(star.names.size(), 7u);
  long total = 0;
  for (auto m : star.multiplicity) total += m;
  EXPECT_EQ(total, 12);
  EXPECT_EQ(parse_fibre_type("IV*"), FibreType::IVstar);
  EXPECT_EQ(parse_fibre_type("IVstar"), FibreType::IVstar);
  EXPECT_EQ(parse_fibre_type("I3"), FibreType::I3);
  EXPECT_THROW(parse_fibre_type("II"), Error);
}

TEST(Model, FibreRelationAndRank) {
  auto m = build_ns_model(ten_iv_spec(true));
  EXPECT_EQ(m.basis.size(), 22u);
  EXPECT_EQ(m.norm(single(kFibreName)), 0);
  // F equals the sum of the components of any fibre
  for (int i = 1; i <= kIvFibres; ++i)
    EXPECT_TRUE(same_class(m, single(kFibreName), iv_configuration(i, i, 1, 1) + single(iv_name(i, 3))));
  EXPECT_EQ(rank_of(to_rational(m.gram)), 22u);
}

TEST(Model, SectionCuspSolves) {
  for (int ell = 0; ell <= 3; ++ell) {
    auto m = build_ns_model(models::section_spec(ell));
    auto xi = solve_cusp_class(m);
    EXPECT_EQ(m.norm(xi), -2);
    auto coeff = [&xi](const std::string& g) { return xi.count(g) ? xi.at(g) : Rational(0); };
    EXPECT_EQ(coeff(kFibreName), 6 - 2 * ell) << ell;
    EXPECT_EQ(coeff("s"), 3);
    EXPECT_EQ(m.basis.size(), 22u);
  }
}

TEST(Model, TrisectionCuspSolve) {
  auto m = build_ns_model(models::three_section_spec());
  auto xi = solve_cusp_class(m);
  DivisorClass want = make_rational(-1, 3) * iv_configuration(1, 9, 1, 2) + single("C") + single(kFibreName, 2);
  EXPECT_EQ(drop_zeros(xi), drop_zeros(want));
  ASSERT_TRUE(m.cusp_solution);
}

TEST(Model, DeclaredCuspPairingsSkipTheSolve) {
  auto spec = models::section_spec(0);
  spec.cusp_pairings["s"] = 0;
  auto m = build_ns_model(spec);
  EXPECT_FALSE(m.cusp_solution);
  EXPECT_EQ(m.pair(single(kCuspName), single("s")), 0);
}

TEST(Model, InputErrors) {
  auto dup = ten_iv_spec(false);
  dup.fibres[1].label = dup.fibres[0].label;
  EXPECT_THROW(build_ns_model(dup), Error);

  auto dotted = ten_iv_spec(false);
  dotted.fibres[0].label = "a.b";
  EXPECT_THROW(build_ns_model(dotted), Error);

  auto star = models::section_spec(1);
  star.sections[0].meets["g1"] = "C12";  // multiplicity 2
  EXPECT_THROW(build_ns_model(star), Error);

  auto missing = models::section_spec(0);
  missing.sections[0].meets.erase("f3");
  EXPECT_THROW(build_ns_model(missing), Error);

  auto i3 = models::torsion_section_spec();
  i3.cusp = true;
  EXPECT_THROW(build_ns_model(i3), Error);

  auto degree = models::three_section_spec();
  degree.multisections[0].meets["f10"]["E1"] = 2;
  EXPECT_THROW(build_ns_model(degree), Error);

  auto glue = models::ten_iv_glue_spec(9);
  glue.glue[0].combination = make_rational(1, 3) * iv_configuration(1, 8, 1, 2);
  EXPECT_THROW(build_ns_model(glue), Error);
}

TEST(Model, UndeclaredPairingsAreRecorded) {
  auto spec = models::torsion_section_spec();
  spec.pairings.clear();
  auto m = build_ns_model(spec);
  ASSERT_EQ(m.assumptions.size(), 1u);
  EXPECT_NE(m.assumptions[0].find("not declared"), std::string::npos);
  EXPECT_TRUE(build_ns_model(models::torsion_section_spec()).assumptions.empty());
}

TEST(Classes, ParseAndFormat) {
  auto c = parse_class("2*f1.C12 - 1/3 F + xi");
  EXPECT_EQ(c.at("f1.C12"), 2);
  EXPECT_EQ(c.at("F"), make_rational(-1, 3));
  EXPECT_EQ(c.at("xi"), 1);
  auto d = parse_class("1/3*(f1.E1 + 2 f1.E2)");
  EXPECT_EQ(d.at("f1.E2"), make_rational(2, 3));
  EXPECT_THROW(parse_class("2*"), Error);
  EXPECT_THROW(parse_class("(f1.E1"), Error);
  auto m = build_ns_model(ten_iv_spec(true));
  EXPECT_EQ(format_class(m, parse_class("F + 2 xi - f1.E1")), "-f1.E1 + F + 2 xi");
}

TEST(Divisibility, ThreeE6) {
  auto m = build_ns_model(models::ive6_spec(3));
  auto c = check_divisor_divisibility(m, models::ive6_arms({{2, 1}, {2, 1}, {2, 1}}));
  ASSERT_TRUE(c.divisible);
  EXPECT_TRUE(c.verified);
  EXPECT_TRUE(same_class(m, *c.witness, single(kFibreName) - single("g1.C") - single("g2.C") - single("g3.C")));
  EXPECT_EQ(c.d_square, 9 * c.witness_square);
}

TEST(Divisibility, SingleIvStarIsNot) {
  auto m = build_ns_model(models::ive6_spec(2));
  EXPECT_TRUE(check_divisor_divisibility(m, models::ive6_arms({{2, 1}, {1, 2}})).divisible);
  EXPECT_FALSE(check_divisor_divisibility(m, models::ive6_arms({{2, 1}})).divisible);
}

TEST(Divisibility, TorsionSection) {
  auto m = build_ns_model(models::torsion_section_spec());
  DivisorClass d;
  for (int i = 1; i <= 6; ++i) {
    d["t" + std::to_string(i) + ".T1"] = 2;
    d["t" + std::to_string(i) + ".T2"] = 1;
  }
  auto c = check_divisor_divisibility(m, d);
  ASSERT_TRUE(c.divisible);
  EXPECT_EQ(c.d_square, -36);
  EXPECT_EQ(c.witness_square, -4);
  EXPECT_TRUE(same_class(m, *c.witness, single(kFibreName, 2) + single("O") - single("P")));
  // five fibres are not enough
  d.erase("t6.T1");
  d.erase("t6.T2");
  EXPECT_FALSE(check_divisor_divisibility(m, d).divisible);
}

TEST(Divisibility, Errors) {
  auto m = build_ns_model(ten_iv_spec(true));
  EXPECT_THROW(check_divisor_divisibility(m, make_rational(1, 3) * single("F")), Error);
  EXPECT_THROW(check_divisor_divisibility(m, single("F"), 1), Error);
  EXPECT_THROW(check_divisor_divisibility(m, single("nosuch")), Error);
}

TEST(Gap, PossibleExactlyForOneAndFour) {
  for (int mm = 0; mm <= 9; ++mm) {
    auto v = section_gap_analysis(mm);
    EXPECT_EQ(v.possible, mm == 1 || mm == 4) << mm;
    EXPECT_EQ(v.implied_section_pairing, Rational(-2) + make_rational(10 - mm, 3));
  }
  EXPECT_EQ(section_gap_analysis(4).implied_section_pairing, 0);
  EXPECT_EQ(section_gap_analysis(1).implied_section_pairing, 1);
  EXPECT_FALSE(section_gap_analysis(7).pairing_realizable);
  EXPECT_THROW(section_gap_analysis(10), Error);
  EXPECT_THROW(section_gap_analysis(-1), Error);
}

TEST(Trisection, Classes) {
  auto g = trisection_class(build_ns_model(models::ten_iv_glue_spec(9)), 9);
  EXPECT_TRUE(g.failures.empty());
  EXPECT_EQ(g.self, -2);
  EXPECT_EQ(g.h_degree, 4);
  auto t = trisection_class(build_ns_model(models::ten_iv_glue_spec(6)), 6);
  EXPECT_TRUE(t.failures.empty());
  EXPECT_EQ(t.self, 0);
  EXPECT_THROW(trisection_class(build_ns_model(ten_iv_spec(true)), 9), Error);
  EXPECT_THROW(trisection_class(build_ns_model(models::ten_iv_glue_spec(9)), 7), Error);
}

TEST(Trisection, ThreeSectionModelMatches) {
  auto m = build_ns_model(models::three_section_spec());
  auto r = trisection_class(m, 9);
  EXPECT_TRUE(same_class(m, r.divisor, single("C")));
}

TEST(Residue, Gate) {
  ResidueInput in;
  for (int i = 2; i <= 10; ++i) {
    in.a.push_back(i <= 9 ? make_rational(1, 3) : Rational(0));
    in.b.push_back(i <= 9 ? make_rational(2, 3) : Rational(0));
  }
  in.N = -2;
  auto v = residue_gate(in);
  EXPECT_TRUE(v.valid);
  EXPECT_EQ(v.l, 9);
  EXPECT_TRUE(v.admissible);
  in.a[0] = make_rational(1, 2);
  EXPECT_FALSE(residue_gate(in).valid);
}

TEST(Hyperplane, Degrees) {
  auto m = build_ns_model(ten_iv_spec(true));
  auto h = hyperplane_degrees(m);
  EXPECT_EQ(h.h_square, 4);
  for (const auto& [name, d] : h.degrees) {
    if (name == kFibreName) continue;
    EXPECT_EQ(d, 1) << name;
  }
  EXPECT_THROW(hyperplane_degrees(build_ns_model(ten_iv_spec(false))), Error);
}
