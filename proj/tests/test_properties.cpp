#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace k3div;
namespace kt = k3div::testing;

TEST(Property, DetAndSignatureAdditive) {
  kt::Rng rng(1);
  auto f = kt::det_signature_additive(rng, 200);
  EXPECT_FALSE(f) << *f;
}

TEST(Property, SmithStableUnderUnimodularConjugation) {
  kt::Rng rng(2);
  auto f = kt::smith_stable(rng, 100);
  EXPECT_FALSE(f) << *f;
}

TEST(Property, GlueDeterminantLaw) {
  auto f = kt::glue_determinant_law();
  EXPECT_FALSE(f) << *f;
}

TEST(Property, ClosureIdempotent) {
  kt::Rng rng(3);
  auto f = kt::closure_idempotent(rng, 100);
  EXPECT_FALSE(f) << *f;
}

TEST(Property, QValueBilinear) {
  auto f = kt::qvalue_bilinear();
  EXPECT_FALSE(f) << *f;
}

TEST(Property, IndexThreeGlueDropsThreeLengthByTwo) {
  for (const auto& [name, spec] : kt::shipped_glue_specs()) {
    auto before = p_length(discriminant_group(spec.base), 3);
    auto after = p_length(discriminant_group(glue(spec).lattice), 3);
    EXPECT_EQ(before, after + 2) << name;
  }
}

TEST(Property, ArtinBoundMonotone) {
  for (long l3 = 0; l3 <= 20; ++l3)
    for (long rank = 0; rank <= 22; ++rank) {
      long b = artin_bound({l3, rank, 22});
      if (rank < 22) {
        EXPECT_GE(b, artin_bound({l3, rank + 1, 22}));
      }
      EXPECT_LE(b, artin_bound({l3 + 1, rank, 22}));
    }
}

TEST(Property, EtaDegreeAffine) {
  for (long b = -20; b <= 4; b += 2)
    for (int n = 3; n <= 12; n += 3) {
      auto e = eta_degree(b, n);
      EXPECT_EQ(eta_degree(b + 2, n).degree - e.degree, 2);
      EXPECT_EQ(eta_degree(b, n + 3).degree - e.degree, -9);
      EXPECT_EQ(e.valid, e.degree >= 0);
    }
}

TEST(Property, CoverVerdictBudgetSeparatesInvalid) {
  using S = Singularity;
  kt::Rng rng(4);
  for (int t = 0; t < 200; ++t) {
    std::vector<S> s;
    long budget = 0;
    int k = static_cast<int>(kt::uniform(rng, 0, 8));
    for (int i = 0; i < k; ++i) {
      S x = static_cast<S>(kt::uniform(rng, 0, 3));
      s.push_back(x);
      budget += jacobian_budget(x);
    }
    auto v = cover_verdict(true, s);
    EXPECT_EQ(v.verdict == CoverVerdict::Invalid, budget != 6);
    EXPECT_EQ(cover_verdict(false, s).verdict, CoverVerdict::Rational);
  }
}

TEST(Property, SolvedCuspReproducesPairings) {
  for (const auto& spec : {models::section_spec(0), models::section_spec(2), models::three_section_spec(),
                           models::genus_one_trisection_spec()}) {
    auto m = build_ns_model(spec);
    auto xi = solve_cusp_class(m);
    for (const auto& [g, v] : m.cusp_prescribed) EXPECT_EQ(m.pair(xi, single(g)), v) << g;
    EXPECT_EQ(m.norm(xi), -2);
  }
}

TEST(Property, ShippedModelsMatchBuilders) {
  const std::string dir = std::string(K3DIV_DATA_DIR) + "/models/";
  std::vector<std::pair<std::string, FibrationSpec>> cases = {
      {"section_ell0", models::section_spec(0)},
      {"section_ell1", models::section_spec(1)},
      {"section_ell2", models::section_spec(2)},
      {"section_ell3", models::section_spec(3)},
      {"three_section", models::three_section_spec()},
      {"genus_one_trisection", models::genus_one_trisection_spec()},
      {"ten_iv_glue9", models::ten_iv_glue_spec(9)},
      {"ten_iv_glue6", models::ten_iv_glue_spec(6)},
      {"three_e6", models::ive6_spec(3)},
      {"two_e6", models::ive6_spec(2)},
      {"torsion_section", models::torsion_section_spec()},
  };
  for (const auto& [file, spec] : cases) {
    auto loaded = load_fibration(dir + file + ".json");
    auto built = build_ns_model(spec);
    EXPECT_EQ(loaded.gram, built.gram) << file;
    EXPECT_EQ(loaded.basis, built.basis) << file;
    ASSERT_EQ(loaded.size(), built.size()) << file;
    for (std::size_t i = 0; i < loaded.size(); ++i) EXPECT_EQ(loaded.generators[i].name, built.generators[i].name);
  }
}
