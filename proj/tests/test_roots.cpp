#include "oracles.hpp"

#include <gtest/gtest.h>

using namespace k3div;

TEST(Roots, StandardCounts) {
  EXPECT_EQ(root_decomposition(make_standard(Symbol::A, 2)).count, 6u);
  EXPECT_EQ(root_decomposition(make_standard(Symbol::D, 4)).count, 24u);
  EXPECT_EQ(root_decomposition(make_standard(Symbol::E, 6)).count, 72u);
  EXPECT_EQ(root_decomposition(make_standard(Symbol::E, 7)).count, 126u);
  auto e8 = root_decomposition(make_standard(Symbol::E, 8));
  EXPECT_EQ(e8.count, 240u);
  EXPECT_EQ(e8.ade_string(), "E8");
}

TEST(Roots, AdeOfSums) {
  auto r = root_decomposition(parse_lattice_expression("A2+E6+A1+D5"));
  EXPECT_EQ(r.ade_string(), "A1+A2+D5+E6");
  EXPECT_EQ(r.count, 2u + 6 + 40 + 72);
  for (const auto& c : r.ade) EXPECT_GT(ade_root_count(c), 0);
}

TEST(Roots, GluedLattices) {
  EXPECT_EQ(root_decomposition(glued_a2(6).lattice).ade_string(), "6A2");
  EXPECT_EQ(root_decomposition(glued_3e6().lattice).count, 216u);
  EXPECT_EQ(root_decomposition(make_standard(Symbol::E, 8, 3)).count, 0u);
}

TEST(Roots, PositiveDefiniteSign) {
  auto l = rescale(make_standard(Symbol::A, 2), -1);
  EXPECT_THROW(root_decomposition(l), Error);
  EXPECT_EQ(short_vectors(l, 2).size(), 6u);
  EXPECT_THROW(short_vectors(l, -2), Error);
}

TEST(Roots, RejectsIndefiniteAndLarge) {
  EXPECT_THROW(root_decomposition(make_standard(Symbol::U, 2)), Error);
  EXPECT_THROW(short_vectors(repeated(make_standard(Symbol::E, 8), 4), -2), Error);
}

TEST(Roots, WorkerCountDoesNotChangeOutput) {
  auto l = glued_a2(9).lattice;
  auto one = root_decomposition(l, 1);
  auto four = root_decomposition(l, 4);
  EXPECT_EQ(one.count, 54u);
  EXPECT_EQ(one.vectors, four.vectors);
  EXPECT_EQ(one.ade_string(), four.ade_string());
}

TEST(Roots, SortedAndCorrectNorm) {
  auto l = make_standard(Symbol::D, 5);
  auto v = short_vectors(l, -4);
  EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
  for (const auto& x : v) {
    RatVector q(x.begin(), x.end());
    EXPECT_EQ(l.norm(q), -4);
  }
}

TEST(Roots, EnumeratorMatchesBoxSearch) {
  k3div::testing::Rng rng(2024);
  auto failure = k3div::testing::enumerator_matches_box_search(rng, 60);
  EXPECT_FALSE(failure) << *failure;
}

TEST(Roots, BoxSearchOracleSanity) {
  EXPECT_EQ(k3div::testing::box_search(make_standard(Symbol::A, 2), -2).size(), 6u);
  EXPECT_EQ(k3div::testing::box_search(make_standard(Symbol::A, 1), -8).size(), 2u);
}
