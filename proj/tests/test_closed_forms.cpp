#include <gtest/gtest.h>

#include "mct/closed_forms.hpp"
#include "mct/errors.hpp"
#include "mct/game.hpp"
#include "printed_tables.hpp"

using namespace mct;

TEST(Caterpillar, Cases) {
  EXPECT_EQ(caterpillar_a1(2, 3).value, 2);
  EXPECT_EQ(caterpillar_a1(2, 3).fired_case, "m<=l");
  EXPECT_EQ(caterpillar_a1(7, 2).value, 3);
  EXPECT_EQ(caterpillar_a1(9, 1).value, 3);
  EXPECT_EQ(caterpillar_a1(9, 1).fired_case, "l<=floor(m/3)-2");
  EXPECT_EQ(caterpillar_a1(6, 4).value, 4);
}

TEST(Caterpillar, Errors) {
  EXPECT_THROW(caterpillar_a1(5, 0), UnsupportedCase);
  EXPECT_THROW(caterpillar_a1(0, 2), std::invalid_argument);
  EXPECT_THROW(caterpillar_a1(3, -1), std::invalid_argument);
}

TEST(Caterpillar, MatchesFormula) {
  for (int m = 1; m <= 10; ++m)
    for (int l = 1; l <= 5; ++l)
      EXPECT_EQ(caterpillar_a1(m, l).value, a1_by_alpha(make_caterpillar(m, l)))
          << m << "," << l;
}

TEST(Torus, Examples) {
  EXPECT_EQ(torus_thresholds(3, 3).thresholds, (ThresholdPair{1, 1}));
  EXPECT_EQ(torus_thresholds(3, 4).thresholds, (ThresholdPair{2, 3}));
  EXPECT_EQ(torus_thresholds(5, 7).thresholds, (ThresholdPair{4, 4}));
  EXPECT_EQ(torus_thresholds(5, 7).a1_case, "m>=n>=4");
  EXPECT_THROW(torus_thresholds(4, 3), std::invalid_argument);
  EXPECT_THROW(torus_thresholds(2, 5), std::invalid_argument);
}

TEST(Cylinder, Examples) {
  EXPECT_EQ(cylinder_thresholds(3, 2).thresholds, (ThresholdPair{2, 2}));
  EXPECT_EQ(cylinder_thresholds(5, 2).thresholds, (ThresholdPair{3, 3}));
  EXPECT_EQ(cylinder_thresholds(10, 3).thresholds, (ThresholdPair{4, 4}));
  EXPECT_THROW(cylinder_thresholds(3, 1), std::invalid_argument);
  EXPECT_THROW(cylinder_thresholds(2, 4), std::invalid_argument);
}

TEST(Cylinder, PrintedTable) {
  for (int n = 3; n <= 14; ++n)
    for (int m = 2; m <= 10; ++m) {
      auto p = cylinder_thresholds(n, m).thresholds;
      EXPECT_EQ(p.a1, printed::cylinder_a1(n, m)) << n << "," << m;
      EXPECT_EQ(p.a1_prime, printed::cylinder_a1_prime(n, m)) << n << "," << m;
    }
}

TEST(Grid, Examples) {
  EXPECT_EQ(grid_thresholds(2, 2).thresholds, (ThresholdPair{2, 2}));
  EXPECT_EQ(grid_thresholds(2, 5).thresholds, (ThresholdPair{2, 3}));
  EXPECT_EQ(grid_thresholds(5, 5).thresholds, (ThresholdPair{3, 4}));
  EXPECT_EQ(grid_thresholds(3, 12).thresholds, (ThresholdPair{4, 4}));
  EXPECT_THROW(grid_thresholds(5, 4), std::invalid_argument);
  EXPECT_THROW(grid_thresholds(1, 4), std::invalid_argument);
}

TEST(Grid, PrintedTable) {
  for (int n = 2; n <= 8; ++n)
    for (int m = n; m <= 15; ++m)
      EXPECT_EQ(grid_thresholds(n, m).thresholds.a1, printed::grid_a1(n, m))
          << n << "," << m;
}

TEST(Unions, Bounds) {
  EXPECT_EQ(union_bounds(2, 3), std::make_pair(3, 5));
  EXPECT_EQ(union_bounds(4, 4), std::make_pair(4, 8));
  EXPECT_THROW(union_bounds(0, 3), std::invalid_argument);
}

TEST(Unions, Realization) {
  EXPECT_EQ(realization_value(3, 2, 1), 4);
  EXPECT_EQ(realization_value(4, 3, 0), 4);
  EXPECT_EQ(realization_value(4, 3, 3), 7);
  EXPECT_THROW(realization_value(2, 3, 0), std::invalid_argument);
  EXPECT_THROW(realization_value(3, 2, 3), std::invalid_argument);
  Graph g = disjoint_union(make_caterpillar(3, 4), make_caterpillar(2, 4));
  auto [lo, hi] = union_bounds(caterpillar_a1(3, 4).value, caterpillar_a1(2, 4).value);
  EXPECT_EQ(lo, 3);
  EXPECT_EQ(hi, 5);
  EXPECT_EQ(a1_by_alpha(g), 4);
}

TEST(Domination, CylinderPathway) {
  for (int n = 4; n <= 10; ++n)
    for (int m = 3; m <= 8; ++m)
      EXPECT_EQ(cylinder_a1_via_domination(n, m).value,
                cylinder_thresholds(n, m).thresholds.a1)
          << n << "," << m;
  EXPECT_THROW(cylinder_a1_via_domination(3, 4), std::invalid_argument);
}

TEST(Domination, GridPathway) {
  for (int n = 3; n <= 7; ++n)
    for (int m = n; m <= 12; ++m)
      EXPECT_EQ(grid_a1_via_domination(n, m).value, grid_thresholds(n, m).thresholds.a1)
          << n << "," << m;
  EXPECT_THROW(grid_a1_via_domination(2, 4), std::invalid_argument);
}

TEST(ClosedForms, SmallBoardsMatchExact) {
  for (int m = 3; m <= 4; ++m) {
    Graph t = cartesian_product(make_cycle(3), make_cycle(m));
    auto p = torus_thresholds(3, m).thresholds;
    EXPECT_EQ(threshold_exact(t, 1, Player::kAlice).value, std::optional<int>(p.a1));
    EXPECT_EQ(threshold_exact(t, 1, Player::kBob).value, p.a1_prime);
  }
  for (int m = 2; m <= 4; ++m) {
    Graph c = cartesian_product(make_cycle(3), make_path(m));
    auto p = cylinder_thresholds(3, m).thresholds;
    EXPECT_EQ(threshold_exact(c, 1, Player::kAlice).value, std::optional<int>(p.a1));
    EXPECT_EQ(threshold_exact(c, 1, Player::kBob).value, p.a1_prime);
  }
}
