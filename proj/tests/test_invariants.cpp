#include <gtest/gtest.h>

#include <random>

#include "mct/enumerate.hpp"
#include "mct/errors.hpp"
#include "mct/invariants.hpp"
#include "oracles.hpp"

using namespace mct;

namespace {

Graph random_triangle_free(int n, double p, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, p, rng);
    if (!find_triangle(g)) return g;
  }
}

}  // namespace

TEST(KIndependence, Examples) {
  EXPECT_EQ(k_independence_number(make_cycle(5), 0), 2);
  EXPECT_EQ(k_independence_number(make_cycle(5), 1), 3);
  EXPECT_EQ(k_independence_number(make_cycle(5), 2), 5);
  EXPECT_EQ(k_independence_number(make_path(1), 0), 1);
  EXPECT_THROW(k_independence_number(make_path(3), -1), std::invalid_argument);
}

TEST(KIndependence, MatchesBruteForce) {
  std::mt19937_64 rng(21);
  std::uniform_int_distribution<int> order(1, 11);
  for (int round = 0; round < 150; ++round) {
    Graph g = random_graph(order(rng), 0.35, rng);
    for (int k = 0; k <= 3; ++k)
      EXPECT_EQ(k_independence_number(g, k), oracle::alpha_k(g, k))
          << serialize_edge_list(g) << "k=" << k;
  }
}

TEST(KIndependence, BudgetGivesFeasibleLowerBound) {
  Graph g = cartesian_product(make_cycle(5), make_path(8));
  try {
    k_independence_number(g, 0, 50);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    ASSERT_TRUE(e.best_bound());
    EXPECT_GT(*e.best_bound(), 0);
    EXPECT_LE(*e.best_bound(), 20);
  }
}

TEST(DeletionSet, Examples) {
  Graph c4 = make_cycle(4);
  EXPECT_FALSE(exists_deletion_set(c4, 1));
  auto w = exists_deletion_set(c4, 2);
  ASSERT_TRUE(w);
  EXPECT_TRUE(w->x.empty());
  EXPECT_TRUE(is_valid_witness(c4, *w));

  Graph star = make_caterpillar(1, 4);
  auto ws = exists_deletion_set(star, 1);
  ASSERT_TRUE(ws);
  EXPECT_EQ(ws->x.members(), std::vector<int>{0});
}

TEST(DeletionSet, MatchesBruteForce) {
  std::mt19937_64 rng(22);
  std::uniform_int_distribution<int> order(1, 11);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_graph(order(rng), 0.4, rng);
    for (int t = 0; t <= 3; ++t) {
      auto w = exists_deletion_set(g, t);
      EXPECT_EQ(w.has_value(), oracle::deletion_exists(g, t));
      if (w) EXPECT_TRUE(is_valid_witness(g, *w));
    }
  }
}

TEST(DeletionSet, InvalidWitness) {
  Graph c4 = make_cycle(4);
  EXPECT_FALSE(is_valid_witness(c4, {VertexSet(4), 1}));
  EXPECT_FALSE(is_valid_witness(c4, {VertexSet(4, {0, 1, 2}), 2}));
  EXPECT_FALSE(is_valid_witness(c4, {VertexSet(4, {0}), 1}));
  EXPECT_TRUE(is_valid_witness(c4, {VertexSet(4, {0, 2}), 2}));
}

TEST(A1Formulas, Examples) {
  EXPECT_EQ(a1_by_deletion(make_complete(2)), 1);
  EXPECT_EQ(a1_by_alpha(make_complete(2)), 1);
  EXPECT_EQ(a1_by_deletion(make_cycle(4)), 2);
  EXPECT_EQ(a1_by_alpha(make_cycle(4)), 2);
  EXPECT_EQ(a1_by_alpha(make_cycle(6)), 2);
  EXPECT_EQ(a1_by_alpha(make_caterpillar(1, 4)), 1);
  EXPECT_EQ(a1_by_alpha(cartesian_product(make_path(2), make_path(6))), 3);
}

TEST(A1Formulas, IsolatedVertices) {
  Graph k2k1 = disjoint_union(make_complete(2), Graph(1, {}));
  EXPECT_EQ(a1_by_alpha(k2k1), 1);
  EXPECT_EQ(a1_by_alpha(Graph(3, {})), 3);
  EXPECT_EQ(a1_by_alpha(disjoint_union(make_cycle(4), Graph(2, {}))), 2);
  EXPECT_EQ(a1_by_alpha(disjoint_union(make_cycle(4), Graph(3, {}))), 3);
}

TEST(A1Formulas, DomainErrors) {
  try {
    a1_by_deletion(make_complete(3));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("triangle {0, 1, 2}"), std::string::npos);
  }
  try {
    a1_by_deletion(disjoint_union(make_complete(2), Graph(1, {})));
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("isolated vertex 2"), std::string::npos);
  }
  EXPECT_THROW(a1_by_alpha(cartesian_product(make_cycle(3), make_path(2))), DomainError);
}

TEST(A1Formulas, AlphaEqualsDeletionEqualsBruteForce) {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<int> order(2, 11);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_triangle_free(order(rng), 0.35, rng);
    if (!inspect(g).isolated.empty()) continue;
    const int want = std::max(oracle::deletion_value(g), 1);
    EXPECT_EQ(a1_by_deletion(g), want) << serialize_edge_list(g);
    EXPECT_EQ(a1_by_alpha(g), want) << serialize_edge_list(g);
  }
}

TEST(A1Formulas, AlphaDefinitionWithIsolates) {
  std::mt19937_64 rng(24);
  std::uniform_int_distribution<int> order(1, 10);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_triangle_free(order(rng), 0.25, rng);
    const int n = g.order();
    const int iso = inspect(g).isolated.size();
    int want = n + iso;
    for (int k = 0; k <= n; ++k)
      want = std::min(want, std::max(k, iso + n - oracle::alpha_k(g, k)));
    EXPECT_EQ(a1_by_alpha(g), std::max(want, 1)) << serialize_edge_list(g);
  }
}

TEST(TriangleFreeThresholds, PrimeIsMaxDegree) {
  EXPECT_EQ(triangle_free_thresholds(make_cycle(4)), (ThresholdPair{2, 2}));
  auto p = triangle_free_thresholds(disjoint_union(make_complete(2), Graph(1, {})));
  EXPECT_EQ(p.a1, 1);
  EXPECT_FALSE(p.a1_prime);
}

TEST(Domination, Examples) {
  EXPECT_EQ(domination_number(make_cycle(5)), 2);
  EXPECT_EQ(domination_number(make_path(7)), 3);
  EXPECT_EQ(domination_number(make_complete(4)), 1);
  EXPECT_EQ(domination_number(cartesian_product(make_path(4), make_path(4))), 4);
  EXPECT_EQ(domination_number(cartesian_product(make_cycle(4), make_path(1))), 2);
}

TEST(Domination, MatchesBruteForce) {
  std::mt19937_64 rng(25);
  std::uniform_int_distribution<int> order(1, 12);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_graph(order(rng), 0.25, rng);
    const int want = oracle::domination_number(g);
    EXPECT_EQ(domination_number(g), want);
    auto d = has_dominating_set(g, want);
    ASSERT_TRUE(d);
    VertexSet covered = *d;
    for (int v : *d) covered |= g.neighbors(v);
    EXPECT_EQ(covered, g.all_vertices());
    if (want > 0) EXPECT_FALSE(has_dominating_set(g, want - 1));
  }
}

TEST(Domination, BudgetThrows) {
  EXPECT_THROW(domination_number(cartesian_product(make_path(7), make_path(7)), 10),
               ResourceError);
}
