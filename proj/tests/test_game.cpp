#include <gtest/gtest.h>

#include <random>

#include "mct/enumerate.hpp"
#include "mct/errors.hpp"
#include "mct/game.hpp"
#include "oracles.hpp"

using namespace mct;

namespace {

Graph c3xc3() { return cartesian_product(make_cycle(3), make_cycle(3)); }
Graph c3xc4() { return cartesian_product(make_cycle(3), make_cycle(4)); }

}  // namespace

TEST(GameSpec, MctMapping) {
  GameSpec s = mct_spec(make_cycle(4), 3, 2, Player::kAlice);
  EXPECT_EQ(s.maker_per_turn, 2);
  EXPECT_EQ(s.breaker_per_turn, 3);
  EXPECT_EQ(s.first, Role::kBreaker);
  EXPECT_EQ(s.board, clique_hypergraph(make_cycle(4)));
}

TEST(GameSpec, Validation) {
  EXPECT_THROW(make_game_spec(Hypergraph::of(2, {{0, 1}}), 0, 1, Role::kMaker),
               std::invalid_argument);
  EXPECT_THROW(make_game_spec(Hypergraph::of(2, {{0}, {0, 1}}), 1, 1, Role::kMaker),
               std::invalid_argument);
}

TEST(Turns, Accounting) {
  GameSpec s = mct_spec(make_path(6), 2, 1, Player::kAlice);
  GameState st = GameState::initial(s);
  EXPECT_EQ(to_move(s, st), Role::kBreaker);
  EXPECT_EQ(picks_left_in_turn(s, st), 2);
  st = apply_pick(s, st, 0);
  EXPECT_TRUE(st.breaker.contains(0));
  EXPECT_EQ(to_move(s, st), Role::kBreaker);
  EXPECT_EQ(picks_left_in_turn(s, st), 1);
  st = apply_pick(s, st, 2);
  EXPECT_EQ(to_move(s, st), Role::kMaker);
  st = apply_pick(s, st, 4);
  EXPECT_TRUE(st.maker.contains(4));
  EXPECT_EQ(to_move(s, st), Role::kBreaker);
}

TEST(Turns, PartialTurnEndsAtExhaustion) {
  GameSpec s = mct_spec(make_complete(2), 5, 1, Player::kAlice);
  EXPECT_TRUE(first_turn_exhausts_board(s));
  GameState st = GameState::initial(s);
  EXPECT_EQ(picks_left_in_turn(s, st), 2);
  st = apply_pick(s, st, 1);
  EXPECT_EQ(decided_winner(s, st), Role::kBreaker);
  EXPECT_TRUE(legal_picks(s, st).empty());
}

TEST(Turns, ApplyPickErrors) {
  GameSpec s = mct_spec(make_path(3), 1, 1, Player::kAlice);
  GameState st = apply_pick(s, GameState::initial(s), 1);
  EXPECT_THROW(apply_pick(s, st, 1), std::invalid_argument);
  EXPECT_THROW(apply_pick(s, st, 7), std::invalid_argument);
  EXPECT_EQ(decided_winner(s, st), Role::kBreaker);
  EXPECT_THROW(apply_pick(s, st, 0), std::invalid_argument);
}

TEST(Solve, Examples) {
  EXPECT_EQ(solve(mct_spec(make_complete(2), 1, 1, Player::kAlice)).winner, Role::kBreaker);
  EXPECT_EQ(solve(mct_spec(make_complete(2), 1, 1, Player::kBob)).winner, Role::kBreaker);
  EXPECT_EQ(solve(mct_spec(make_path(3), 1, 2, Player::kBob)).winner, Role::kMaker);
  EXPECT_EQ(solve(mct_spec(c3xc3(), 1, 1, Player::kBob)).winner, Role::kBreaker);
  EXPECT_EQ(solve(mct_spec(c3xc4(), 2, 1, Player::kBob)).winner, Role::kMaker);
  EXPECT_EQ(solve(mct_spec(c3xc4(), 2, 1, Player::kAlice)).winner, Role::kBreaker);
}

TEST(Solve, MatchesMinimaxOnRandomBoards) {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> order(1, 7);
  std::uniform_int_distribution<int> bias(1, 3);
  for (int round = 0; round < 300; ++round) {
    auto h = random_simple_hypergraph(order(rng), 6, 0.45, rng);
    const Role first = round % 2 ? Role::kMaker : Role::kBreaker;
    GameSpec s = make_game_spec(h, bias(rng), bias(rng), first);
    EXPECT_EQ(solve(s).winner, oracle::winner(s));
  }
}

TEST(Solve, MatchesMinimaxOnCliqueBoards) {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> order(1, 7);
  for (int round = 0; round < 200; ++round) {
    Graph g = random_graph(order(rng), 0.5, rng);
    for (int a = 1; a <= 3; ++a)
      for (Player p : {Player::kAlice, Player::kBob}) {
        GameSpec s = mct_spec(g, a, 1 + round % 2, p);
        EXPECT_EQ(solve(s).winner, oracle::winner(s));
      }
  }
}

TEST(Solve, PrincipalVariationIsLegalAndDecisive) {
  GameSpec s = mct_spec(c3xc4(), 2, 1, Player::kBob);
  Outcome o = solve(s, {kDefaultMemoBudget, true});
  GameState st = GameState::initial(s);
  for (const Pick& p : o.principal_variation) {
    EXPECT_EQ(p.role, to_move(s, st));
    st = apply_pick(s, st, p.vertex);
  }
  EXPECT_EQ(decided_winner(s, st), o.winner);
}

TEST(Solve, WinningPickPreservesWin) {
  GameSpec s = mct_spec(c3xc3(), 1, 1, Player::kAlice);
  ExactSolver solver(s);
  GameState st = GameState::initial(s);
  auto v = solver.winning_pick(st);
  ASSERT_TRUE(v);
  EXPECT_EQ(solver.winner(apply_pick(s, st, *v)), Role::kBreaker);
}

TEST(Solve, BudgetAndSizeLimits) {
  GameSpec s = mct_spec(cartesian_product(make_cycle(4), make_path(4)), 3, 1,
                        Player::kAlice);
  EXPECT_THROW(solve(s, {8, false}), ResourceError);
  GameSpec big = mct_spec(make_path(40), 1, 1, Player::kAlice);
  EXPECT_THROW(solve(big), ResourceError);
}

TEST(ThresholdExact, Examples) {
  EXPECT_EQ(threshold_exact(c3xc3(), 1, Player::kAlice).value, 1);
  EXPECT_EQ(threshold_exact(c3xc3(), 1, Player::kBob).value, 1);
  EXPECT_EQ(threshold_exact(cartesian_product(make_path(2), make_path(5)), 1,
                            Player::kAlice)
                .value,
            2);
  EXPECT_EQ(threshold_exact(make_cycle(4), 1, Player::kAlice).value, 2);
  auto k1k2 = threshold_exact(disjoint_union(Graph(1, {}), make_complete(2)), 1,
                              Player::kBob);
  EXPECT_FALSE(k1k2.value);
  EXPECT_FALSE(k1k2.note.empty());
  EXPECT_THROW(threshold_exact(make_cycle(4), 0, Player::kAlice), std::invalid_argument);
}

TEST(ThresholdExact, TraceEndsInAliceWin) {
  Graph g = cartesian_product(make_path(2), make_path(4));
  auto r = threshold_exact(g, 1, Player::kAlice, {kDefaultMemoBudget, true});
  ASSERT_TRUE(r.value);
  GameSpec s = mct_spec(g, *r.value, 1, Player::kAlice);
  GameState st = GameState::initial(s);
  for (const Pick& p : r.trace) st = apply_pick(s, st, p.vertex);
  EXPECT_EQ(decided_winner(s, st), Role::kBreaker);
}

TEST(ThresholdExact, MatchesMinimaxThreshold) {
  std::mt19937_64 rng(33);
  std::uniform_int_distribution<int> order(1, 6);
  for (int round = 0; round < 100; ++round) {
    Graph g = random_graph(order(rng), 0.5, rng);
    for (Player p : {Player::kAlice, Player::kBob})
      for (int l = 1; l <= 2; ++l)
        EXPECT_EQ(threshold_exact(g, l, p).value, oracle::threshold(g, l, p))
            << serialize_edge_list(g);
  }
}

TEST(Properties, FirstPlayerAdvantage) {
  std::mt19937_64 rng(34);
  std::uniform_int_distribution<int> order(2, 7);
  for (int round = 0; round < 150; ++round) {
    Graph g = random_graph(order(rng), 0.5, rng);
    for (int a = 1; a <= 3; ++a) {
      const bool bob_start = alice_wins(g, a, 1, Player::kBob);
      const bool alice_start = alice_wins(g, a, 1, Player::kAlice);
      if (bob_start) EXPECT_TRUE(alice_start);
    }
  }
}

TEST(Properties, BiasMonotone) {
  std::mt19937_64 rng(35);
  std::uniform_int_distribution<int> order(2, 7);
  for (int round = 0; round < 150; ++round) {
    Graph g = random_graph(order(rng), 0.5, rng);
    for (Player p : {Player::kAlice, Player::kBob}) {
      bool won = false;
      for (int a = 1; a <= g.order(); ++a) {
        const bool w = alice_wins(g, a, 1, p);
        if (won) EXPECT_TRUE(w);
        won = won || w;
      }
    }
  }
}

TEST(Properties, RoleSwitchThroughTransversals) {
  std::mt19937_64 rng(36);
  std::uniform_int_distribution<int> order(2, 8);
  int maker_wins = 0;
  for (int round = 0; round < 200; ++round) {
    auto h = random_simple_hypergraph(order(rng), 8, 0.4, rng, 2);
    auto tr = transversal_hypergraph(h);
    const Role on_h = solve(make_game_spec(h, 1, 1, Role::kMaker)).winner;
    const Role on_tr = solve(make_game_spec(tr, 1, 1, Role::kBreaker)).winner;
    EXPECT_EQ(on_h == Role::kMaker, on_tr == Role::kBreaker);
    maker_wins += on_h == Role::kMaker;
  }
  EXPECT_GT(maker_wins, 0);
  EXPECT_LT(maker_wins, 200);
}
