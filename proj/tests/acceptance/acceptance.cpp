// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <atomic>
#include <chrono>
#include <cstdio>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "mct/closed_forms.hpp"
#include "mct/enumerate.hpp"
#include "mct/harness.hpp"
#include "mct/policies.hpp"
#include "oracles.hpp"
#include "printed_tables.hpp"

using namespace mct;

namespace {

struct Tally {
  std::atomic<long> checked{0};
  std::mutex mu;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++checked;
    if (ok) return;
    std::lock_guard lock(mu);
    failures.push_back(what);
  }
};

std::string cell(const std::string& name, int n, int m) {
  return name + "(" + std::to_string(n) + "," + std::to_string(m) + ")";
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "none"; }

int jobs() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 4;
}

std::vector<Graph> tiny_family() {
  std::vector<Graph> out;
  for (int n = 1; n <= 6; ++n)
    for_each_labeled_graph(n, {true, true}, [&](const Graph& g) { out.push_back(g); });
  return out;
}

void torus(Tally& t) {
  for (int n = 3; n <= 8; ++n)
    for (int m = n; m <= 8; ++m) {
      const ThresholdPair want = torus_thresholds(n, m).thresholds;
      Graph g = cartesian_product(make_cycle(n), make_cycle(m));
      if (n >= 4) {
        t.expect(a1_by_alpha(g) == want.a1, cell("torus a1 formula", n, m));
        t.expect(a1_by_deletion(g) == want.a1, cell("torus a1 deletion", n, m));
        t.expect(want.a1_prime == g.max_degree(), cell("torus a1' formula", n, m));
      }
      if (n == 3 && m <= 5) {
        t.expect(threshold_exact(g, 1, Player::kAlice).value == want.a1,
                 cell("torus a1 exact", n, m));
        t.expect(threshold_exact(g, 1, Player::kBob).value == want.a1_prime,
                 cell("torus a1' exact", n, m));
      }
    }
}

void cylinder(Tally& t) {
  for (int n = 3; n <= 12; ++n)
    for (int m = 2; m <= 8; ++m) {
      const ThresholdPair want = cylinder_thresholds(n, m).thresholds;
      t.expect(want.a1 == printed::cylinder_a1(n, m), cell("cylinder a1 printed", n, m));
      t.expect(want.a1_prime == printed::cylinder_a1_prime(n, m),
               cell("cylinder a1' printed", n, m));
      Graph g = cartesian_product(make_cycle(n), make_path(m));
      if (n >= 4 && m >= 3)
        t.expect(cylinder_a1_via_domination(n, m).value == want.a1,
                 cell("cylinder a1 domination", n, m));
      if (n >= 4) {
        t.expect(a1_by_alpha(g) == want.a1, cell("cylinder a1 formula", n, m));
        t.expect(want.a1_prime == g.max_degree(), cell("cylinder a1' formula", n, m));
      }
      if (g.order() <= 15) {
        t.expect(threshold_exact(g, 1, Player::kAlice).value == want.a1,
                 cell("cylinder a1 exact", n, m));
        t.expect(threshold_exact(g, 1, Player::kBob).value == want.a1_prime,
                 cell("cylinder a1' exact", n, m));
      }
    }
}

void grid(Tally& t) {
  for (int n = 2; n <= 6; ++n)
    for (int m = n; m <= 13; ++m) {
      const ThresholdPair want = grid_thresholds(n, m).thresholds;
      Graph g = cartesian_product(make_path(n), make_path(m));
      t.expect(want.a1 == printed::grid_a1(n, m), cell("grid a1 printed", n, m));
      t.expect(a1_by_alpha(g) == want.a1, cell("grid a1 formula", n, m));
      t.expect(want.a1_prime == g.max_degree(), cell("grid a1' formula", n, m));
      if (g.order() <= 14) {
        t.expect(threshold_exact(g, 1, Player::kAlice).value == want.a1,
                 cell("grid a1 exact", n, m));
        t.expect(threshold_exact(g, 1, Player::kBob).value == want.a1_prime,
                 cell("grid a1' exact", n, m));
      }
    }
}

void triangle_free_exhaustive(Tally& t, const std::vector<Graph>& family) {
  parallel_for(family.size(), jobs(), [&](std::size_t i) {
    const Graph& g = family[i];
    const std::string id = serialize_edge_list(g);
    const int alpha = a1_by_alpha(g);
    const int deletion = a1_by_deletion(g);
    const auto alice = threshold_exact(g, 1, Player::kAlice).value;
    const auto bob = threshold_exact(g, 1, Player::kBob).value;
    t.expect(alpha == deletion, "alpha " + std::to_string(alpha) + " deletion " +
                                    std::to_string(deletion) + " on\n" + id);
    t.expect(alice == alpha, "exact Alice " + show(alice) + " formula " +
                                 std::to_string(alpha) + " on\n" + id);
    t.expect(bob == g.max_degree(), "exact Bob " + show(bob) + " Delta " +
                                        std::to_string(g.max_degree()) + " on\n" + id);
    t.expect(std::max(oracle::deletion_value(g), 1) == deletion,
             "brute-force deletion value on\n" + id);
    if (g.order() <= 5)
      t.expect(oracle::threshold(g, 1, Player::kAlice) == alice,
               "minimax Alice threshold on\n" + id);
  });
}

void caterpillars(Tally& t) {
  for (int m = 1; m <= 7; ++m)
    for (int l = 1; l <= 5; ++l) {
      const int want = caterpillar_a1(m, l).value;
      Graph g = make_caterpillar(m, l);
      t.expect(a1_by_alpha(g) == want, cell("caterpillar formula", m, l));
      if (g.order() <= 12)
        t.expect(threshold_exact(g, 1, Player::kAlice).value == want,
                 cell("caterpillar exact", m, l));
    }
}

Graph random_tf_isolate_free(int n, std::mt19937_64& rng) {
  while (true) {
    Graph g = random_graph(n, 0.5, rng);
    if (!find_triangle(g) && inspect(g).isolated.empty()) return g;
  }
}

void unions(Tally& t) {
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= k; ++l)
      for (int i = 0; i <= l; ++i) {
        Graph g = disjoint_union(make_caterpillar(k, k + i), make_caterpillar(l, k + i));
        const std::string id = "realization(" + std::to_string(k) + "," +
                               std::to_string(l) + "," + std::to_string(i) + ")";
        t.expect(a1_by_alpha(g) == realization_value(k, l, i), id + " formula");
        t.expect(a1_by_deletion(g) == realization_value(k, l, i), id + " deletion");
      }
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(2, 5);
  for (int round = 0; round < 200; ++round) {
    Graph g1 = random_tf_isolate_free(order(rng), rng);
    Graph g2 = random_tf_isolate_free(order(rng), rng);
    const auto a = threshold_exact(g1, 1, Player::kAlice).value;
    const auto b = threshold_exact(g2, 1, Player::kAlice).value;
    const auto u = threshold_exact(disjoint_union(g1, g2), 1, Player::kAlice).value;
    if (!a || !b || !u) {
      t.expect(false, "missing threshold in union pair " + std::to_string(round));
      continue;
    }
    auto [lo, hi] = union_bounds(*a, *b);
    t.expect(lo <= *u && *u <= hi, "union pair " + std::to_string(round) + ": " +
                                       std::to_string(*u) + " outside [" +
                                       std::to_string(lo) + "," + std::to_string(hi) + "]");
  }
}

void duality(Tally& t) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> order(1, 10);
  int role_switch = 0;
  for (int round = 0; round < 500; ++round) {
    const int min_size = round % 2 ? 2 : 1;
    const int n = round % 2 ? std::max(2, order(rng) % 9) : order(rng);
    Hypergraph h = random_simple_hypergraph(n, 8, 0.4, rng, min_size);
    const std::string id = hypergraph_to_json(h);
    const Hypergraph tr = transversal_hypergraph(h);
    t.expect(transversal_hypergraph(tr).sorted() == h.sorted(), "Tr(Tr(H)) != H for " + id);
    if (h.has_singleton() || h.order() > 8) continue;
    ++role_switch;
    const Role on_h = solve(make_game_spec(h, 1, 1, Role::kMaker)).winner;
    const Role on_tr = solve(make_game_spec(tr, 1, 1, Role::kBreaker)).winner;
    t.expect((on_h == Role::kMaker) == (on_tr == Role::kBreaker), "role switch on " + id);
  }
  t.expect(role_switch >= 200, "only " + std::to_string(role_switch) +
                                   " role-switch instances");
}

void strategies(Tally& t, const std::vector<Graph>& family) {
  parallel_for(family.size(), jobs(), [&](std::size_t i) {
    const Graph& g = family[i];
    const int a1 = a1_by_deletion(g);
    for (int a = 1; a < a1; ++a) {
      GameSpec s = mct_spec(g, a, 1, Player::kAlice);
      const Role w = simulate(s, policy_bob_attack(g), policy_exact(s)).outcome.winner;
      t.expect(w == Role::kMaker, "attack lost to exact Alice with a=" + std::to_string(a) +
                                      " on\n" + serialize_edge_list(g));
    }
  });
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> order(2, 10);
  for (int board = 0; board < 50; ++board) {
    Hypergraph h = random_simple_hypergraph(order(rng), 8, 0.4, rng, 2);
    const Role first = board % 2 ? Role::kMaker : Role::kBreaker;
    GameSpec s = make_game_spec(h, 1, std::max(1, h.max_degree()), first);
    StrategyPolicy pairing = policy_breaker_pairing(s);
    for (std::uint64_t seed = 0; seed < 100; ++seed)
      t.expect(simulate(s, policy_random(seed), pairing).outcome.winner == Role::kBreaker,
               "pairing lost on " + hypergraph_to_json(h) + " seed " + std::to_string(seed));
  }
}

void monotonicity(Tally& t, const std::vector<Graph>& family) {
  parallel_for(family.size(), jobs(), [&](std::size_t i) {
    const Graph& g = family[i];
    const std::string id = serialize_edge_list(g);
    for (Player p : {Player::kAlice, Player::kBob}) {
      bool won = false;
      for (int a = 1; a <= g.order() + 1; ++a) {
        const bool w = alice_wins(g, a, 1, p);
        t.expect(!won || w, "Alice win not monotone at a=" + std::to_string(a) + " on\n" + id);
        won = won || w;
      }
    }
    const auto alice = threshold_exact(g, 1, Player::kAlice).value;
    const auto bob = threshold_exact(g, 1, Player::kBob).value;
    t.expect(alice && (!bob || *bob >= *alice), "Bob-start below Alice-start on\n" + id);
  });
}

}  // namespace

int main() {
  const std::vector<Graph> family = tiny_family();
  struct Criterion {
    int id;
    std::string name;
    std::function<void(Tally&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "torus closed forms vs formula and exact", torus},
      {2, "cylinder table vs domination, formula, exact and printed values", cylinder},
      {3, "grid table vs formula, exact and printed values", grid},
      {4, "triangle-free formulas vs exact on all graphs up to 6 vertices",
       [&](Tally& t) { triangle_free_exhaustive(t, family); }},
      {5, "caterpillars vs formula and exact", caterpillars},
      {6, "realizations and disjoint union bounds", unions},
      {7, "transversal involution and role switch", duality},
      {8, "attack and pairing strategies", [&](Tally& t) { strategies(t, family); }},
      {9, "monotonicity in a and Bob-start >= Alice-start",
       [&](Tally& t) { monotonicity(t, family); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Tally t;
    const auto t0 = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(t);
    } catch (const std::exception& e) {
      error = e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool ok = error.empty() && t.failures.empty();
    failed += !ok;
    std::printf("%s criterion %d: %s (%ld checks, %zu failures, %.1f s)\n",
                ok ? "PASS" : "FAIL", c.id, c.name.c_str(), t.checked.load(),
                t.failures.size(), secs);
    if (!error.empty()) std::printf("  error: %s\n", error.c_str());
    for (std::size_t i = 0; i < t.failures.size() && i < 5; ++i)
      std::printf("  %s\n", t.failures[i].c_str());
    std::fflush(stdout);
  }
  return failed;
}
