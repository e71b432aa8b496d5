#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "mct/game.hpp"
#include "mct/graph.hpp"
#include "mct/invariants.hpp"

namespace mct {

/// Deterministic move rule: the pick a player makes in a position. The
/// returned vertex must be unplayed; simulate() checks that.
struct StrategyPolicy {
  std::string name;
  std::function<int(const GameSpec&, const GameState&)> pick;
};

// Breaker answers Maker's pick v with an unplayed vertex from each hyperedge
// through v that Breaker has not yet hit, then pads with the lowest
// unplayed index. Requires breaker_per_turn >= Delta(board) and no singleton
// hyperedge (DomainError otherwise).
StrategyPolicy policy_breaker_pairing(const GameSpec& spec);

// Alice claims the witness set X first, then every unplayed neighbour of
// each of Bob's vertices, then the lowest unplayed index. g must be
// triangle-free and isolate-free and the witness valid for g (DomainError
// otherwise). The strategy only guarantees a win when a >= witness.t.
StrategyPolicy policy_alice_deletion(const Graph& g,
                                     const DeletionWitness& witness);

// Bob completes an edge when he can; otherwise he takes the lowest vertex
// with more than a unplayed neighbours (a = Alice's bias); otherwise the
// lowest unplayed vertex. Requires g triangle-free.
StrategyPolicy policy_bob_attack(const Graph& g);

// Optimal play for whichever side is to move, from the exact solver; the
// lowest unplayed vertex when the position is lost.
StrategyPolicy policy_exact(const GameSpec& spec,
                            std::uint64_t memo_budget = kDefaultMemoBudget);

// Uniform choice among unplayed vertices, keyed by (seed, position) so that
// replays are reproducible.
StrategyPolicy policy_random(std::uint64_t seed);

StrategyPolicy policy_lowest();

struct SimulationResult {
  Outcome outcome;  // principal_variation holds the full transcript
  bool degenerate = false;
};

// Plays the game to the end. Throws PolicyFault on an illegal pick.
SimulationResult simulate(const GameSpec& spec,
                          const StrategyPolicy& maker_policy,
                          const StrategyPolicy& breaker_policy);

// True when `policy`, playing `role`, wins against every sequence of
// opponent picks. On failure `refutation` (if given) receives a losing line.
bool policy_beats_all(const GameSpec& spec, Role role,
                      const StrategyPolicy& policy,
                      std::vector<Pick>* refutation = nullptr,
                      std::uint64_t memo_budget = kDefaultMemoBudget);

}  // namespace mct
