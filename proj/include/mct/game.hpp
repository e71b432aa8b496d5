#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mct/graph.hpp"
#include "mct/hypergraph.hpp"
#include "mct/invariants.hpp"
#include "mct/vertex_set.hpp"

namespace mct {

enum class Role { kMaker, kBreaker };
// MCT players. Bob claims cliques (Maker); Alice wants a clique transversal
// (Breaker).
enum class Player { kAlice, kBob };

constexpr Role role_of(Player p) {
  return p == Player::kAlice ? Role::kBreaker : Role::kMaker;
}
constexpr Player player_of(Role r) {
  return r == Role::kBreaker ? Player::kAlice : Player::kBob;
}
constexpr Role opponent(Role r) {
  return r == Role::kMaker ? Role::kBreaker : Role::kMaker;
}
std::string to_string(Role r);
std::string to_string(Player p);

/// A biased Maker-Breaker game: per-turn pick counts and who opens.
struct GameSpec {
  Hypergraph board;
  int maker_per_turn = 1;
  int breaker_per_turn = 1;
  Role first = Role::kMaker;

  int order() const { return board.order(); }
  int per_turn(Role r) const {
    return r == Role::kMaker ? maker_per_turn : breaker_per_turn;
  }
};

// Throws std::invalid_argument for a non-simple board or a per-turn count
// below one.
GameSpec make_game_spec(Hypergraph board, int maker_per_turn,
                        int breaker_per_turn, Role first);

// The (a,b)-MCT game on g as the (b,a)-biased Maker-Breaker game on its
// clique hypergraph: Bob is Maker with b picks, Alice is Breaker with a.
GameSpec mct_spec(const Graph& g, int a, int b, Player first);

// True when the first mover's quota exceeds the board on move one; such
// games follow the partial-turn rule and are flagged in reports.
bool first_turn_exhausts_board(const GameSpec& spec);

/// Claimed sets. Whose pick is next follows from the total number of picks:
/// turns alternate with the fixed quotas and a turn is cut short only when
/// the board runs out.
struct GameState {
  VertexSet maker;
  VertexSet breaker;

  static GameState initial(const GameSpec& spec) {
    return {VertexSet(spec.order()), VertexSet(spec.order())};
  }
  int picks_made() const { return maker.size() + breaker.size(); }
  VertexSet unplayed() const { return (maker | breaker).complement(); }

  bool operator==(const GameState&) const = default;
};

Role to_move(const GameSpec& spec, const GameState& state);
// Picks the mover still has in the current turn (capped by the board).
int picks_left_in_turn(const GameSpec& spec, const GameState& state);
// The winner once decided: Maker owns a hyperedge, or Breaker meets all.
std::optional<Role> decided_winner(const GameSpec& spec, const GameState& state);

// Unplayed vertices; empty once the game is decided.
VertexSet legal_picks(const GameSpec& spec, const GameState& state);
// Throws std::invalid_argument for a played vertex or a decided game.
GameState apply_pick(const GameSpec& spec, const GameState& state, int v);

struct Pick {
  Role role;
  int vertex;

  bool operator==(const Pick&) const = default;
};

struct Outcome {
  Role winner;
  std::vector<Pick> principal_variation;
};

inline constexpr std::uint64_t kDefaultMemoBudget = std::uint64_t{1} << 26;
inline constexpr int kMaxExactBoard = 32;

struct SolveOptions {
  std::uint64_t memo_budget = kDefaultMemoBudget;
  bool principal_variation = false;
};

/// Optimal-play search over (maker set, breaker set) positions with a
/// per-instance transposition table. Boards are limited to kMaxExactBoard
/// vertices; the table is limited to memo_budget entries (ResourceError).
class ExactSolver {
 public:
  explicit ExactSolver(const GameSpec& spec,
                       std::uint64_t memo_budget = kDefaultMemoBudget);
  ~ExactSolver();
  ExactSolver(ExactSolver&&) noexcept;
  ExactSolver& operator=(ExactSolver&&) noexcept;

  const GameSpec& spec() const;
  Role winner(const GameState& state);
  // A pick for the mover that preserves a forced win, if the mover has one.
  std::optional<int> winning_pick(const GameState& state);
  std::vector<Pick> principal_variation(const GameState& state);
  std::size_t memo_entries() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

Outcome solve(const GameSpec& spec, const SolveOptions& options = {});

// Does Alice win the (a,b)-MCT game on g?
bool alice_wins(const Graph& g, int a, int b, Player first,
                const SolveOptions& options = {});

enum class Method { kExact, kFormula, kClosedForm, kDomination };
std::string to_string(Method m);

struct ThresholdResult {
  std::optional<int> value;  // empty: no bias lets Alice win
  Method method = Method::kExact;
  std::optional<DeletionWitness> witness;
  std::vector<Pick> trace;  // an optimal line of the game at `value`
  std::string note;
  bool degenerate = false;
};

// Smallest a such that Alice wins the (a,l)-MCT game with the given opener,
// found by scanning a = 1, 2, ... up to max(Delta(H_G), n(G)).
ThresholdResult threshold_exact(const Graph& g, int l, Player start,
                                const SolveOptions& options = {});

}  // namespace mct
