#include "mct/policies.hpp"

#include <memory>
#include <unordered_map>

#include "mct/errors.hpp"

namespace mct {

namespace {

int lowest_unplayed(const GameState& state) { return state.unplayed().first(); }

}  // namespace

StrategyPolicy policy_breaker_pairing(const GameSpec& spec) {
  if (spec.board.has_singleton())
    throw DomainError("pairing strategy needs a board without singletons");
  if (spec.breaker_per_turn < spec.board.max_degree())
    throw DomainError("pairing strategy needs breaker_per_turn >= " +
                      std::to_string(spec.board.max_degree()));
  return {"pairing", [](const GameSpec& s, const GameState& state) {
            // Unhit edges through Maker's vertices all pass through his
            // latest pick while the invariant holds.
            for (const auto& e : s.board.edges()) {
              if (!e.intersects(state.maker) || e.intersects(state.breaker))
                continue;
              int v = (e - state.maker).first();
              if (v >= 0) return v;
            }
            return lowest_unplayed(state);
          }};
}

StrategyPolicy policy_alice_deletion(const Graph& g,
                                     const DeletionWitness& witness) {
  require_triangle_free(g, true);
  if (!is_valid_witness(g, witness))
    throw DomainError("deletion witness " + witness.x.to_string() +
                      " is not valid for t = " + std::to_string(witness.t));
  return {"deletion", [g, witness](const GameSpec&, const GameState& state) {
            const VertexSet unplayed = state.unplayed();
            int v = (witness.x & unplayed).first();
            if (v >= 0) return v;
            for (int b : state.maker) {
              v = (g.neighbors(b) & unplayed).first();
              if (v >= 0) return v;
            }
            return unplayed.first();
          }};
}

StrategyPolicy policy_bob_attack(const Graph& g) {
  require_triangle_free(g, false);
  return {"attack", [g](const GameSpec& s, const GameState& state) {
            const VertexSet unplayed = state.unplayed();
            for (const auto& e : s.board.edges()) {
              if (e.intersects(state.breaker)) continue;
              VertexSet missing = e - state.maker;
              if (missing.size() == 1) return missing.first();
            }
            for (int v : unplayed)
              if (g.neighbors(v).intersection_size(unplayed) >
                  s.breaker_per_turn)
                return v;
            return unplayed.first();
          }};
}

StrategyPolicy policy_exact(const GameSpec& spec, std::uint64_t memo_budget) {
  auto solver = std::make_shared<ExactSolver>(spec, memo_budget);
  return {"exact", [solver](const GameSpec&, const GameState& state) {
            if (auto v = solver->winning_pick(state)) return *v;
            return lowest_unplayed(state);
          }};
}

namespace {

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

}  // namespace

StrategyPolicy policy_random(std::uint64_t seed) {
  return {"random", [seed](const GameSpec&, const GameState& state) {
            std::uint64_t h = mix(seed);
            for (int v : state.maker) h = mix(h ^ (std::uint64_t{1} << 32 | v));
            for (int v : state.breaker) h = mix(h ^ (std::uint64_t{2} << 32 | v));
            const auto choices = state.unplayed().members();
            return choices[h % choices.size()];
          }};
}

StrategyPolicy policy_lowest() {
  return {"lowest", [](const GameSpec&, const GameState& state) {
            return lowest_unplayed(state);
          }};
}

namespace {

int checked_pick(const StrategyPolicy& policy, const GameSpec& spec,
                 const GameState& state) {
  const int v = policy.pick(spec, state);
  if (v < 0 || v >= spec.order())
    throw PolicyFault(policy.name, v, "not a board vertex");
  if (state.maker.contains(v) || state.breaker.contains(v))
    throw PolicyFault(policy.name, v, "vertex already played");
  return v;
}

}  // namespace

SimulationResult simulate(const GameSpec& spec,
                          const StrategyPolicy& maker_policy,
                          const StrategyPolicy& breaker_policy) {
  SimulationResult result;
  result.degenerate = first_turn_exhausts_board(spec);
  GameState state = GameState::initial(spec);
  while (true) {
    if (auto w = decided_winner(spec, state)) {
      result.outcome.winner = *w;
      return result;
    }
    const Role mover = to_move(spec, state);
    const auto& policy = mover == Role::kMaker ? maker_policy : breaker_policy;
    const int v = checked_pick(policy, spec, state);
    result.outcome.principal_variation.push_back({mover, v});
    state = apply_pick(spec, state, v);
  }
}

namespace {

class PolicyVerifier {
 public:
  PolicyVerifier(const GameSpec& spec, Role role, const StrategyPolicy& policy,
                 std::uint64_t budget)
      : spec_(spec), role_(role), policy_(policy), budget_(budget) {
    if (spec.order() > kMaxExactBoard)
      throw ResourceError("policy verification supports boards of at most " +
                          std::to_string(kMaxExactBoard) + " vertices");
  }

  bool wins(const GameState& state) {
    if (auto w = decided_winner(spec_, state)) return *w == role_;
    const std::uint64_t key =
        state.maker.to_mask() | (state.breaker.to_mask() << 32);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result;
    if (to_move(spec_, state) == role_) {
      result = wins(apply_pick(spec_, state, checked_pick(policy_, spec_, state)));
    } else {
      result = true;
      for (int v : state.unplayed()) {
        if (!wins(apply_pick(spec_, state, v))) {
          result = false;
          break;
        }
      }
    }
    if (memo_.size() >= budget_)
      throw ResourceError("policy verification exceeded its memo budget");
    memo_.emplace(key, result);
    return result;
  }

  std::vector<Pick> refutation(GameState state) {
    std::vector<Pick> line;
    while (!decided_winner(spec_, state)) {
      const Role mover = to_move(spec_, state);
      int pick;
      if (mover == role_) {
        pick = checked_pick(policy_, spec_, state);
      } else {
        pick = state.unplayed().first();
        for (int v : state.unplayed())
          if (!wins(apply_pick(spec_, state, v))) {
            pick = v;
            break;
          }
      }
      line.push_back({mover, pick});
      state = apply_pick(spec_, state, pick);
    }
    return line;
  }

 private:
  const GameSpec& spec_;
  Role role_;
  const StrategyPolicy& policy_;
  std::uint64_t budget_;
  std::unordered_map<std::uint64_t, bool> memo_;
};

}  // namespace

bool policy_beats_all(const GameSpec& spec, Role role,
                      const StrategyPolicy& policy,
                      std::vector<Pick>* refutation,
                      std::uint64_t memo_budget) {
  PolicyVerifier verifier(spec, role, policy, memo_budget);
  const auto start = GameState::initial(spec);
  const bool ok = verifier.wins(start);
  if (!ok && refutation) *refutation = verifier.refutation(start);
  return ok;
}

}  // namespace mct
