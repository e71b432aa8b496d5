#include "mct/game.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <utility>

#include "mct/errors.hpp"

namespace mct {

std::string to_string(Role r) {
  return r == Role::kMaker ? "maker" : "breaker";
}

std::string to_string(Player p) {
  return p == Player::kAlice ? "alice" : "bob";
}

std::string to_string(Method m) {
  switch (m) {
    case Method::kExact:
      return "exact";
    case Method::kFormula:
      return "formula";
    case Method::kClosedForm:
      return "closed_form";
    case Method::kDomination:
      return "domination";
  }
  return "unknown";
}

GameSpec make_game_spec(Hypergraph board, int maker_per_turn,
                        int breaker_per_turn, Role first) {
  if (maker_per_turn < 1 || breaker_per_turn < 1)
    throw std::invalid_argument("per-turn pick counts must be positive");
  if (!board.is_simple())
    throw std::invalid_argument("game board must be a simple hypergraph");
  return GameSpec{std::move(board), maker_per_turn, breaker_per_turn, first};
}

GameSpec mct_spec(const Graph& g, int a, int b, Player first) {
  if (a < 1) throw std::invalid_argument("Alice's bias a must be positive");
  if (b < 1) throw std::invalid_argument("Bob's bias b must be positive");
  return make_game_spec(clique_hypergraph(g), b, a, role_of(first));
}

bool first_turn_exhausts_board(const GameSpec& spec) {
  return spec.per_turn(spec.first) > spec.order();
}

namespace {

struct TurnSlot {
  Role mover;
  int left;
};

// Mover of pick number `picks` (0-based) and how many picks remain in that
// turn, ignoring the board size.
TurnSlot slot_at(const GameSpec& spec, int picks) {
  const int opening = spec.per_turn(spec.first);
  const int cycle = opening + spec.per_turn(opponent(spec.first));
  const int pos = picks % cycle;
  if (pos < opening) return {spec.first, opening - pos};
  return {opponent(spec.first), cycle - pos};
}

}  // namespace

Role to_move(const GameSpec& spec, const GameState& state) {
  return slot_at(spec, state.picks_made()).mover;
}

int picks_left_in_turn(const GameSpec& spec, const GameState& state) {
  return std::min(slot_at(spec, state.picks_made()).left,
                  spec.order() - state.picks_made());
}

std::optional<Role> decided_winner(const GameSpec& spec,
                                   const GameState& state) {
  bool all_hit = true;
  for (const auto& e : spec.board.edges()) {
    if (e.is_subset_of(state.maker)) return Role::kMaker;
    if (!e.intersects(state.breaker)) all_hit = false;
  }
  if (all_hit) return Role::kBreaker;
  return std::nullopt;
}

VertexSet legal_picks(const GameSpec& spec, const GameState& state) {
  if (decided_winner(spec, state)) return VertexSet(spec.order());
  return state.unplayed();
}

GameState apply_pick(const GameSpec& spec, const GameState& state, int v) {
  if (v < 0 || v >= spec.order())
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is not on the board");
  if (decided_winner(spec, state))
    throw std::invalid_argument("game is already decided");
  if (state.maker.contains(v) || state.breaker.contains(v))
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is already played");
  GameState next = state;
  if (to_move(spec, state) == Role::kMaker)
    next.maker.insert(v);
  else
    next.breaker.insert(v);
  return next;
}

namespace {

// Open-addressing table keyed by (maker mask | breaker mask << 32).
class MemoTable {
 public:
  explicit MemoTable(std::uint64_t budget) : budget_(budget) { rehash(1024); }

  // -1 when absent, else 0/1.
  int find(std::uint64_t key) const {
    std::size_t i = hash(key) & mask_;
    while (true) {
      if (keys_[i] == kEmpty) return -1;
      if (keys_[i] == key) return values_[i];
      i = (i + 1) & mask_;
    }
  }

  void insert(std::uint64_t key, bool value) {
    if (count_ >= budget_)
      throw ResourceError("transposition table exceeded " +
                          std::to_string(budget_) + " entries");
    if ((count_ + 1) * 4 > keys_.size() * 3) rehash(keys_.size() * 2);
    place(key, value);
  }

  std::size_t size() const { return count_; }

 private:
  static constexpr std::uint64_t kEmpty = ~std::uint64_t{0};

  static std::size_t hash(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }

  void place(std::uint64_t key, bool value) {
    std::size_t i = hash(key) & mask_;
    while (keys_[i] != kEmpty && keys_[i] != key) i = (i + 1) & mask_;
    if (keys_[i] == kEmpty) ++count_;
    keys_[i] = key;
    values_[i] = value ? 1 : 0;
  }

  void rehash(std::size_t capacity) {
    std::vector<std::uint64_t> old_keys = std::move(keys_);
    std::vector<std::uint8_t> old_values = std::move(values_);
    keys_.assign(capacity, kEmpty);
    values_.assign(capacity, 0);
    mask_ = capacity - 1;
    count_ = 0;
    for (std::size_t i = 0; i < old_keys.size(); ++i)
      if (old_keys[i] != kEmpty) place(old_keys[i], old_values[i] != 0);
  }

  std::uint64_t budget_;
  std::vector<std::uint64_t> keys_;
  std::vector<std::uint8_t> values_;
  std::size_t mask_ = 0;
  std::size_t count_ = 0;
};

}  // namespace

struct ExactSolver::Impl {
  GameSpec spec;
  int n;
  std::uint64_t full;
  std::vector<std::uint64_t> edges;
  MemoTable memo;

  Impl(const GameSpec& s, std::uint64_t budget)
      : spec(s), n(s.order()), memo(budget) {
    if (n > kMaxExactBoard)
      throw ResourceError("exact search supports boards of at most " +
                          std::to_string(kMaxExactBoard) + " vertices, got " +
                          std::to_string(n));
    full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    for (const auto& e : spec.board.edges()) edges.push_back(e.to_mask());
  }

  static std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

  std::optional<Role> decided(std::uint64_t maker, std::uint64_t breaker) const {
    bool all_hit = true;
    for (auto e : edges) {
      if ((e & ~maker) == 0) return Role::kMaker;
      if ((e & breaker) == 0) all_hit = false;
    }
    if (all_hit) return Role::kBreaker;
    return std::nullopt;
  }

  // Candidate picks in search order: vertices of unhit edges, weighted by
  // how close those edges are to completion.
  std::vector<int> ordered(std::uint64_t maker, std::uint64_t breaker,
                           std::uint64_t allowed) const {
    int score[64] = {};
    for (auto e : edges) {
      if (e & breaker) continue;
      const int missing = std::popcount(e & ~maker);
      const int weight = 1 << (20 - std::min(missing, 20));
      for (std::uint64_t m = e & allowed; m; m &= m - 1)
        score[std::countr_zero(m)] += weight;
    }
    std::vector<int> out;
    for (std::uint64_t m = allowed; m; m &= m - 1)
      out.push_back(std::countr_zero(m));
    std::stable_sort(out.begin(), out.end(),
                     [&](int a, int b) { return score[a] > score[b]; });
    return out;
  }

  // Maker wins from a position that is not yet decided.
  bool maker_wins(std::uint64_t maker, std::uint64_t breaker) {
    const std::uint64_t key = maker | (breaker << 32);
    if (int hit = memo.find(key); hit >= 0) return hit != 0;

    const std::uint64_t unplayed = full & ~(maker | breaker);
    const int remaining = std::popcount(unplayed);
    const auto slot = slot_at(spec, n - remaining);
    const int left = std::min(slot.left, remaining);

    std::uint64_t live_union = 0;
    int live_count = 0;
    for (auto e : edges) {
      if (e & breaker) continue;
      live_union |= e;
      ++live_count;
    }
    live_union &= unplayed;

    std::uint64_t allowed = live_union;
    std::optional<bool> settled;
    if (slot.mover == Role::kMaker) {
      for (auto e : edges)
        if (!(e & breaker) && std::popcount(e & ~maker) <= left) {
          settled = true;
          break;
        }
    } else if (live_count <= left || remaining <= left) {
      settled = false;
    } else {
      // Edges Maker could finish in his next turn must all be hit now.
      std::uint64_t urgent = 0;
      std::uint64_t packed = 0;
      int disjoint = 0;
      for (auto e : edges) {
        if (e & breaker) continue;
        const std::uint64_t missing = e & ~maker;
        if (std::popcount(missing) > spec.maker_per_turn) continue;
        urgent |= missing;
        if (!(missing & packed)) {
          packed |= missing;
          ++disjoint;
        }
      }
      if (disjoint > left) settled = true;
      else if (urgent) allowed = urgent;
    }

    bool result;
    if (settled) {
      result = *settled;
    } else if (slot.mover == Role::kMaker) {
      result = false;
      for (int v : ordered(maker, breaker, allowed)) {
        const std::uint64_t next = maker | bit(v);
        if (completes(next, breaker, v) || maker_wins(next, breaker)) {
          result = true;
          break;
        }
      }
    } else {
      result = true;
      for (int v : ordered(maker, breaker, allowed)) {
        const std::uint64_t next = breaker | bit(v);
        if (all_hit(next) || !maker_wins(maker, next)) {
          result = false;
          break;
        }
      }
    }
    memo.insert(key, result);
    return result;
  }

  bool completes(std::uint64_t maker, std::uint64_t breaker, int v) const {
    for (auto e : edges)
      if ((e & bit(v)) && !(e & breaker) && (e & ~maker) == 0) return true;
    return false;
  }

  bool all_hit(std::uint64_t breaker) const {
    for (auto e : edges)
      if (!(e & breaker)) return false;
    return true;
  }

  Role winner(std::uint64_t maker, std::uint64_t breaker) {
    if (auto d = decided(maker, breaker)) return *d;
    return maker_wins(maker, breaker) ? Role::kMaker : Role::kBreaker;
  }

  std::optional<int> winning_pick(std::uint64_t maker, std::uint64_t breaker) {
    if (decided(maker, breaker)) return std::nullopt;
    const std::uint64_t unplayed = full & ~(maker | breaker);
    const Role mover = slot_at(spec, n - std::popcount(unplayed)).mover;
    for (int v : ordered(maker, breaker, unplayed)) {
      Role w = mover == Role::kMaker ? winner(maker | bit(v), breaker)
                                     : winner(maker, breaker | bit(v));
      if (w == mover) return v;
    }
    return std::nullopt;
  }
};

ExactSolver::ExactSolver(const GameSpec& spec, std::uint64_t memo_budget)
    : impl_(std::make_unique<Impl>(spec, memo_budget)) {}
ExactSolver::~ExactSolver() = default;
ExactSolver::ExactSolver(ExactSolver&&) noexcept = default;
ExactSolver& ExactSolver::operator=(ExactSolver&&) noexcept = default;

const GameSpec& ExactSolver::spec() const { return impl_->spec; }

Role ExactSolver::winner(const GameState& state) {
  return impl_->winner(state.maker.to_mask(), state.breaker.to_mask());
}

std::optional<int> ExactSolver::winning_pick(const GameState& state) {
  return impl_->winning_pick(state.maker.to_mask(), state.breaker.to_mask());
}

std::vector<Pick> ExactSolver::principal_variation(const GameState& state) {
  std::vector<Pick> line;
  GameState s = state;
  const auto& spec = impl_->spec;
  while (!decided_winner(spec, s)) {
    const Role mover = to_move(spec, s);
    auto v = winning_pick(s);
    // The loser has no saving pick; show its first candidate.
    int pick = v ? *v : s.unplayed().first();
    line.push_back({mover, pick});
    s = apply_pick(spec, s, pick);
  }
  return line;
}

std::size_t ExactSolver::memo_entries() const { return impl_->memo.size(); }

Outcome solve(const GameSpec& spec, const SolveOptions& options) {
  ExactSolver solver(spec, options.memo_budget);
  const auto start = GameState::initial(spec);
  Outcome out{solver.winner(start), {}};
  if (options.principal_variation)
    out.principal_variation = solver.principal_variation(start);
  return out;
}

bool alice_wins(const Graph& g, int a, int b, Player first,
                const SolveOptions& options) {
  return solve(mct_spec(g, a, b, first), options).winner == Role::kBreaker;
}

ThresholdResult threshold_exact(const Graph& g, int l, Player start,
                                const SolveOptions& options) {
  if (l < 1) throw std::invalid_argument("Bob's bias must be positive");
  const Hypergraph board = clique_hypergraph(g);
  const int cap = std::max({board.max_degree(), g.order(), 1});
  ThresholdResult result;
  result.method = Method::kExact;
  for (int a = 1; a <= cap; ++a) {
    GameSpec spec = make_game_spec(board, l, a, role_of(start));
    ExactSolver solver(spec, options.memo_budget);
    const auto initial = GameState::initial(spec);
    if (solver.winner(initial) == Role::kBreaker) {
      result.value = a;
      result.degenerate = first_turn_exhausts_board(spec);
      if (options.principal_variation)
        result.trace = solver.principal_variation(initial);
      result.note = a == 1 ? "Alice wins at a = 1"
                           : "Alice wins at a = " + std::to_string(a) +
                                 ", Bob wins at a = " + std::to_string(a - 1);
      return result;
    }
  }
  // With a >= n(G) Alice claims every unplayed vertex in her first turn, so
  // larger biases change nothing: Bob wins before she moves.
  result.note = "Bob wins for every a up to " + std::to_string(cap) +
                "; Alice's first turn already claims the whole remaining board";
  return result;
}

}  // namespace mct
