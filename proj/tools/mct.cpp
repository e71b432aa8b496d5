// mct: thresholds, tables, cross-checks, enumeration, simulation and a
// terminal play loop for the (a,b) clique transversal game.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mct/enumerate.hpp"
#include "mct/errors.hpp"
#include "mct/harness.hpp"
#include "mct/policies.hpp"
#include "mct/report.hpp"

using namespace mct;

namespace {

enum Exit { kOk = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct SourceArgs {
  std::vector<std::string> family;
  std::string edge_list;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family,
                              "NAME N [M]: torus, cylinder, grid, caterpillar "
                              "(two sizes); path, cycle, complete (one)")
                  ->expected(2, 3);
    auto* e = cmd->add_option("--edge-list", edge_list, "edge-list file");
    f->excludes(e);
  }

  GraphSource load() const {
    if (!family.empty()) {
      const Family fam = parse_family(family[0]);
      const int want = family_takes_two(fam) ? 3 : 2;
      if (static_cast<int>(family.size()) != want)
        throw UsageError("--family " + family[0] + " takes " +
                         std::to_string(want - 1) + " size argument(s)");
      auto size = [](const std::string& s) {
        try {
          std::size_t used = 0;
          int v = std::stoi(s, &used);
          if (used == s.size()) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("size '" + s + "' is not an integer");
      };
      const int n = size(family[1]);
      const int m = want == 3 ? size(family[2]) : 0;
      return family_source(fam, n, m);
    }
    if (edge_list.empty()) throw UsageError("give --family or --edge-list");
    std::ifstream in(edge_list);
    if (!in) throw UsageError("cannot read " + edge_list);
    std::stringstream text;
    text << in.rdbuf();
    return {parse_edge_list(text.str()), std::nullopt, 0, 0};
  }
};

Player parse_player(const std::string& s) {
  if (s == "alice") return Player::kAlice;
  if (s == "bob") return Player::kBob;
  throw UsageError("player must be alice or bob, got '" + s + "'");
}

std::pair<int, int> parse_range(const std::string& s) {
  auto dots = s.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(s);
      return {v, v};
    }
    return {std::stoi(s.substr(0, dots)), std::stoi(s.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("range '" + s + "' is not LO..HI");
  }
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string budget_help() {
  return std::string("memo entries per solve (default 2^26, or $") + kBudgetEnv + ")";
}

// ---------------------------------------------------------------------------

struct ThresholdCmd {
  SourceArgs source;
  int l = 1;
  std::string start = "alice";
  std::string method = "auto";
  bool trace = false;
  std::uint64_t budget = 0;

  int run() const {
    Budgets b = budgets_from_env();
    if (budget) b.memo = budget;
    const GraphSource src = source.load();
    const auto r = compute_threshold(src, l, parse_player(start),
                                     parse_method_choice(method), b, trace);
    Json out = threshold_to_json(r, src.graph);
    out["start"] = start;
    out["l"] = l;
    std::cout << out.dump(2) << "\n";
    return kOk;
  }
};

struct TableCmd {
  std::string family;
  std::string n_range, m_range;
  std::string format = "csv";
  std::string out_path, meta_path;
  int jobs = 1;
  int exact_max = Budgets{}.exact_max_vertices;
  bool no_exact = false, no_formula = false, no_domination = false;
  std::uint64_t budget = 0;

  int run() const {
    TableOptions opt;
    opt.family = parse_family(family);
    std::tie(opt.n_lo, opt.n_hi) = parse_range(n_range);
    std::tie(opt.m_lo, opt.m_hi) = parse_range(m_range);
    opt.budgets = budgets_from_env();
    if (budget) opt.budgets.memo = budget;
    opt.budgets.exact_max_vertices = exact_max;
    opt.exact = !no_exact;
    opt.formula = !no_formula;
    opt.domination = !no_domination;
    opt.jobs = jobs;
    if (format != "csv" && format != "json")
      throw UsageError("--format must be csv or json");

    const auto t0 = std::chrono::steady_clock::now();
    const TableReport table = build_table(opt);
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();

    const std::string body =
        format == "csv" ? table_csv(table) : table_json(table).dump(2) + "\n";
    if (out_path.empty()) {
      std::cout << body;
    } else {
      write_file(out_path, body);
    }
    if (!meta_path.empty()) {
      Json meta = table_meta_json(table);
      meta["command"] = "table --family " + family + " --n " + n_range + " --m " + m_range;
      meta["seconds"] = seconds;
      write_file(meta_path, meta.dump(2) + "\n");
    }
    for (const auto& e : table.range_errors) std::cerr << "range error " << e << "\n";
    for (const auto& c : table.cells) {
      for (const auto& d : c.disagreements)
        std::cerr << "mismatch (" << c.n << "," << c.m << ") " << d << "\n";
      for (const auto& d : c.budget_failures)
        std::cerr << "budget (" << c.n << "," << c.m << ") " << d << "\n";
    }
    if (table.disagreement_count()) return kMismatch;
    if (table.budget_failure_count()) return kBudget;
    if (!table.range_errors.empty()) return kUsage;
    return kOk;
  }
};

struct CrosscheckCmd {
  std::string scope;
  int max_n = 6;
  int count = 500;
  std::uint64_t seed = 1;
  int jobs = 1;
  std::string report_path;
  bool verbose = false;
  std::uint64_t budget = 0;

  int run() const {
    Budgets b = budgets_from_env();
    if (budget) b.memo = budget;
    std::vector<std::string> scopes;
    if (scope == "all") {
      scopes = {"tiny-exhaustive", "families", "hypergraph-duality"};
    } else {
      scopes = {scope};
    }
    Json reports = Json::array();
    bool mismatch = false, over_budget = false;
    for (const auto& s : scopes) {
      RunReport r;
      if (s == "tiny-exhaustive") {
        r = crosscheck_tiny_exhaustive(max_n, b, jobs);
      } else if (s == "families") {
        r = crosscheck_families(b, jobs);
      } else if (s == "hypergraph-duality") {
        r = crosscheck_hypergraph_duality(count, seed, b);
      } else {
        throw UsageError("unknown scope '" + s +
                         "' (tiny-exhaustive, families, hypergraph-duality, all)");
      }
      for (const auto& item : r.items)
        if (verbose || item.status != CheckStatus::kOk)
          std::cout << to_string(item.status) << "  " << item.name
                    << (item.detail.empty() ? "" : "  " + item.detail) << "\n";
      std::cout << s << ": checked " << r.items.size() << ", mismatches "
                << r.count(CheckStatus::kMismatch) << ", budget failures "
                << r.count(CheckStatus::kBudget) << ", " << r.seconds << " s\n";
      mismatch = mismatch || r.count(CheckStatus::kMismatch) > 0;
      over_budget = over_budget || r.count(CheckStatus::kBudget) > 0;
      reports.push_back(run_report_json(r, "crosscheck --scope " + s));
    }
    if (!report_path.empty()) write_file(report_path, reports.dump(2) + "\n");
    if (mismatch) return kMismatch;
    if (over_budget) return kBudget;
    return kOk;
  }
};

struct EnumerateCmd {
  int n = 0;
  std::string filter = "all";
  bool count_only = false;

  int run() const {
    const GraphFilter f = parse_graph_filter(filter);
    std::uint64_t index = 0;
    const auto total = for_each_labeled_graph(n, f, [&](const Graph& g) {
      if (count_only) return;
      std::cout << "# graph " << index++ << "\n" << serialize_edge_list(g) << "\n";
    });
    if (count_only) {
      std::cout << total << "\n";
    } else {
      std::cerr << "count " << total << "\n";
    }
    return kOk;
  }
};

// Alice is Breaker, Bob is Maker.
StrategyPolicy alice_policy(const std::string& name, const Graph& g,
                            const GameSpec& spec, std::uint64_t seed,
                            std::uint64_t budget) {
  if (name == "pairing") return policy_breaker_pairing(spec);
  if (name == "deletion") {
    const int t = a1_by_deletion(g);
    return policy_alice_deletion(g, *exists_deletion_set(g, t));
  }
  if (name == "exact") return policy_exact(spec, budget);
  if (name == "random") return policy_random(seed);
  if (name == "lowest") return policy_lowest();
  throw UsageError("Alice policy must be pairing, deletion, exact, random or lowest");
}

StrategyPolicy bob_policy(const std::string& name, const Graph& g,
                          const GameSpec& spec, std::uint64_t seed,
                          std::uint64_t budget) {
  if (name == "attack") return policy_bob_attack(g);
  if (name == "exact") return policy_exact(spec, budget);
  if (name == "random") return policy_random(seed);
  if (name == "lowest") return policy_lowest();
  throw UsageError("Bob policy must be attack, exact, random or lowest");
}

Json game_json(const GameSpec& spec, const Graph& g, const SimulationResult& r,
               const std::string& alice, const std::string& bob, Player start) {
  return {{"a", spec.breaker_per_turn},
          {"b", spec.maker_per_turn},
          {"start", to_string(start)},
          {"alice_policy", alice},
          {"bob_policy", bob},
          {"winner", to_string(player_of(r.outcome.winner))},
          {"degenerate", r.degenerate},
          {"transcript", transcript_to_json(r.outcome.principal_variation, g)}};
}

struct SimulateCmd {
  SourceArgs source;
  int a = 1, b = 1;
  std::string start = "alice";
  std::string alice = "exact", bob = "exact";
  std::uint64_t seed = 0;
  int games = 1;
  std::string out_path;
  std::uint64_t budget = 0;

  int run() const {
    std::uint64_t memo = budgets_from_env().memo;
    if (budget) memo = budget;
    if (games < 1) throw UsageError("--games must be positive");
    const GraphSource src = source.load();
    const Player first = parse_player(start);
    const GameSpec spec = mct_spec(src.graph, a, b, first);
    Json out;
    if (games == 1) {
      const auto r = simulate(spec, bob_policy(bob, src.graph, spec, seed, memo),
                              alice_policy(alice, src.graph, spec, seed, memo));
      out = game_json(spec, src.graph, r, alice, bob, first);
    } else {
      int alice_wins = 0;
      Json results = Json::array();
      for (int i = 0; i < games; ++i) {
        const std::uint64_t s = seed + static_cast<std::uint64_t>(i);
        const auto r = simulate(spec, bob_policy(bob, src.graph, spec, s, memo),
                                alice_policy(alice, src.graph, spec, s, memo));
        if (r.outcome.winner == Role::kBreaker) ++alice_wins;
        results.push_back({{"seed", s}, {"winner", to_string(player_of(r.outcome.winner))}});
      }
      out = {{"a", a},          {"b", b},
             {"start", start},  {"alice_policy", alice},
             {"bob_policy", bob}, {"games", games},
             {"alice_wins", alice_wins}, {"bob_wins", games - alice_wins},
             {"results", results}};
    }
    if (out_path.empty()) {
      std::cout << out.dump(2) << "\n";
    } else {
      write_file(out_path, out.dump(2) + "\n");
    }
    return kOk;
  }
};

// ---------------------------------------------------------------------------

inline constexpr int kPlayExactLimit = 14;

struct PlayCmd {
  SourceArgs source;
  int a = 1, b = 1;
  std::string human = "alice";
  std::string start = "alice";
  std::string transcript_path = "play_transcript.json";
  std::uint64_t budget = 0;

  int run() const {
    std::uint64_t memo = budgets_from_env().memo;
    if (budget) memo = budget;
    const GraphSource src = source.load();
    const Graph& g = src.graph;
    const Player human_player = parse_player(human);
    const Player first = parse_player(start);
    const GameSpec spec = mct_spec(g, a, b, first);
    const Role human_role = role_of(human_player);

    StrategyPolicy engine = pick_engine(spec, g, human_role, memo);
    std::optional<ExactSolver> hint_solver;
    if (g.order() <= kPlayExactLimit) hint_solver.emplace(spec, memo);

    std::cout << "MCT game on " << g.order() << " vertices: Alice a=" << a
              << ", Bob b=" << b << ", " << start << " starts. You are " << human
              << "; engine plays " << engine.name << ".\n";
    std::cout << "Commands: a vertex label or index, 'hint', 'legal', 'quit'.\n";

    GameState state = GameState::initial(spec);
    std::vector<Pick> picks;
    std::optional<Role> winner;
    std::string line;
    while (true) {
      if ((winner = decided_winner(spec, state))) break;
      const Role mover = to_move(spec, state);
      if (mover != human_role) {
        const int v = engine.pick(spec, state);
        picks.push_back({mover, v});
        state = apply_pick(spec, state, v);
        std::cout << to_string(player_of(mover)) << " (engine) picks " << g.label(v)
                  << "\n";
        continue;
      }
      std::cout << to_string(human_player) << ", pick "
                << picks_left_in_turn(spec, state) << " more this turn> " << std::flush;
      if (!std::getline(std::cin, line)) break;
      line = trim(line);
      if (line.empty()) continue;
      if (line == "quit") break;
      if (line == "legal") {
        for (int v : legal_picks(spec, state)) std::cout << g.label(v) << " ";
        std::cout << "\n";
        continue;
      }
      if (line == "hint") {
        print_hint(g, state, hint_solver);
        continue;
      }
      const auto v = resolve_vertex(g, line);
      if (!v || !legal_picks(spec, state).contains(*v)) {
        std::cout << "illegal pick '" << line << "'; try 'legal'\n";
        continue;
      }
      picks.push_back({mover, *v});
      state = apply_pick(spec, state, *v);
    }

    Json out = {{"a", a},
                {"b", b},
                {"start", start},
                {"human", human},
                {"engine", engine.name},
                {"winner", winner ? Json(to_string(player_of(*winner))) : Json(nullptr)},
                {"degenerate", first_turn_exhausts_board(spec)},
                {"transcript", transcript_to_json(picks, g)}};
    write_file(transcript_path, out.dump(2) + "\n");
    if (winner) {
      std::cout << to_string(player_of(*winner))
                << (player_of(*winner) == human_player ? " (you) wins.\n" : " (engine) wins.\n");
    } else {
      std::cout << "game left unfinished.\n";
    }
    std::cout << "transcript saved to " << transcript_path << "\n";
    return kOk;
  }

 private:
  static std::string trim(const std::string& s) {
    const auto lo = s.find_first_not_of(" \t\r");
    if (lo == std::string::npos) return "";
    return s.substr(lo, s.find_last_not_of(" \t\r") - lo + 1);
  }

  static std::optional<int> resolve_vertex(const Graph& g, const std::string& s) {
    if (auto v = g.find_label(s)) return v;
    try {
      std::size_t used = 0;
      const int v = std::stoi(s, &used);
      if (used == s.size() && v >= 0 && v < g.order()) return v;
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }

  static StrategyPolicy pick_engine(const GameSpec& spec, const Graph& g,
                                    Role human_role, std::uint64_t memo) {
    if (g.order() <= kPlayExactLimit) return policy_exact(spec, memo);
    std::string fallback;
    StrategyPolicy p = policy_lowest();
    if (human_role == Role::kMaker) {
      if (!spec.board.has_singleton() &&
          spec.breaker_per_turn >= spec.board.max_degree()) {
        p = policy_breaker_pairing(spec);
      } else if (!find_triangle(g) && inspect(g).isolated.empty()) {
        p = policy_alice_deletion(g, *exists_deletion_set(g, a1_by_deletion(g)));
      }
    } else if (!find_triangle(g)) {
      p = policy_bob_attack(g);
    }
    std::cout << "note: board has " << g.order() << " vertices (> " << kPlayExactLimit
              << "); the engine uses the " << p.name
              << " policy instead of exact play.\n";
    return p;
  }

  static void print_hint(const Graph& g, const GameState& state,
                         std::optional<ExactSolver>& solver) {
    if (!solver) {
      std::cout << "hint: no exact hints on boards above " << kPlayExactLimit
                << " vertices\n";
      return;
    }
    if (auto v = solver->winning_pick(state)) {
      std::cout << "hint: " << g.label(*v) << " keeps a forced win\n";
    } else {
      std::cout << "hint: no forced win from here; " << g.label(state.unplayed().first())
                << " is as good as any\n";
    }
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver and verification workbench for the (a,b) clique "
               "transversal game"};
  app.require_subcommand(1);
  std::function<int()> action;

  ThresholdCmd threshold;
  auto* th = app.add_subcommand("threshold", "least a for which Alice wins");
  threshold.source.attach(th);
  th->add_option("--l", threshold.l, "Bob's bias")->capture_default_str();
  th->add_option("--start", threshold.start, "alice or bob")->capture_default_str();
  th->add_option("--method", threshold.method, "exact, formula, closed or auto")
      ->capture_default_str();
  th->add_flag("--trace", threshold.trace, "include an optimal line (exact only)");
  th->add_option("--budget", threshold.budget, budget_help());
  th->callback([&] { action = [&] { return threshold.run(); }; });

  TableCmd table;
  auto* tb = app.add_subcommand("table", "a1 and a1' over a family grid");
  tb->add_option("--family", table.family, "torus, cylinder or grid")->required();
  tb->add_option("--n", table.n_range, "LO..HI")->required();
  tb->add_option("--m", table.m_range, "LO..HI")->required();
  tb->add_option("--format", table.format, "csv or json")->capture_default_str();
  tb->add_option("--out", table.out_path, "write the table here instead of stdout");
  tb->add_option("--meta", table.meta_path, "sidecar JSON with cases and timing");
  tb->add_option("--jobs", table.jobs, "worker threads")->capture_default_str();
  tb->add_option("--exact-max", table.exact_max, "largest board for exact solves")
      ->capture_default_str();
  tb->add_flag("--no-exact", table.no_exact);
  tb->add_flag("--no-formula", table.no_formula);
  tb->add_flag("--no-domination", table.no_domination);
  tb->add_option("--budget", table.budget, budget_help());
  tb->callback([&] { action = [&] { return table.run(); }; });

  CrosscheckCmd cross;
  auto* cc = app.add_subcommand("crosscheck", "run a verification suite");
  cc->add_option("--scope", cross.scope,
                 "tiny-exhaustive, families, hypergraph-duality or all")
      ->required();
  cc->add_option("--max-n", cross.max_n, "tiny-exhaustive: largest order")
      ->capture_default_str();
  cc->add_option("--count", cross.count, "hypergraph-duality: instances")
      ->capture_default_str();
  cc->add_option("--seed", cross.seed, "hypergraph-duality: RNG seed")
      ->capture_default_str();
  cc->add_option("--jobs", cross.jobs, "worker threads")->capture_default_str();
  cc->add_option("--report", cross.report_path, "write the JSON report here");
  cc->add_flag("--verbose", cross.verbose, "list passing items too");
  cc->add_option("--budget", cross.budget, budget_help());
  cc->callback([&] { action = [&] { return cross.run(); }; });

  EnumerateCmd en;
  auto* enc = app.add_subcommand("enumerate", "labeled graphs on n <= 7 vertices");
  enc->add_option("--n", en.n, "order")->required();
  enc->add_option("--filter", en.filter,
                  "all, triangle-free, isolate-free (comma-joined)")
      ->capture_default_str();
  enc->add_flag("--count-only", en.count_only);
  enc->callback([&] { action = [&] { return en.run(); }; });

  SimulateCmd sim;
  auto* sm = app.add_subcommand("simulate", "play two policies against each other");
  sim.source.attach(sm);
  sm->add_option("--a", sim.a, "Alice's bias")->capture_default_str();
  sm->add_option("--b", sim.b, "Bob's bias")->capture_default_str();
  sm->add_option("--start", sim.start, "alice or bob")->capture_default_str();
  sm->add_option("--alice", sim.alice, "pairing, deletion, exact, random, lowest")
      ->capture_default_str();
  sm->add_option("--bob", sim.bob, "attack, exact, random, lowest")
      ->capture_default_str();
  sm->add_option("--seed", sim.seed, "seed for random policies")->capture_default_str();
  sm->add_option("--games", sim.games, "games with seeds seed, seed+1, ...")
      ->capture_default_str();
  sm->add_option("--out", sim.out_path, "write JSON here instead of stdout");
  sm->add_option("--budget", sim.budget, budget_help());
  sm->callback([&] { action = [&] { return sim.run(); }; });

  PlayCmd play;
  auto* pl = app.add_subcommand("play", "interactive game on stdin");
  play.source.attach(pl);
  pl->add_option("--a", play.a, "Alice's bias")->capture_default_str();
  pl->add_option("--b", play.b, "Bob's bias")->capture_default_str();
  pl->add_option("--human", play.human, "alice or bob")->capture_default_str();
  pl->add_option("--start", play.start, "alice or bob")->capture_default_str();
  pl->add_option("--transcript", play.transcript_path)->capture_default_str();
  pl->add_option("--budget", play.budget, budget_help());
  pl->callback([&] { action = [&] { return play.run(); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }
  try {
    return action();
  } catch (const ResourceError& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return kBudget;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  } catch (const PolicyFault& e) {
    std::cerr << "policy fault: " << e.what() << "\n";
    return kMismatch;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
}
