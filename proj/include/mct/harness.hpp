#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mct/closed_forms.hpp"
#include "mct/game.hpp"
#include "mct/graph.hpp"
#include "mct/invariants.hpp"
#include "mct/report.hpp"

namespace mct {

enum class Family { kTorus, kCylinder, kGrid, kCaterpillar, kPath, kCycle, kComplete };

Family parse_family(std::string_view name);
std::string to_string(Family f);
// Products and caterpillars take (n, m); path, cycle and complete only n.
bool family_takes_two(Family f);
// torus: C_n x C_m, cylinder: C_n x P_m, grid: P_n x P_m,
// caterpillar: T_{n,m} (spine n, m leaves per spine vertex).
Graph family_graph(Family f, int n, int m = 0);

inline constexpr const char* kBudgetEnv = "SOLVER_BUDGET";

struct Budgets {
  std::uint64_t memo = kDefaultMemoBudget;
  std::uint64_t nodes = kDefaultNodeBudget;
  // Table and family checks run the exact solver up to this board size.
  int exact_max_vertices = 24;
};

// Defaults, with the memo budget taken from SOLVER_BUDGET when it is set.
// Throws std::invalid_argument when the variable is not a positive integer.
Budgets budgets_from_env();

enum class MethodChoice { kExact, kFormula, kClosed, kAuto };
MethodChoice parse_method_choice(std::string_view name);

class InapplicableMethod : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GraphSource {
  Graph graph;
  std::optional<Family> family;
  int n = 0;
  int m = 0;
};

GraphSource family_source(Family f, int n, int m = 0);

// Dispatch per method. auto = closed when the family has a closed form for
// this start, else formula when it applies, else exact. Throws
// InapplicableMethod when the requested method does not apply.
ThresholdResult compute_threshold(const GraphSource& src, int l, Player start,
                                  MethodChoice method, const Budgets& budgets,
                                  bool with_trace = false);

// --- tables -----------------------------------------------------------------

struct TableCell {
  int n = 0;
  int m = 0;
  std::optional<int> a1;
  std::optional<int> a1_prime;
  std::vector<Method> methods_a1;
  std::vector<Method> methods_a1_prime;
  std::string case_a1;
  std::string case_a1_prime;
  std::vector<std::string> disagreements;
  std::vector<std::string> budget_failures;
};

struct TableOptions {
  Family family = Family::kGrid;
  int n_lo = 2, n_hi = 2, m_lo = 2, m_hi = 2;
  Budgets budgets;
  bool formula = true;
  bool domination = true;
  bool exact = true;
  int jobs = 1;
};

struct TableReport {
  Family family = Family::kGrid;
  std::vector<TableCell> cells;
  std::vector<std::string> skipped;       // transposed duplicates (m < n)
  std::vector<std::string> range_errors;  // cells outside a closed form's range
  int disagreement_count() const;
  int budget_failure_count() const;
};

// Torus, cylinder and grid only. Every cell gets the closed form plus each
// enabled method that applies; values that disagree are recorded.
TableReport build_table(const TableOptions& options);

std::string method_tag(const std::vector<Method>& methods);
// "n,m,a1,a1_prime,method_a1,method_a1_prime"; ABSENT is "-".
std::string table_csv(const TableReport& table);
Json table_json(const TableReport& table);
// Cases fired, disagreements, skipped and range errors.
Json table_meta_json(const TableReport& table);

// --- cross-checks -----------------------------------------------------------

enum class CheckStatus { kOk, kMismatch, kBudget };
std::string to_string(CheckStatus s);

struct CheckItem {
  std::string name;
  CheckStatus status = CheckStatus::kOk;
  std::string detail;
};

struct RunReport {
  std::string scope;
  std::vector<CheckItem> items;
  double seconds = 0;
  int count(CheckStatus s) const;
  bool ok() const {
    return count(CheckStatus::kMismatch) == 0 && count(CheckStatus::kBudget) == 0;
  }
};

// All labeled triangle-free isolate-free graphs on 1..max_n vertices:
// a1_by_alpha = a1_by_deletion = exact Alice-start threshold, Delta = exact
// Bob-start threshold, Alice-win monotone in a, Bob-start >= Alice-start.
RunReport crosscheck_tiny_exhaustive(int max_n, const Budgets& budgets, int jobs);

// Closed forms against formula, domination and exact solves on the torus,
// cylinder, grid and caterpillar ranges; realizations; union bounds;
// cylinder <= torus.
RunReport crosscheck_families(const Budgets& budgets, int jobs);

// Random simple hypergraphs (n <= 10, <= 8 edges): Tr(Tr(H)) = H, and for
// singleton-free ones with n <= 8 the (1,1) game on H (Maker first) and on
// Tr(H) (Breaker first) are won by the same player.
RunReport crosscheck_hypergraph_duality(int count, std::uint64_t seed,
                                        const Budgets& budgets);

Json run_report_json(const RunReport& report, const std::string& command);

// Runs body(i) for i in [0, count) on up to `jobs` threads.
void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body);

}  // namespace mct
