#include "mct/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "mct/enumerate.hpp"
#include "mct/errors.hpp"
#include "mct/hypergraph.hpp"

namespace mct {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string show(std::optional<int> v) { return v ? std::to_string(*v) : "-"; }

std::string edge_string(const Graph& g) {
  std::string s = "n=" + std::to_string(g.order()) + " {";
  bool first = true;
  for (auto [u, v] : g.edges()) {
    if (!first) s += ",";
    first = false;
    s += std::to_string(u) + "-" + std::to_string(v);
  }
  return s + "}";
}

std::string set_string(const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  for (int v : s) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(v);
  }
  return out + "}";
}

std::string hypergraph_string(const Hypergraph& h) {
  std::string out = "n=" + std::to_string(h.order()) + " [";
  for (int i = 0; i < h.edge_count(); ++i) {
    if (i) out += " ";
    out += set_string(h.edge(i));
  }
  return out + "]";
}

}  // namespace

Family parse_family(std::string_view name) {
  if (name == "torus") return Family::kTorus;
  if (name == "cylinder") return Family::kCylinder;
  if (name == "grid") return Family::kGrid;
  if (name == "caterpillar") return Family::kCaterpillar;
  if (name == "path") return Family::kPath;
  if (name == "cycle") return Family::kCycle;
  if (name == "complete") return Family::kComplete;
  throw std::invalid_argument(
      "unknown family '" + std::string(name) +
      "' (torus, cylinder, grid, caterpillar, path, cycle, complete)");
}

std::string to_string(Family f) {
  switch (f) {
    case Family::kTorus: return "torus";
    case Family::kCylinder: return "cylinder";
    case Family::kGrid: return "grid";
    case Family::kCaterpillar: return "caterpillar";
    case Family::kPath: return "path";
    case Family::kCycle: return "cycle";
    case Family::kComplete: return "complete";
  }
  return "?";
}

bool family_takes_two(Family f) {
  return f == Family::kTorus || f == Family::kCylinder || f == Family::kGrid ||
         f == Family::kCaterpillar;
}

Graph family_graph(Family f, int n, int m) {
  switch (f) {
    case Family::kTorus: return cartesian_product(make_cycle(n), make_cycle(m));
    case Family::kCylinder: return cartesian_product(make_cycle(n), make_path(m));
    case Family::kGrid: return cartesian_product(make_path(n), make_path(m));
    case Family::kCaterpillar: return make_caterpillar(n, m);
    case Family::kPath: return make_path(n);
    case Family::kCycle: return make_cycle(n);
    case Family::kComplete: return make_complete(n);
  }
  throw std::logic_error("unhandled family");
}

GraphSource family_source(Family f, int n, int m) {
  return {family_graph(f, n, m), f, n, m};
}

Budgets budgets_from_env() {
  Budgets b;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (*end != '\0' || v == 0 || env[0] == '-')
      throw std::invalid_argument(std::string(kBudgetEnv) +
                                  " must be a positive integer, got '" + env + "'");
    b.memo = v;
  }
  return b;
}

MethodChoice parse_method_choice(std::string_view name) {
  if (name == "exact") return MethodChoice::kExact;
  if (name == "formula") return MethodChoice::kFormula;
  if (name == "closed") return MethodChoice::kClosed;
  if (name == "auto") return MethodChoice::kAuto;
  throw std::invalid_argument("unknown method '" + std::string(name) +
                              "' (exact, formula, closed, auto)");
}

namespace {

std::optional<ThresholdResult> closed_threshold(const GraphSource& src, int l,
                                                Player start, std::string& why) {
  if (!src.family) {
    why = "closed forms need a recognized family (--family)";
    return std::nullopt;
  }
  if (l != 1) {
    why = "closed forms cover Bob's bias l = 1 only";
    return std::nullopt;
  }
  ThresholdResult r;
  r.method = Method::kClosedForm;
  int n = src.n;
  int m = src.m;
  try {
    switch (*src.family) {
      case Family::kTorus:
      case Family::kGrid:
      case Family::kCylinder: {
        if (*src.family != Family::kCylinder && m < n) std::swap(n, m);
        ClosedFormPair p = *src.family == Family::kTorus   ? torus_thresholds(n, m)
                           : *src.family == Family::kGrid ? grid_thresholds(n, m)
                                                          : cylinder_thresholds(n, m);
        if (start == Player::kAlice) {
          r.value = p.thresholds.a1;
          r.note = "case " + p.a1_case;
        } else {
          r.value = p.thresholds.a1_prime;
          r.note = "case " + p.a1_prime_case;
        }
        return r;
      }
      case Family::kCaterpillar: {
        if (start == Player::kBob) {
          why = "the caterpillar closed form gives the Alice-start threshold only";
          return std::nullopt;
        }
        CaseValue c = caterpillar_a1(n, m);
        r.value = c.value;
        r.note = "case " + c.fired_case;
        return r;
      }
      default:
        why = "no closed form for the " + to_string(*src.family) + " family";
        return std::nullopt;
    }
  } catch (const std::invalid_argument& e) {
    why = e.what();
    return std::nullopt;
  }
}

std::optional<ThresholdResult> formula_threshold(const Graph& g, int l,
                                                 Player start,
                                                 const Budgets& budgets,
                                                 std::string& why) {
  if (l != 1) {
    why = "the triangle-free formulas cover Bob's bias l = 1 only";
    return std::nullopt;
  }
  if (auto tri = find_triangle(g)) {
    why = "the formulas need a triangle-free graph; found {" + g.label((*tri)[0]) +
          ", " + g.label((*tri)[1]) + ", " + g.label((*tri)[2]) + "}";
    return std::nullopt;
  }
  ThresholdResult r;
  r.method = Method::kFormula;
  const VertexSet isolated = inspect(g).isolated;
  if (start == Player::kAlice) {
    r.value = a1_by_alpha(g, budgets.nodes);
    r.note = "min over k of max{k, isolated + n - alpha_k}";
    if (isolated.empty() && g.order() > 0) r.witness = exists_deletion_set(g, *r.value);
  } else if (!isolated.empty()) {
    r.note = "isolated vertex " + g.label(isolated.first()) +
             " is a singleton clique Bob claims on his first pick";
  } else {
    r.value = g.max_degree();
    r.note = "maximum degree";
  }
  return r;
}

}  // namespace

ThresholdResult compute_threshold(const GraphSource& src, int l, Player start,
                                  MethodChoice method, const Budgets& budgets,
                                  bool with_trace) {
  if (l < 1) throw std::invalid_argument("Bob's bias l must be positive");
  std::string why;
  switch (method) {
    case MethodChoice::kClosed:
      if (auto r = closed_threshold(src, l, start, why)) return *r;
      throw InapplicableMethod("closed: " + why);
    case MethodChoice::kFormula:
      if (auto r = formula_threshold(src.graph, l, start, budgets, why)) return *r;
      throw InapplicableMethod("formula: " + why);
    case MethodChoice::kAuto:
      if (auto r = closed_threshold(src, l, start, why)) return *r;
      if (auto r = formula_threshold(src.graph, l, start, budgets, why)) return *r;
      [[fallthrough]];
    case MethodChoice::kExact:
      return threshold_exact(src.graph, l, start, {budgets.memo, with_trace});
  }
  throw std::logic_error("unhandled method");
}

void parallel_for(std::size_t count, int jobs,
                  const std::function<void(std::size_t)>& body) {
  const std::size_t workers =
      std::min<std::size_t>(count, static_cast<std::size_t>(std::max(jobs, 1)));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
          next = count;
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

// --- tables -----------------------------------------------------------------

int TableReport::disagreement_count() const {
  int total = 0;
  for (const auto& c : cells) total += static_cast<int>(c.disagreements.size());
  return total;
}

int TableReport::budget_failure_count() const {
  int total = 0;
  for (const auto& c : cells) total += static_cast<int>(c.budget_failures.size());
  return total;
}

namespace {

void check_table_range(Family f, int n, int m) {
  switch (f) {
    case Family::kTorus:
      if (n < 3 || m < 3) throw std::invalid_argument("torus needs n, m >= 3");
      return;
    case Family::kCylinder:
      if (n < 3 || m < 2) throw std::invalid_argument("cylinder needs n >= 3, m >= 2");
      return;
    case Family::kGrid:
      if (n < 2 || m < 2) throw std::invalid_argument("grid needs n, m >= 2");
      return;
    default:
      throw std::invalid_argument("tables cover torus, cylinder and grid");
  }
}

TableCell compute_cell(const TableOptions& opt, int n, int m) {
  TableCell cell;
  cell.n = n;
  cell.m = m;
  const ClosedFormPair cf = opt.family == Family::kTorus   ? torus_thresholds(n, m)
                            : opt.family == Family::kGrid ? grid_thresholds(n, m)
                                                          : cylinder_thresholds(n, m);
  cell.a1 = cf.thresholds.a1;
  cell.a1_prime = cf.thresholds.a1_prime;
  cell.case_a1 = cf.a1_case;
  cell.case_a1_prime = cf.a1_prime_case;
  cell.methods_a1.push_back(Method::kClosedForm);
  cell.methods_a1_prime.push_back(Method::kClosedForm);

  auto record = [&](const char* which, Method method, std::optional<int> got) {
    const bool first = std::string(which) == "a1";
    (first ? cell.methods_a1 : cell.methods_a1_prime).push_back(method);
    const auto& expected = first ? cell.a1 : cell.a1_prime;
    if (got != expected)
      cell.disagreements.push_back(std::string(which) + ": " + to_string(method) +
                                   " gives " + show(got) + ", closed_form gives " +
                                   show(expected));
  };
  auto guarded = [&](const std::string& what, const std::function<void()>& run) {
    try {
      run();
    } catch (const ResourceError& e) {
      cell.budget_failures.push_back(what + ": " + e.what());
    } catch (const std::logic_error& e) {
      cell.disagreements.push_back(what + ": " + e.what());
    }
  };

  const Graph g = family_graph(opt.family, n, m);
  if (opt.formula && !find_triangle(g)) {
    guarded("formula", [&] {
      record("a1", Method::kFormula, a1_by_alpha(g, opt.budgets.nodes));
      record("a1_prime", Method::kFormula, g.max_degree());
    });
  }
  if (opt.domination) {
    if (opt.family == Family::kCylinder && n >= 4 && m >= 3)
      guarded("domination", [&] {
        record("a1", Method::kDomination, cylinder_a1_via_domination(n, m).value);
      });
    if (opt.family == Family::kGrid && n >= 3)
      guarded("domination", [&] {
        record("a1", Method::kDomination, grid_a1_via_domination(n, m).value);
      });
  }
  if (opt.exact && g.order() <= opt.budgets.exact_max_vertices) {
    guarded("exact", [&] {
      const SolveOptions so{opt.budgets.memo, false};
      record("a1", Method::kExact, threshold_exact(g, 1, Player::kAlice, so).value);
      record("a1_prime", Method::kExact, threshold_exact(g, 1, Player::kBob, so).value);
    });
  }
  return cell;
}

}  // namespace

TableReport build_table(const TableOptions& opt) {
  TableReport report;
  report.family = opt.family;
  if (opt.family != Family::kTorus && opt.family != Family::kCylinder &&
      opt.family != Family::kGrid)
    throw std::invalid_argument("tables cover torus, cylinder and grid");
  std::vector<std::pair<int, int>> todo;
  for (int n = opt.n_lo; n <= opt.n_hi; ++n) {
    for (int m = opt.m_lo; m <= opt.m_hi; ++m) {
      const std::string at = "(" + std::to_string(n) + "," + std::to_string(m) + ")";
      try {
        check_table_range(opt.family, n, m);
      } catch (const std::invalid_argument& e) {
        report.range_errors.push_back(at + ": " + e.what());
        continue;
      }
      if (opt.family != Family::kCylinder && m < n) {
        report.skipped.push_back(at + ": transpose of (" + std::to_string(m) + "," +
                                 std::to_string(n) + ")");
        continue;
      }
      todo.emplace_back(n, m);
    }
  }
  report.cells.resize(todo.size());
  parallel_for(todo.size(), opt.jobs, [&](std::size_t i) {
    report.cells[i] = compute_cell(opt, todo[i].first, todo[i].second);
  });
  return report;
}

std::string method_tag(const std::vector<Method>& methods) {
  std::string tag;
  for (Method m : methods) {
    if (!tag.empty()) tag += "+";
    tag += to_string(m);
  }
  return tag;
}

std::string table_csv(const TableReport& table) {
  std::ostringstream out;
  out << "n,m,a1,a1_prime,method_a1,method_a1_prime\n";
  for (const auto& c : table.cells)
    out << c.n << ',' << c.m << ',' << show(c.a1) << ',' << show(c.a1_prime) << ','
        << method_tag(c.methods_a1) << ',' << method_tag(c.methods_a1_prime) << '\n';
  return out.str();
}

namespace {

Json optional_json(std::optional<int> v) { return v ? Json(*v) : Json(nullptr); }

}  // namespace

Json table_json(const TableReport& table) {
  Json cells = Json::array();
  for (const auto& c : table.cells)
    cells.push_back({{"n", c.n},
                     {"m", c.m},
                     {"a1", optional_json(c.a1)},
                     {"a1_prime", optional_json(c.a1_prime)},
                     {"method_a1", method_tag(c.methods_a1)},
                     {"method_a1_prime", method_tag(c.methods_a1_prime)}});
  return {{"family", to_string(table.family)}, {"cells", cells}};
}

Json table_meta_json(const TableReport& table) {
  Json cells = Json::array();
  for (const auto& c : table.cells)
    cells.push_back({{"n", c.n},
                     {"m", c.m},
                     {"case_a1", c.case_a1},
                     {"case_a1_prime", c.case_a1_prime},
                     {"disagreements", c.disagreements},
                     {"budget_failures", c.budget_failures}});
  return {{"family", to_string(table.family)},
          {"cells", cells},
          {"skipped", table.skipped},
          {"range_errors", table.range_errors},
          {"disagreements", table.disagreement_count()},
          {"budget_failures", table.budget_failure_count()}};
}

// --- cross-checks -----------------------------------------------------------

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kOk: return "ok";
    case CheckStatus::kMismatch: return "mismatch";
    case CheckStatus::kBudget: return "budget";
  }
  return "?";
}

int RunReport::count(CheckStatus s) const {
  return static_cast<int>(
      std::count_if(items.begin(), items.end(),
                    [s](const CheckItem& i) { return i.status == s; }));
}

namespace {

// Runs a check; a non-empty return is a mismatch description.
CheckItem run_check(std::string name, const std::function<std::string()>& check) {
  CheckItem item{std::move(name), CheckStatus::kOk, ""};
  try {
    item.detail = check();
    if (!item.detail.empty()) item.status = CheckStatus::kMismatch;
  } catch (const ResourceError& e) {
    item.status = CheckStatus::kBudget;
    item.detail = e.what();
  } catch (const std::exception& e) {
    item.status = CheckStatus::kMismatch;
    item.detail = std::string("error: ") + e.what();
  }
  return item;
}

std::string check_triangle_free_graph(const Graph& g, const Budgets& budgets) {
  const SolveOptions so{budgets.memo, false};
  std::ostringstream bad;
  const int by_alpha = a1_by_alpha(g, budgets.nodes);
  const int by_deletion = a1_by_deletion(g);
  const auto alice = threshold_exact(g, 1, Player::kAlice, so).value;
  const auto bob = threshold_exact(g, 1, Player::kBob, so).value;
  if (by_alpha != by_deletion || alice != by_alpha)
    bad << "a1: alpha " << by_alpha << ", deletion " << by_deletion << ", exact "
        << show(alice) << "; ";
  if (bob != g.max_degree())
    bad << "a1': Delta " << g.max_degree() << ", exact " << show(bob) << "; ";
  if (alice && bob && *bob < *alice)
    bad << "Bob-start threshold below Alice-start; ";
  const int cap = std::max(clique_hypergraph(g).max_degree(), g.order());
  for (Player start : {Player::kAlice, Player::kBob}) {
    bool won = false;
    for (int a = 1; a <= cap; ++a) {
      const bool wins = alice_wins(g, a, 1, start, so);
      if (won && !wins)
        bad << to_string(start) << "-start: Alice wins at a = " << a - 1
            << " but not at a = " << a << "; ";
      won = won || wins;
    }
  }
  return bad.str();
}

}  // namespace

RunReport crosscheck_tiny_exhaustive(int max_n, const Budgets& budgets, int jobs) {
  const auto t0 = Clock::now();
  RunReport report;
  report.scope = "tiny-exhaustive";
  std::vector<Graph> graphs;
  for (int n = 1; n <= max_n; ++n)
    for_each_labeled_graph(n, {true, true},
                           [&](const Graph& g) { graphs.push_back(g); });
  report.items.resize(graphs.size());
  parallel_for(graphs.size(), jobs, [&](std::size_t i) {
    report.items[i] = run_check(edge_string(graphs[i]), [&] {
      return check_triangle_free_graph(graphs[i], budgets);
    });
  });
  report.seconds = since(t0);
  return report;
}

namespace {

void append_table_items(RunReport& report, Family f, int n_lo, int n_hi,
                        int m_lo, int m_hi, const Budgets& budgets, int jobs) {
  TableOptions opt;
  opt.family = f;
  opt.n_lo = n_lo;
  opt.n_hi = n_hi;
  opt.m_lo = m_lo;
  opt.m_hi = m_hi;
  opt.budgets = budgets;
  opt.jobs = jobs;
  const TableReport table = build_table(opt);
  for (const auto& c : table.cells) {
    CheckItem item;
    item.name = to_string(f) + " (" + std::to_string(c.n) + "," +
                std::to_string(c.m) + ") a1=" + show(c.a1) + " [" +
                method_tag(c.methods_a1) + "] a1'=" + show(c.a1_prime) + " [" +
                method_tag(c.methods_a1_prime) + "]";
    for (const auto& d : c.disagreements) item.detail += d + "; ";
    for (const auto& b : c.budget_failures) item.detail += b + "; ";
    item.status = !c.disagreements.empty()    ? CheckStatus::kMismatch
                  : !c.budget_failures.empty() ? CheckStatus::kBudget
                                               : CheckStatus::kOk;
    report.items.push_back(std::move(item));
  }
}

}  // namespace

RunReport crosscheck_families(const Budgets& budgets, int jobs) {
  const auto t0 = Clock::now();
  RunReport report;
  report.scope = "families";
  append_table_items(report, Family::kTorus, 3, 8, 3, 8, budgets, jobs);
  append_table_items(report, Family::kCylinder, 3, 12, 2, 8, budgets, jobs);
  append_table_items(report, Family::kGrid, 2, 6, 2, 13, budgets, jobs);

  std::vector<std::pair<std::string, std::function<std::string()>>> checks;
  for (int m = 1; m <= 7; ++m) {
    for (int l = 1; l <= 5; ++l) {
      checks.emplace_back(
          "caterpillar T_{" + std::to_string(m) + "," + std::to_string(l) + "}",
          [m, l, &budgets]() -> std::string {
            const Graph g = make_caterpillar(m, l);
            const CaseValue c = caterpillar_a1(m, l);
            std::ostringstream bad;
            const int alpha = a1_by_alpha(g, budgets.nodes);
            const int del = a1_by_deletion(g);
            if (alpha != c.value || del != c.value)
              bad << "closed_form " << c.value << " (" << c.fired_case << "), alpha "
                  << alpha << ", deletion " << del << "; ";
            if (g.order() <= 12) {
              auto ex = threshold_exact(g, 1, Player::kAlice, {budgets.memo, false});
              if (ex.value != c.value) bad << "exact " << show(ex.value) << "; ";
            }
            return bad.str();
          });
    }
  }
  for (int k = 1; k <= 4; ++k)
    for (int l = 1; l <= k; ++l)
      for (int i = 0; i <= l; ++i)
        checks.emplace_back("realization (k,l,i)=(" + std::to_string(k) + "," +
                                std::to_string(l) + "," + std::to_string(i) + ")",
                            [k, l, i, &budgets]() -> std::string {
                              const Graph g =
                                  disjoint_union(make_caterpillar(k, k + i),
                                                 make_caterpillar(l, k + i));
                              const int got = a1_by_alpha(g, budgets.nodes);
                              const int want = realization_value(k, l, i);
                              if (got == want) return "";
                              return "alpha gives " + std::to_string(got) +
                                     ", expected " + std::to_string(want);
                            });
  for (int n = 3; n <= 8; ++n)
    for (int m = 4; m <= 8; ++m)
      checks.emplace_back(
          "cylinder <= torus (" + std::to_string(n) + "," + std::to_string(m) + ")",
          [n, m]() -> std::string {
            const int cyl = cylinder_thresholds(n, m).thresholds.a1;
            const int tor =
                torus_thresholds(std::min(n, m), std::max(n, m)).thresholds.a1;
            if (cyl <= tor) return "";
            return "cylinder " + std::to_string(cyl) + " > torus " + std::to_string(tor);
          });
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> order(1, 5);
  for (int pair = 0; pair < 200; ++pair) {
    const Graph g1 = random_graph(order(rng), 0.5, rng);
    const Graph g2 = random_graph(order(rng), 0.5, rng);
    checks.emplace_back("union bounds " + edge_string(g1) + " + " + edge_string(g2),
                        [g1, g2, &budgets]() -> std::string {
                          const SolveOptions so{budgets.memo, false};
                          const auto a = threshold_exact(g1, 1, Player::kAlice, so).value;
                          const auto b = threshold_exact(g2, 1, Player::kAlice, so).value;
                          const auto u = threshold_exact(disjoint_union(g1, g2), 1,
                                                         Player::kAlice, so)
                                             .value;
                          if (!a || !b || !u) return "missing Alice-start threshold";
                          const auto [lo, hi] = union_bounds(*a, *b);
                          if (lo <= *u && *u <= hi) return "";
                          return "union " + std::to_string(*u) + " outside [" +
                                 std::to_string(lo) + "," + std::to_string(hi) + "]";
                        });
  }
  std::vector<CheckItem> extra(checks.size());
  parallel_for(checks.size(), jobs, [&](std::size_t i) {
    extra[i] = run_check(checks[i].first, checks[i].second);
  });
  for (auto& item : extra) report.items.push_back(std::move(item));
  report.seconds = since(t0);
  return report;
}

RunReport crosscheck_hypergraph_duality(int count, std::uint64_t seed,
                                        const Budgets& budgets) {
  const auto t0 = Clock::now();
  RunReport report;
  report.scope = "hypergraph-duality";
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> order(1, 10);
  std::uniform_int_distribution<int> small_order(2, 8);
  std::uniform_real_distribution<double> density(0.15, 0.6);
  for (int i = 0; i < count; ++i) {
    // Odd instances are singleton-free by construction so that about half
    // reach the game check.
    const bool game = i % 2 == 1;
    const int n = game ? small_order(rng) : order(rng);
    const Hypergraph h =
        random_simple_hypergraph(n, 8, density(rng), rng, game ? 2 : 1);
    report.items.push_back(run_check(
        "H" + std::to_string(i) + " " + hypergraph_string(h), [&]() -> std::string {
          const Hypergraph tr = transversal_hypergraph(h);
          std::string bad;
          if (transversal_hypergraph(tr).sorted() != h.sorted())
            bad += "Tr(Tr(H)) != H; ";
          if (!h.has_singleton() && h.order() <= 8) {
            const Role on_h = solve(make_game_spec(h, 1, 1, Role::kMaker),
                                    {budgets.memo, false})
                                  .winner;
            const Role on_tr = solve(make_game_spec(tr, 1, 1, Role::kBreaker),
                                     {budgets.memo, false})
                                   .winner;
            if ((on_h == Role::kMaker) != (on_tr == Role::kBreaker))
              bad += "role switch: H won by " + to_string(on_h) + ", Tr(H) won by " +
                     to_string(on_tr) + "; ";
          }
          return bad;
        }));
  }
  report.seconds = since(t0);
  return report;
}

Json run_report_json(const RunReport& report, const std::string& command) {
  Json items = Json::array();
  for (const auto& i : report.items) {
    Json j = {{"name", i.name}, {"status", to_string(i.status)}};
    if (!i.detail.empty()) j["detail"] = i.detail;
    items.push_back(std::move(j));
  }
  return {{"command", command},
          {"scope", report.scope},
          {"checked", report.items.size()},
          {"mismatches", report.count(CheckStatus::kMismatch)},
          {"budget_failures", report.count(CheckStatus::kBudget)},
          {"seconds", report.seconds},
          {"items", items}};
}

}  // namespace mct
