#include "mct/invariants.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "mct/errors.hpp"

namespace mct {

namespace {

struct NodeCounter {
  std::uint64_t visited = 0;
  std::uint64_t budget = 0;

  bool exhausted() { return ++visited > budget; }
};

// Search for X with |X| <= limit and Delta(G - X) <= k, extending `removed`.
// A violator is a surviving vertex with more than k surviving neighbours;
// any feasible X meets {v} plus any k+1 of v's surviving neighbours, which
// is the branching rule. With `collect` set, every leaf is visited and the
// lexicographically smallest is kept in `best`.
class BoundedDegreeDeletion {
 public:
  BoundedDegreeDeletion(const Graph& g, int k, int limit, NodeCounter& counter,
                        bool collect)
      : g_(g), k_(k), limit_(limit), counter_(counter), collect_(collect) {}

  bool run(VertexSet& removed) {
    if (counter_.exhausted()) throw ResourceError("node budget exhausted");
    const VertexSet alive = removed.complement();
    int worst = -1;
    int worst_degree = k_;
    int forced = -1;
    const int left = limit_ - removed.size();
    std::vector<int> violators;
    for (int v : alive) {
      const VertexSet nbrs = g_.neighbors(v) & alive;
      int d = nbrs.size();
      if (d <= k_) continue;
      violators.push_back(v);
      if (d > worst_degree) {
        worst_degree = d;
        worst = v;
      }
      // Pendant neighbours are never deleted (swapping one for v is no
      // worse), so only v or its other neighbours can fix v.
      int fixers = 0;
      for (int u : nbrs)
        if (!pendant(u, alive)) ++fixers;
      if (d - k_ > std::min(left, fixers) && forced < 0) forced = v;
    }
    if (worst < 0) {
      if (!best_ || lex_less(removed, *best_)) best_ = removed;
      return true;
    }
    if (left <= 0) return false;
    if (packing_bound(violators, alive) > left) return false;

    std::vector<int> branch;
    if (forced >= 0) {
      branch.push_back(forced);
    } else {
      branch.push_back(worst);
      std::vector<int> nbrs;
      for (int u : g_.neighbors(worst) & alive)
        if (!pendant(u, alive)) nbrs.push_back(u);
      std::stable_sort(nbrs.begin(), nbrs.end(), [&](int a, int b) {
        return g_.neighbors(a).intersection_size(alive) >
               g_.neighbors(b).intersection_size(alive);
      });
      if (nbrs.size() > static_cast<std::size_t>(k_ + 1))
        nbrs.resize(static_cast<std::size_t>(k_ + 1));
      std::sort(nbrs.begin(), nbrs.end());
      branch.insert(branch.end(), nbrs.begin(), nbrs.end());
    }
    bool found = false;
    for (int v : branch) {
      removed.insert(v);
      bool ok = run(removed);
      removed.erase(v);
      found = found || ok;
      if (found && !collect_) return true;
    }
    return found;
  }

  const std::optional<VertexSet>& best() const { return best_; }

 private:
  bool pendant(int u, const VertexSet& alive) const {
    return g_.neighbors(u).intersection_size(alive) == 1;
  }

  // Violators with pairwise disjoint closed neighbourhoods (within the
  // surviving graph) each need their own deletion.
  int packing_bound(const std::vector<int>& violators,
                    const VertexSet& alive) const {
    VertexSet used(g_.order());
    int count = 0;
    for (int v : violators) {
      VertexSet closed = g_.closed_neighborhood(v) & alive;
      if (closed.intersects(used)) continue;
      used |= closed;
      ++count;
    }
    return count;
  }

  const Graph& g_;
  int k_;
  int limit_;
  NodeCounter& counter_;
  bool collect_;
  std::optional<VertexSet> best_;
};

// Greedy deletion of max-degree vertices until Delta <= k.
VertexSet greedy_deletion(const Graph& g, int k) {
  VertexSet removed(g.order());
  while (true) {
    const VertexSet alive = removed.complement();
    int worst = -1;
    int worst_degree = k;
    for (int v : alive) {
      int d = g.neighbors(v).intersection_size(alive);
      if (d > worst_degree) {
        worst_degree = d;
        worst = v;
      }
    }
    if (worst < 0) return removed;
    removed.insert(worst);
  }
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet seen(g.order());
  for (int s = 0; s < g.order(); ++s) {
    if (seen.contains(s)) continue;
    VertexSet comp(g.order());
    std::vector<int> stack{s};
    seen.insert(s);
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.insert(v);
      for (int u : g.neighbors(v)) {
        if (!seen.contains(u)) {
          seen.insert(u);
          stack.push_back(u);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

// Smallest |X| with Delta(G - X) <= k on a connected graph.
int min_bounded_degree_deletion(const Graph& g, int k, NodeCounter& counter) {
  const int upper = greedy_deletion(g, k).size();
  for (int s = 0; s < upper; ++s) {
    BoundedDegreeDeletion search(g, k, s, counter, false);
    VertexSet removed(g.order());
    if (search.run(removed)) return s;
  }
  return upper;
}

std::string label_list(const Graph& g, std::initializer_list<int> vs) {
  std::string out;
  for (int v : vs) {
    if (!out.empty()) out += ", ";
    out += g.label(v);
  }
  return out;
}

}  // namespace

void require_triangle_free(const Graph& g, bool isolate_free) {
  if (auto tri = find_triangle(g)) {
    throw DomainError("graph contains the triangle {" +
                      label_list(g, {(*tri)[0], (*tri)[1], (*tri)[2]}) + "}");
  }
  if (isolate_free) {
    for (int v = 0; v < g.order(); ++v)
      if (g.degree(v) == 0)
        throw DomainError("graph has the isolated vertex " + g.label(v));
  }
}

int k_independence_number(const Graph& g, int k, std::uint64_t budget) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  NodeCounter counter{0, budget};
  int total = 0;
  int greedy_total = 0;
  auto comps = components(g);
  std::size_t done = 0;
  try {
    for (; done < comps.size(); ++done) {
      const VertexSet& comp = comps[done];
      auto sub = delete_vertices(g, comp.complement());
      total += sub.graph.order() -
               min_bounded_degree_deletion(sub.graph, k, counter);
    }
  } catch (const ResourceError&) {
    greedy_total = total;
    for (std::size_t i = done; i < comps.size(); ++i) {
      auto sub = delete_vertices(g, comps[i].complement());
      greedy_total += sub.graph.order() - greedy_deletion(sub.graph, k).size();
    }
    throw ResourceError("k-independence search exceeded " +
                            std::to_string(budget) +
                            " nodes; reported bound is a feasible lower bound",
                        greedy_total);
  }
  return total;
}

std::optional<DeletionWitness> exists_deletion_set(const Graph& g, int t) {
  if (t < 0) throw std::invalid_argument("t must be non-negative");
  NodeCounter counter{0, kDefaultNodeBudget};
  BoundedDegreeDeletion search(g, t, t, counter, true);
  VertexSet removed(g.order());
  if (!search.run(removed)) return std::nullopt;
  return DeletionWitness{*search.best(), t};
}

bool is_valid_witness(const Graph& g, const DeletionWitness& w) {
  if (w.x.universe() != g.order() || w.x.size() > w.t) return false;
  return induced_max_degree(g, w.x.complement()) <= w.t;
}

int a1_by_deletion(const Graph& g) {
  require_triangle_free(g, true);
  for (int t = 0;; ++t)
    if (exists_deletion_set(g, t)) return std::max(t, 1);
}

int a1_by_alpha(const Graph& g, std::uint64_t budget) {
  require_triangle_free(g, false);
  const int n = g.order();
  int isolated = 0;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == 0) ++isolated;
  // k >= Delta gives max{k, l} >= the k = Delta term, so the scan stops there.
  // n - alpha_k is the least deletion leaving max degree <= k; only values
  // that would beat `best` are searched for.
  int best = std::max(g.max_degree(), isolated);
  NodeCounter counter{0, budget};
  for (int k = 0; k < std::min(best, g.max_degree() + 1); ++k) {
    const int limit = best - 1 - isolated;
    for (int s = 0; s <= limit; ++s) {
      BoundedDegreeDeletion search(g, k, s, counter, false);
      VertexSet removed(n);
      bool found;
      try {
        found = search.run(removed);
      } catch (const ResourceError&) {
        throw ResourceError("a1 formula search exceeded " + std::to_string(budget) +
                                " nodes; reported bound is an upper bound",
                            std::max(best, 1));
      }
      if (found) {
        best = std::min(best, std::max(k, isolated + s));
        break;
      }
    }
  }
  return std::max(best, 1);
}

ThresholdPair triangle_free_thresholds(const Graph& g) {
  require_triangle_free(g, false);
  ThresholdPair out;
  out.a1 = a1_by_alpha(g);
  if (inspect(g).isolated.empty()) out.a1_prime = g.max_degree();
  return out;
}

namespace {

class DominationSearch {
 public:
  DominationSearch(const Graph& g, int limit, NodeCounter& counter,
                   bool collect)
      : g_(g), limit_(limit), counter_(counter), collect_(collect) {}

  bool run(VertexSet& chosen, const VertexSet& dominated) {
    if (counter_.exhausted()) throw ResourceError("node budget exhausted");
    const VertexSet open = dominated.complement();
    if (open.empty()) {
      if (!best_ || lex_less(chosen, *best_)) best_ = chosen;
      return true;
    }
    const int left = limit_ - chosen.size();
    if (left <= 0) return false;
    // Undominated vertices with disjoint closed neighbourhoods need distinct
    // dominators; the scan also picks the most constrained vertex to branch on.
    VertexSet used(g_.order());
    int packing = 0;
    int pivot = -1;
    int pivot_size = g_.order() + 1;
    for (int v : open) {
      VertexSet closed = g_.closed_neighborhood(v);
      int size = closed.size();
      if (size < pivot_size) {
        pivot_size = size;
        pivot = v;
      }
      if (!closed.intersects(used)) {
        used |= closed;
        ++packing;
      }
    }
    if (packing > left) return false;
    bool found = false;
    for (int w : g_.closed_neighborhood(pivot)) {
      chosen.insert(w);
      bool ok = run(chosen, dominated | g_.closed_neighborhood(w));
      chosen.erase(w);
      found = found || ok;
      if (found && !collect_) return true;
    }
    return found;
  }

  const std::optional<VertexSet>& best() const { return best_; }

 private:
  const Graph& g_;
  int limit_;
  NodeCounter& counter_;
  bool collect_;
  std::optional<VertexSet> best_;
};

}  // namespace

std::optional<VertexSet> has_dominating_set(const Graph& g, int s) {
  if (s < 0) throw std::invalid_argument("s must be non-negative");
  NodeCounter counter{0, kDefaultNodeBudget};
  DominationSearch search(g, s, counter, true);
  VertexSet chosen(g.order());
  if (!search.run(chosen, VertexSet(g.order()))) return std::nullopt;
  return search.best();
}

int domination_number(const Graph& g, std::uint64_t budget) {
  NodeCounter counter{0, budget};
  for (int s = 0;; ++s) {
    DominationSearch search(g, s, counter, false);
    VertexSet chosen(g.order());
    try {
      if (search.run(chosen, VertexSet(g.order()))) return s;
    } catch (const ResourceError&) {
      throw ResourceError("domination search exceeded " +
                              std::to_string(budget) + " nodes",
                          s);
    }
  }
}

}  // namespace mct
