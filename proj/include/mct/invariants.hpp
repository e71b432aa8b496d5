#pragma once

#include <cstdint>
#include <optional>

#include "mct/graph.hpp"
#include "mct/vertex_set.hpp"

namespace mct {

/// Alice's thresholds for the (a,1) game: a1 when she moves first, a1_prime
/// when Bob does. a1_prime is empty when no bias lets Alice win.
struct ThresholdPair {
  int a1 = 0;
  std::optional<int> a1_prime;

  bool operator==(const ThresholdPair&) const = default;
};

/// A set X with |X| <= t and max degree of G - X at most t.
struct DeletionWitness {
  VertexSet x;
  int t = 0;
};

inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

// Maximum size of a vertex set inducing max degree <= k. Throws
// ResourceError (with a feasible lower bound as best_bound) when the search
// visits more than `budget` nodes.
int k_independence_number(const Graph& g, int k,
                          std::uint64_t budget = kDefaultNodeBudget);

// A witness X with |X| <= t and Delta(G - X) <= t, or nothing when none
// exists. Among the candidates the search reaches, the lexicographically
// smallest is returned.
std::optional<DeletionWitness> exists_deletion_set(const Graph& g, int t);

bool is_valid_witness(const Graph& g, const DeletionWitness& w);

// min over X of max{Delta(G - X), |X|}. Requires a triangle-free graph with
// no isolated vertex; throws DomainError naming the offending structure.
int a1_by_deletion(const Graph& g);

// min over k of max{k, l + n - alpha_k} with l the number of isolated
// vertices (l = 0 gives the isolate-free formula). Throws DomainError on a
// triangle.
int a1_by_alpha(const Graph& g, std::uint64_t budget = kDefaultNodeBudget);

// a1 from a1_by_alpha; a1_prime = Delta(G), or empty with an isolated vertex.
ThresholdPair triangle_free_thresholds(const Graph& g);

// A dominating set of size <= s, or nothing.
std::optional<VertexSet> has_dominating_set(const Graph& g, int s);

// Exact domination number by increasing s. Throws ResourceError when the
// branching tree exceeds `budget` nodes.
int domination_number(const Graph& g,
                      std::uint64_t budget = kDefaultNodeBudget);

// Throws DomainError unless g is triangle-free (and, when requested,
// isolate-free).
void require_triangle_free(const Graph& g, bool isolate_free);

}  // namespace mct
