#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "mct/graph.hpp"
#include "mct/vertex_set.hpp"

namespace mct {

/// Set system over vertices 0..order()-1. Hyperedges are nonempty; they may
/// repeat or nest unless the hypergraph is brought to simple form.
class Hypergraph {
 public:
  Hypergraph() = default;
  // Throws std::invalid_argument for an empty hyperedge or a universe
  // mismatch.
  Hypergraph(int n, std::vector<VertexSet> edges);
  // Convenience for literals: Hypergraph::of(3, {{0, 1}, {1, 2}}).
  static Hypergraph of(int n, const std::vector<std::vector<int>>& edges);

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<VertexSet>& edges() const { return edges_; }
  const VertexSet& edge(int i) const { return edges_[i]; }

  int degree(int v) const;
  int max_degree() const;
  bool is_simple() const;
  bool has_singleton() const;

  // Edges sorted by lex_less of their member lists.
  Hypergraph sorted() const;

  bool operator==(const Hypergraph& o) const = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> edges_;
};

// All maximal cliques of g, canonically sorted. Isolated vertices become
// singletons.
Hypergraph clique_hypergraph(const Graph& g);

// Drops duplicate hyperedges and every hyperedge that strictly contains
// another. Output is sorted.
Hypergraph simplify(const Hypergraph& h);

inline constexpr std::size_t kDefaultTransversalCap = 1'000'000;

// All inclusion-minimal transversals, computed edge by edge. Throws
// ResourceError once an intermediate family exceeds `cap`, and DomainError
// for an edgeless input (its only minimal transversal is the empty set).
Hypergraph transversal_hypergraph(const Hypergraph& h,
                                  std::size_t cap = kDefaultTransversalCap);

bool is_transversal(const Hypergraph& h, const VertexSet& s);

int hyperdegree_max(const Hypergraph& h);

// {"n": 3, "edges": [[0,1],[1,2]]}
std::string hypergraph_to_json(const Hypergraph& h);
Hypergraph hypergraph_from_json(const std::string& text);

}  // namespace mct
