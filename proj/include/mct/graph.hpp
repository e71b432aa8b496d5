#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mct/vertex_set.hpp"

namespace mct {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..order()-1. Immutable once built.
class Graph {
 public:
  Graph() = default;

  // Throws std::invalid_argument on self-loops, duplicate edges, indices out
  // of range, or a label list that is not n unique strings.
  Graph(int n, const std::vector<Edge>& edges,
        std::vector<std::string> labels = {});

  int order() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  // Sorted, each (u, v) with u < v.
  const std::vector<Edge>& edges() const { return edges_; }

  const VertexSet& neighbors(int v) const { return adj_[v]; }
  VertexSet closed_neighborhood(int v) const;
  int degree(int v) const { return degree_[v]; }
  int max_degree() const;
  bool adjacent(int u, int v) const { return adj_[u].contains(v); }

  bool has_labels() const { return !labels_.empty(); }
  // Display label; the decimal index when the graph carries no labels.
  std::string label(int v) const;
  std::optional<int> find_label(std::string_view label) const;
  const std::vector<std::string>& labels() const { return labels_; }

  VertexSet all_vertices() const { return VertexSet::full(n_); }
  VertexSet empty_set() const { return VertexSet(n_); }

  bool operator==(const Graph& o) const {
    return n_ == o.n_ && edges_ == o.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<int> degree_;
  std::vector<std::string> labels_;
};

Graph make_path(int n);
Graph make_cycle(int n);
Graph make_complete(int n);

// Spine vertices are 0..m-1 (spine order); the leaves of spine vertex i are
// m + i*l .. m + i*l + l - 1.
Graph make_caterpillar(int m, int l);

// Vertex (i, j) of g x h gets index i * h.order() + j. Labels are "(i,j)"
// with 1-based coordinates, i indexing g; a factor's own labels are used
// in place of its coordinates when it has them.
Graph cartesian_product(const Graph& g, const Graph& h);

// Vertices of h are shifted by g.order(). Labels are kept only when both
// parts are labeled and the union stays unique.
Graph disjoint_union(const Graph& g, const Graph& h);

struct InducedSubgraph {
  Graph graph;
  std::vector<int> to_original;  // new index -> old index
  std::vector<int> to_new;       // old index -> new index, -1 if deleted
};

// Induced subgraph on the complement of `removed`, relabeled densely in
// increasing order of the surviving vertices. Labels carry over.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed);

struct GraphSummary {
  int max_degree = 0;
  bool is_triangle_free = true;
  VertexSet isolated;
};

GraphSummary inspect(const Graph& g);

// Lexicographically smallest triangle (a < b < c), if any.
std::optional<std::array<int, 3>> find_triangle(const Graph& g);

// Max degree of the subgraph induced by `keep`.
int induced_max_degree(const Graph& g, const VertexSet& keep);

// Edge-list text: first non-comment line is n, then one "u v" pair per line.
// '#' starts a comment that runs to the end of the line; blank lines are ignored.
Graph parse_edge_list(std::string_view text);
std::string serialize_edge_list(const Graph& g);

}  // namespace mct
