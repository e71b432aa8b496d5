#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <string_view>

#include "mct/graph.hpp"
#include "mct/hypergraph.hpp"

namespace mct {

struct GraphFilter {
  bool triangle_free = false;
  bool isolate_free = false;
};

// "all", "triangle-free", "isolate-free", or a comma-joined combination.
// Throws std::invalid_argument for anything else.
GraphFilter parse_graph_filter(std::string_view text);

inline constexpr int kMaxEnumerationOrder = 7;

// Visits every labeled graph on vertices 0..n-1 that passes the filter, in
// increasing order of the edge mask (bit i is the i-th pair (u,v), u < v, in
// lexicographic order). Returns the number visited. n <= 7.
std::uint64_t for_each_labeled_graph(
    int n, const GraphFilter& filter,
    const std::function<void(const Graph&)>& visit);

std::uint64_t count_labeled_graphs(int n, const GraphFilter& filter);

// Erdos-Renyi G(n, p).
Graph random_graph(int n, double p, std::mt19937_64& rng);

// Random subsets of {0..n-1} (each vertex kept with probability p, resampled
// while smaller than min_edge_size), reduced to their inclusion-minimal
// members. The result is simple and has between 1 and max_edges edges.
Hypergraph random_simple_hypergraph(int n, int max_edges, double p,
                                    std::mt19937_64& rng, int min_edge_size = 1);

}  // namespace mct
