#include "mct/enumerate.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace mct {

GraphFilter parse_graph_filter(std::string_view text) {
  GraphFilter f;
  std::stringstream in{std::string(text)};
  std::string item;
  bool any = false;
  while (std::getline(in, item, ',')) {
    any = true;
    if (item == "all") continue;
    if (item == "triangle-free") {
      f.triangle_free = true;
    } else if (item == "isolate-free") {
      f.isolate_free = true;
    } else {
      throw std::invalid_argument("unknown graph filter '" + item +
                                  "' (all, triangle-free, isolate-free)");
    }
  }
  if (!any) throw std::invalid_argument("empty graph filter");
  return f;
}

namespace {

bool has_triangle(int n, const std::vector<std::uint32_t>& adj) {
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((adj[u] >> v & 1u) && (adj[u] & adj[v] & ~((2u << v) - 1))) return true;
  return false;
}

}  // namespace

std::uint64_t for_each_labeled_graph(
    int n, const GraphFilter& filter,
    const std::function<void(const Graph&)>& visit) {
  if (n < 1 || n > kMaxEnumerationOrder)
    throw std::invalid_argument("enumeration supports 1 <= n <= " +
                                std::to_string(kMaxEnumerationOrder));
  std::vector<Edge> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  const std::uint64_t masks = std::uint64_t{1} << pairs.size();
  std::uint64_t count = 0;
  std::vector<std::uint32_t> adj(n);
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    std::fill(adj.begin(), adj.end(), 0u);
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (!(mask >> i & 1)) continue;
      adj[pairs[i].first] |= 1u << pairs[i].second;
      adj[pairs[i].second] |= 1u << pairs[i].first;
    }
    if (filter.isolate_free) {
      bool isolated = false;
      for (int v = 0; v < n && !isolated; ++v) isolated = adj[v] == 0;
      if (isolated) continue;
    }
    if (filter.triangle_free && has_triangle(n, adj)) continue;
    ++count;
    if (!visit) continue;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) edges.push_back(pairs[i]);
    visit(Graph(n, edges));
  }
  return count;
}

std::uint64_t count_labeled_graphs(int n, const GraphFilter& filter) {
  return for_each_labeled_graph(n, filter, nullptr);
}

Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Hypergraph random_simple_hypergraph(int n, int max_edges, double p,
                                    std::mt19937_64& rng, int min_edge_size) {
  if (n < 1 || max_edges < 1)
    throw std::invalid_argument("need n >= 1 and max_edges >= 1");
  if (min_edge_size < 1 || min_edge_size > n || p <= 0)
    throw std::invalid_argument("need 1 <= min_edge_size <= n and p > 0");
  std::uniform_int_distribution<int> edge_count(1, max_edges);
  std::bernoulli_distribution coin(p);
  std::vector<VertexSet> edges;
  const int m = edge_count(rng);
  for (int i = 0; i < m; ++i) {
    VertexSet e(n);
    while (e.size() < min_edge_size) {
      e = VertexSet(n);
      for (int v = 0; v < n; ++v)
        if (coin(rng)) e.insert(v);
    }
    edges.push_back(std::move(e));
  }
  return simplify(Hypergraph(n, std::move(edges)));
}

}  // namespace mct
