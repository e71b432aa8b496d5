#include "mct/hypergraph.hpp"

#include <algorithm>
#include <stdexcept>

#include "json.hpp"

#include "mct/errors.hpp"

namespace mct {

Hypergraph::Hypergraph(int n, std::vector<VertexSet> edges)
    : n_(n), edges_(std::move(edges)) {
  for (const auto& e : edges_) {
    if (e.universe() != n)
      throw std::invalid_argument("hyperedge universe does not match order");
    if (e.empty()) throw std::invalid_argument("empty hyperedge");
  }
}

Hypergraph Hypergraph::of(int n, const std::vector<std::vector<int>>& edges) {
  std::vector<VertexSet> sets;
  sets.reserve(edges.size());
  for (const auto& e : edges) {
    VertexSet s(n);
    for (int v : e) {
      if (v < 0 || v >= n)
        throw std::invalid_argument("hyperedge member out of range");
      s.insert(v);
    }
    sets.push_back(std::move(s));
  }
  return Hypergraph(n, std::move(sets));
}

int Hypergraph::degree(int v) const {
  int d = 0;
  for (const auto& e : edges_)
    if (e.contains(v)) ++d;
  return d;
}

int Hypergraph::max_degree() const {
  int best = 0;
  for (int v = 0; v < n_; ++v) best = std::max(best, degree(v));
  return best;
}

bool Hypergraph::is_simple() const {
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (std::size_t j = 0; j < edges_.size(); ++j)
      if (i != j && edges_[i].is_subset_of(edges_[j])) return false;
  return true;
}

bool Hypergraph::has_singleton() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const VertexSet& e) { return e.size() == 1; });
}

Hypergraph Hypergraph::sorted() const {
  auto edges = edges_;
  std::sort(edges.begin(), edges.end(), lex_less);
  return Hypergraph(n_, std::move(edges));
}

namespace {

void expand(const Graph& g, VertexSet& clique, VertexSet candidates,
            VertexSet excluded, std::vector<VertexSet>& out) {
  if (candidates.empty()) {
    if (excluded.empty()) out.push_back(clique);
    return;
  }
  // Pivot on the vertex of P u X that covers most candidates.
  int pivot = -1;
  int best = -1;
  for (const VertexSet* pool : {&candidates, &excluded}) {
    for (int u : *pool) {
      int c = candidates.intersection_size(g.neighbors(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
  }
  VertexSet branch = candidates - g.neighbors(pivot);
  for (int v : branch) {
    clique.insert(v);
    expand(g, clique, candidates & g.neighbors(v), excluded & g.neighbors(v),
           out);
    clique.erase(v);
    candidates.erase(v);
    excluded.insert(v);
  }
}

// Keeps only inclusion-minimal sets, deduplicated and sorted.
std::vector<VertexSet> minimal_sets(std::vector<VertexSet> sets) {
  std::sort(sets.begin(), sets.end(), [](const VertexSet& a, const VertexSet& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
  });
  std::vector<VertexSet> kept;
  for (auto& s : sets) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const VertexSet& k) { return k.is_subset_of(s); });
    if (!dominated) kept.push_back(std::move(s));
  }
  std::sort(kept.begin(), kept.end(), lex_less);
  return kept;
}

}  // namespace

Hypergraph clique_hypergraph(const Graph& g) {
  std::vector<VertexSet> cliques;
  VertexSet clique(g.order());
  expand(g, clique, g.all_vertices(), g.empty_set(), cliques);
  std::sort(cliques.begin(), cliques.end(), lex_less);
  return Hypergraph(g.order(), std::move(cliques));
}

Hypergraph simplify(const Hypergraph& h) {
  return Hypergraph(h.order(), minimal_sets(h.edges()));
}

Hypergraph transversal_hypergraph(const Hypergraph& h, std::size_t cap) {
  if (h.edge_count() == 0)
    throw DomainError("edgeless hypergraph has only the empty transversal");
  const int n = h.order();
  // Minimal transversals of the edges processed so far.
  std::vector<VertexSet> current{VertexSet(n)};
  for (const auto& e : h.edges()) {
    std::vector<VertexSet> hitting;
    std::vector<VertexSet> missing;
    for (auto& t : current)
      (t.intersects(e) ? hitting : missing).push_back(std::move(t));
    // Sets already meeting e stay minimal; extensions of the others are
    // kept unless they contain one of those.
    std::vector<VertexSet> next = hitting;
    std::vector<VertexSet> extended;
    for (const auto& t : missing) {
      for (int v : e) {
        VertexSet candidate = t;
        candidate.insert(v);
        bool dominated = std::any_of(
            hitting.begin(), hitting.end(),
            [&](const VertexSet& k) { return k.is_subset_of(candidate); });
        if (!dominated) extended.push_back(std::move(candidate));
        if (next.size() + extended.size() > cap)
          throw ResourceError("transversal dualization exceeded cap of " +
                              std::to_string(cap) + " intermediate sets");
      }
    }
    extended = minimal_sets(std::move(extended));
    next.insert(next.end(), std::make_move_iterator(extended.begin()),
                std::make_move_iterator(extended.end()));
    current = std::move(next);
  }
  std::sort(current.begin(), current.end(), lex_less);
  return Hypergraph(n, std::move(current));
}

bool is_transversal(const Hypergraph& h, const VertexSet& s) {
  return std::all_of(h.edges().begin(), h.edges().end(),
                     [&](const VertexSet& e) { return e.intersects(s); });
}

int hyperdegree_max(const Hypergraph& h) { return h.max_degree(); }

std::string hypergraph_to_json(const Hypergraph& h) {
  nlohmann::json j;
  j["n"] = h.order();
  j["edges"] = nlohmann::json::array();
  for (const auto& e : h.edges()) j["edges"].push_back(e.members());
  return j.dump();
}

Hypergraph hypergraph_from_json(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("hypergraph JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges") ||
      !j["n"].is_number_integer() || !j["edges"].is_array())
    throw std::invalid_argument("hypergraph JSON needs integer n and edges");
  const int n = j["n"].get<int>();
  if (n < 0) throw std::invalid_argument("hypergraph JSON: negative n");
  std::vector<std::vector<int>> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array())
      throw std::invalid_argument("hypergraph JSON: edge is not a list");
    std::vector<int> members;
    for (const auto& v : e) {
      if (!v.is_number_integer())
        throw std::invalid_argument("hypergraph JSON: non-integer member");
      int x = v.get<int>();
      if (!members.empty() && x <= members.back())
        throw std::invalid_argument(
            "hypergraph JSON: edge members must be strictly increasing");
      members.push_back(x);
    }
    edges.push_back(std::move(members));
  }
  return Hypergraph::of(n, edges);
}

}  // namespace mct
