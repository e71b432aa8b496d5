#include "mct/graph.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "mct/errors.hpp"

namespace mct {

Graph::Graph(int n, const std::vector<Edge>& edges,
             std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  adj_.assign(static_cast<std::size_t>(n), VertexSet(n));
  degree_.assign(static_cast<std::size_t>(n), 0);
  edges_.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("edge (" + std::to_string(u) + "," +
                                  std::to_string(v) + ") out of range");
    if (u == v)
      throw std::invalid_argument("self-loop at " + std::to_string(u));
    if (adj_[u].contains(v))
      throw std::invalid_argument("duplicate edge (" + std::to_string(u) +
                                  "," + std::to_string(v) + ")");
    adj_[u].insert(v);
    adj_[v].insert(u);
    ++degree_[u];
    ++degree_[v];
    edges_.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (!labels_.empty()) {
    if (static_cast<int>(labels_.size()) != n)
      throw std::invalid_argument("label count does not match vertex count");
    std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
    if (static_cast<int>(seen.size()) != n)
      throw std::invalid_argument("labels are not unique");
  }
}

VertexSet Graph::closed_neighborhood(int v) const {
  VertexSet s = adj_[v];
  s.insert(v);
  return s;
}

int Graph::max_degree() const {
  int d = 0;
  for (int x : degree_) d = std::max(d, x);
  return d;
}

std::string Graph::label(int v) const {
  return labels_.empty() ? std::to_string(v) : labels_[v];
}

std::optional<int> Graph::find_label(std::string_view label) const {
  for (int v = 0; v < n_; ++v)
    if (this->label(v) == label) return v;
  return std::nullopt;
}

Graph make_path(int n) {
  if (n < 1) throw std::invalid_argument("path needs at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph make_cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least three vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph make_complete(int n) {
  if (n < 1) throw std::invalid_argument("complete graph needs a vertex");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph make_caterpillar(int m, int l) {
  if (m < 1) throw std::invalid_argument("caterpillar spine needs a vertex");
  if (l < 0) throw std::invalid_argument("negative leaf count");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  for (int i = 0; i < m; ++i)
    for (int k = 0; k < l; ++k) edges.emplace_back(i, m + i * l + k);
  return Graph(m * (l + 1), edges);
}

namespace {

std::string coordinate(const Graph& g, int v) {
  return g.has_labels() ? g.label(v) : std::to_string(v + 1);
}

}  // namespace

Graph cartesian_product(const Graph& g, const Graph& h) {
  if (g.order() == 0 || h.order() == 0)
    throw std::invalid_argument("cartesian product of an empty graph");
  const int m = h.order();
  auto id = [m](int i, int j) { return i * m + j; };
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    for (int j = 0; j < m; ++j) edges.emplace_back(id(a, j), id(b, j));
  for (int i = 0; i < g.order(); ++i)
    for (auto [a, b] : h.edges()) edges.emplace_back(id(i, a), id(i, b));
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(g.order() * m));
  for (int i = 0; i < g.order(); ++i)
    for (int j = 0; j < m; ++j)
      labels.push_back("(" + coordinate(g, i) + "," + coordinate(h, j) + ")");
  return Graph(g.order() * m, edges, std::move(labels));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int shift = g.order();
  std::vector<Edge> edges = g.edges();
  for (auto [a, b] : h.edges()) edges.emplace_back(a + shift, b + shift);
  std::vector<std::string> labels;
  if (g.has_labels() && h.has_labels()) {
    labels = g.labels();
    labels.insert(labels.end(), h.labels().begin(), h.labels().end());
    std::set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) labels.clear();
  }
  return Graph(g.order() + h.order(), edges, std::move(labels));
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& removed) {
  InducedSubgraph out;
  out.to_new.assign(static_cast<std::size_t>(g.order()), -1);
  for (int v = 0; v < g.order(); ++v) {
    if (removed.contains(v)) continue;
    out.to_new[v] = static_cast<int>(out.to_original.size());
    out.to_original.push_back(v);
  }
  std::vector<Edge> edges;
  for (auto [a, b] : g.edges())
    if (out.to_new[a] >= 0 && out.to_new[b] >= 0)
      edges.emplace_back(out.to_new[a], out.to_new[b]);
  std::vector<std::string> labels;
  if (g.has_labels())
    for (int v : out.to_original) labels.push_back(g.label(v));
  out.graph = Graph(static_cast<int>(out.to_original.size()), edges,
                    std::move(labels));
  return out;
}

std::optional<std::array<int, 3>> find_triangle(const Graph& g) {
  for (auto [a, b] : g.edges()) {
    VertexSet common = g.neighbors(a) & g.neighbors(b);
    int c = common.next(b);
    if (c >= 0) return std::array<int, 3>{a, b, c};
  }
  return std::nullopt;
}

GraphSummary inspect(const Graph& g) {
  GraphSummary s;
  s.max_degree = g.max_degree();
  s.is_triangle_free = !find_triangle(g).has_value();
  s.isolated = VertexSet(g.order());
  for (int v = 0; v < g.order(); ++v)
    if (g.degree(v) == 0) s.isolated.insert(v);
  return s;
}

int induced_max_degree(const Graph& g, const VertexSet& keep) {
  int d = 0;
  for (int v : keep) d = std::max(d, g.neighbors(v).intersection_size(keep));
  return d;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' ||
                        s.front() == '\r'))
    s.remove_prefix(1);
  while (!s.empty() &&
         (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool parse_int(std::string_view s, int& out) {
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  int n = -1;
  std::vector<Edge> edges;
  std::set<Edge> seen;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    line = trim(line.substr(0, line.find('#')));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    auto fields = split_ws(line);
    if (n < 0) {
      if (fields.size() != 1 || !parse_int(fields[0], n) || n < 0)
        throw ParseError(line_no, "expected vertex count");
      continue;
    }
    int u = 0;
    int v = 0;
    if (fields.size() != 2 || !parse_int(fields[0], u) ||
        !parse_int(fields[1], v))
      throw ParseError(line_no, "malformed edge line");
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw ParseError(line_no, "vertex index out of range");
    if (u == v) throw ParseError(line_no, "self-loop");
    Edge e{std::min(u, v), std::max(u, v)};
    if (!seen.insert(e).second) throw ParseError(line_no, "duplicate edge");
    edges.push_back(e);
  }
  if (n < 0) throw ParseError(line_no, "missing vertex count");
  return Graph(n, edges);
}

std::string serialize_edge_list(const Graph& g) {
  std::string out = std::to_string(g.order()) + "\n";
  for (auto [u, v] : g.edges())
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  return out;
}

}  // namespace mct
