#include "core/graph.hpp"

#include <algorithm>

namespace matchcx {

Graph Graph::from_edges(std::vector<VertexLabel> vertices, const std::vector<LabelPair>& edges) {
  for (const auto& [a, b] : edges) {
    if (a == b) fail(ErrorCode::InvalidParameter, "self-loop at " + a.spelling());
    vertices.push_back(a);
    vertices.push_back(b);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  Graph g;
  g.labels_ = std::move(vertices);
  g.adj_.assign(g.labels_.size(), {});
  for (const auto& [a, b] : edges) {
    auto i = *g.find(a);
    auto j = *g.find(b);
    g.adj_[i].push_back(j);
    g.adj_[j].push_back(i);
  }
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    g.edge_count_ += nb.size();
  }
  g.edge_count_ /= 2;
  return g;
}

std::optional<std::size_t> Graph::find(const VertexLabel& v) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), v);
  if (it == labels_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::size_t Graph::index_of(const VertexLabel& v) const {
  auto i = find(v);
  if (!i) fail(ErrorCode::InvalidParameter, "unknown vertex " + v.spelling());
  return *i;
}

bool Graph::adjacent(std::size_t i, std::size_t j) const {
  const auto& nb = adj_.at(i);
  return std::binary_search(nb.begin(), nb.end(), j);
}

bool Graph::adjacent(const VertexLabel& a, const VertexLabel& b) const {
  return adjacent(index_of(a), index_of(b));
}

std::vector<std::pair<std::size_t, std::size_t>> Graph::edge_indices() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(edge_count_);
  for (std::size_t i = 0; i < adj_.size(); ++i)
    for (auto j : adj_[i])
      if (i < j) out.emplace_back(i, j);
  return out;
}

std::vector<LabelPair> Graph::edges() const {
  std::vector<LabelPair> out;
  for (auto [i, j] : edge_indices()) out.emplace_back(labels_[i], labels_[j]);
  return out;
}

Graph build_grid(int m, int n) {
  if (m < 1 || n < 1) fail(ErrorCode::InvalidParameter, "grid dimensions must be positive");
  std::vector<VertexLabel> vs;
  std::vector<LabelPair> es;
  for (int i = 1; i <= m; ++i) {
    for (int j = 1; j <= n; ++j) {
      vs.push_back(VertexLabel::cell(i, j));
      if (j < n) es.emplace_back(VertexLabel::cell(i, j), VertexLabel::cell(i, j + 1));
      if (i < m) es.emplace_back(VertexLabel::cell(i, j), VertexLabel::cell(i + 1, j));
    }
  }
  return Graph::from_edges(std::move(vs), es);
}

Graph build_path(int r) {
  if (r < 1) fail(ErrorCode::InvalidParameter, "path length must be positive");
  std::vector<VertexLabel> vs;
  std::vector<LabelPair> es;
  for (int i = 1; i <= r; ++i) {
    vs.push_back(VertexLabel::index(i));
    if (i < r) es.emplace_back(VertexLabel::index(i), VertexLabel::index(i + 1));
  }
  return Graph::from_edges(std::move(vs), es);
}

Graph build_cycle(int r) {
  if (r < 3) fail(ErrorCode::InvalidParameter, "cycle needs at least 3 vertices");
  std::vector<LabelPair> es;
  for (int i = 1; i < r; ++i) es.emplace_back(VertexLabel::index(i), VertexLabel::index(i + 1));
  es.emplace_back(VertexLabel::index(1), VertexLabel::index(r));
  return Graph::from_edges(es);
}

Graph build_star(int k) {
  if (k < 1) fail(ErrorCode::InvalidParameter, "star needs at least one leaf");
  std::vector<LabelPair> es;
  for (int i = 2; i <= k + 1; ++i) es.emplace_back(VertexLabel::index(1), VertexLabel::index(i));
  return Graph::from_edges(es);
}

Graph edgeless_graph(int k) {
  if (k < 0) fail(ErrorCode::InvalidParameter, "negative vertex count");
  std::vector<VertexLabel> vs;
  for (int i = 1; i <= k; ++i) vs.push_back(VertexLabel::index(i));
  return Graph::from_edges(std::move(vs), {});
}

Graph line_graph(const Graph& g) {
  auto ends = g.edge_indices();
  std::vector<VertexLabel> vs;
  vs.reserve(ends.size());
  std::vector<std::vector<std::size_t>> incident(g.order());
  for (std::size_t e = 0; e < ends.size(); ++e) {
    vs.push_back(VertexLabel::edge(g.label(ends[e].first), g.label(ends[e].second)));
    incident[ends[e].first].push_back(e);
    incident[ends[e].second].push_back(e);
  }
  std::vector<LabelPair> es;
  for (const auto& inc : incident)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b) es.emplace_back(vs[inc[a]], vs[inc[b]]);
  return Graph::from_edges(std::move(vs), es);
}

LabelSet neighbors(const Graph& g, const LabelSet& s) {
  LabelSet out;
  for (const auto& v : s)
    for (auto j : g.neighbors(g.index_of(v))) out.insert(g.label(j));
  return out;
}

LabelSet closed_neighborhood(const Graph& g, const LabelSet& s) {
  auto out = neighbors(g, s);
  out.insert(s.begin(), s.end());
  return out;
}

Graph induced_subgraph(const Graph& g, const LabelSet& u) {
  std::vector<bool> keep(g.order(), false);
  for (const auto& v : u) keep[g.index_of(v)] = true;
  std::vector<VertexLabel> vs;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (keep[i]) vs.push_back(g.label(i));
  std::vector<LabelPair> es;
  for (auto [i, j] : g.edge_indices())
    if (keep[i] && keep[j]) es.emplace_back(g.label(i), g.label(j));
  return Graph::from_edges(std::move(vs), es);
}

Graph delete_vertices(const Graph& g, const LabelSet& s) {
  for (const auto& v : s) g.index_of(v);
  LabelSet rest;
  for (const auto& v : g.vertices())
    if (!s.contains(v)) rest.insert(v);
  return induced_subgraph(g, rest);
}

Graph delete_edges(const Graph& g, const std::vector<LabelPair>& e) {
  std::set<std::pair<std::size_t, std::size_t>> drop;
  for (const auto& [a, b] : e) {
    auto i = g.index_of(a);
    auto j = g.index_of(b);
    if (!g.adjacent(i, j))
      fail(ErrorCode::InvalidParameter, "not an edge: " + a.spelling() + " " + b.spelling());
    drop.emplace(std::min(i, j), std::max(i, j));
  }
  std::vector<LabelPair> es;
  for (auto ij : g.edge_indices())
    if (!drop.contains(ij)) es.emplace_back(g.label(ij.first), g.label(ij.second));
  return Graph::from_edges(g.vertices(), es);
}

Graph add_edge(const Graph& g, const VertexLabel& a, const VertexLabel& b) {
  auto i = g.index_of(a);
  auto j = g.index_of(b);
  if (i == j) fail(ErrorCode::InvalidParameter, "self-loop at " + a.spelling());
  if (g.adjacent(i, j))
    fail(ErrorCode::InvalidParameter, "already an edge: " + a.spelling() + " " + b.spelling());
  auto es = g.edges();
  es.emplace_back(a, b);
  return Graph::from_edges(g.vertices(), es);
}

Graph disjoint_union(const Graph& a, const Graph& b) {
  std::vector<VertexLabel> vs = a.vertices();
  for (const auto& v : b.vertices()) {
    if (a.contains(v)) fail(ErrorCode::InvalidParameter, "vertex collision: " + v.spelling());
    vs.push_back(v);
  }
  auto es = a.edges();
  for (auto& e : b.edges()) es.push_back(e);
  return Graph::from_edges(std::move(vs), es);
}

bool satisfies_graph_invariants(const Graph& g) {
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto nb = g.neighbors(i);
    if (!std::is_sorted(nb.begin(), nb.end())) return false;
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end()) return false;
    for (auto j : nb) {
      if (j == i || j >= g.order()) return false;
      if (!g.adjacent(j, i)) return false;
    }
  }
  return std::is_sorted(g.vertices().begin(), g.vertices().end());
}

}  // namespace matchcx
