#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "core/error.hpp"
#include "core/label.hpp"

namespace matchcx {

/// Immutable simple undirected graph on structured labels. Vertices are kept
/// in canonical label order and addressed internally by their position.
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from explicit vertex and edge lists. Endpoints missing
  /// from `vertices` are added. Duplicate edges collapse; self-loops throw.
  static Graph from_edges(std::vector<VertexLabel> vertices, const std::vector<LabelPair>& edges);
  static Graph from_edges(const std::vector<LabelPair>& edges) { return from_edges({}, edges); }

  std::size_t order() const noexcept { return labels_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return labels_.empty(); }

  const std::vector<VertexLabel>& vertices() const noexcept { return labels_; }
  const VertexLabel& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> find(const VertexLabel& v) const;
  /// Like find() but throws InvalidParameter for unknown vertices.
  std::size_t index_of(const VertexLabel& v) const;
  bool contains(const VertexLabel& v) const { return find(v).has_value(); }

  std::span<const std::size_t> neighbors(std::size_t i) const { return adj_.at(i); }
  std::size_t degree(std::size_t i) const { return adj_.at(i).size(); }
  bool adjacent(std::size_t i, std::size_t j) const;
  bool adjacent(const VertexLabel& a, const VertexLabel& b) const;

  /// Edges as index pairs (i < j), sorted.
  std::vector<std::pair<std::size_t, std::size_t>> edge_indices() const;
  /// Edges as label pairs with first < second, sorted.
  std::vector<LabelPair> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.labels_ == b.labels_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<VertexLabel> labels_;
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t edge_count_ = 0;
};

Graph build_grid(int m, int n);
Graph build_path(int r);
Graph build_cycle(int r);
/// Complete bipartite star K_{1,k}: centre 1, leaves 2..k+1.
Graph build_star(int k);
Graph edgeless_graph(int k);
Graph line_graph(const Graph& g);

LabelSet neighbors(const Graph& g, const LabelSet& s);
LabelSet closed_neighborhood(const Graph& g, const LabelSet& s);

Graph delete_vertices(const Graph& g, const LabelSet& s);
Graph delete_edges(const Graph& g, const std::vector<LabelPair>& e);
Graph induced_subgraph(const Graph& g, const LabelSet& u);
Graph add_edge(const Graph& g, const VertexLabel& a, const VertexLabel& b);
/// Disjoint union; vertex labels must not collide.
Graph disjoint_union(const Graph& a, const Graph& b);
/// Relabels vertices through `rename`, which must be injective on V(g).
template <typename F>
Graph relabel(const Graph& g, F rename) {
  std::vector<VertexLabel> vs;
  vs.reserve(g.order());
  for (const auto& v : g.vertices()) vs.push_back(rename(v));
  std::vector<LabelPair> es;
  for (auto [i, j] : g.edge_indices()) es.emplace_back(vs[i], vs[j]);
  auto before = vs.size();
  auto out = Graph::from_edges(std::move(vs), es);
  if (out.order() != before) fail(ErrorCode::InvalidParameter, "relabel: map is not injective");
  return out;
}

/// Checks simplicity and symmetry of the adjacency structure.
bool satisfies_graph_invariants(const Graph& g);

}  // namespace matchcx
