#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "core/graph.hpp"

namespace matchcx {

enum class ReductionRule { Fold, Cone, Split, AddEdge };

/// One rewrite with its witness.
///   Fold:    N(a) ⊆ N(b), b removed.
///   Cone:    a is isolated.
///   Split:   a is simplicial with the given neighbours.
///   AddEdge: edge (a,b) added, `cert` isolated in g - N[{a,b}].
struct ReductionStep {
  ReductionRule rule = ReductionRule::Fold;
  VertexLabel a;
  VertexLabel b;
  VertexLabel cert;
  std::vector<VertexLabel> neighbors;

  static ReductionStep fold(VertexLabel onto, VertexLabel removed);
  static ReductionStep cone(VertexLabel isolated);
  static ReductionStep split(VertexLabel at, std::vector<VertexLabel> neighbors);
  static ReductionStep add_edge(VertexLabel a, VertexLabel b, VertexLabel cert);

  std::string to_string() const;
  static ReductionStep parse(const std::string& line);
  friend bool operator==(const ReductionStep&, const ReductionStep&) = default;
};

struct ReductionTrace {
  Graph initial;
  std::vector<ReductionStep> steps;
  /// nullopt means the last step certified contractibility.
  std::optional<Graph> terminal;

  bool contractible() const noexcept { return !terminal.has_value(); }
  /// One step per line, then a `# terminal ...` comment.
  std::string to_text() const;
};

/// Folds until no vertex u' has a u != u' with N(u) ⊆ N(u'). Removes the
/// smallest eligible u' first, witnessed by the smallest u.
std::pair<Graph, ReductionTrace> fold_reduce(const Graph& g);
/// Next fold under the same policy, if any.
std::optional<ReductionStep> find_fold(const Graph& g);

/// Smallest isolated vertex, if any.
std::optional<VertexLabel> detect_contractible(const Graph& g);

bool is_simplicial(const Graph& g, const VertexLabel& v);
/// [g - N[w] for w in N(v)] in canonical order. Precondition error if v is
/// not simplicial.
std::vector<Graph> simplicial_split(const Graph& g, const VertexLabel& v);

/// g + (a,b) with its certificate when g - N[{a,b}] has an isolated vertex.
std::optional<std::pair<Graph, VertexLabel>> try_add_edge(const Graph& g, const VertexLabel& a,
                                                          const VertexLabel& b);

/// Alternates isolated-vertex detection and single folds to a fixed point.
ReductionTrace reduce_pipeline(const Graph& g);

/// Re-checks the witness of `step` against g.
bool witness_holds(const Graph& g, const ReductionStep& step);
/// Applies steps in order, re-checking each witness. Returns nullopt after a
/// Cone step. Split steps branch and are rejected with a precondition error.
std::optional<Graph> replay(const Graph& initial, const std::vector<ReductionStep>& steps);
std::vector<ReductionStep> parse_trace(const std::string& text);

}  // namespace matchcx
