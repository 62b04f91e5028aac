#include "core/reduction.hpp"

#include <algorithm>
#include <sstream>

namespace matchcx {

namespace {

bool nested(const Graph& g, std::size_t u, std::size_t up) {
  auto a = g.neighbors(u);
  auto b = g.neighbors(up);
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string field(const std::string& tok, const std::string& key) {
  if (tok.rfind(key + "=", 0) != 0) fail(ErrorCode::Parse, "expected " + key + "= in '" + tok + "'");
  return tok.substr(key.size() + 1);
}

}  // namespace

ReductionStep ReductionStep::fold(VertexLabel onto, VertexLabel removed) {
  ReductionStep s;
  s.rule = ReductionRule::Fold;
  s.a = std::move(onto);
  s.b = std::move(removed);
  return s;
}

ReductionStep ReductionStep::cone(VertexLabel isolated) {
  ReductionStep s;
  s.rule = ReductionRule::Cone;
  s.a = std::move(isolated);
  return s;
}

ReductionStep ReductionStep::split(VertexLabel at, std::vector<VertexLabel> neighbors) {
  ReductionStep s;
  s.rule = ReductionRule::Split;
  s.a = std::move(at);
  s.neighbors = std::move(neighbors);
  return s;
}

ReductionStep ReductionStep::add_edge(VertexLabel a, VertexLabel b, VertexLabel cert) {
  ReductionStep s;
  s.rule = ReductionRule::AddEdge;
  s.a = std::move(a);
  s.b = std::move(b);
  s.cert = std::move(cert);
  return s;
}

std::string ReductionStep::to_string() const {
  switch (rule) {
    case ReductionRule::Fold: return "FOLD " + a.spelling() + " remove=" + b.spelling();
    case ReductionRule::Cone: return "CONE isolated=" + a.spelling();
    case ReductionRule::Split: {
      std::string out = "SPLIT at=" + a.spelling() + " neighbors=[";
      for (std::size_t i = 0; i < neighbors.size(); ++i)
        out += (i ? "," : "") + neighbors[i].spelling();
      return out + "]";
    }
    case ReductionRule::AddEdge:
      return "ADDEDGE a=" + a.spelling() + " b=" + b.spelling() + " cert=" + cert.spelling();
  }
  return {};
}

ReductionStep ReductionStep::parse(const std::string& line) {
  std::istringstream in(line);
  std::vector<std::string> tok;
  for (std::string t; in >> t;) tok.push_back(t);
  if (tok.empty()) fail(ErrorCode::Parse, "empty trace line");
  auto L = [](const std::string& s) { return VertexLabel::parse(s); };
  if (tok[0] == "FOLD" && tok.size() == 3) return fold(L(tok[1]), L(field(tok[2], "remove")));
  if (tok[0] == "CONE" && tok.size() == 2) return cone(L(field(tok[1], "isolated")));
  if (tok[0] == "ADDEDGE" && tok.size() == 4)
    return add_edge(L(field(tok[1], "a")), L(field(tok[2], "b")), L(field(tok[3], "cert")));
  if (tok[0] == "SPLIT" && tok.size() == 3) {
    auto list = field(tok[2], "neighbors");
    if (list.size() < 2 || list.front() != '[' || list.back() != ']')
      fail(ErrorCode::Parse, "malformed neighbour list '" + list + "'");
    std::vector<VertexLabel> nb;
    std::istringstream items(list.substr(1, list.size() - 2));
    for (std::string item; std::getline(items, item, ',');)
      if (!item.empty()) nb.push_back(L(item));
    return split(L(field(tok[1], "at")), std::move(nb));
  }
  fail(ErrorCode::Parse, "unrecognised trace line '" + line + "'");
}

std::string ReductionTrace::to_text() const {
  std::string out;
  for (const auto& s : steps) out += s.to_string() + "\n";
  if (contractible())
    out += "# terminal contractible\n";
  else
    out += "# terminal vertices=" + std::to_string(terminal->order()) +
           " edges=" + std::to_string(terminal->size()) + "\n";
  return out;
}

std::optional<ReductionStep> find_fold(const Graph& g) {
  for (std::size_t up = 0; up < g.order(); ++up)
    for (std::size_t u = 0; u < g.order(); ++u)
      if (u != up && nested(g, u, up)) return ReductionStep::fold(g.label(u), g.label(up));
  return std::nullopt;
}

std::pair<Graph, ReductionTrace> fold_reduce(const Graph& g) {
  ReductionTrace trace{g, {}, std::nullopt};
  Graph cur = g;
  while (auto step = find_fold(cur)) {
    cur = delete_vertices(cur, {step->b});
    trace.steps.push_back(std::move(*step));
  }
  trace.terminal = cur;
  return {cur, trace};
}

std::optional<VertexLabel> detect_contractible(const Graph& g) {
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.degree(i) == 0) return g.label(i);
  return std::nullopt;
}

namespace {

std::optional<std::pair<std::size_t, std::size_t>> missing_pair(const Graph& g, std::size_t v) {
  auto nb = g.neighbors(v);
  for (std::size_t i = 0; i < nb.size(); ++i)
    for (std::size_t j = i + 1; j < nb.size(); ++j)
      if (!g.adjacent(nb[i], nb[j])) return std::make_pair(nb[i], nb[j]);
  return std::nullopt;
}

}  // namespace

bool is_simplicial(const Graph& g, const VertexLabel& v) { return !missing_pair(g, g.index_of(v)); }

std::vector<Graph> simplicial_split(const Graph& g, const VertexLabel& v) {
  auto i = g.index_of(v);
  if (auto p = missing_pair(g, i))
    fail(ErrorCode::Precondition, v.spelling() + " is not simplicial: neighbours " +
                                      g.label(p->first).spelling() + " and " +
                                      g.label(p->second).spelling() + " are not adjacent");
  std::vector<Graph> out;
  for (auto w : g.neighbors(i)) out.push_back(delete_vertices(g, closed_neighborhood(g, {g.label(w)})));
  return out;
}

std::optional<std::pair<Graph, VertexLabel>> try_add_edge(const Graph& g, const VertexLabel& a,
                                                          const VertexLabel& b) {
  if (a == b) fail(ErrorCode::InvalidParameter, "self-loop at " + a.spelling());
  if (g.adjacent(a, b))
    fail(ErrorCode::InvalidParameter, "already an edge: " + a.spelling() + " " + b.spelling());
  auto rest = delete_vertices(g, closed_neighborhood(g, {a, b}));
  auto cert = detect_contractible(rest);
  if (!cert) return std::nullopt;
  return std::make_pair(add_edge(g, a, b), *cert);
}

ReductionTrace reduce_pipeline(const Graph& g) {
  ReductionTrace trace{g, {}, std::nullopt};
  Graph cur = g;
  for (;;) {
    if (auto v = detect_contractible(cur)) {
      trace.steps.push_back(ReductionStep::cone(*v));
      return trace;
    }
    auto step = find_fold(cur);
    if (!step) break;
    cur = delete_vertices(cur, {step->b});
    trace.steps.push_back(std::move(*step));
  }
  trace.terminal = cur;
  return trace;
}

bool witness_holds(const Graph& g, const ReductionStep& s) {
  auto has = [&](const VertexLabel& v) { return g.contains(v); };
  switch (s.rule) {
    case ReductionRule::Fold:
      return has(s.a) && has(s.b) && s.a != s.b && nested(g, g.index_of(s.a), g.index_of(s.b));
    case ReductionRule::Cone:
      return has(s.a) && g.degree(g.index_of(s.a)) == 0;
    case ReductionRule::Split: {
      if (!has(s.a)) return false;
      std::vector<VertexLabel> nb;
      for (auto w : g.neighbors(g.index_of(s.a))) nb.push_back(g.label(w));
      return nb == s.neighbors && is_simplicial(g, s.a);
    }
    case ReductionRule::AddEdge: {
      if (!has(s.a) || !has(s.b) || s.a == s.b || g.adjacent(s.a, s.b)) return false;
      auto rest = delete_vertices(g, closed_neighborhood(g, {s.a, s.b}));
      return rest.contains(s.cert) && rest.degree(rest.index_of(s.cert)) == 0;
    }
  }
  return false;
}

std::optional<Graph> replay(const Graph& initial, const std::vector<ReductionStep>& steps) {
  Graph cur = initial;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    const auto& s = steps[i];
    if (!witness_holds(cur, s))
      fail(ErrorCode::Inconsistent, "step " + std::to_string(i + 1) + " witness fails: " + s.to_string());
    switch (s.rule) {
      case ReductionRule::Fold: cur = delete_vertices(cur, {s.b}); break;
      case ReductionRule::Cone:
        if (i + 1 != steps.size()) fail(ErrorCode::Inconsistent, "steps follow a CONE step");
        return std::nullopt;
      case ReductionRule::Split:
        fail(ErrorCode::Precondition, "SPLIT steps branch and cannot be replayed linearly");
      case ReductionRule::AddEdge: cur = add_edge(cur, s.a, s.b); break;
    }
  }
  return cur;
}

std::vector<ReductionStep> parse_trace(const std::string& text) {
  std::vector<ReductionStep> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    out.push_back(ReductionStep::parse(line));
  }
  return out;
}

}  // namespace matchcx
