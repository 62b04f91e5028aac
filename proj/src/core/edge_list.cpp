#include "core/edge_list.hpp"

#include <fstream>
#include <sstream>

namespace matchcx {

Graph parse_edge_list(std::istream& in) {
  std::vector<VertexLabel> vs;
  std::vector<LabelPair> es;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tok;
    for (std::string t; fields >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = "line " + std::to_string(lineno) + ": ";
    if (tok.size() == 2 && tok[0] == "v") {
      vs.push_back(VertexLabel::parse(tok[1]));
    } else if (tok.size() == 2) {
      auto a = VertexLabel::parse(tok[0]);
      auto b = VertexLabel::parse(tok[1]);
      if (a == b) fail(ErrorCode::Parse, where + "self-loop at " + tok[0]);
      es.emplace_back(a, b);
    } else {
      fail(ErrorCode::Parse, where + "expected two vertex tokens");
    }
  }
  return Graph::from_edges(std::move(vs), es);
}

Graph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return parse_edge_list(in);
}

Graph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(ErrorCode::Io, "cannot open " + path);
  return parse_edge_list(in);
}

std::string format_edge_list(const Graph& g) {
  std::string out;
  for (std::size_t i = 0; i < g.order(); ++i)
    if (g.degree(i) == 0) out += "v " + g.label(i).spelling() + "\n";
  for (const auto& [a, b] : g.edges()) out += a.spelling() + " " + b.spelling() + "\n";
  return out;
}

}  // namespace matchcx
