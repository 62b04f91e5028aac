#pragma once

#include <istream>
#include <string>

#include "core/graph.hpp"

namespace matchcx {

/// Reads the edge-list text format. One edge per line as two whitespace
/// separated vertex tokens; `v <token>` declares an isolated vertex; `#`
/// starts a comment. Throws Parse with the offending line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(const std::string& text);
Graph read_edge_list_file(const std::string& path);

/// Canonical spelling: isolated vertices first as `v` lines, then sorted edges.
std::string format_edge_list(const Graph& g);

}  // namespace matchcx
