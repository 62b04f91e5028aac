#pragma once

#include <map>
#include <optional>

#include "core/graph.hpp"

namespace matchcx {

inline constexpr std::size_t kIsomorphismVertexLimit = 64;

using VertexBijection = std::map<VertexLabel, VertexLabel>;

/// Finds an isomorphism g -> h, or nullopt when none exists. Deterministic
/// for fixed inputs. Throws SizeLimit above kIsomorphismVertexLimit vertices.
std::optional<VertexBijection> are_isomorphic(const Graph& g, const Graph& h);

/// True when `map` is a bijection V(g) -> V(h) preserving adjacency both ways.
bool is_isomorphism(const Graph& g, const Graph& h, const VertexBijection& map);

}  // namespace matchcx
