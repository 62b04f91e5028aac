#pragma once

#include <string>

#include "core/families.hpp"
#include "core/graph.hpp"
#include "core/homology.hpp"
#include "core/label.hpp"

namespace testing {

inline matchcx::VertexLabel L(const std::string& s) { return matchcx::VertexLabel::parse(s); }

inline matchcx::LabelSet S(std::initializer_list<const char*> xs) {
  matchcx::LabelSet out;
  for (auto x : xs) out.insert(L(x));
  return out;
}

inline matchcx::Graph fam(char f, int n) { return matchcx::build_family(*matchcx::parse_family(std::string(1, f)), n); }

/// Reduced Betti numbers as a plain map with the library's torsion bookkeeping dropped.
inline std::map<int, long> betti_map(const matchcx::BettiVector& b) {
  std::map<int, long> out;
  for (auto [d, c] : b.reduced) out[d] = static_cast<long>(c);
  return out;
}

}  // namespace testing
