#pragma once
// Slow reference implementations used as test oracles. Nothing here calls
// into the library's complex, homology, reduction or wedge code.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "core/graph.hpp"

namespace oracle {

/// Graph on vertices 0..n-1 as adjacency bitmasks.
struct Mask {
  int n = 0;
  std::vector<std::uint32_t> adj;

  bool edge(int a, int b) const { return (adj[a] >> b) & 1; }
};

inline Mask from_graph(const matchcx::Graph& g) {
  Mask m;
  m.n = static_cast<int>(g.order());
  m.adj.assign(g.order(), 0);
  for (auto [i, j] : g.edge_indices()) {
    m.adj[i] |= 1u << j;
    m.adj[j] |= 1u << i;
  }
  return m;
}

inline matchcx::Graph to_graph(const Mask& m) {
  std::vector<matchcx::VertexLabel> vs;
  std::vector<matchcx::LabelPair> es;
  for (int i = 0; i < m.n; ++i) vs.push_back(matchcx::VertexLabel::index(i + 1));
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (m.edge(i, j)) es.emplace_back(vs[i], vs[j]);
  return matchcx::Graph::from_edges(vs, es);
}

inline Mask random_graph(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> nd(1, max_n);
  std::uniform_real_distribution<double> pd(0.1, 0.7), coin(0.0, 1.0);
  Mask m;
  m.n = nd(rng);
  m.adj.assign(m.n, 0);
  double p = pd(rng);
  for (int i = 0; i < m.n; ++i)
    for (int j = i + 1; j < m.n; ++j)
      if (coin(rng) < p) {
        m.adj[i] |= 1u << j;
        m.adj[j] |= 1u << i;
      }
  return m;
}

/// Every independent set, the empty one included, as a bitmask.
inline std::vector<std::uint32_t> independent_sets(const Mask& g) {
  std::vector<std::uint32_t> out;
  for (std::uint32_t s = 0; s < (1u << g.n); ++s) {
    bool ok = true;
    for (int v = 0; v < g.n && ok; ++v)
      if ((s >> v & 1) && (g.adj[v] & s)) ok = false;
    if (ok) out.push_back(s);
  }
  return out;
}

/// Face counts by dimension (index 0 = vertices) of a face list given as masks.
inline std::vector<long> face_counts(const std::vector<std::uint32_t>& faces) {
  std::vector<long> c;
  for (auto f : faces) {
    int d = __builtin_popcount(f) - 1;
    if (d < 0) continue;
    if (static_cast<int>(c.size()) <= d) c.resize(d + 1, 0);
    ++c[d];
  }
  return c;
}

/// Dense rank mod p.
inline int rank_mod(std::vector<std::vector<long long>> a, long long p) {
  int rows = static_cast<int>(a.size()), cols = rows ? static_cast<int>(a[0].size()) : 0, r = 0;
  auto inv = [p](long long x) {
    long long res = 1, e = p - 2;
    x %= p;
    while (e) {
      if (e & 1) res = res * x % p;
      x = x * x % p;
      e >>= 1;
    }
    return res;
  };
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (((a[i][c] % p) + p) % p) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[piv], a[r]);
    long long iv = inv(((a[r][c] % p) + p) % p);
    for (auto& x : a[r]) x = ((x % p + p) % p) * iv % p;
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      long long f = ((a[i][c] % p) + p) % p;
      if (!f) continue;
      for (int k = 0; k < cols; ++k) a[i][k] = ((a[i][k] - f * a[r][k]) % p + p) % p;
    }
    ++r;
  }
  return r;
}

/// Reduced Betti numbers mod p of the complex whose faces (closed under
/// subsets, empty face included) are given as masks. Key -1 is degree -1.
inline std::map<int, long> reduced_betti(const std::vector<std::uint32_t>& faces, long long p) {
  std::map<int, std::vector<std::uint32_t>> by_dim;
  for (auto f : faces) by_dim[__builtin_popcount(f) - 1].push_back(f);
  int top = by_dim.empty() ? -1 : by_dim.rbegin()->first;
  std::map<int, int> rank;  // rank of the map from d-chains to (d-1)-chains
  for (int d = 0; d <= top; ++d) {
    auto& hi = by_dim[d];
    auto& lo = by_dim[d - 1];
    std::map<std::uint32_t, int> row;
    for (std::size_t i = 0; i < lo.size(); ++i) row[lo[i]] = static_cast<int>(i);
    std::vector<std::vector<long long>> m(lo.size(), std::vector<long long>(hi.size(), 0));
    for (std::size_t j = 0; j < hi.size(); ++j) {
      int k = 0;
      for (int v = 0; v < 32; ++v)
        if (hi[j] >> v & 1) {
          m[row.at(hi[j] & ~(1u << v))][j] = (k % 2 == 0) ? 1 : -1;
          ++k;
        }
    }
    rank[d] = rank_mod(m, p);
  }
  std::map<int, long> out;
  for (int d = -1; d <= top; ++d) {
    long b = static_cast<long>(by_dim[d].size()) - (rank.count(d) ? rank[d] : 0) - (rank.count(d + 1) ? rank[d + 1] : 0);
    if (b) out[d] = b;
  }
  return out;
}

inline std::map<int, long> ind_betti(const Mask& g, long long p = 1000000007LL) {
  return reduced_betti(independent_sets(g), p);
}

/// Isomorphism by trying every permutation; for n <= 8.
inline bool isomorphic_bruteforce(const Mask& a, const Mask& b) {
  if (a.n != b.n) return false;
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < a.n && ok; ++i)
      for (int j = i + 1; j < a.n && ok; ++j)
        if (a.edge(i, j) != b.edge(perm[i], perm[j])) ok = false;
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Number of matchings of each size (index = size) of a graph given by its edge list.
inline std::vector<long> matching_counts(int n, const std::vector<std::pair<int, int>>& edges) {
  std::vector<long> c(n / 2 + 2, 0);
  auto m = edges.size();
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
    std::uint64_t used = 0;
    bool ok = true;
    int k = 0;
    for (std::size_t e = 0; e < m && ok; ++e)
      if (s >> e & 1) {
        auto bits = (std::uint64_t{1} << edges[e].first) | (std::uint64_t{1} << edges[e].second);
        if (used & bits) ok = false;
        used |= bits;
        ++k;
      }
    if (ok) ++c[k];
  }
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  return c;
}

/// The ten recurrences written out one function per family, with plain
/// integers, for small n. Returns dimension -> count.
using W = std::map<int, long long>;

inline W shift(W w, int k) {
  W out;
  for (auto [d, c] : w) out[d + k] = c;
  return out;
}

inline W plus(W a, const W& b) {
  for (auto [d, c] : b) a[d] += c;
  return a;
}

struct Recurrence {
  std::map<std::pair<char, int>, W> memo;

  W get(char f, int n) {
    auto key = std::make_pair(f, n);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    W r = compute(f, n);
    memo[key] = r;
    return r;
  }

  W compute(char f, int n) {
    if (n == 1) {
      switch (f) {
        case 'G': return {{0, 1}};
        case 'B': return {{1, 2}};
        case 'A': return {{0, 2}};
        case 'D': return {{0, 1}};
        case 'J': return {{1, 2}};
        case 'O': return {{2, 1}};
        case 'M': return {};
        case 'Q': return {};
        case 'F': return {{1, 2}};
        case 'H': return {{1, 1}};
      }
    }
    if (n == 2) {
      switch (f) {
        case 'G': return {{1, 2}};
        case 'B': return {{2, 4}};
        case 'A': return {{1, 2}};
        case 'D': return {{1, 2}};
        case 'J': return {{2, 2}};
        case 'O': return {{3, 2}};
        case 'M': return {{2, 1}};
        case 'Q': return {{3, 1}};
        case 'F': return {{2, 3}};
        case 'H': return {{2, 3}};
      }
    }
    if (n == 3 && (f == 'G' || f == 'A')) return {{2, 5}};
    switch (f) {
      case 'G': return plus(get('B', n - 1), shift(get('A', n - 3), 3));
      case 'B': return plus(shift(get('G', n), 1), shift(get('A', n - 1), 2));
      case 'A': return plus(plus(shift(get('D', n - 1), 1), shift(get('D', n - 1), 1)), shift(get('A', n - 3), 3));
      case 'D': return plus(shift(get('D', n - 1), 1), shift(get('J', n - 2), 1));
      case 'J': return plus(get('O', n - 1), shift(get('D', n - 1), 2));
      case 'O': return plus(shift(get('D', n), 2), shift(get('Q', n - 1), 2));
      case 'M': return plus(shift(get('M', n - 1), 1), shift(get('F', n - 2), 2));
      case 'Q': return plus(shift(get('M', n), 1), shift(get('M', n - 1), 2));
      case 'F': return plus(shift(get('G', n), 1), shift(get('H', n - 1), 1));
      case 'H': return plus(shift(get('G', n), 1), shift(get('F', n - 2), 2));
    }
    return {};
  }
};

}  // namespace oracle
