#include "core/isomorphism.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace matchcx {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> masks_of(const Graph& g) {
  std::vector<Mask> m(g.order(), 0);
  for (std::size_t i = 0; i < g.order(); ++i)
    for (auto j : g.neighbors(i)) m[i] |= Mask{1} << j;
  return m;
}

// 1-WL colour refinement run on both graphs at once so colours are comparable.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& g, const Graph& h) {
  auto n = g.order();
  std::vector<int> cg(n), ch(n);
  for (std::size_t i = 0; i < n; ++i) {
    cg[i] = static_cast<int>(g.degree(i));
    ch[i] = static_cast<int>(h.degree(i));
  }
  std::size_t classes = 0;
  for (;;) {
    std::map<std::pair<int, std::vector<int>>, int> ids;
    auto signature = [](const Graph& gr, const std::vector<int>& col, std::size_t v) {
      std::vector<int> nb;
      for (auto w : gr.neighbors(v)) nb.push_back(col[w]);
      std::sort(nb.begin(), nb.end());
      return std::make_pair(col[v], std::move(nb));
    };
    std::vector<std::pair<int, std::vector<int>>> sg, sh;
    for (std::size_t v = 0; v < n; ++v) {
      sg.push_back(signature(g, cg, v));
      sh.push_back(signature(h, ch, v));
    }
    for (auto& s : sg) ids.emplace(s, 0);
    for (auto& s : sh) ids.emplace(s, 0);
    int next = 0;
    for (auto& [k, v] : ids) v = next++;
    for (std::size_t v = 0; v < n; ++v) {
      cg[v] = ids[sg[v]];
      ch[v] = ids[sh[v]];
    }
    if (ids.size() == classes) break;
    classes = ids.size();
  }
  return {cg, ch};
}

struct Search {
  const std::vector<Mask>& ag;
  const std::vector<Mask>& ah;
  const std::vector<int>& cg;
  const std::vector<int>& ch;
  std::vector<int> map;       // g -> h
  std::vector<bool> used;
  std::vector<std::size_t> order;

  bool extend(std::size_t depth, Mask mapped_g) {
    if (depth == order.size()) return true;
    auto v = order[depth];
    for (std::size_t w = 0; w < ah.size(); ++w) {
      if (used[w] || ch[w] != cg[v]) continue;
      bool ok = true;
      for (Mask rest = mapped_g; rest && ok; rest &= rest - 1) {
        auto u = static_cast<std::size_t>(std::countr_zero(rest));
        bool eg = (ag[v] >> u) & 1;
        bool eh = (ah[w] >> map[u]) & 1;
        ok = eg == eh;
      }
      if (!ok) continue;
      map[v] = static_cast<int>(w);
      used[w] = true;
      if (extend(depth + 1, mapped_g | (Mask{1} << v))) return true;
      used[w] = false;
      map[v] = -1;
    }
    return false;
  }
};

}  // namespace

std::optional<VertexBijection> are_isomorphic(const Graph& g, const Graph& h) {
  if (g.order() > kIsomorphismVertexLimit || h.order() > kIsomorphismVertexLimit)
    fail(ErrorCode::SizeLimit, "isomorphism search is limited to 64 vertices");
  if (g.order() != h.order() || g.size() != h.size()) return std::nullopt;
  auto n = g.order();
  auto [cg, ch] = refine(g, h);
  auto hg = cg, hh = ch;
  std::sort(hg.begin(), hg.end());
  std::sort(hh.begin(), hh.end());
  if (hg != hh) return std::nullopt;

  auto ag = masks_of(g);
  auto ah = masks_of(h);
  std::vector<std::size_t> class_size(n + 1, 0);
  for (auto c : cg) ++class_size[static_cast<std::size_t>(c)];

  // Visit order: prefer vertices adjacent to already placed ones, then rare colours.
  std::vector<std::size_t> order;
  Mask placed = 0;
  while (order.size() < n) {
    std::size_t best = n;
    std::tuple<int, std::size_t, std::size_t> best_key{};
    for (std::size_t v = 0; v < n; ++v) {
      if ((placed >> v) & 1) continue;
      std::tuple<int, std::size_t, std::size_t> key{-std::popcount(ag[v] & placed),
                                                    class_size[static_cast<std::size_t>(cg[v])], v};
      if (best == n || key < best_key) {
        best = v;
        best_key = key;
      }
    }
    order.push_back(best);
    placed |= Mask{1} << best;
  }

  Search s{ag, ah, cg, ch, std::vector<int>(n, -1), std::vector<bool>(n, false), order};
  if (!s.extend(0, 0)) return std::nullopt;
  VertexBijection out;
  for (std::size_t v = 0; v < n; ++v) out.emplace(g.label(v), h.label(static_cast<std::size_t>(s.map[v])));
  return out;
}

bool is_isomorphism(const Graph& g, const Graph& h, const VertexBijection& map) {
  if (g.order() != h.order() || map.size() != g.order()) return false;
  LabelSet image;
  for (const auto& [a, b] : map) {
    if (!g.contains(a) || !h.contains(b)) return false;
    image.insert(b);
  }
  if (image.size() != h.order()) return false;
  for (auto [i, j] : g.edge_indices())
    if (!h.adjacent(map.at(g.label(i)), map.at(g.label(j)))) return false;
  return g.size() == h.size();
}

}  // namespace matchcx
