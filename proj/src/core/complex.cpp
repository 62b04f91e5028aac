#include "core/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace matchcx {

namespace {

// Just enough of a dynamic bitset for Bron–Kerbosch.
class Bits {
 public:
  explicit Bits(std::size_t n = 0) : w_((n + 63) / 64, 0) {}
  void set(std::size_t i) { w_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { w_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (w_[i / 64] >> (i % 64)) & 1; }
  bool none() const {
    return std::all_of(w_.begin(), w_.end(), [](auto x) { return x == 0; });
  }
  Bits operator&(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= o.w_[i];
    return r;
  }
  Bits minus(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] &= ~o.w_[i];
    return r;
  }
  Bits operator|(const Bits& o) const {
    Bits r = *this;
    for (std::size_t i = 0; i < w_.size(); ++i) r.w_[i] |= o.w_[i];
    return r;
  }
  std::size_t count_and(const Bits& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i) c += static_cast<std::size_t>(std::popcount(w_[i] & o.w_[i]));
    return c;
  }
  template <typename F>
  void for_each(F f) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      for (auto x = w_[i]; x; x &= x - 1) f(i * 64 + static_cast<std::size_t>(std::countr_zero(x)));
  }

 private:
  std::vector<std::uint64_t> w_;
};

struct MisEnumerator {
  std::vector<Bits> compat;  // non-neighbours, excluding self
  std::vector<Facet> out;
  std::uint64_t budget;
  Facet current;

  void run(Bits p, Bits x) {
    if (p.none() && x.none()) {
      if (out.size() >= budget)
        throw ResourceError("independence complex exceeds face budget", static_cast<int>(current.size()) - 1);
      out.push_back(current);
      return;
    }
    // Tomita pivot: vertex of P ∪ X with most candidates in its compat set.
    std::size_t pivot = 0, best = 0;
    bool first = true;
    (p | x).for_each([&](std::size_t u) {
      auto c = p.count_and(compat[u]);
      if (first || c > best) {
        pivot = u;
        best = c;
        first = false;
      }
    });
    auto todo = p.minus(compat[pivot]);
    todo.for_each([&](std::size_t v) {
      current.push_back(static_cast<std::uint32_t>(v));
      run(p & compat[v], x & compat[v]);
      current.pop_back();
      p.reset(v);
      x.set(v);
    });
  }
};

bool lex_less(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Removes faces contained in another face. Input faces are sorted and unique.
std::vector<Facet> maximal_only(std::vector<Facet> faces, std::size_t nverts) {
  std::stable_sort(faces.begin(), faces.end(),
                   [](const Facet& a, const Facet& b) { return a.size() > b.size(); });
  std::vector<Facet> kept;
  std::vector<std::vector<std::size_t>> occurs(nverts);
  for (auto& f : faces) {
    bool covered = false;
    if (f.empty()) {
      covered = !kept.empty();
    } else {
      auto pick = *std::min_element(f.begin(), f.end(), [&](auto a, auto b) {
        return occurs[a].size() < occurs[b].size();
      });
      for (auto idx : occurs[pick]) {
        const auto& g = kept[idx];
        if (std::includes(g.begin(), g.end(), f.begin(), f.end())) {
          covered = true;
          break;
        }
      }
    }
    if (covered) continue;
    for (auto v : f) occurs[v].push_back(kept.size());
    kept.push_back(std::move(f));
  }
  return kept;
}

std::vector<std::uint32_t> indices_of(const SimplicialComplex& k, const LabelSet& s, bool& ok) {
  std::vector<std::uint32_t> out;
  ok = true;
  for (const auto& v : s) {
    auto it = std::lower_bound(k.vertices().begin(), k.vertices().end(), v);
    if (it == k.vertices().end() || *it != v) {
      ok = false;
      return {};
    }
    out.push_back(static_cast<std::uint32_t>(it - k.vertices().begin()));
  }
  return out;
}

std::string describe(const LabelSet& s) {
  std::string out = "{";
  for (const auto& v : s) out += (out.size() > 1 ? "," : "") + v.spelling();
  return out + "}";
}

}  // namespace

SimplicialComplex::SimplicialComplex() : facets_{Facet{}} {}

SimplicialComplex SimplicialComplex::from_index_faces(const std::vector<VertexLabel>& vertices,
                                                      std::vector<Facet> faces, bool already_maximal) {
  for (auto& f : faces) {
    std::sort(f.begin(), f.end());
    f.erase(std::unique(f.begin(), f.end()), f.end());
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  if (!already_maximal) faces = maximal_only(std::move(faces), vertices.size());

  std::vector<bool> used(vertices.size(), false);
  for (const auto& f : faces)
    for (auto v : f) used[v] = true;
  std::vector<std::uint32_t> remap(vertices.size(), 0);
  SimplicialComplex k;
  k.vertices_.clear();
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!used[i]) continue;
    remap[i] = static_cast<std::uint32_t>(k.vertices_.size());
    k.vertices_.push_back(vertices[i]);
  }
  for (auto& f : faces)
    for (auto& v : f) v = remap[v];
  std::sort(faces.begin(), faces.end());
  if (faces.empty()) faces.push_back({});
  k.facets_ = std::move(faces);
  return k;
}

SimplicialComplex SimplicialComplex::from_faces(const std::vector<LabelSet>& faces) {
  LabelSet all;
  for (const auto& f : faces) all.insert(f.begin(), f.end());
  std::vector<VertexLabel> vs(all.begin(), all.end());
  std::vector<Facet> idx;
  for (const auto& f : faces) {
    Facet g;
    for (const auto& v : f)
      g.push_back(static_cast<std::uint32_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin()));
    idx.push_back(std::move(g));
  }
  return from_index_faces(vs, std::move(idx));
}

std::vector<LabelSet> SimplicialComplex::facet_labels() const {
  std::vector<LabelSet> out;
  for (const auto& f : facets_) {
    LabelSet s;
    for (auto v : f) s.insert(vertices_[v]);
    out.push_back(std::move(s));
  }
  return out;
}

int SimplicialComplex::dimension() const noexcept {
  std::size_t top = 0;
  for (const auto& f : facets_) top = std::max(top, f.size());
  return static_cast<int>(top) - 1;
}

bool SimplicialComplex::is_face(const LabelSet& s) const {
  bool ok = false;
  auto idx = indices_of(*this, s, ok);
  if (!ok) return false;
  return std::any_of(facets_.begin(), facets_.end(), [&](const Facet& f) {
    return std::includes(f.begin(), f.end(), idx.begin(), idx.end());
  });
}

bool SimplicialComplex::satisfies_invariants() const {
  if (facets_.empty()) return false;
  if (!std::is_sorted(vertices_.begin(), vertices_.end())) return false;
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) return false;
  std::vector<bool> seen(vertices_.size(), false);
  for (std::size_t i = 0; i < facets_.size(); ++i) {
    const auto& f = facets_[i];
    if (std::adjacent_find(f.begin(), f.end(), std::greater_equal<>()) != f.end()) return false;
    for (auto v : f) {
      if (v >= vertices_.size()) return false;
      seen[v] = true;
    }
    if (i > 0 && !(facets_[i - 1] < f)) return false;
    for (std::size_t j = 0; j < facets_.size(); ++j)
      if (i != j && std::includes(facets_[j].begin(), facets_[j].end(), f.begin(), f.end()))
        return false;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

SimplicialComplex independence_complex(const Graph& g, std::uint64_t budget) {
  auto n = g.order();
  if (n == 0) return SimplicialComplex{};
  MisEnumerator e;
  e.budget = budget;
  e.compat.assign(n, Bits(n));
  for (std::size_t v = 0; v < n; ++v)
    for (std::size_t w = 0; w < n; ++w)
      if (v != w && !g.adjacent(v, w)) e.compat[v].set(w);
  Bits all(n);
  for (std::size_t v = 0; v < n; ++v) all.set(v);
  e.run(all, Bits(n));
  return SimplicialComplex::from_index_faces(g.vertices(), std::move(e.out), true);
}

SimplicialComplex matching_complex(const Graph& g, std::uint64_t budget) {
  return independence_complex(line_graph(g), budget);
}

SimplicialComplex link(const SimplicialComplex& k, const LabelSet& sigma) {
  bool ok = false;
  auto s = indices_of(k, sigma, ok);
  if (!ok) fail(ErrorCode::InvalidParameter, "link: " + describe(sigma) + " is not a face");
  std::vector<Facet> faces;
  for (const auto& f : k.facets()) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) continue;
    Facet rest;
    std::set_difference(f.begin(), f.end(), s.begin(), s.end(), std::back_inserter(rest));
    faces.push_back(std::move(rest));
  }
  if (faces.empty()) fail(ErrorCode::InvalidParameter, "link: " + describe(sigma) + " is not a face");
  return SimplicialComplex::from_index_faces(k.vertices(), std::move(faces));
}

SimplicialComplex deletion(const SimplicialComplex& k, const LabelSet& sigma) {
  if (sigma.empty()) fail(ErrorCode::InvalidParameter, "deletion of the empty face");
  if (!k.is_face(sigma)) fail(ErrorCode::InvalidParameter, "deletion: " + describe(sigma) + " is not a face");
  bool ok = false;
  auto s = indices_of(k, sigma, ok);
  std::vector<Facet> faces;
  for (const auto& f : k.facets()) {
    if (!std::includes(f.begin(), f.end(), s.begin(), s.end())) {
      faces.push_back(f);
      continue;
    }
    for (auto v : s) {
      Facet rest;
      std::copy_if(f.begin(), f.end(), std::back_inserter(rest), [v](auto x) { return x != v; });
      faces.push_back(std::move(rest));
    }
  }
  return SimplicialComplex::from_index_faces(k.vertices(), std::move(faces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  for (const auto& v : b.vertices())
    if (std::binary_search(a.vertices().begin(), a.vertices().end(), v))
      fail(ErrorCode::InvalidParameter, "join: vertex collision at " + v.spelling());
  std::vector<VertexLabel> vs = a.vertices();
  vs.insert(vs.end(), b.vertices().begin(), b.vertices().end());
  std::sort(vs.begin(), vs.end());
  auto pos = [&](const VertexLabel& v) {
    return static_cast<std::uint32_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::uint32_t> ma, mb;
  for (const auto& v : a.vertices()) ma.push_back(pos(v));
  for (const auto& v : b.vertices()) mb.push_back(pos(v));
  std::vector<Facet> faces;
  for (const auto& f : a.facets())
    for (const auto& g : b.facets()) {
      Facet u;
      for (auto v : f) u.push_back(ma[v]);
      for (auto v : g) u.push_back(mb[v]);
      faces.push_back(std::move(u));
    }
  return SimplicialComplex::from_index_faces(vs, std::move(faces), true);
}

SimplicialComplex simplex(const LabelSet& vs) { return SimplicialComplex::from_faces({vs}); }

SimplicialComplex cone(const SimplicialComplex& k, const VertexLabel& apex) {
  return join(k, simplex({apex}));
}

SimplicialComplex suspension(const SimplicialComplex& k, const VertexLabel& north,
                             const VertexLabel& south) {
  if (north == south) fail(ErrorCode::InvalidParameter, "suspension: poles must differ");
  return join(k, SimplicialComplex::from_faces({{north}, {south}}));
}

std::size_t FaceTable::count(int d) const {
  if (d < 0 || d > max_dim()) return 0;
  return data_[static_cast<std::size_t>(d)].size() / static_cast<std::size_t>(d + 1);
}

std::vector<std::size_t> FaceTable::counts() const {
  std::vector<std::size_t> out;
  for (int d = 0; d <= max_dim(); ++d) out.push_back(count(d));
  return out;
}

std::uint64_t FaceTable::total() const noexcept {
  std::uint64_t t = 0;
  for (int d = 0; d <= max_dim(); ++d) t += count(d);
  return t;
}

std::span<const std::uint32_t> FaceTable::face(int d, std::size_t i) const {
  auto w = static_cast<std::size_t>(d + 1);
  return std::span<const std::uint32_t>(data_.at(static_cast<std::size_t>(d))).subspan(i * w, w);
}

std::optional<std::size_t> FaceTable::find(int d, std::span<const std::uint32_t> f) const {
  if (d < 0 || d > max_dim() || f.size() != static_cast<std::size_t>(d + 1)) return std::nullopt;
  std::size_t lo = 0, hi = count(d);
  while (lo < hi) {
    auto mid = (lo + hi) / 2;
    if (lex_less(face(d, mid), f))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo < count(d) && std::equal(f.begin(), f.end(), face(d, lo).begin())) return lo;
  return std::nullopt;
}

FaceTable face_table(const SimplicialComplex& k, std::optional<int> max_dim, std::uint64_t budget) {
  FaceTable t;
  t.vertices_ = k.vertices();
  int top = k.dimension();
  if (top < 0) return t;
  int keep = max_dim ? std::min(*max_dim, top) : top;
  if (keep < 0) return t;
  t.data_.resize(static_cast<std::size_t>(keep + 1));

  std::vector<std::uint32_t> upper;  // faces of dimension d+1, flat
  std::uint64_t total = 0;
  for (int d = top; d >= 0; --d) {
    auto w = static_cast<std::size_t>(d + 1);
    std::vector<std::uint32_t> cand;
    for (const auto& f : k.facets())
      if (f.size() == w) cand.insert(cand.end(), f.begin(), f.end());
    for (std::size_t i = 0; i + w + 1 <= upper.size(); i += w + 1)
      for (std::size_t skip = 0; skip <= w; ++skip)
        for (std::size_t j = 0; j <= w; ++j)
          if (j != skip) cand.push_back(upper[i + j]);
    if (cand.size() / w > 4 * budget)
      throw ResourceError("face enumeration exceeds budget in dimension " + std::to_string(d), d);

    auto n = cand.size() / w;
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    auto at = [&](std::size_t i) { return std::span<const std::uint32_t>(cand).subspan(i * w, w); };
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return lex_less(at(a), at(b)); });
    std::vector<std::uint32_t> faces;
    faces.reserve(cand.size());
    for (std::size_t r = 0; r < n; ++r) {
      if (r > 0 && std::ranges::equal(at(order[r]), at(order[r - 1]))) continue;
      auto f = at(order[r]);
      faces.insert(faces.end(), f.begin(), f.end());
    }
    total += faces.size() / w;
    if (total > budget)
      throw ResourceError("face enumeration exceeds budget in dimension " + std::to_string(d), d);
    upper = faces;
    if (d <= keep) t.data_[static_cast<std::size_t>(d)] = std::move(faces);
  }
  return t;
}

long long euler_characteristic_reduced(const FaceTable& t) {
  long long chi = -1;
  for (int d = 0; d <= t.max_dim(); ++d)
    chi += (d % 2 == 0 ? 1 : -1) * static_cast<long long>(t.count(d));
  return chi;
}

long long euler_characteristic_reduced(const SimplicialComplex& k, std::uint64_t budget) {
  return euler_characteristic_reduced(face_table(k, std::nullopt, budget));
}

std::string format_facets(const SimplicialComplex& k, const std::string& name) {
  std::string out = "# facets of " + name + "\n";
  for (const auto& f : k.facets()) {
    std::string line;
    for (auto v : f) line += (line.empty() ? "" : " ") + k.vertices()[v].spelling();
    out += line + "\n";
  }
  return out;
}

}  // namespace matchcx
