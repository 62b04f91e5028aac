#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "core/complex.hpp"
#include "core/families.hpp"
#include "core/homology.hpp"
#include "helpers.hpp"

using namespace matchcx;
using testing::L;
using testing::S;
using testing::fam;

namespace {

// All faces of k, empty face included, as label sets.
std::set<LabelSet> all_faces(const SimplicialComplex& k) {
  std::set<LabelSet> out{{}};
  auto t = face_table(k);
  for (int d = 0; d <= t.max_dim(); ++d)
    for (std::size_t i = 0; i < t.count(d); ++i) {
      LabelSet s;
      for (auto x : t.face(d, i)) s.insert(t.vertices()[x]);
      out.insert(s);
    }
  return out;
}

std::set<LabelSet> independent_label_sets(const Graph& g) {
  auto m = oracle::from_graph(g);
  std::set<LabelSet> out;
  for (auto s : oracle::independent_sets(m)) {
    LabelSet f;
    for (int v = 0; v < m.n; ++v)
      if (s >> v & 1) f.insert(g.label(v));
    out.insert(f);
  }
  return out;
}

VertexLabel shifted(const VertexLabel& v, int by) { return VertexLabel::index(v.indices()[0] + by); }

}  // namespace

TEST_SUITE("complex") {

TEST_CASE("independence complex examples") {
  auto c3 = independence_complex(build_cycle(3));
  CHECK(c3.facet_labels() == std::vector<LabelSet>{{VertexLabel::index(1)}, {VertexLabel::index(2)}, {VertexLabel::index(3)}});
  auto p4 = independence_complex(build_path(4));
  auto i = [](int x) { return VertexLabel::index(x); };
  CHECK(p4.facet_labels() == std::vector<LabelSet>{{i(1), i(3)}, {i(1), i(4)}, {i(2), i(4)}});
  auto e = independence_complex(edgeless_graph(5));
  CHECK(e.facets().size() == 1);
  CHECK(e.dimension() == 4);
  CHECK(independence_complex(Graph{}).dimension() == -1);
}

TEST_CASE("faces are the independent sets") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    auto g = oracle::to_graph(oracle::random_graph(rng, 12));
    auto k = independence_complex(g);
    CHECK(k.satisfies_invariants());
    CHECK(k.vertices() == g.vertices());
    CHECK(all_faces(k) == independent_label_sets(g));
  }
}

TEST_CASE("matching complexes") {
  auto p2 = matching_complex(build_path(2));
  CHECK(p2.vertices().size() == 1);
  CHECK(p2.dimension() == 0);
  auto g31 = matching_complex(build_grid(3, 1));
  CHECK(g31.facets().size() == 2);
  CHECK(g31.dimension() == 0);
  CHECK(betti_reduced(g31).reduced == std::map<int, std::uint64_t>{{0, 1}});

  auto c6 = build_cycle(6);
  auto counts = face_table(matching_complex(c6)).counts();
  std::vector<std::pair<int, int>> edges;
  for (auto [a, b] : c6.edge_indices()) edges.emplace_back(int(a), int(b));
  auto expected = oracle::matching_counts(6, edges);
  REQUIRE(expected.size() == 4);
  CHECK(counts == std::vector<std::size_t>{std::size_t(expected[1]), std::size_t(expected[2]), std::size_t(expected[3])});
  CHECK(counts == std::vector<std::size_t>{6, 9, 2});

  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 4; ++n) {
      auto g = build_grid(m, n);
      auto k = matching_complex(g);
      CHECK(k.vertices().size() == g.size());
      CHECK(k == independence_complex(line_graph(g)));
    }
}

TEST_CASE("link and deletion examples") {
  auto k = independence_complex(fam('G', 3));
  CHECK(link(k, {}) == k);
  auto g2 = fam('G', 2);
  CHECK(link(independence_complex(g2), S({"w1"})) ==
        independence_complex(delete_vertices(g2, closed_neighborhood(g2, S({"w1"})))));
  auto ab = simplex(S({"1", "2"}));
  CHECK(link(ab, S({"1"})).facet_labels() == std::vector<LabelSet>{S({"2"})});
  CHECK(deletion(simplex(S({"1", "2", "3"})), S({"1"})) == simplex(S({"2", "3"})));
  auto two_points = SimplicialComplex::from_faces({S({"1"}), S({"2"})});
  CHECK(deletion(two_points, S({"1"})).facet_labels() == std::vector<LabelSet>{S({"2"})});
  CHECK_THROWS_AS(deletion(ab, {}), Error);
  CHECK_THROWS_AS(link(ab, S({"3"})), Error);
}

TEST_CASE("link/deletion identities on random graphs") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    auto g = oracle::to_graph(oracle::random_graph(rng, 10));
    auto k = independence_complex(g);
    auto faces = all_faces(k);
    for (const auto& v : g.vertices()) {
      LabelSet sv{v};
      auto del = deletion(k, sv);
      CHECK(del == independence_complex(delete_vertices(g, sv)));
      auto lk = link(k, sv);
      std::set<LabelSet> with_v, without_v;
      for (const auto& f : faces) (f.count(v) ? with_v : without_v).insert(f);
      CHECK(all_faces(del) == without_v);
      std::set<LabelSet> coned;
      for (auto f : all_faces(lk)) {
        f.insert(v);
        coned.insert(f);
      }
      CHECK(coned == with_v);
    }
  }
}

TEST_CASE("join, cone and suspension") {
  auto pt1 = simplex(S({"1"})), pt2 = simplex(S({"2"}));
  CHECK(join(pt1, pt2) == simplex(S({"1", "2"})));
  CHECK_THROWS_AS(join(pt1, pt1), Error);
  auto s0 = SimplicialComplex::from_faces({S({"1"}), S({"2"})});
  auto s1 = suspension(s0, L("3"), L("4"));
  CHECK(s1.facets().size() == 4);
  CHECK(betti_reduced(s1).reduced == std::map<int, std::uint64_t>{{1, 1}});
  CHECK_THROWS_AS(suspension(s0, L("1"), L("5")), Error);
  CHECK(euler_characteristic_reduced(cone(independence_complex(fam('G', 3)), L("z9"))) == 0);
}

TEST_CASE("independence complex of a disjoint union is the join") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 60; ++trial) {
    auto a = oracle::to_graph(oracle::random_graph(rng, 8));
    auto b = relabel(oracle::to_graph(oracle::random_graph(rng, 8)),
                     [](const VertexLabel& v) { return shifted(v, 100); });
    auto u = disjoint_union(a, b);
    auto ka = independence_complex(a), kb = independence_complex(b);
    CHECK(independence_complex(u) == join(ka, kb));
    CHECK(join(ka, kb) == join(kb, ka));
    CHECK(betti_reduced(independence_complex(u)) == betti_reduced(join(ka, kb)));
  }
}

TEST_CASE("join is associative") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    auto a = independence_complex(oracle::to_graph(oracle::random_graph(rng, 5)));
    auto b = independence_complex(relabel(oracle::to_graph(oracle::random_graph(rng, 5)),
                                          [](const VertexLabel& v) { return shifted(v, 10); }));
    auto c = independence_complex(relabel(oracle::to_graph(oracle::random_graph(rng, 5)),
                                          [](const VertexLabel& v) { return shifted(v, 20); }));
    CHECK(join(join(a, b), c) == join(a, join(b, c)));
  }
}

TEST_CASE("face tables") {
  CHECK(face_table(simplex(S({"1", "2", "3"}))).counts() == std::vector<std::size_t>{3, 3, 1});
  CHECK(face_table(independence_complex(build_cycle(6))).counts() == std::vector<std::size_t>{6, 9, 2});
  auto mc = matching_complex(build_grid(3, 3));
  auto t = face_table(mc);
  CHECK(t.total() > 0);
  CHECK(euler_characteristic_reduced(t) == 5);
  // every stored face is found again and every boundary face is stored
  for (int d = 0; d <= t.max_dim(); ++d)
    for (std::size_t i = 0; i < t.count(d); ++i) {
      auto f = t.face(d, i);
      CHECK(t.find(d, f) == i);
      if (d == 0) continue;
      for (std::size_t drop = 0; drop < f.size(); ++drop) {
        std::vector<std::uint32_t> sub;
        for (std::size_t j = 0; j < f.size(); ++j)
          if (j != drop) sub.push_back(f[j]);
        CHECK(t.find(d - 1, sub).has_value());
      }
    }
}

TEST_CASE("face budget") {
  auto k = independence_complex(fam('G', 4));
  try {
    face_table(k, std::nullopt, 50);
    FAIL("expected a resource error");
  } catch (const ResourceError& e) {
    CHECK(e.code() == ErrorCode::Resource);
    CHECK(e.dimension() >= 0);
  }
  CHECK_THROWS_AS(independence_complex(fam('G', 5), 3), ResourceError);
}

TEST_CASE("euler characteristic") {
  CHECK(euler_characteristic_reduced(simplex(S({"1"}))) == 0);
  CHECK(euler_characteristic_reduced(independence_complex(build_cycle(6))) == -2);
  CHECK(euler_characteristic_reduced(matching_complex(build_grid(3, 3))) == 5);
  CHECK(euler_characteristic_reduced(SimplicialComplex{}) == -1);
}

TEST_CASE("export format") {
  auto text = format_facets(independence_complex(build_path(4)), "P4");
  CHECK(text == "# facets of P4\n1 3\n1 4\n2 4\n");
}

}  // TEST_SUITE
