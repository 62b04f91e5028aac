#include <doctest.h>

#include <random>

#include "../support/oracle.hpp"
#include "core/edge_list.hpp"
#include "core/families.hpp"
#include "core/isomorphism.hpp"
#include "helpers.hpp"

using namespace matchcx;
using testing::L;
using testing::S;
using testing::fam;

namespace {

Graph shuffled(const Graph& g, std::mt19937& rng) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 1);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::map<VertexLabel, VertexLabel> m;
  for (std::size_t i = 0; i < g.order(); ++i) m[g.label(i)] = VertexLabel::index(perm[i]);
  return relabel(g, [&](const VertexLabel& v) { return m.at(v); });
}

}  // namespace

TEST_SUITE("isomorphism") {

TEST_CASE("examples") {
  auto b1 = are_isomorphic(fam('B', 1), build_cycle(6));
  REQUIRE(b1.has_value());
  CHECK(is_isomorphism(fam('B', 1), build_cycle(6), *b1));
  CHECK_FALSE(are_isomorphic(build_path(3), build_cycle(3)).has_value());
  auto j = delete_vertices(fam('J', 2), S({"j3", "x1"}));
  auto w = are_isomorphic(j, fam('O', 1));
  REQUIRE(w.has_value());
  CHECK(is_isomorphism(j, fam('O', 1), *w));
}

TEST_CASE("agrees with permutation search on small graphs") {
  std::mt19937 rng(2024);
  int iso = 0, non = 0;
  for (int trial = 0; trial < 300; ++trial) {
    auto a = oracle::random_graph(rng, 8);
    oracle::Mask b;
    if (trial % 2 == 0) {
      b = oracle::from_graph(shuffled(oracle::to_graph(a), rng));
    } else {
      b = a;
      // flip one pair so the two usually differ
      if (a.n >= 2) {
        int x = rng() % a.n, y = (x + 1 + rng() % (a.n - 1)) % a.n;
        b.adj[x] ^= 1u << y;
        b.adj[y] ^= 1u << x;
      }
    }
    auto ga = oracle::to_graph(a), gb = oracle::to_graph(b);
    bool expected = oracle::isomorphic_bruteforce(a, b);
    auto got = are_isomorphic(ga, gb);
    CHECK(got.has_value() == expected);
    if (got) {
      CHECK(is_isomorphism(ga, gb, *got));
      ++iso;
    } else {
      ++non;
    }
  }
  CHECK(iso > 50);
  CHECK(non > 50);
}

TEST_CASE("reflexive and symmetric up to 12 vertices") {
  std::mt19937 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    auto g = oracle::to_graph(oracle::random_graph(rng, 12));
    auto h = shuffled(g, rng);
    CHECK(are_isomorphic(g, g).has_value());
    auto gh = are_isomorphic(g, h);
    auto hg = are_isomorphic(h, g);
    REQUIRE(gh.has_value());
    REQUIRE(hg.has_value());
    CHECK(is_isomorphism(h, g, *hg));
  }
}

TEST_CASE("deterministic output") {
  auto g = fam('H', 3), h = fam('H', 3);
  CHECK(are_isomorphic(g, h) == are_isomorphic(g, h));
}

TEST_CASE("regular graphs that colour refinement cannot split") {
  // C_6 versus two triangles: both 2-regular on six vertices
  auto two_triangles = parse_edge_list("1 2\n2 3\n1 3\n4 5\n5 6\n4 6\n");
  CHECK_FALSE(are_isomorphic(build_cycle(6), two_triangles).has_value());
  std::mt19937 rng(5);
  auto c = shuffled(build_cycle(12), rng);
  CHECK(are_isomorphic(build_cycle(12), c).has_value());
}

TEST_CASE("size limit") {
  auto big = build_path(65);
  CHECK_THROWS_AS(are_isomorphic(big, big), Error);
  try {
    are_isomorphic(big, big);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::SizeLimit);
  }
  CHECK(are_isomorphic(build_path(64), build_path(64)).has_value());
}

}  // TEST_SUITE

TEST_SUITE("edge_list") {

TEST_CASE("round trip") {
  for (auto f : kAllFamilies) {
    auto g = build_family(f, 3);
    CHECK(parse_edge_list(format_edge_list(g)) == g);
  }
  auto g = parse_edge_list("# comment\nv 9\n1 2  # trailing\n\n2 3\n");
  CHECK(g.order() == 4);
  CHECK(g.size() == 2);
  CHECK(parse_edge_list(format_edge_list(g)) == g);
}

TEST_CASE("errors carry line numbers") {
  try {
    parse_edge_list("1 2\n3\n");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Parse);
    CHECK(std::string(e.what()).find("2") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_edge_list("1 1\n"), Error);
  try {
    read_edge_list_file("/nonexistent/graph.edges");
    FAIL("expected an io error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Io);
  }
}

}  // TEST_SUITE
