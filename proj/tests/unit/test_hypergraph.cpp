#include "doctest.h"

#include "berge/errors.hpp"
#include "berge/extremal.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "oracles.hpp"

using namespace berge;
using berge::testing::count_degree;
using berge::testing::random_hypergraph;
using berge::testing::scan_shadow;

TEST_SUITE("hypergraph-core") {

TEST_CASE("degree of a single edge") {
  const Hypergraph h(3, 3, {{0, 1, 2}});
  CHECK(degree(h, 0) == 1);
  CHECK_THROWS_AS(degree(h, 3), InputError);
  CHECK_THROWS_AS(degree(h, -1), InputError);
}

TEST_CASE("construction 3 is 3-regular") {
  const Hypergraph h = construction_3(6);
  for (Vertex v = 0; v < 12; ++v) {
    CHECK(degree(h, v) == count_degree(h, v));
    CHECK(degree(h, v) == 3);
  }
}

TEST_CASE("construction 1 degrees") {
  const Hypergraph h = construction_1(11, 3);
  // Vertex 5 is shared; every other vertex sees only its own clique.
  for (Vertex v = 0; v < 11; ++v) {
    if (v == 5) continue;
    CHECK(degree(h, v) == 10);
  }
  CHECK(degree(h, 5) == 20);
}

TEST_CASE("minimum degree examples") {
  CHECK(min_degree(complete_hypergraph(5, 3)) == 6);
  CHECK(min_degree(construction_2(11, 3)) == 10);
  const Hypergraph c1 = construction_1(12, 3);
  int oracle = 1 << 30;
  for (Vertex v = 0; v < 12; ++v) oracle = std::min(oracle, count_degree(c1, v));
  CHECK(min_degree(c1) == oracle);
  CHECK(min_degree(c1) == 10);
  const auto prof = degree_profile(c1);
  CHECK(prof.minimum == 10);
}

TEST_CASE("empty vertex set is rejected") {
  CHECK_THROWS_AS(Hypergraph(0, 0, {}), InputError);
}

TEST_CASE("two-shadow of a single edge is a triangle") {
  const Graph g = two_shadow(Hypergraph(3, 3, {{0, 1, 2}}));
  CHECK(g == complete_graph(3));
}

TEST_CASE("two-shadow of construction 1 is two cliques sharing a vertex") {
  const Hypergraph h = construction_1(11, 3);
  const Graph g = two_shadow(h);
  CHECK(g == scan_shadow(h));
  Graph expect(11);
  for (Vertex u = 0; u < 6; ++u)
    for (Vertex v = u + 1; v < 6; ++v) expect.add_edge(u, v);
  for (Vertex u = 5; u < 11; ++u)
    for (Vertex v = u + 1; v < 11; ++v) expect.add_edge(u, v);
  CHECK(g == expect);
}

TEST_CASE("two-shadow of construction 3") {
  const int k = 6;
  const int n = 2 * k;
  const Hypergraph h = construction_3(k);
  const Graph g = two_shadow(h);
  CHECK(g == scan_shadow(h));
  for (Vertex i = 0; i < n; ++i) {
    for (int d : {1, k - 1, k}) {
      CHECK(g.has_edge(i, (i + d) % n));
      CHECK(g.has_edge(i, (i - d + n) % n));
    }
    CHECK(g.degree(i) == 5);  // i +- 1, i +- (k-1), and i + k = i - k
  }
}

TEST_CASE("parse a 2-uniform path") {
  const Hypergraph h = parse_hypergraph("3 2\ne 0 1\ne 1 2");
  CHECK(h.order() == 3);
  CHECK(h.uniformity() == 2);
  CHECK(h.edge_count() == 2);
  CHECK(degree(h, 1) == 2);
}

TEST_CASE("parse errors name the line") {
  try {
    parse_hypergraph("3 3\ne 0 1");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  try {
    parse_hypergraph("# header\n4 2\ne 0 1\ne 2 3\ne 1 0\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 5);
  }
  CHECK_THROWS_AS(parse_hypergraph("3 2\nx 0 1"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph("3 2\ne 0 z"), ParseError);
  CHECK_THROWS_AS(parse_hypergraph(""), ParseError);
}

TEST_CASE("serialization is canonical and round-trips") {
  const Hypergraph h = parse_hypergraph("# x\n5 3\ne 4 2 0\ne 1 0 2\n\ne 3 1 2\n");
  const std::string canon = serialize_hypergraph(h);
  CHECK(canon == "5 3\ne 0 1 2\ne 0 2 4\ne 1 2 3\n");
  CHECK(parse_hypergraph(canon) == h);
  Rng rng(5);
  for (int t = 0; t < 50; ++t) {
    const Hypergraph g = random_hypergraph(rng, 9, 2 + t % 4, 1 + t % 17);
    CHECK(parse_hypergraph(serialize_hypergraph(g)) == g);
  }
}

TEST_CASE("handshake, shadow monotonicity and shadow edge bound") {
  Rng rng(11);
  for (int t = 0; t < 100; ++t) {
    const int n = 5 + t % 6;
    const int r = 2 + t % 3;
    const Hypergraph h = random_hypergraph(rng, n, r, 2 + t % 12);
    long sum = 0;
    for (Vertex v = 0; v < n; ++v) sum += degree(h, v);
    CHECK(sum == static_cast<long>(r) * h.edge_count());

    auto sub_edges = h.edges();
    sub_edges.resize(sub_edges.size() / 2);
    const Hypergraph sub(n, r, sub_edges);
    const Graph big = two_shadow(h);
    const Graph small = two_shadow(sub);
    for (const auto& e : small.edges()) CHECK(big.has_edge(e.u, e.v));

    const std::size_t bound = static_cast<std::size_t>(h.edge_count()) * binomial(r, 2);
    CHECK(big.edge_count() <= bound);
    bool shared = false;
    for (int a = 0; a < h.edge_count() && !shared; ++a)
      for (int b = a + 1; b < h.edge_count() && !shared; ++b)
        shared = (h.edge_set(a) & h.edge_set(b)).count() >= 2;
    CHECK((big.edge_count() == bound) == !shared);
  }
}

TEST_CASE("binomial and threshold") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(6, 4) == 15);
  CHECK(binomial(3, 5) == 0);
  CHECK(degree_threshold(11, 3) == 11);
  CHECK(degree_threshold(13, 5) == 16);
}

}  // TEST_SUITE
