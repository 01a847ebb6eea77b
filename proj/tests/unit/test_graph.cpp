#include "doctest.h"

#include <algorithm>

#include "berge/errors.hpp"
#include "berge/extremal.hpp"
#include "berge/graph.hpp"
#include "berge/random.hpp"
#include "oracles.hpp"

using namespace berge;
using berge::testing::cycle_length_mask;
using berge::testing::enumerate_has_cycle;
using berge::testing::oracle_hamiltonian_path;

namespace {

Graph random_graph(Rng& rng, int n, double p) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.chance(p)) g.add_edge(u, v);
  return g;
}

Graph two_cliques_sharing(int size) {
  Graph g(2 * size - 1);
  for (Vertex u = 0; u < size; ++u)
    for (Vertex v = u + 1; v < size; ++v) g.add_edge(u, v);
  for (Vertex u = size - 1; u < 2 * size - 1; ++u)
    for (Vertex v = u + 1; v < 2 * size - 1; ++v) g.add_edge(u, v);
  return g;
}

}  // namespace

TEST_SUITE("graph-analysis") {

TEST_CASE("cycle search examples") {
  const Graph c5 = cycle_graph(5);
  const auto five = find_cycle_of_length(c5, 5);
  REQUIRE(five.found());
  CHECK(five.witness->vertices == std::vector<Vertex>{0, 1, 2, 3, 4});
  CHECK(find_cycle_of_length(c5, 3).absent());
  const Graph k4 = complete_graph(4);
  CHECK(find_cycle_of_length(k4, 3).found());
  CHECK(find_cycle_of_length(k4, 4).found());
  CHECK_THROWS_AS(find_cycle_of_length(k4, 2), InputError);
  CHECK_THROWS_AS(find_cycle_of_length(k4, 5), InputError);
}

TEST_CASE("budget exhaustion is unknown, never absent") {
  // Two 5-cliques sharing a vertex: no spanning cycle, but the tree is
  // not trivially empty.
  const Graph g = two_cliques_sharing(5);
  const auto res = find_cycle_of_length(g, 9, 20);
  CHECK(res.unknown());
  CHECK(res.stats.expanded <= 21);
  CHECK(find_cycle_of_length(g, 9).absent());
}

TEST_CASE("girth, circumference, triangles, bipartiteness") {
  const Graph c6 = cycle_graph(6);
  CHECK(girth(c6) == 6);
  CHECK(circumference(c6).witness->length() == 6);
  CHECK(is_bipartite(c6));
  CHECK_FALSE(has_triangle(c6));

  const Graph k33 = complete_bipartite_graph(3, 3);
  CHECK(girth(k33) == 4);
  CHECK(circumference(k33).witness->length() == 6);
  CHECK(is_bipartite(k33));
  CHECK(edge_count(k33) == 9);

  const Graph cliques = two_cliques_sharing(6);
  const auto circ = circumference(cliques);
  REQUIRE(circ.found());
  CHECK(circ.witness->length() == 6);
  const auto mask = cycle_length_mask(cliques);
  CHECK((mask >> 7) == 0u);
  CHECK(((mask >> 6) & 1u) == 1u);

  CHECK_FALSE(girth(path_graph(5)).has_value());
  CHECK(circumference(path_graph(5)).absent());
}

TEST_CASE("hamiltonian cycle examples") {
  for (int n = 3; n <= 8; ++n) {
    const auto res = hamiltonian_cycle(cycle_graph(n));
    REQUIRE(res.found());
    CHECK(is_cycle_in(cycle_graph(n), *res.witness));
  }
  CHECK(hamiltonian_cycle(complete_bipartite_graph(3, 4)).absent());
}

TEST_CASE("generated Voss graphs are nonhamiltonian") {
  for (auto cls : {VossClass::G1, VossClass::G2, VossClass::G3, VossClass::G4, VossClass::G5}) {
    for (int k = 3; k <= 4; ++k) {
      const auto inst = generate_voss(cls, k, {false, static_cast<std::uint64_t>(k), false});
      CHECK(hamiltonian_cycle(inst.graph).absent());
    }
  }
}

TEST_CASE("pancyclicity certificates") {
  const auto k5 = pancyclicity_certificate_graph(complete_graph(5));
  CHECK(k5.complete(5));
  CHECK(k5.cycles.size() == 3);
  const auto k33 = pancyclicity_certificate_graph(complete_bipartite_graph(3, 3));
  CHECK(k33.first_missing() == 3);

  Graph chord = cycle_graph(6);
  chord.add_edge(0, 3);
  const auto cert = pancyclicity_certificate_graph(chord);
  CHECK(cert.first_missing() == 3);
  CHECK(std::find(cert.absent.begin(), cert.absent.end(), 5) != cert.absent.end());
  CHECK_FALSE(enumerate_has_cycle(chord, 5));
  CHECK(enumerate_has_cycle(chord, 4));
  CHECK(cert.cycles.count(4) == 1);
  CHECK(cert.cycles.count(6) == 1);
}

TEST_CASE("hamiltonian closure") {
  CHECK(hamiltonian_closure(cycle_graph(4)) == complete_graph(4));
  CHECK(hamiltonian_closure(cycle_graph(5)) == cycle_graph(5));
  Graph k6m = complete_graph(6);
  k6m.remove_edge(0, 1);
  k6m.remove_edge(2, 3);
  k6m.remove_edge(4, 5);
  CHECK(hamiltonian_closure(k6m) == complete_graph(6));
}

TEST_CASE("closure soundness and order independence on random graphs") {
  Rng rng(2024);
  for (int t = 0; t < 150; ++t) {
    const int n = 5 + t % 5;
    const Graph g = random_graph(rng, n, 0.35 + 0.05 * (t % 5));
    const Graph cl = hamiltonian_closure(g);
    const bool ham_g = (cycle_length_mask(g) >> n) & 1u;
    const bool ham_cl = (cycle_length_mask(cl) >> n) & 1u;
    CHECK(ham_g == ham_cl);

    // Same rule applied in a shuffled pair order.
    Graph alt = g;
    std::vector<VertexPair> pairs;
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = u + 1; v < n; ++v) pairs.push_back({u, v});
    for (bool changed = true; changed;) {
      changed = false;
      rng.shuffle(pairs);
      for (auto p : pairs) {
        if (!alt.has_edge(p.u, p.v) && alt.degree(p.u) + alt.degree(p.v) >= n) {
          alt.add_edge(p.u, p.v);
          changed = true;
        }
      }
    }
    CHECK(alt == cl);
  }
}

TEST_CASE("search agrees with enumeration on small graphs") {
  Rng rng(77);
  for (int t = 0; t < 120; ++t) {
    const int n = 4 + t % 7;
    const Graph g = random_graph(rng, n, 0.25 + 0.1 * (t % 5));
    const auto mask = cycle_length_mask(g);
    for (int len = 3; len <= n; ++len) {
      const auto res = find_cycle_of_length(g, len);
      REQUIRE_FALSE(res.unknown());
      CHECK(res.found() == static_cast<bool>((mask >> len) & 1u));
      if (n <= 8) CHECK(res.found() == enumerate_has_cycle(g, len));
      if (res.found()) {
        CHECK(is_cycle_in(g, *res.witness));
        CHECK(res.witness->length() == len);
        CHECK(canonical_cycle(*res.witness) == *res.witness);
      }
    }
  }
}

TEST_CASE("canonical witnesses are stable") {
  const Graph g = complete_graph(7);
  const auto a = find_cycle_of_length(g, 5);
  const auto b = find_cycle_of_length(g, 5);
  CHECK(a.witness == b.witness);
  const auto c = canonical_cycle({{3, 2, 1, 0}});
  CHECK(c.vertices == std::vector<Vertex>{0, 1, 2, 3});
  CHECK(canonical_cycle({{2, 0, 3, 1}}).vertices == std::vector<Vertex>{0, 2, 1, 3});
}

TEST_CASE("condition checkers") {
  const auto bondy = check_bondy(complete_bipartite_graph(3, 3));
  CHECK(bondy.hypothesis);
  CHECK(bondy.conclusion == true);
  CHECK(is_balanced_complete_bipartite(complete_bipartite_graph(3, 3)));
  CHECK_FALSE(is_balanced_complete_bipartite(complete_bipartite_graph(3, 4)));

  Graph k5m = complete_graph(5);
  k5m.remove_edge(0, 1);
  const auto hc = check_hamconn_corollary(k5m);
  CHECK_FALSE(hc.hypothesis);

  Graph k7m = complete_graph(7);
  k7m.remove_edge(0, 1);
  k7m.remove_edge(2, 3);
  const auto hc7 = check_hamconn_corollary(k7m);
  CHECK(hc7.hypothesis);
  CHECK(hc7.conclusion == true);

  const auto dirac = check_dirac(complete_graph(7));
  CHECK(dirac.hypothesis);
  CHECK(dirac.conclusion == true);
  CHECK_FALSE(check_dirac(cycle_graph(6)).hypothesis);

  const auto ore = check_ore(cycle_graph(4));
  CHECK(ore.hypothesis);
  CHECK(ore.conclusion == true);

  const auto mantel = check_mantel(complete_graph(4));
  CHECK(mantel.hypothesis);
  CHECK(mantel.conclusion == true);
  CHECK_FALSE(check_mantel(complete_bipartite_graph(3, 3)).hypothesis);

  const auto brandt = check_brandt(complete_graph(5));
  CHECK(brandt.hypothesis);
  CHECK(brandt.conclusion == true);
  CHECK_FALSE(check_brandt(complete_bipartite_graph(3, 3)).hypothesis);
}

TEST_CASE("hamiltonian paths between endpoints") {
  const auto p = hamiltonian_path_between(path_graph(4), 0, 3);
  REQUIRE(p.found());
  CHECK(*p.witness == std::vector<Vertex>{0, 1, 2, 3});
  for (Vertex x = 0; x < 4; ++x)
    for (Vertex y = 0; y < 4; ++y)
      if (x != y) CHECK(hamiltonian_path_between(complete_graph(4), x, y).found());
  const Graph star = from_edges(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(hamiltonian_path_between(star, 1, 2).absent());
  CHECK_THROWS_AS(hamiltonian_path_between(star, 1, 1), InputError);

  Rng rng(9);
  for (int t = 0; t < 60; ++t) {
    const int n = 4 + t % 5;
    const Graph g = random_graph(rng, n, 0.5);
    const auto res = hamiltonian_path_between(g, 0, n - 1);
    CHECK(res.found() == oracle_hamiltonian_path(g, 0, n - 1));
  }
}

TEST_CASE("weak pancyclicity") {
  const auto w = weak_pancyclicity(cycle_graph(6));
  CHECK(w.status == SearchStatus::Found);
  CHECK(w.girth == 6);
  Graph chord = cycle_graph(6);
  chord.add_edge(0, 3);
  const auto gap = weak_pancyclicity(chord);
  CHECK(gap.status == SearchStatus::Absent);
  CHECK(gap.gaps == std::vector<int>{5});
}

TEST_CASE("graph text format") {
  const Graph g = parse_graph("4 2\ne 0 1\ne 2 3\n");
  CHECK(g.has_edge(0, 1));
  CHECK(parse_graph(serialize_graph(g)) == g);
  CHECK_THROWS_AS(parse_graph("3 3\ne 0 1 2\n"), ParseError);
}

}  // TEST_SUITE
