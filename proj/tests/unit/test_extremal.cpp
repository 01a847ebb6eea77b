#include "doctest.h"

#include <set>

#include "berge/berge_search.hpp"
#include "berge/errors.hpp"
#include "berge/extremal.hpp"
#include "oracles.hpp"

using namespace berge;
using berge::testing::count_degree;
using berge::testing::cycle_length_mask;

namespace {

constexpr VossClass kClasses[] = {VossClass::G1, VossClass::G2, VossClass::G3, VossClass::G4,
                                  VossClass::G5};

// Number of r-subsets of {0..n-1} meeting `big` in at most one vertex, by
// enumeration.
int count_sets_with_one_big(int n, int r, int first_big) {
  int count = 0;
  for (std::uint32_t m = 0; m < (1u << n); ++m) {
    if (std::popcount(m) != r) continue;
    if (std::popcount(m >> first_big) <= 1) ++count;
  }
  return count;
}

bool nonhamiltonian(const Graph& g) { return ((cycle_length_mask(g) >> g.order()) & 1u) == 0; }

}  // namespace

TEST_SUITE("extremal-families") {

TEST_CASE("construction 1 counts") {
  const Hypergraph odd = construction_1(11, 3);
  CHECK(odd.edge_count() == 40);
  CHECK(min_degree(odd) == 10);
  const Hypergraph even = construction_1(12, 3);
  CHECK(even.edge_count() == 41);
  CHECK(min_degree(even) == 10);
  // Canonical extra edge: the last r-1 vertices of the first clique and the
  // first vertex of the second.
  CHECK(even.find_edge(VertexSet::of(std::vector<Vertex>{4, 5, 6})).has_value());
  const Hypergraph seeded = construction_1(12, 3, 7);
  CHECK(seeded.edge_count() == 41);
  CHECK(seeded == construction_1(12, 3, 7));
  CHECK_THROWS_AS(construction_1(11, 5), InputError);
  CHECK_THROWS_AS(construction_1(11, 2), InputError);
}

TEST_CASE("construction 2 counts") {
  const Hypergraph h = construction_2(11, 3);
  CHECK(h.edge_count() == 70);
  CHECK(h.edge_count() == count_sets_with_one_big(11, 3, 5));
  CHECK(min_degree(h) == 10);
  for (Vertex v = 5; v < 11; ++v) CHECK(count_degree(h, v) == 10);
  CHECK(find_berge_cycle(h, 11).absent());
}

TEST_CASE("construction 3") {
  const Hypergraph h = construction_3(6);
  CHECK(h.order() == 12);
  CHECK(h.edge_count() == 12);
  for (Vertex v = 0; v < 12; ++v) CHECK(count_degree(h, v) == 3);
  for (int i = 0; i < 12; ++i)
    CHECK(h.find_edge(VertexSet::of(std::vector<Vertex>{i, (i + 1) % 12, (i + 6) % 12})));
  CHECK_THROWS_AS(construction_3(4), InputError);
}

TEST_CASE("complete families") {
  CHECK(complete_hypergraph(5, 3).edge_count() == 10);
  CHECK(complete_hypergraph(6, 6).edge_count() == 1);
  CHECK(complete_hypergraph(4, 1).edge_count() == 4);
  CHECK_THROWS_AS(complete_hypergraph(3, 4), InputError);
  const Graph k33 = complete_bipartite_graph(3, 3);
  CHECK(k33.edge_count() == 9);
  CHECK(is_balanced_complete_bipartite(k33));
  CHECK_THROWS_AS(complete_bipartite_graph(0, 2), InputError);
}

TEST_CASE("sharpness for small parameters") {
  for (int n = 9; n <= 13; ++n) {
    for (int r = 3; r <= half_floor(n) - 1; ++r) {
      const auto expect = static_cast<int>(binomial(half_floor(n), r - 1));
      const Hypergraph c1 = construction_1(n, r);
      const Hypergraph c2 = construction_2(n, r);
      CHECK(min_degree(c1) == expect);
      CHECK(min_degree(c2) == expect);
      CHECK(find_berge_cycle(c1, n).absent());
      CHECK(find_berge_cycle(c2, n).absent());
    }
  }
}

TEST_CASE("Voss examples") {
  const auto g2 = generate_voss(VossClass::G2, 4);
  CHECK(g2.graph.order() == 9);
  CHECK(g2.graph.min_degree() == 4);
  CHECK(g2.witness.x0 == 4);
  const auto cls = classify_voss(g2.graph);
  REQUIRE(cls.found());
  CHECK(cls.witness->cls == VossClass::G2);
  CHECK(cls.witness->x0 == 4);

  const auto g4 = generate_voss(VossClass::G4, 4);
  CHECK(g4.graph.order() == 9);
  for (Vertex a = 0; a < 4; ++a)
    for (Vertex b = 4; b < 9; ++b) CHECK(g4.graph.has_edge(a, b));
  for (Vertex a = 4; a < 9; ++a)
    for (Vertex b = a + 1; b < 9; ++b) CHECK_FALSE(g4.graph.has_edge(a, b));

  const auto g1 = generate_voss(VossClass::G1, 4, {true, 3, false});
  CHECK(g1.graph.edge_count() == 21);
  CHECK(g1.witness.e0.has_value());
  CHECK(hamiltonian_cycle(g1.graph).absent());

  CHECK_THROWS_AS(generate_voss(VossClass::G2, 4, {true, 0, false}), InputError);
  CHECK_THROWS_AS(generate_voss(VossClass::G1, 2), InputError);

  CHECK(classify_voss(cycle_graph(7)).absent());
  const auto k45 = classify_voss(complete_bipartite_graph(4, 5));
  REQUIRE(k45.found());
  CHECK(k45.witness->cls == VossClass::G4);

  CHECK(parse_voss_class("g3") == VossClass::G3);
  CHECK(parse_voss_class("G6") == std::nullopt);
  CHECK(to_string(VossClass::G5) == "G5");
}

TEST_CASE("Voss forward direction and round trip") {
  for (auto cls : kClasses) {
    for (int k = 3; k <= 5; ++k) {
      for (int s = 0; s < 4; ++s) {
        const bool e0 = (cls == VossClass::G1 || cls == VossClass::G5) && s % 2 == 1;
        const auto inst = generate_voss(cls, k, {e0, static_cast<std::uint64_t>(s), s >= 2});
        CHECK(verify_voss_witness(inst.graph, inst.witness));
        CHECK(inst.graph.min_degree() >= k);
        CHECK(hamiltonian_cycle(inst.graph).absent());
        const auto got = classify_voss(inst.graph);
        REQUIRE(got.found());
        CHECK(got.witness->cls == cls);
        CHECK(verify_voss_witness(inst.graph, *got.witness));
      }
    }
  }
}

// Nonhamiltonian graphs with minimum degree k on 2k+1 or 2k+2 vertices must
// land in one of the classes. Sources: class members perturbed by single
// edge moves, and dense random graphs.
TEST_CASE("Voss converse sampling") {
  Rng rng(17);
  int checked = 0;
  for (int k = 3; k <= 4; ++k) {
    for (auto cls : kClasses) {
      for (int s = 0; s < 6; ++s) {
        const bool e0 = (cls == VossClass::G1 || cls == VossClass::G5) && s % 2 == 1;
        Graph g = generate_voss(cls, k, {e0, rng.next(), true}).graph;
        const int n = g.order();
        for (int step = 0; step < 12; ++step) {
          const Vertex u = rng.below(n);
          Vertex v = rng.below(n - 1);
          if (v >= u) ++v;
          Graph next = g;
          if (next.has_edge(u, v)) next.remove_edge(u, v);
          else next.add_edge(u, v);
          if (next.min_degree() < k || !nonhamiltonian(next)) continue;
          g = next;
          const auto res = classify_voss(g);
          ++checked;
          CHECK_MESSAGE(res.found(), serialize_graph(g));
          if (res.found()) CHECK(verify_voss_witness(g, *res.witness));
        }
      }
    }
    for (int n : {2 * k + 1, 2 * k + 2}) {
      for (int t = 0; t < 3000; ++t) {
        Graph g(n);
        for (Vertex u = 0; u < n; ++u)
          for (Vertex v = u + 1; v < n; ++v)
            if (rng.chance(0.55)) g.add_edge(u, v);
        if (g.min_degree() < k || !nonhamiltonian(g)) continue;
        const auto res = classify_voss(g);
        ++checked;
        CHECK_MESSAGE(res.found(), serialize_graph(g));
      }
    }
  }
  MESSAGE("classified " << checked << " nonhamiltonian graphs");
  CHECK(checked > 50);
}

TEST_CASE("classifier rejects hamiltonian graphs") {
  CHECK(classify_voss(complete_graph(9)).absent());
  CHECK(classify_voss(complete_bipartite_graph(4, 4)).absent());
}

}  // TEST_SUITE
