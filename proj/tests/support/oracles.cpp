#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <stdexcept>

namespace berge::testing {

namespace {

std::vector<std::uint32_t> adjacency_masks(const Graph& g) {
  const int n = g.order();
  if (n > 16) throw std::invalid_argument("oracle limited to 16 vertices");
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = 0; v < n; ++v)
      if (u != v && g.has_edge(u, v)) adj[static_cast<std::size_t>(u)] |= 1u << v;
  return adj;
}

}  // namespace

std::uint32_t cycle_length_mask(const Graph& g) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  std::uint32_t lengths = 0;
  std::vector<std::uint32_t> ends(std::size_t{1} << n);
  // s is the smallest vertex on the cycle; paths start at s and use only
  // larger vertices. ends[mask] = set of possible path endpoints.
  for (int s = 0; s < n; ++s) {
    std::fill(ends.begin(), ends.end(), 0u);
    const std::uint32_t above = ~((2u << s) - 1u) & ((1u << n) - 1u);
    ends[1u << s] = 1u << s;
    for (std::uint32_t mask = 1u << s; mask < (1u << n); ++mask) {
      const std::uint32_t e = ends[mask];
      if (e == 0) continue;
      const int len = std::popcount(mask);
      if (len >= 3 && (e & adj[static_cast<std::size_t>(s)]) != 0) lengths |= 1u << len;
      for (std::uint32_t rest = e; rest != 0; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        for (std::uint32_t nxt = adj[static_cast<std::size_t>(v)] & above & ~mask; nxt != 0;
             nxt &= nxt - 1) {
          const int w = std::countr_zero(nxt);
          ends[mask | (1u << w)] |= 1u << w;
        }
      }
    }
  }
  return lengths;
}

bool enumerate_has_cycle(const Graph& g, int length) {
  const int n = g.order();
  std::vector<Vertex> seq;
  std::vector<char> used(static_cast<std::size_t>(n), 0);
  // Recursion without any pruning beyond distinctness.
  auto rec = [&](auto&& self) -> bool {
    if (static_cast<int>(seq.size()) == length) {
      for (int i = 0; i < length; ++i)
        if (!g.has_edge(seq[static_cast<std::size_t>(i)],
                        seq[static_cast<std::size_t>((i + 1) % length)]))
          return false;
      return true;
    }
    for (Vertex v = 0; v < n; ++v) {
      if (used[static_cast<std::size_t>(v)]) continue;
      used[static_cast<std::size_t>(v)] = 1;
      seq.push_back(v);
      const bool hit = self(self);
      seq.pop_back();
      used[static_cast<std::size_t>(v)] = 0;
      if (hit) return true;
    }
    return false;
  };
  return rec(rec);
}

bool oracle_hamiltonian_path(const Graph& g, Vertex x, Vertex y) {
  const int n = g.order();
  const auto adj = adjacency_masks(g);
  const std::uint32_t full = (1u << n) - 1u;
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  ends[1u << x] = 1u << x;
  for (std::uint32_t mask = 1; mask <= full; ++mask) {
    for (std::uint32_t rest = ends[mask]; rest != 0; rest &= rest - 1) {
      const int v = std::countr_zero(rest);
      for (std::uint32_t nxt = adj[static_cast<std::size_t>(v)] & ~mask; nxt != 0; nxt &= nxt - 1) {
        const int w = std::countr_zero(nxt);
        ends[mask | (1u << w)] |= 1u << w;
      }
    }
  }
  return (ends[full] >> y) & 1u;
}

int count_degree(const Hypergraph& h, Vertex v) {
  int d = 0;
  for (const auto& e : h.edges()) d += static_cast<int>(std::count(e.begin(), e.end(), v));
  return d;
}

Graph scan_shadow(const Hypergraph& h) {
  Graph g(h.order());
  for (Vertex u = 0; u < h.order(); ++u) {
    for (Vertex v = u + 1; v < h.order(); ++v) {
      for (const auto& e : h.edges()) {
        const bool hu = std::find(e.begin(), e.end(), u) != e.end();
        const bool hv = std::find(e.begin(), e.end(), v) != e.end();
        if (hu && hv) {
          g.add_edge(u, v);
          break;
        }
      }
    }
  }
  return g;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
  Graph g(n);
  int bit = 0;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v, ++bit)
      if ((mask >> bit) & 1u) g.add_edge(u, v);
  return g;
}

Hypergraph random_hypergraph(Rng& rng, int n, int r, int edges) {
  const auto cap = static_cast<int>(std::min<std::uint64_t>(binomial(n, r), 1'000'000));
  edges = std::min(edges, cap);
  std::set<std::vector<Vertex>> pool;
  while (static_cast<int>(pool.size()) < edges) pool.insert(rng.sample(n, r));
  return Hypergraph(n, r, {pool.begin(), pool.end()});
}

namespace {

void add_clique_edges(std::set<std::vector<Vertex>>& out, const std::vector<Vertex>& part) {
  const auto m = part.size();
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b)
      for (std::size_t c = b + 1; c < m; ++c) out.insert({part[a], part[b], part[c]});
}

void add_graph_clique(Graph& g, const std::vector<Vertex>& part) {
  for (std::size_t a = 0; a < part.size(); ++a)
    for (std::size_t b = a + 1; b < part.size(); ++b) g.add_edge(part[a], part[b]);
}

std::vector<Vertex> iota(Vertex lo, Vertex hi) {
  std::vector<Vertex> v;
  for (Vertex x = lo; x < hi; ++x) v.push_back(x);
  return v;
}

Hypergraph make(int n, const std::set<std::vector<Vertex>>& edges) {
  std::vector<std::vector<Vertex>> list;
  for (auto e : edges) {
    std::sort(e.begin(), e.end());
    list.push_back(e);
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return Hypergraph(n, 3, list);
}

}  // namespace

SwapInstance engineered_g1(bool with_e0) {
  std::set<std::vector<Vertex>> edges;
  add_clique_edges(edges, iota(0, 5));
  add_clique_edges(edges, iota(5, 10));
  for (int i = 0; i < 5; ++i) {
    std::vector<Vertex> e{i, (i + 1) % 5, 5 + i};
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  Graph target(10);
  add_graph_clique(target, iota(0, 5));
  add_graph_clique(target, iota(5, 10));
  if (with_e0) target.add_edge(0, 5);
  return {make(10, edges), target, VossClass::G1};
}

SwapInstance engineered_g2() {
  std::set<std::vector<Vertex>> edges;
  add_clique_edges(edges, iota(0, 5));
  add_clique_edges(edges, iota(4, 9));
  const Vertex a[4] = {0, 1, 2, 3};
  const Vertex b[4] = {5, 6, 7, 8};
  for (int i = 0; i < 4; ++i) {
    std::vector<Vertex> e{a[i], a[(i + 1) % 4], b[i]};
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  Graph target(9);
  add_graph_clique(target, iota(0, 5));
  add_graph_clique(target, iota(4, 9));
  return {make(9, edges), target, VossClass::G2};
}

namespace {

// construction_2 on n vertices plus hyperedges {b_i, b_{i+1}, a_{i mod 4}}
// around the big side; F is the V1 clique with the complete cross join.
SwapInstance engineered_g45(int n, bool with_e0, VossClass cls) {
  const int k = half_floor(n);
  const Hypergraph base = construction_2(n, 3);
  std::set<std::vector<Vertex>> edges(base.edges().begin(), base.edges().end());
  const int big = n - k;
  for (int i = 0; i < big; ++i) {
    std::vector<Vertex> e{k + i, k + (i + 1) % big, i % k};
    std::sort(e.begin(), e.end());
    edges.insert(e);
  }
  Graph target(n);
  add_graph_clique(target, iota(0, k));
  for (Vertex a = 0; a < k; ++a)
    for (Vertex b = k; b < n; ++b) target.add_edge(a, b);
  if (with_e0) target.add_edge(k, k + 1);
  return {make(n, edges), target, cls};
}

}  // namespace

SwapInstance engineered_g4() { return engineered_g45(9, false, VossClass::G4); }
SwapInstance engineered_g5(bool with_e0) { return engineered_g45(10, with_e0, VossClass::G5); }

ShiftInstance engineered_shift() {
  const int n = 10;
  std::vector<std::vector<Vertex>> edges;
  std::vector<VertexPair> pairs;
  for (int i = 0; i < n; ++i) {
    edges.push_back({i, (i + 1) % n, (i + 2) % n});
    pairs.push_back(VertexPair::of(i, (i + 1) % n));
  }
  const std::vector<std::pair<std::vector<Vertex>, VertexPair>> extra = {
      {{0, 3, 6}, {3, 6}}, {{0, 5, 7}, {0, 5}}, {{3, 7, 9}, {3, 7}},
      {{3, 8, 9}, {3, 8}}, {{1, 6, 8}, {1, 6}}, {{1, 6, 9}, {6, 9}}};
  for (const auto& [e, p] : extra) {
    edges.push_back(e);
    pairs.push_back(p);
  }
  for (auto& e : edges) std::sort(e.begin(), e.end());
  const Hypergraph h(n, 3, edges);
  std::vector<std::optional<VertexPair>> table(static_cast<std::size_t>(h.edge_count()));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int idx = *h.find_edge(VertexSet::of(edges[i]));
    table[static_cast<std::size_t>(idx)] = pairs[i];
  }
  ShadowMatching phi = ShadowMatching::from_assignment(h, table);
  BergeCycle c;
  for (int i = 0; i < n; ++i) {
    c.vertices.push_back(i);
    c.edges.push_back(*phi.edge_of(VertexPair::of(i, (i + 1) % n)));
  }
  const int planted = *h.find_edge(VertexSet::of(std::vector<Vertex>{0, 3, 6}));
  return {h, std::move(phi), std::move(c), planted};
}

}  // namespace berge::testing
