#include "berge/extremal.hpp"

#include <algorithm>
#include <numeric>

#include "berge/errors.hpp"
#include "berge/random.hpp"

namespace berge {

namespace {

constexpr std::uint64_t kMaxGeneratedEdges = 5'000'000;

// Calls fn on each r-subset of {0..n-1} in lexicographic order until it
// returns false. Returns false if stopped early.
template <class Fn>
bool for_each_combination(int n, int r, Fn&& fn) {
  if (r < 0 || r > n) return true;
  std::vector<Vertex> c(static_cast<std::size_t>(r));
  std::iota(c.begin(), c.end(), 0);
  while (true) {
    if (!fn(static_cast<const std::vector<Vertex>&>(c))) return false;
    int i = r - 1;
    while (i >= 0 && c[static_cast<std::size_t>(i)] == n - r + i) --i;
    if (i < 0) return true;
    ++c[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < r; ++j) c[static_cast<std::size_t>(j)] = c[static_cast<std::size_t>(j - 1)] + 1;
  }
}

void check_construction_range(int n, int r) {
  if (r < 3 || r > half_floor(n) - 1) {
    throw InputError("construction needs 3 <= r <= floor((n-1)/2) - 1, got n=" +
                     std::to_string(n) + " r=" + std::to_string(r));
  }
}

// All r-subsets of `verts` appended to out.
void add_clique(const std::vector<Vertex>& verts, int r, std::vector<std::vector<Vertex>>& out) {
  for_each_combination(static_cast<int>(verts.size()), r, [&](const std::vector<Vertex>& idx) {
    std::vector<Vertex> e;
    for (Vertex i : idx) e.push_back(verts[static_cast<std::size_t>(i)]);
    out.push_back(std::move(e));
    return true;
  });
}

std::vector<Vertex> iota_range(Vertex lo, Vertex hi) {
  std::vector<Vertex> v(static_cast<std::size_t>(hi - lo));
  std::iota(v.begin(), v.end(), lo);
  return v;
}

bool is_clique(const Graph& g, const VertexSet& s) {
  bool ok = true;
  s.for_each([&](Vertex v) {
    VertexSet want = s;
    want.reset(v);
    if (ok && !want.is_subset_of(g.neighbors(v))) ok = false;
  });
  return ok;
}

int edges_within(const Graph& g, const VertexSet& s) {
  int twice = 0;
  s.for_each([&](Vertex v) { twice += (g.neighbors(v) & s).count(); });
  return twice / 2;
}

bool edges_between(const Graph& g, const VertexSet& a, const VertexSet& b) {
  bool any = false;
  a.for_each([&](Vertex v) {
    if (g.neighbors(v).intersects(b)) any = true;
  });
  return any;
}

// Connected components of g restricted to `allowed`.
std::vector<VertexSet> components(const Graph& g, const VertexSet& allowed) {
  std::vector<VertexSet> out;
  VertexSet left = allowed;
  while (!left.empty()) {
    VertexSet reach;
    reach.set(left.first());
    VertexSet frontier = reach;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      frontier = (next & allowed) - reach;
      reach |= frontier;
    }
    out.push_back(reach);
    left -= reach;
  }
  return out;
}

bool two_connected_within(const Graph& g, const VertexSet& s) {
  if (s.count() < 3 || components(g, s).size() != 1) return false;
  bool ok = true;
  s.for_each([&](Vertex cut) {
    VertexSet rest = s;
    rest.reset(cut);
    if (ok && components(g, rest).size() != 1) ok = false;
  });
  return ok;
}

VertexSet relabel(const VertexSet& s, const std::vector<Vertex>& perm) {
  VertexSet out;
  s.for_each([&](Vertex v) { out.set(perm[static_cast<std::size_t>(v)]); });
  return out;
}

}  // namespace

Hypergraph construction_1(int n, int r, std::optional<std::uint64_t> seed) {
  check_construction_range(n, r);
  std::vector<std::vector<Vertex>> edges;
  if (n % 2 == 1) {
    const int h = (n + 1) / 2;
    add_clique(iota_range(0, h), r, edges);
    add_clique(iota_range(h - 1, n), r, edges);
    return Hypergraph(n, r, std::move(edges));
  }
  const int h = n / 2;
  add_clique(iota_range(0, h), r, edges);
  add_clique(iota_range(h, n), r, edges);
  std::vector<Vertex> extra;
  if (seed) {
    Rng rng(*seed);
    // Crossing r-set: a uniform split with 1..r-1 vertices on each side.
    const int left = 1 + rng.below(r - 1);
    for (Vertex v : rng.sample(h, left)) extra.push_back(v);
    for (Vertex v : rng.sample(n - h, r - left)) extra.push_back(h + v);
  } else {
    extra = iota_range(h - r + 1, h);
    extra.push_back(h);
  }
  edges.push_back(std::move(extra));
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph construction_2(int n, int r) {
  check_construction_range(n, r);
  const int k = half_floor(n);
  std::vector<std::vector<Vertex>> edges;
  const auto a = iota_range(0, k);
  add_clique(a, r, edges);
  for (Vertex b = k; b < n; ++b) {
    for_each_combination(k, r - 1, [&](const std::vector<Vertex>& idx) {
      std::vector<Vertex> e(idx.begin(), idx.end());
      e.push_back(b);
      edges.push_back(std::move(e));
      return true;
    });
  }
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph construction_3(int k) {
  if (k < 5) throw InputError("construction 3 needs k >= 5");
  const int n = 2 * k;
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n, (i + k) % n});
  return Hypergraph(n, 3, std::move(edges));
}

Hypergraph complete_hypergraph(int n, int r) {
  if (r < 1 || r > n) throw InputError("complete hypergraph needs 1 <= r <= n");
  if (binomial(n, r) > kMaxGeneratedEdges) throw InputError("complete hypergraph too large");
  std::vector<std::vector<Vertex>> edges;
  add_clique(iota_range(0, n), r, edges);
  return Hypergraph(n, r, std::move(edges));
}

Hypergraph tight_cycle(int n, int r) {
  if (r < 2 || n <= r) throw InputError("tight cycle needs n > r >= 2");
  std::vector<std::vector<Vertex>> edges;
  for (int i = 0; i < n; ++i) {
    std::vector<Vertex> e;
    for (int j = 0; j < r; ++j) e.push_back((i + j) % n);
    edges.push_back(std::move(e));
  }
  return Hypergraph(n, r, std::move(edges));
}

Graph complete_bipartite_graph(int a, int b) {
  if (a < 1 || b < 1) throw InputError("complete bipartite graph needs a, b >= 1");
  Graph g(a + b);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
  return g;
}

std::string_view to_string(VossClass c) {
  switch (c) {
    case VossClass::G1: return "G1";
    case VossClass::G2: return "G2";
    case VossClass::G3: return "G3";
    case VossClass::G4: return "G4";
    case VossClass::G5: return "G5";
  }
  return "?";
}

std::optional<VossClass> parse_voss_class(std::string_view s) {
  for (auto c : {VossClass::G1, VossClass::G2, VossClass::G3, VossClass::G4, VossClass::G5}) {
    std::string lower(to_string(c));
    lower[0] = 'g';
    if (s == to_string(c) || s == lower) return c;
  }
  return std::nullopt;
}

bool verify_voss_witness(const Graph& g, const VossWitness& w) {
  const int n = g.order();
  const int k = half_floor(n);
  if (k < 3 || w.k != k) return false;
  if (!((w.v1 | w.v2) == g.vertices())) return false;
  const VertexSet common = w.v1 & w.v2;
  const int a = w.v1.count();
  const int b = w.v2.count();

  const bool shared = w.cls == VossClass::G2 || w.cls == VossClass::G3;
  if (shared) {
    if (!w.x0 || common.count() != 1 || !common.test(*w.x0)) return false;
  } else if (w.x0 || !common.empty()) {
    return false;
  }
  VertexSet core1 = w.v1 - common;
  VertexSet core2 = w.v2 - common;

  switch (w.cls) {
    case VossClass::G1: {
      if (n != 2 * k + 2 || a != k + 1 || b != k + 1) return false;
      if (!is_clique(g, w.v1) || !is_clique(g, w.v2)) return false;
      int cross = 0;
      w.v1.for_each([&](Vertex v) { cross += (g.neighbors(v) & w.v2).count(); });
      if (!w.e0) return cross == 0;
      const auto [u, v] = *w.e0;
      const bool straddles = (w.v1.test(u) && w.v2.test(v)) || (w.v1.test(v) && w.v2.test(u));
      return cross == 1 && straddles && g.has_edge(u, v);
    }
    case VossClass::G2:
      if (n != 2 * k + 1 || a != k + 1 || b != k + 1 || w.e0) return false;
      return is_clique(g, w.v1) && is_clique(g, w.v2) && !edges_between(g, core1, core2);
    case VossClass::G3:
      if (n != 2 * k + 2 || a != k + 1 || b != k + 2 || w.e0) return false;
      return is_clique(g, w.v1) && two_connected_within(g, w.v2) &&
             !edges_between(g, core1, core2) && g.min_degree() >= k;
    case VossClass::G4: {
      if (n != 2 * k + 1 || a != k || b != k + 1 || w.e0) return false;
      if (edges_within(g, w.v2) != 0) return false;
      bool full = true;
      w.v2.for_each([&](Vertex v) {
        if (!w.v1.is_subset_of(g.neighbors(v))) full = false;
      });
      return full;
    }
    case VossClass::G5: {
      if (n != 2 * k + 2 || a != k || b != k + 2) return false;
      const int inside = edges_within(g, w.v2);
      if (inside > 1 || g.min_degree() < k) return false;
      if (inside == 0) return !w.e0;
      return w.e0 && w.v2.test(w.e0->u) && w.v2.test(w.e0->v) && g.has_edge(w.e0->u, w.e0->v);
    }
  }
  return false;
}

VossInstance generate_voss(VossClass cls, int k, const VossOptions& opts) {
  if (k < 3) throw InputError("Voss classes need k >= 3");
  if (opts.with_e0 && cls != VossClass::G1 && cls != VossClass::G5) {
    throw InputError(std::string("class ") + std::string(to_string(cls)) + " has no edge e0");
  }
  Rng rng(opts.seed);
  VossWitness w;
  w.cls = cls;
  w.k = k;
  Graph g;
  auto add_clique_edges = [&](const VertexSet& s) {
    s.for_each([&](Vertex u) {
      s.for_each([&](Vertex v) {
        if (u < v) g.add_edge(u, v);
      });
    });
  };
  auto add_random_edges = [&](const VertexSet& s, double p) {
    s.for_each([&](Vertex u) {
      s.for_each([&](Vertex v) {
        if (u < v && rng.chance(p)) g.add_edge(u, v);
      });
    });
  };
  auto join = [&](const VertexSet& a, const VertexSet& b) {
    a.for_each([&](Vertex u) { b.for_each([&](Vertex v) { g.add_edge(u, v); }); });
  };

  switch (cls) {
    case VossClass::G1: {
      g = Graph(2 * k + 2);
      w.v1 = VertexSet::range(0, k + 1);
      w.v2 = VertexSet::range(k + 1, 2 * k + 2);
      add_clique_edges(w.v1);
      add_clique_edges(w.v2);
      if (opts.with_e0) {
        const Vertex u = rng.below(k + 1);
        const Vertex v = k + 1 + rng.below(k + 1);
        g.add_edge(u, v);
        w.e0 = VertexPair::of(u, v);
      }
      break;
    }
    case VossClass::G2: {
      g = Graph(2 * k + 1);
      w.v1 = VertexSet::range(0, k + 1);
      w.v2 = VertexSet::range(k, 2 * k + 1);
      w.x0 = k;
      add_clique_edges(w.v1);
      add_clique_edges(w.v2);
      break;
    }
    case VossClass::G3: {
      constexpr int kMaxTries = 1'000'000;
      constexpr double kDensity = 0.7;
      w.v1 = VertexSet::range(0, k + 1);
      w.v2 = VertexSet::range(k, 2 * k + 2);
      w.x0 = k;
      int tries = 0;
      while (true) {
        if (++tries > kMaxTries) throw InputError("G3 side graph rejected too often");
        g = Graph(2 * k + 2);
        add_clique_edges(w.v1);
        add_random_edges(w.v2, kDensity);
        if (g.min_degree() >= k && two_connected_within(g, w.v2)) break;
      }
      break;
    }
    case VossClass::G4: {
      g = Graph(2 * k + 1);
      w.v1 = VertexSet::range(0, k);
      w.v2 = VertexSet::range(k, 2 * k + 1);
      add_random_edges(w.v1, 0.5);
      join(w.v1, w.v2);
      break;
    }
    case VossClass::G5: {
      g = Graph(2 * k + 2);
      w.v1 = VertexSet::range(0, k);
      w.v2 = VertexSet::range(k, 2 * k + 2);
      add_random_edges(w.v1, 0.5);
      join(w.v1, w.v2);
      if (opts.with_e0) {
        const auto ends = rng.sample(k + 2, 2);
        const Vertex x = k + ends[0];
        const Vertex y = k + ends[1];
        g.add_edge(x, y);
        w.e0 = VertexPair::of(x, y);
        // Drop one cross edge at each end; degrees stay >= k.
        g.remove_edge(x, rng.below(k));
        g.remove_edge(y, rng.below(k));
      }
      break;
    }
  }

  if (opts.shuffle_labels) {
    const int n = g.order();
    std::vector<Vertex> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    Graph h(n);
    for (const auto& [u, v] : g.edges()) h.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    g = std::move(h);
    w.v1 = relabel(w.v1, perm);
    w.v2 = relabel(w.v2, perm);
    if (w.x0) w.x0 = perm[static_cast<std::size_t>(*w.x0)];
    if (w.e0) w.e0 = VertexPair::of(perm[static_cast<std::size_t>(w.e0->u)], perm[static_cast<std::size_t>(w.e0->v)]);
  }
  return {std::move(g), w};
}

SearchResult<VossWitness> classify_voss(const Graph& g, std::uint64_t budget) {
  SearchResult<VossWitness> out;
  out.status = SearchStatus::Absent;
  const int n = g.order();
  const int k = half_floor(n);
  if (k < 3) return out;
  const VertexSet all = g.vertices();

  auto accept = [&](VossWitness w) {
    if (!verify_voss_witness(g, w)) return false;
    out.status = SearchStatus::Found;
    out.witness = w;
    return true;
  };

  // Side of size k+1 (G1) or a cut vertex x0 splitting off a k-clique
  // (G2, G3): read off the components.
  if (n % 2 == 0) {
    const std::size_t base = static_cast<std::size_t>(k) * static_cast<std::size_t>(k + 1);
    const std::size_t m = g.edge_count();
    if (m == base || m == base + 1) {
      std::vector<std::optional<VertexPair>> drops{std::nullopt};
      if (m == base + 1) {
        drops.clear();
        for (const auto& e : g.edges()) drops.emplace_back(e);
      }
      for (const auto& drop : drops) {
        Graph h = g;
        if (drop) h.remove_edge(drop->u, drop->v);
        const auto comps = components(h, all);
        if (comps.size() != 2 || comps[0].count() != k + 1) continue;
        if (accept({VossClass::G1, k, comps[0], comps[1], std::nullopt, drop})) return out;
      }
    }
  }
  for (Vertex x0 = 0; x0 < n; ++x0) {
    VertexSet rest = all;
    rest.reset(x0);
    auto comps = components(g, rest);
    if (comps.size() != 2) continue;
    if (comps[0].count() > comps[1].count()) std::swap(comps[0], comps[1]);
    comps[0].set(x0);
    comps[1].set(x0);
    const VossClass cls = n % 2 == 1 ? VossClass::G2 : VossClass::G3;
    if (accept({cls, k, comps[0], comps[1], x0, std::nullopt})) return out;
  }

  // G4 / G5: enumerate the large side.
  const int big = n % 2 == 1 ? k + 1 : k + 2;
  const VossClass cls = n % 2 == 1 ? VossClass::G4 : VossClass::G5;
  std::uint64_t tried = 0;
  bool aborted = false;
  for_each_combination(n, big, [&](const std::vector<Vertex>& side) {
    if (++tried > budget) {
      aborted = true;
      return false;
    }
    const VertexSet v2 = VertexSet::of(side);
    const int inside = edges_within(g, v2);
    if (inside > (cls == VossClass::G5 ? 1 : 0)) return true;
    std::optional<VertexPair> e0;
    if (inside == 1) {
      v2.for_each([&](Vertex u) {
        const Vertex v = (g.neighbors(u) & v2).first();
        if (v > u) e0 = VertexPair::of(u, v);
      });
    }
    return !accept({cls, k, all - v2, v2, std::nullopt, e0});
  });
  out.stats.expanded = tried;
  if (out.found()) return out;
  out.status = aborted ? SearchStatus::Unknown : SearchStatus::Absent;
  return out;
}

}  // namespace berge
