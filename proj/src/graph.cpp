#include "berge/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "berge/detail/cycle_dfs.hpp"
#include "berge/errors.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

namespace {

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw InputError("vertex " + std::to_string(v) + " out of range for n=" +
                     std::to_string(g.order()));
  }
}

std::vector<Vertex> identity_order(int n) {
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return order;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)) {
  if (n < 0 || n > kMaxVertices) {
    throw InputError("graph order must be in [0, " + std::to_string(kMaxVertices) + "]");
  }
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) throw InputError("loops are not allowed");
  adj_[static_cast<std::size_t>(u)].set(v);
  adj_[static_cast<std::size_t>(v)].set(u);
}

void Graph::remove_edge(Vertex u, Vertex v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  adj_[static_cast<std::size_t>(u)].reset(v);
  adj_[static_cast<std::size_t>(v)].reset(u);
}

int Graph::min_degree() const {
  int best = n_ == 0 ? 0 : n_;
  for (Vertex v = 0; v < n_; ++v) best = std::min(best, degree(v));
  return best;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (const auto& a : adj_) twice += static_cast<std::size_t>(a.count());
  return twice / 2;
}

std::vector<VertexPair> Graph::edges() const {
  std::vector<VertexPair> out;
  for (Vertex u = 0; u < n_; ++u) {
    adj_[static_cast<std::size_t>(u)].for_each([&](Vertex v) {
      if (u < v) out.push_back({u, v});
    });
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) throw InputError("cycle needs at least 3 vertices");
  Graph g(n);
  for (Vertex v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (Vertex v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
  return g;
}

Graph from_edges(int n, const std::vector<VertexPair>& edges) {
  Graph g(n);
  for (const auto& e : edges) g.add_edge(e.u, e.v);
  return g;
}

bool is_cycle_in(const Graph& g, const GraphCycle& c) {
  const int len = c.length();
  if (len < 3) return false;
  VertexSet seen;
  for (Vertex v : c.vertices) {
    if (v < 0 || v >= g.order() || seen.test(v)) return false;
    seen.set(v);
  }
  for (int i = 0; i < len; ++i) {
    if (!g.has_edge(c.vertices[static_cast<std::size_t>(i)],
                    c.vertices[static_cast<std::size_t>((i + 1) % len)])) {
      return false;
    }
  }
  return true;
}

GraphCycle canonical_cycle(GraphCycle c) {
  auto& vs = c.vertices;
  if (vs.size() < 3) return c;
  std::rotate(vs.begin(), std::min_element(vs.begin(), vs.end()), vs.end());
  if (vs[1] > vs.back()) std::reverse(vs.begin() + 1, vs.end());
  return c;
}

SearchResult<GraphCycle> find_cycle_of_length(const Graph& g, int length, std::uint64_t budget) {
  const int n = g.order();
  if (length < 3 || length > n) {
    throw InputError("cycle length " + std::to_string(length) + " outside [3, " +
                     std::to_string(n) + "]");
  }
  std::vector<VertexSet> adj(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v);
  const auto order = identity_order(n);
  detail::FreePairs hook;
  detail::CycleDfs<detail::FreePairs> dfs(adj, order, hook, budget);

  SearchResult<GraphCycle> result;
  result.status = dfs.run(length);
  result.stats.expanded = dfs.expanded();
  if (result.found()) result.witness = GraphCycle{dfs.path()};
  return result;
}

SearchResult<GraphCycle> hamiltonian_cycle(const Graph& g, std::uint64_t budget) {
  if (g.order() < 3) {
    SearchResult<GraphCycle> r;
    r.status = SearchStatus::Absent;
    return r;
  }
  return find_cycle_of_length(g, g.order(), budget);
}

namespace {

class PathSearch {
 public:
  PathSearch(const Graph& g, Vertex target, std::uint64_t budget)
      : g_(g), target_(target), budget_(budget) {}

  bool extend(Vertex cur, VertexSet avail) {
    if (++expanded_ > budget_) {
      aborted_ = true;
      return false;
    }
    if (avail.empty()) return cur == target_;
    // The target closes the path, so it is consumed last.
    VertexSet inner = avail;
    inner.reset(target_);
    VertexSet reach;
    VertexSet frontier = g_.neighbors(cur) & avail;
    while (!frontier.empty()) {
      reach |= frontier;
      VertexSet next;
      frontier.for_each([&](Vertex v) {
        if (v != target_) next |= g_.neighbors(v);
      });
      frontier = (next & avail) - reach;
    }
    if (!(reach == avail)) return false;

    VertexSet candidates = g_.neighbors(cur) & (avail.count() == 1 ? avail : inner);
    bool found = false;
    candidates.for_each([&](Vertex v) {
      if (found || aborted_) return;
      path_.push_back(v);
      VertexSet rest = avail;
      rest.reset(v);
      if (extend(v, rest)) {
        found = true;
        return;
      }
      path_.pop_back();
    });
    return found;
  }

  const Graph& g_;
  Vertex target_;
  std::uint64_t budget_;
  std::uint64_t expanded_ = 0;
  bool aborted_ = false;
  std::vector<Vertex> path_;
};

}  // namespace

SearchResult<std::vector<Vertex>> hamiltonian_path_between(const Graph& g, Vertex x, Vertex y,
                                                           std::uint64_t budget) {
  check_vertex(g, x);
  check_vertex(g, y);
  if (x == y) throw InputError("hamiltonian path endpoints must differ");
  PathSearch search(g, y, budget);
  search.path_.push_back(x);
  VertexSet avail = g.vertices();
  avail.reset(x);
  SearchResult<std::vector<Vertex>> result;
  const bool found = search.extend(x, avail);
  result.stats.expanded = search.expanded_;
  if (found) {
    result.status = SearchStatus::Found;
    result.witness = search.path_;
  } else {
    result.status = search.aborted_ ? SearchStatus::Unknown : SearchStatus::Absent;
  }
  return result;
}

bool has_triangle(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    bool hit = false;
    g.neighbors(u).for_each([&](Vertex v) {
      if (!hit && u < v && g.neighbors(u).intersects(g.neighbors(v))) hit = true;
    });
    if (hit) return true;
  }
  return false;
}

namespace {

// 2-coloring by BFS; returns per-vertex color or empty when not bipartite.
std::vector<int> two_coloring(const Graph& g) {
  const int n = g.order();
  std::vector<int> color(static_cast<std::size_t>(n), -1);
  for (Vertex s = 0; s < n; ++s) {
    if (color[static_cast<std::size_t>(s)] >= 0) continue;
    color[static_cast<std::size_t>(s)] = 0;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      bool clash = false;
      g.neighbors(u).for_each([&](Vertex v) {
        auto& cv = color[static_cast<std::size_t>(v)];
        if (cv < 0) {
          cv = 1 - color[static_cast<std::size_t>(u)];
          queue.push_back(v);
        } else if (cv == color[static_cast<std::size_t>(u)]) {
          clash = true;
        }
      });
      if (clash) return {};
    }
  }
  return color;
}

}  // namespace

bool is_bipartite(const Graph& g) { return g.order() == 0 || !two_coloring(g).empty(); }

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = n + 1;
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(s)] = 0;
    parent[static_cast<std::size_t>(s)] = -1;
    std::deque<Vertex> queue{s};
    while (!queue.empty()) {
      const Vertex u = queue.front();
      queue.pop_front();
      g.neighbors(u).for_each([&](Vertex v) {
        const auto du = dist[static_cast<std::size_t>(u)];
        auto& dv = dist[static_cast<std::size_t>(v)];
        if (dv < 0) {
          dv = du + 1;
          parent[static_cast<std::size_t>(v)] = u;
          queue.push_back(v);
        } else if (parent[static_cast<std::size_t>(u)] != v) {
          best = std::min(best, du + dv + 1);
        }
      });
    }
  }
  if (best > n) return std::nullopt;
  return best;
}

SearchResult<GraphCycle> circumference(const Graph& g, std::uint64_t budget) {
  SearchResult<GraphCycle> result;
  result.status = SearchStatus::Absent;
  const auto shortest = girth(g);
  if (!shortest) return result;
  for (int len = g.order(); len >= *shortest; --len) {
    auto attempt = find_cycle_of_length(g, len, budget);
    result.stats += attempt.stats;
    if (attempt.found()) {
      result.status = SearchStatus::Found;
      result.witness = std::move(attempt.witness);
      return result;
    }
    if (attempt.unknown()) {
      result.status = SearchStatus::Unknown;
      return result;
    }
  }
  return result;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return true;
  VertexSet reach;
  reach.set(0);
  VertexSet frontier = reach;
  while (!frontier.empty()) {
    VertexSet next;
    frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
    frontier = next - reach;
    reach |= frontier;
  }
  return reach.count() == g.order();
}

bool is_two_connected(const Graph& g) {
  const int n = g.order();
  if (n < 3 || !is_connected(g)) return false;
  for (Vertex cut = 0; cut < n; ++cut) {
    const VertexSet allowed = g.vertices() - VertexSet::range(cut, cut + 1);
    const Vertex s = allowed.first();
    VertexSet reach;
    reach.set(s);
    VertexSet frontier = reach;
    while (!frontier.empty()) {
      VertexSet next;
      frontier.for_each([&](Vertex v) { next |= g.neighbors(v); });
      frontier = (next & allowed) - reach;
      reach |= frontier;
    }
    if (reach.count() != n - 1) return false;
  }
  return true;
}

bool is_balanced_complete_bipartite(const Graph& g) {
  const int n = g.order();
  if (n == 0 || n % 2 != 0) return false;
  const auto color = two_coloring(g);
  if (color.empty()) return false;
  const int side = static_cast<int>(std::count(color.begin(), color.end(), 0));
  if (side != n / 2) return false;
  return g.edge_count() == static_cast<std::size_t>(side) * static_cast<std::size_t>(n - side);
}

GraphPancyclicity pancyclicity_certificate_graph(const Graph& g, std::uint64_t budget) {
  GraphPancyclicity out;
  for (int len = 3; len <= g.order(); ++len) {
    auto r = find_cycle_of_length(g, len, budget);
    if (r.found()) {
      out.cycles.emplace(len, std::move(*r.witness));
    } else if (r.absent()) {
      out.absent.push_back(len);
    } else {
      out.unknown.push_back(len);
    }
  }
  return out;
}

WeakPancyclicity weak_pancyclicity(const Graph& g, std::uint64_t budget) {
  WeakPancyclicity out;
  out.girth = girth(g);
  if (!out.girth) {
    out.status = SearchStatus::Found;  // vacuous on forests
    return out;
  }
  auto longest = circumference(g, budget);
  if (longest.unknown()) return out;
  out.circumference = longest.witness->length();
  bool unknown = false;
  for (int len = *out.girth + 1; len < *out.circumference; ++len) {
    auto r = find_cycle_of_length(g, len, budget);
    if (r.absent()) out.gaps.push_back(len);
    if (r.unknown()) unknown = true;
  }
  if (!out.gaps.empty()) {
    out.status = SearchStatus::Absent;
  } else {
    out.status = unknown ? SearchStatus::Unknown : SearchStatus::Found;
  }
  return out;
}

Graph hamiltonian_closure(const Graph& g) {
  Graph c = g;
  const int n = g.order();
  bool changed = true;
  while (changed) {
    changed = false;
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (!c.has_edge(u, v) && c.degree(u) + c.degree(v) >= n) {
          c.add_edge(u, v);
          changed = true;
        }
      }
    }
  }
  return c;
}

namespace {

std::optional<bool> hamiltonian_verdict(const Graph& g, std::uint64_t budget) {
  auto r = hamiltonian_cycle(g, budget);
  if (r.unknown()) return std::nullopt;
  return r.found();
}

}  // namespace

ConditionReport check_dirac(const Graph& g, std::uint64_t budget) {
  ConditionReport rep{"dirac", false, std::nullopt, ""};
  const int n = g.order();
  rep.hypothesis = n >= 3 && 2 * g.min_degree() >= n;
  rep.detail = "min degree " + std::to_string(g.min_degree()) + ", n=" + std::to_string(n);
  if (rep.hypothesis) rep.conclusion = hamiltonian_verdict(g, budget);
  return rep;
}

ConditionReport check_ore(const Graph& g, std::uint64_t budget) {
  ConditionReport rep{"ore", false, std::nullopt, ""};
  const int n = g.order();
  rep.hypothesis = n >= 3;
  for (Vertex u = 0; u < n && rep.hypothesis; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (!g.has_edge(u, v) && g.degree(u) + g.degree(v) < n) {
        rep.hypothesis = false;
        rep.detail = "nonadjacent " + std::to_string(u) + "," + std::to_string(v) +
                     " have degree sum " + std::to_string(g.degree(u) + g.degree(v));
        break;
      }
    }
  }
  if (rep.hypothesis) rep.conclusion = hamiltonian_verdict(g, budget);
  return rep;
}

ConditionReport check_bondy(const Graph& g, std::uint64_t budget) {
  ConditionReport rep{"bondy", false, std::nullopt, ""};
  const int n = g.order();
  const auto e = g.edge_count();
  if (n < 3 || 4 * e < static_cast<std::size_t>(n) * static_cast<std::size_t>(n)) {
    rep.detail = "edge count " + std::to_string(e) + " below n^2/4";
    return rep;
  }
  const auto ham = hamiltonian_verdict(g, budget);
  if (!ham) {
    rep.detail = "hamiltonicity undecided within budget";
    return rep;
  }
  if (!*ham) {
    rep.detail = "not hamiltonian";
    return rep;
  }
  rep.hypothesis = true;
  if (is_balanced_complete_bipartite(g)) {
    rep.conclusion = true;
    rep.detail = "exceptional graph K_{n/2,n/2}";
    return rep;
  }
  const auto cert = pancyclicity_certificate_graph(g, budget);
  if (!cert.unknown.empty()) {
    rep.detail = "some lengths undecided within budget";
    return rep;
  }
  rep.conclusion = cert.complete(n);
  rep.detail = *rep.conclusion ? "pancyclic"
                               : "missing length " + std::to_string(*cert.first_missing());
  return rep;
}

ConditionReport check_brandt(const Graph& g, std::uint64_t budget) {
  ConditionReport rep{"brandt", false, std::nullopt, ""};
  const int n = g.order();
  rep.hypothesis = n >= 3 && !is_bipartite(g) && 3 * g.min_degree() >= n + 2;
  rep.detail = "min degree " + std::to_string(g.min_degree());
  if (!rep.hypothesis) return rep;
  const auto weak = weak_pancyclicity(g, budget);
  if (weak.status == SearchStatus::Unknown) return rep;
  const bool girth_ok = weak.girth && (*weak.girth == 3 || *weak.girth == 4);
  rep.conclusion = weak.status == SearchStatus::Found && girth_ok;
  rep.detail += ", girth " + std::to_string(weak.girth.value_or(0)) + ", circumference " +
                std::to_string(weak.circumference.value_or(0));
  return rep;
}

ConditionReport check_mantel(const Graph& g) {
  ConditionReport rep{"mantel", false, std::nullopt, ""};
  const auto n = static_cast<std::size_t>(g.order());
  rep.hypothesis = 4 * g.edge_count() > n * n;
  if (rep.hypothesis) rep.conclusion = has_triangle(g);
  return rep;
}

ConditionReport check_hamconn_corollary(const Graph& g, std::uint64_t budget) {
  ConditionReport rep{"hamiltonian-connected", false, std::nullopt, ""};
  const int n = g.order();
  const auto need = binomial(n, 2) >= 2 ? binomial(n, 2) - 2 : 0;
  rep.hypothesis = n >= 6 && g.edge_count() >= need;
  if (n < 6) rep.detail = "n < 6";
  if (!rep.hypothesis) return rep;
  for (Vertex x = 0; x < n; ++x) {
    for (Vertex y = x + 1; y < n; ++y) {
      auto p = hamiltonian_path_between(g, x, y, budget);
      if (p.unknown()) return rep;
      if (p.absent()) {
        rep.conclusion = false;
        rep.detail = "no spanning path " + std::to_string(x) + "-" + std::to_string(y);
        return rep;
      }
    }
  }
  rep.conclusion = true;
  return rep;
}

Graph parse_graph(std::string_view text) {
  const Hypergraph h = parse_hypergraph(text);
  if (h.uniformity() != 2) throw ParseError(1, "graph files must have r = 2");
  Graph g(h.order());
  for (const auto& e : h.edges()) g.add_edge(e[0], e[1]);
  return g;
}

std::string serialize_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + " 2\n";
  for (const auto& e : g.edges()) {
    out += "e " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace berge
