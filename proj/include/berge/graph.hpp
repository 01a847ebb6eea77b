#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "berge/search.hpp"
#include "berge/vertex_set.hpp"

namespace berge {

// Simple undirected graph on 0..n-1 with bitset adjacency.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);

  int order() const { return n_; }

  void add_edge(Vertex u, Vertex v);
  void remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return adj_[static_cast<std::size_t>(u)].test(v); }

  const VertexSet& neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return adj_[static_cast<std::size_t>(v)].count(); }
  int min_degree() const;
  std::size_t edge_count() const;

  // Edges in lexicographic order.
  std::vector<VertexPair> edges() const;

  VertexSet vertices() const { return VertexSet::range(0, n_); }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

Graph complete_graph(int n);
Graph cycle_graph(int n);
Graph path_graph(int n);
Graph from_edges(int n, const std::vector<VertexPair>& edges);

// Cycle v1..vl (l >= 3); consecutive vertices and (vl, v1) are adjacent.
// Search routines return it canonically: v1 is the minimum vertex and
// v2 < vl.
struct GraphCycle {
  std::vector<Vertex> vertices;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const GraphCycle&, const GraphCycle&) = default;
};

bool is_cycle_in(const Graph& g, const GraphCycle& c);

// Rotates/reflects a cycle into canonical form.
GraphCycle canonical_cycle(GraphCycle c);

SearchResult<GraphCycle> find_cycle_of_length(const Graph& g, int length,
                                              std::uint64_t budget = kDefaultBudget);
SearchResult<GraphCycle> hamiltonian_cycle(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Spanning path from x to y.
SearchResult<std::vector<Vertex>> hamiltonian_path_between(const Graph& g, Vertex x, Vertex y,
                                                           std::uint64_t budget = kDefaultBudget);

bool has_triangle(const Graph& g);
bool is_bipartite(const Graph& g);
inline std::size_t edge_count(const Graph& g) { return g.edge_count(); }

// Shortest cycle length; nullopt on forests. Exact (BFS from every vertex).
std::optional<int> girth(const Graph& g);

// Longest cycle by descending-length search; the witness realizes the
// circumference. Absent on forests.
SearchResult<GraphCycle> circumference(const Graph& g, std::uint64_t budget = kDefaultBudget);

bool is_connected(const Graph& g);
bool is_two_connected(const Graph& g);

// Structural test for K_{n/2,n/2}: bipartite, balanced, complete across.
bool is_balanced_complete_bipartite(const Graph& g);

struct GraphPancyclicity {
  std::map<int, GraphCycle> cycles;
  std::vector<int> absent;   // lengths whose exhaustive search completed empty
  std::vector<int> unknown;  // lengths where the budget ran out

  bool complete(int n) const { return static_cast<int>(cycles.size()) == (n >= 3 ? n - 2 : 0); }
  std::optional<int> first_missing() const {
    if (absent.empty()) return std::nullopt;
    return absent.front();
  }
};

// Searches every length 3..n.
GraphPancyclicity pancyclicity_certificate_graph(const Graph& g,
                                                 std::uint64_t budget = kDefaultBudget);

// All lengths from girth to circumference realized.
struct WeakPancyclicity {
  SearchStatus status = SearchStatus::Unknown;  // Found = weakly pancyclic
  std::optional<int> girth;
  std::optional<int> circumference;
  std::vector<int> gaps;
};
WeakPancyclicity weak_pancyclicity(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Repeatedly joins nonadjacent u,v with d(u)+d(v) >= n until fixed point.
Graph hamiltonian_closure(const Graph& g);

// Outcome of a classical sufficient condition: whether the hypothesis holds
// and, if it does, whether the conclusion was confirmed by search
// (nullopt when not checked or the search ran out of budget).
struct ConditionReport {
  std::string name;
  bool hypothesis = false;
  std::optional<bool> conclusion;
  std::string detail;
};

ConditionReport check_dirac(const Graph& g, std::uint64_t budget = kDefaultBudget);
ConditionReport check_ore(const Graph& g, std::uint64_t budget = kDefaultBudget);
ConditionReport check_bondy(const Graph& g, std::uint64_t budget = kDefaultBudget);
ConditionReport check_brandt(const Graph& g, std::uint64_t budget = kDefaultBudget);
ConditionReport check_mantel(const Graph& g);
ConditionReport check_hamconn_corollary(const Graph& g, std::uint64_t budget = kDefaultBudget);

// Graph files use the hypergraph text format with r = 2.
Graph parse_graph(std::string_view text);
std::string serialize_graph(const Graph& g);

}  // namespace berge
