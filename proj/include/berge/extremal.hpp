#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"
#include "berge/search.hpp"

namespace berge {

// Two r-uniform cliques: for odd n of size (n+1)/2 sharing one vertex; for
// even n disjoint of size n/2 plus one edge meeting both. The extra edge is
// the last r-1 vertices of the first clique with the first vertex of the
// second, or a seeded random crossing r-set when `seed` is given.
// Requires 3 <= r <= floor((n-1)/2) - 1.
Hypergraph construction_1(int n, int r, std::optional<std::uint64_t> seed = std::nullopt);

// A = {0..k-1} with k = floor((n-1)/2), B the rest; every r-set with at most
// one vertex in B. Same parameter range as construction_1.
Hypergraph construction_2(int n, int r);

// 3-uniform on Z_{2k}: edges {i, i+1, i+k}. Requires k >= 5.
Hypergraph construction_3(int k);

Hypergraph complete_hypergraph(int n, int r);

// r-uniform tight cycle on Z_n: edges {i, ..., i+r-1}. Requires n > r >= 2.
Hypergraph tight_cycle(int n, int r);

// Parts {0..a-1} and {a..a+b-1}.
Graph complete_bipartite_graph(int a, int b);

enum class VossClass { G1 = 1, G2, G3, G4, G5 };

std::string_view to_string(VossClass c);
std::optional<VossClass> parse_voss_class(std::string_view s);

// Partition witnessing membership in a class; k = floor((n-1)/2).
struct VossWitness {
  VossClass cls = VossClass::G1;
  int k = 0;
  VertexSet v1;
  VertexSet v2;
  std::optional<Vertex> x0;
  std::optional<VertexPair> e0;

  friend bool operator==(const VossWitness&, const VossWitness&) = default;
};

// Whether g matches the template of w.cls on the given partition (sizes,
// intersection, edge conditions, degree floors, and the recorded x0/e0).
bool verify_voss_witness(const Graph& g, const VossWitness& w);

struct VossOptions {
  bool with_e0 = false;  // G1 and G5 only
  std::uint64_t seed = 0;
  bool shuffle_labels = false;
};

struct VossInstance {
  Graph graph;
  VossWitness witness;
};

// A member of the class with parameter k >= 3. Throws InputError for
// options the template does not allow, or when rejection sampling of the
// G3 side graph gives up.
VossInstance generate_voss(VossClass cls, int k, const VossOptions& opts = {});

// Found with a witness when g lies in one of the classes (tried G1..G5);
// Absent when it lies in none; Unknown when the partition enumeration
// exceeds the budget. G1-G3 are decided through cut-vertex and component
// structure, G4-G5 by enumerating the large side.
SearchResult<VossWitness> classify_voss(const Graph& g, std::uint64_t budget = kDefaultBudget);

}  // namespace berge
