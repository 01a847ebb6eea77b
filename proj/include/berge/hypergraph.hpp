#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "berge/vertex_set.hpp"

namespace berge {

class Graph;

// n-vertex r-uniform hypergraph on vertices 0..n-1. Edges are kept sorted
// within and lexicographically across, so edge indices are canonical: two
// hypergraphs with the same edge set have identical indexing.
class Hypergraph {
 public:
  // Validates uniformity, range and distinctness; throws InputError.
  Hypergraph(int n, int r, std::vector<std::vector<Vertex>> edges);

  int order() const { return n_; }
  int uniformity() const { return r_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  std::span<const Vertex> edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }
  const VertexSet& edge_set(int e) const { return masks_[static_cast<std::size_t>(e)]; }
  const std::vector<std::vector<Vertex>>& edges() const { return edges_; }

  bool edge_contains(int e, Vertex u, Vertex v) const {
    const VertexSet& m = masks_[static_cast<std::size_t>(e)];
    return m.test(u) && m.test(v);
  }

  // Index of the edge equal to `vertices`, if present.
  std::optional<int> find_edge(const VertexSet& vertices) const;

  // Edges containing v, ascending.
  const std::vector<int>& incident_edges(Vertex v) const {
    return incidence_[static_cast<std::size_t>(v)];
  }

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.r_ == b.r_ && a.edges_ == b.edges_;
  }

 private:
  int n_;
  int r_;
  std::vector<std::vector<Vertex>> edges_;
  std::vector<VertexSet> masks_;
  std::vector<std::vector<int>> incidence_;
};

struct DegreeProfile {
  std::vector<int> degrees;
  int minimum = 0;
};

int degree(const Hypergraph& h, Vertex v);
int min_degree(const Hypergraph& h);
DegreeProfile degree_profile(const Hypergraph& h);

// Graph on V(h) with uv an edge iff some hyperedge contains both.
Graph two_shadow(const Hypergraph& h);

// Text format: first non-comment line "n r", then one "e v1 .. vr" line per
// edge; lines starting with '#' are comments. Throws ParseError.
Hypergraph parse_hypergraph(std::string_view text);
std::string serialize_hypergraph(const Hypergraph& h);

Hypergraph read_hypergraph_file(const std::string& path);
void write_text_file(const std::string& path, std::string_view text);

// Exact binomial coefficient; saturates at UINT64_MAX.
std::uint64_t binomial(int n, int k);

// floor((n-1)/2), the parameter k used by the degree threshold and the Voss
// classes.
constexpr int half_floor(int n) { return (n - 1) / 2; }

// C(floor((n-1)/2), r-1) + 1.
std::uint64_t degree_threshold(int n, int r);

}  // namespace berge
