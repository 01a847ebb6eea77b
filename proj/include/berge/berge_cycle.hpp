#pragma once

#include <string>
#include <vector>

#include "berge/hypergraph.hpp"

namespace berge {

// v1, e1, v2, e2, ..., vl, el with {v_i, v_{i+1}} inside e_i (indices mod l).
// Edges are indices into the owning hypergraph.
struct BergeCycle {
  std::vector<Vertex> vertices;
  std::vector<int> edges;

  int length() const { return static_cast<int>(vertices.size()); }
  friend bool operator==(const BergeCycle&, const BergeCycle&) = default;
};

struct VerifyReport {
  bool ok = true;
  std::string reason;
  int index = -1;  // offending position, -1 when not positional

  explicit operator bool() const { return ok; }
};

// Checks distinct vertices, distinct edges and cyclic containment.
VerifyReport verify_berge_cycle(const Hypergraph& h, const BergeCycle& c);

}  // namespace berge
