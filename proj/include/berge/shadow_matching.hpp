#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/berge_cycle.hpp"
#include "berge/graph.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

// Injective assignment of hyperedges to vertex pairs they contain (a
// matching in the incidence graph between E(H) and the 2-shadow). The
// matched pairs form the graph F. Stored in both directions so lifting a
// cycle of F is a table lookup per edge.
class ShadowMatching {
 public:
  explicit ShadowMatching(const Hypergraph& h);

  // Builds a matching from an explicit edge -> pair table; throws
  // InputError if a pair is not contained in its edge or is used twice.
  static ShadowMatching from_assignment(const Hypergraph& h,
                                        const std::vector<std::optional<VertexPair>>& table);

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edge_to_pair_.size()); }
  std::size_t size() const { return matched_; }

  bool is_matched(int edge) const { return edge_to_pair_[static_cast<std::size_t>(edge)].has_value(); }
  std::optional<VertexPair> pair_of(int edge) const { return edge_to_pair_[static_cast<std::size_t>(edge)]; }
  std::optional<int> edge_of(VertexPair p) const;

  // The matched graph F.
  const Graph& image() const { return image_; }

  // Throws InputError if `edge` is matched, p is not inside it, or p is
  // already used.
  void assign(int edge, VertexPair p);
  void unassign(int edge);

  // (edge, pair) for every matched edge, by edge index.
  std::vector<std::pair<int, VertexPair>> assignments() const;

  friend bool operator==(const ShadowMatching& a, const ShadowMatching& b) {
    return a.edge_to_pair_ == b.edge_to_pair_;
  }

 private:
  std::size_t key(VertexPair p) const {
    return static_cast<std::size_t>(p.u) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(p.v);
  }

  int n_;
  std::vector<VertexSet> edge_masks_;
  std::vector<std::optional<VertexPair>> edge_to_pair_;
  std::vector<int> pair_to_edge_;
  Graph image_;
  std::size_t matched_ = 0;
};

// How maximal_matching breaks ties. Lexicographic walks edges in canonical
// order and takes the smallest free pair; Random shuffles both choices with
// a seeded generator.
struct TieBreak {
  enum class Kind { Lexicographic, Random };
  Kind kind = Kind::Lexicographic;
  std::uint64_t seed = 0;

  static TieBreak lexicographic() { return {}; }
  static TieBreak random(std::uint64_t seed) { return {Kind::Random, seed}; }
};

ShadowMatching maximal_matching(const Hypergraph& h, TieBreak policy = TieBreak::lexicographic());

// Greedily matches every still-unmatched edge that has a free pair
// (canonical order), leaving existing assignments untouched.
void extend_to_maximal(const Hypergraph& h, ShadowMatching& phi);

// Maximum-cardinality matching by augmenting paths.
ShadowMatching maximum_matching(const Hypergraph& h);

// A maximal matching with phi(e_i) = v_i v_{i+1} for the cycle's edges.
ShadowMatching matching_respecting_cycle(const Hypergraph& h, const BergeCycle& c);

// A maximal matching whose image is exactly `target`, when one exists:
// every pair of target is used and every edge with a pair outside target is
// matched. Used to realize a prescribed matched graph F.
std::optional<ShadowMatching> matching_with_image(const Hypergraph& h, const Graph& target);

// Replaces each edge of a cycle of F by its preimage hyperedge.
BergeCycle lift_cycle(const ShadowMatching& phi, const GraphCycle& c);

// Every unmatched edge of a maximal matching induces a clique in F.
struct CliqueCheckReport {
  bool pass = true;
  std::optional<int> edge;
  std::optional<VertexPair> missing_pair;
};
CliqueCheckReport unmatched_hyperedges_clique_check(const Hypergraph& h, const ShadowMatching& phi);

// Injectivity, containment and image consistency.
bool is_valid_matching(const Hypergraph& h, const ShadowMatching& phi);

// One "m <edge> <u> <v>" line per matched edge.
std::string serialize_matching(const ShadowMatching& phi);

}  // namespace berge
