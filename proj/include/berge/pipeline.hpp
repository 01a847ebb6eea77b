#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/berge_search.hpp"
#include "berge/extremal.hpp"
#include "berge/shadow_matching.hpp"

namespace berge {

// Hyperedges at v split by whether they stay inside {v} and the
// F-neighborhood of v (N_v) or reach a non-neighbor (L_v).
struct VertexEdgeLedger {
  Vertex v = 0;
  int degree_f = 0;
  std::vector<int> inner;     // N_v
  std::vector<int> leftover;  // L_v
  // phi(f) for matched f containing v with v outside phi(f).
  std::vector<VertexPair> private_edges;
  bool small = false;       // 3 d_F(v) <= n + 1
  bool near_small = false;  // 3 d_F(v) <= n + 4
};

VertexEdgeLedger build_ledger(const Hypergraph& h, const ShadowMatching& phi, Vertex v);

// Remaps remapped[i] from removed[i] = phi(remapped[i]) to added[i].
struct SwapPlan {
  VossClass cls = VossClass::G1;
  std::vector<int> remapped;
  std::vector<VertexPair> removed;
  std::vector<VertexPair> added;
};

struct SwapSearch {
  std::optional<SwapPlan> plan;
  std::string diagnostic;  // why no plan was found
};

// Follows the per-class choices of the swap argument, walking every choice
// in canonical order and returning the first plan that is legal and has
// the class shape. No plan when H is below the degree threshold, w does not
// describe F, or every choice fails.
SwapSearch find_swappable_pair(const Hypergraph& h, const ShadowMatching& phi, const VossWitness& w);

// Empty string when the plan can be applied to phi.
std::string check_plan(const Hypergraph& h, const ShadowMatching& phi, const SwapPlan& plan);

// Throws InputError if the plan does not match phi.
ShadowMatching apply_swap(const Hypergraph& h, const ShadowMatching& phi, const SwapPlan& plan);

// Pairs v_i v_{i+1} of a Berge cycle.
std::vector<VertexPair> cycle_pairs(const BergeCycle& c);

// First f = {u, v, w} in L_v (canonical order) with phi(f) = uw, uw not a
// pair of C, and u, w outside S'. Requires r = 3, v in S and phi respecting
// C; throws InputError otherwise.
std::optional<int> find_shiftable_hyperedge(const Hypergraph& h, const ShadowMatching& phi,
                                            const BergeCycle& c, Vertex v);

struct ShiftStep {
  Vertex v = 0;
  int edge = -1;
  VertexPair from;
  VertexPair to;
  Vertex loser = 0;  // the endpoint of `from` whose F-degree drops
};

// One improvement: the smallest v in S with a shiftable hyperedge gets it
// remapped onto a pair at v (vw or uv, whichever absent pair comes first),
// then phi is re-extended to maximal. Returns nullopt and leaves phi
// untouched when no vertex of S has a shiftable hyperedge.
std::optional<ShiftStep> shift_once(const Hypergraph& h, ShadowMatching& phi, const BergeCycle& c);

struct ImproveResult {
  ShadowMatching matching;
  std::vector<ShiftStep> steps;
  std::vector<Vertex> remaining_small;  // S at termination
  std::string diagnostic;
};

// Repeats shift_once until S is empty or no step applies.
ImproveResult improve_matching_r3(const Hypergraph& h, const ShadowMatching& phi0,
                                  const BergeCycle& c);

// Stage-by-stage certification with per-length provenance; see README.
PancyclicityCertificate extract_pancyclicity(const Hypergraph& h,
                                             std::uint64_t budget = kDefaultBudget);

}  // namespace berge
