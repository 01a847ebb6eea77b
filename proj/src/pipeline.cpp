#include "berge/pipeline.hpp"

#include <algorithm>
#include <array>

#include "berge/errors.hpp"
#include "berge/graph.hpp"

namespace berge {

VertexEdgeLedger build_ledger(const Hypergraph& h, const ShadowMatching& phi, Vertex v) {
  if (v < 0 || v >= h.order()) throw InputError("vertex out of range");
  const Graph& f = phi.image();
  const int n = h.order();
  VertexEdgeLedger led;
  led.v = v;
  led.degree_f = f.degree(v);
  VertexSet closed = f.neighbors(v);
  closed.set(v);
  for (int e : h.incident_edges(v)) {
    if (h.edge_set(e).is_subset_of(closed)) {
      led.inner.push_back(e);
    } else {
      led.leftover.push_back(e);
    }
    if (const auto p = phi.pair_of(e); p && p->u != v && p->v != v) led.private_edges.push_back(*p);
  }
  led.small = 3 * led.degree_f <= n + 1;
  led.near_small = 3 * led.degree_f <= n + 4;
  return led;
}

std::string check_plan(const Hypergraph& h, const ShadowMatching& phi, const SwapPlan& plan) {
  const std::size_t m = plan.remapped.size();
  if (plan.removed.size() != m || plan.added.size() != m) return "plan lists differ in length";
  if (m > 2) return "plan remaps more than two hyperedges";
  for (std::size_t i = 0; i < m; ++i) {
    const int e = plan.remapped[i];
    if (e < 0 || e >= h.edge_count()) return "remapped edge out of range";
    for (std::size_t j = 0; j < i; ++j) {
      if (plan.remapped[j] == e) return "hyperedge remapped twice";
      if (plan.added[j] == plan.added[i]) return "pair added twice";
    }
    const auto cur = phi.pair_of(e);
    if (!cur) return "remapped hyperedge is unmatched";
    if (!(*cur == plan.removed[i])) return "removed pair is not the current image";
    const VertexPair p = plan.added[i];
    if (p.u >= p.v || !h.edge_contains(e, p.u, p.v)) return "added pair not inside its hyperedge";
    if (const auto holder = phi.edge_of(p)) {
      if (std::find(plan.remapped.begin(), plan.remapped.end(), *holder) == plan.remapped.end()) {
        return "added pair already used by another hyperedge";
      }
    }
  }
  return {};
}

ShadowMatching apply_swap(const Hypergraph& h, const ShadowMatching& phi, const SwapPlan& plan) {
  if (const auto err = check_plan(h, phi, plan); !err.empty()) throw InputError("swap plan: " + err);
  ShadowMatching out = phi;
  for (int e : plan.remapped) out.unassign(e);
  for (std::size_t i = 0; i < plan.remapped.size(); ++i) out.assign(plan.remapped[i], plan.added[i]);
  return out;
}

namespace {

bool crosses(const VertexPair& p, const VertexSet& a, const VertexSet& b) {
  return (a.test(p.u) && b.test(p.v)) || (a.test(p.v) && b.test(p.u));
}

bool inside(const VertexPair& p, const VertexSet& s) { return s.test(p.u) && s.test(p.v); }

bool shape_ok(const Graph& f, const VossWitness& w, const SwapPlan& p) {
  if (w.e0 && std::find(p.removed.begin(), p.removed.end(), *w.e0) == p.removed.end()) return false;
  const VertexSet c1 = w.v1 - w.v2;
  const VertexSet c2 = w.v2 - w.v1;
  switch (w.cls) {
    case VossClass::G1:
      return p.added.size() == 2 && crosses(p.added[0], w.v1, w.v2) &&
             crosses(p.added[1], w.v1, w.v2) && p.added[0].u != p.added[1].u &&
             p.added[0].u != p.added[1].v && p.added[0].v != p.added[1].u &&
             p.added[0].v != p.added[1].v;
    case VossClass::G2:
      return p.added.size() == 1 && crosses(p.added[0], c1, c2);
    case VossClass::G3: {
      if (p.added.size() != 1 || !crosses(p.added[0], c1, c2)) return false;
      // x0 must keep a V2-neighbor besides x2 after the swap.
      Graph g = f;
      for (const auto& r : p.removed) g.remove_edge(r.u, r.v);
      for (const auto& a : p.added) g.add_edge(a.u, a.v);
      const Vertex x2 = c2.test(p.added[0].u) ? p.added[0].u : p.added[0].v;
      VertexSet others = g.neighbors(*w.x0) & w.v2;
      others.reset(x2);
      return !others.empty();
    }
    case VossClass::G4:
      return p.added.size() == 1 && inside(p.added[0], w.v2);
    case VossClass::G5:
      return p.added.size() == 2 && inside(p.added[0], w.v2) && inside(p.added[1], w.v2) &&
             !(p.added[0] == p.added[1]);
  }
  return false;
}

}  // namespace

SwapSearch find_swappable_pair(const Hypergraph& h, const ShadowMatching& phi, const VossWitness& w) {
  SwapSearch out;
  const int n = h.order();
  if (static_cast<std::uint64_t>(min_degree(h)) < degree_threshold(n, h.uniformity())) {
    out.diagnostic = "minimum degree below the threshold";
    return out;
  }
  const Graph& f = phi.image();
  if (!verify_voss_witness(f, w)) {
    out.diagnostic = "witness does not describe the matched graph";
    return out;
  }

  auto leftover = [&](Vertex v) {
    std::vector<int> out_edges;
    for (int e : build_ledger(h, phi, v).leftover)
      if (phi.is_matched(e)) out_edges.push_back(e);
    return out_edges;
  };
  auto members = [&](int e, const VertexSet& s) { return (h.edge_set(e) & s).to_vector(); };

  std::optional<SwapPlan> found;
  auto offer = [&](std::vector<int> edges, std::vector<VertexPair> added) {
    SwapPlan p;
    p.cls = w.cls;
    p.remapped = std::move(edges);
    for (int e : p.remapped) p.removed.push_back(*phi.pair_of(e));
    p.added = std::move(added);
    if (!check_plan(h, phi, p).empty() || !shape_ok(f, w, p)) return false;
    found = std::move(p);
    return true;
  };
  const std::optional<int> e0_edge = w.e0 ? phi.edge_of(*w.e0) : std::nullopt;

  switch (w.cls) {
    case VossClass::G1: {
      std::vector<int> firsts;
      if (e0_edge) {
        firsts.push_back(*e0_edge);
      } else {
        for (int e = 0; e < h.edge_count(); ++e)
          if (phi.is_matched(e) && h.edge_set(e).intersects(w.v1) && h.edge_set(e).intersects(w.v2))
            firsts.push_back(e);
      }
      for (int m1 : firsts) {
        for (int side = 0; side < 2 && !found; ++side) {
          const VertexSet& p_side = side == 0 ? w.v1 : w.v2;
          const VertexSet& q_side = side == 0 ? w.v2 : w.v1;
          if ((h.edge_set(m1) & p_side).count() < 2) continue;
          for (Vertex x2 : members(m1, q_side)) {
            for (Vertex y2 : (q_side - h.edge_set(m1)).to_vector()) {
              if (w.e0 && (y2 == w.e0->u || y2 == w.e0->v)) continue;
              for (int m2 : leftover(y2)) {
                if (m2 == m1) continue;
                for (Vertex y1 : members(m2, p_side)) {
                  for (Vertex x1 : members(m1, p_side)) {
                    if (x1 == y1) continue;
                    if (offer({m1, m2}, {VertexPair::of(x1, x2), VertexPair::of(y1, y2)})) return {found, {}};
                  }
                }
              }
            }
          }
        }
      }
      break;
    }
    case VossClass::G2:
    case VossClass::G3: {
      const VertexSet c2 = w.v2 - w.v1;
      for (Vertex x1 : (w.v1 - w.v2).to_vector()) {
        for (int m1 : leftover(x1)) {
          for (Vertex x2 : members(m1, c2)) {
            if (offer({m1}, {VertexPair::of(x1, x2)})) return {found, {}};
          }
        }
      }
      break;
    }
    case VossClass::G4: {
      for (Vertex x1 : w.v2.to_vector()) {
        for (int m1 : leftover(x1)) {
          for (Vertex x2 : members(m1, w.v2)) {
            if (x2 == x1) continue;
            if (offer({m1}, {VertexPair::of(x1, x2)})) return {found, {}};
          }
        }
      }
      break;
    }
    case VossClass::G5: {
      std::vector<std::pair<int, VertexPair>> firsts;
      if (e0_edge) {
        firsts.emplace_back(*e0_edge, *w.e0);
      } else {
        for (Vertex v : w.v2.to_vector()) {
          for (int m1 : leftover(v)) {
            const auto in2 = members(m1, w.v2);
            for (std::size_t i = 0; i < in2.size(); ++i)
              for (std::size_t j = i + 1; j < in2.size(); ++j)
                firsts.emplace_back(m1, VertexPair::of(in2[i], in2[j]));
          }
        }
      }
      for (const auto& [m1, x12] : firsts) {
        for (Vertex y1 : (w.v2 - h.edge_set(m1)).to_vector()) {
          for (int m2 : leftover(y1)) {
            if (m2 == m1) continue;
            for (Vertex y2 : members(m2, w.v2)) {
              if (y2 == y1) continue;
              if (offer({m1, m2}, {x12, VertexPair::of(y1, y2)})) return {found, {}};
            }
          }
        }
      }
      break;
    }
  }
  out.diagnostic = "no choice in the case analysis yields a legal plan";
  return out;
}

std::vector<VertexPair> cycle_pairs(const BergeCycle& c) {
  std::vector<VertexPair> out;
  const int len = c.length();
  for (int i = 0; i < len; ++i) {
    out.push_back(VertexPair::of(c.vertices[static_cast<std::size_t>(i)],
                                 c.vertices[static_cast<std::size_t>((i + 1) % len)]));
  }
  return out;
}

namespace {

void require_respects(const Hypergraph& h, const ShadowMatching& phi, const BergeCycle& c) {
  if (h.uniformity() != 3) throw InputError("shifting is defined for 3-uniform hypergraphs");
  if (auto rep = verify_berge_cycle(h, c); !rep) throw InputError("cycle: " + rep.reason);
  const auto pairs = cycle_pairs(c);
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto p = phi.pair_of(c.edges[i]);
    if (!p || !(*p == pairs[i])) throw InputError("matching does not respect the cycle");
  }
}

bool near_small(const Graph& f, Vertex v) { return 3 * f.degree(v) <= f.order() + 4; }
bool small(const Graph& f, Vertex v) { return 3 * f.degree(v) <= f.order() + 1; }

std::optional<int> shiftable_unchecked(const Hypergraph& h, const ShadowMatching& phi,
                                       const std::vector<VertexPair>& on_cycle, Vertex v) {
  const Graph& f = phi.image();
  for (int e : build_ledger(h, phi, v).leftover) {
    const auto p = phi.pair_of(e);
    if (!p || p->u == v || p->v == v) continue;
    if (std::find(on_cycle.begin(), on_cycle.end(), *p) != on_cycle.end()) continue;
    if (near_small(f, p->u) || near_small(f, p->v)) continue;
    return e;
  }
  return std::nullopt;
}

}  // namespace

std::optional<int> find_shiftable_hyperedge(const Hypergraph& h, const ShadowMatching& phi,
                                            const BergeCycle& c, Vertex v) {
  require_respects(h, phi, c);
  if (v < 0 || v >= h.order()) throw InputError("vertex out of range");
  if (!small(phi.image(), v)) throw InputError("vertex is not of small F-degree");
  return shiftable_unchecked(h, phi, cycle_pairs(c), v);
}

std::optional<ShiftStep> shift_once(const Hypergraph& h, ShadowMatching& phi, const BergeCycle& c) {
  require_respects(h, phi, c);
  const auto on_cycle = cycle_pairs(c);
  for (Vertex v = 0; v < h.order(); ++v) {
    if (!small(phi.image(), v)) continue;
    const auto e = shiftable_unchecked(h, phi, on_cycle, v);
    if (!e) continue;
    ShiftStep step;
    step.v = v;
    step.edge = *e;
    step.from = *phi.pair_of(*e);
    const Vertex u = step.from.u;
    const Vertex w = step.from.v;
    // Both vw and uv lie in the edge; take the first absent one.
    std::array<VertexPair, 2> options{VertexPair::of(v, w), VertexPair::of(u, v)};
    std::sort(options.begin(), options.end());
    const auto pick = std::find_if(options.begin(), options.end(),
                                   [&](const VertexPair& p) { return !phi.image().has_edge(p.u, p.v); });
    if (pick == options.end()) continue;
    step.to = *pick;
    step.loser = step.to.contains(u) ? w : u;
    phi.unassign(*e);
    phi.assign(*e, step.to);
    extend_to_maximal(h, phi);
    return step;
  }
  return std::nullopt;
}

ImproveResult improve_matching_r3(const Hypergraph& h, const ShadowMatching& phi0, const BergeCycle& c) {
  require_respects(h, phi0, c);
  ImproveResult res{phi0, {}, {}, {}};
  const int cap = h.order() * h.order() * 4;
  while (true) {
    std::vector<Vertex> s;
    for (Vertex v = 0; v < h.order(); ++v)
      if (small(res.matching.image(), v)) s.push_back(v);
    if (s.empty()) {
      res.diagnostic = "S is empty";
      return res;
    }
    if (static_cast<int>(res.steps.size()) >= cap) {
      res.remaining_small = s;
      res.diagnostic = "step cap reached";
      return res;
    }
    auto step = shift_once(h, res.matching, c);
    if (!step) {
      res.remaining_small = s;
      res.diagnostic = "no shiftable hyperedge for any vertex of S";
      return res;
    }
    res.steps.push_back(*step);
  }
}

namespace {

// Lifts cycles of phi's graph for every length not yet certified.
int lift_missing(const ShadowMatching& phi, PancyclicityCertificate& cert, const char* method,
                 std::uint64_t budget) {
  int added = 0;
  for (int len = 3; len <= cert.n; ++len) {
    if (cert.cycles.count(len)) continue;
    auto r = find_cycle_of_length(phi.image(), len, budget);
    cert.stats.expanded += r.stats.expanded;
    if (!r.found()) continue;
    cert.cycles[len] = {lift_cycle(phi, *r.witness), method};
    ++added;
  }
  return added;
}

std::string join_lengths(const std::vector<int>& v) {
  std::string s;
  for (int x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

}  // namespace

PancyclicityCertificate extract_pancyclicity(const Hypergraph& h, std::uint64_t budget) {
  PancyclicityCertificate cert;
  cert.n = h.order();
  cert.r = h.uniformity();
  const int n = h.order();
  if (n < 3) return cert;
  auto trace = [&](std::string stage, std::string outcome, std::string detail = {}) {
    cert.trace.push_back({std::move(stage), std::move(outcome), std::move(detail)});
  };
  std::optional<ShadowMatching> used;

  // (i) canonical maximal matching.
  const ShadowMatching phi = maximal_matching(h);
  const Graph& f = phi.image();
  trace("matching", "built",
        "matched=" + std::to_string(phi.size()) + " e(F)=" + std::to_string(f.edge_count()));

  // (ii) premises on F.
  trace("triangle", has_triangle(f) ? "present" : "absent");
  trace("min-degree-F", std::to_string(f.min_degree()));

  // (iii) F hamiltonian: certify inside F.
  const auto ham = hamiltonian_cycle(f, budget);
  cert.stats.expanded += ham.stats.expanded;
  if (ham.found()) {
    const bool brandt = !is_bipartite(f) && 3 * f.min_degree() >= n + 2;
    const int got = lift_missing(phi, cert, provenance::kLiftedF, budget);
    trace("hamiltonian-F", "found",
          std::string(brandt ? "brandt hypothesis holds" : "brandt hypothesis fails") +
              "; lifted " + std::to_string(got));
    if (got > 0) used = phi;
  } else {
    trace("hamiltonian-F", std::string(to_string(ham.status)));
  }

  // (iv) F nonhamiltonian: Voss class and a swap.
  if (ham.absent() && !cert.complete()) {
    const auto cls = classify_voss(f, budget);
    if (!cls.found()) {
      trace("voss", std::string(cls.absent() ? "not-in-family" : "unknown"));
    } else {
      trace("voss", std::string(to_string(cls.witness->cls)));
      const auto swap = find_swappable_pair(h, phi, *cls.witness);
      if (!swap.plan) {
        trace("swap", "no-plan", swap.diagnostic);
      } else {
        ShadowMatching swapped = apply_swap(h, phi, *swap.plan);
        extend_to_maximal(h, swapped);
        const int got = lift_missing(swapped, cert, provenance::kLiftedSwapped, budget);
        trace("swap", "applied",
              "delta(F')=" + std::to_string(swapped.image().min_degree()) + "; lifted " +
                  std::to_string(got));
        if (got > 0) used = std::move(swapped);
      }
    }
  }

  // (v) r in {3, 4}: matching around a hamiltonian Berge cycle.
  if ((cert.r == 3 || cert.r == 4) && !cert.complete()) {
    const auto c = find_berge_cycle(h, n, budget * static_cast<std::uint64_t>(n));
    cert.stats += c.stats;
    if (!c.found()) {
      trace("berge-hamiltonian", std::string(to_string(c.status)));
    } else {
      trace("berge-hamiltonian", "found");
      if (!cert.cycles.count(n)) cert.cycles[n] = {*c.witness, provenance::kDirectSearch};
      ShadowMatching around = matching_respecting_cycle(h, *c.witness);
      if (cert.r == 3) {
        auto improved = improve_matching_r3(h, around, *c.witness);
        trace("shift", std::to_string(improved.steps.size()) + " steps", improved.diagnostic);
        around = std::move(improved.matching);
      }
      const int got = lift_missing(around, cert, provenance::kLiftedShifted, budget);
      trace("cycle-respecting", "lifted " + std::to_string(got));
      if (got > 0) used = std::move(around);
    }
  }

  // (vi) direct search for whatever is left.
  for (int len = 3; len <= n; ++len) {
    if (cert.cycles.count(len)) continue;
    const auto r = find_berge_cycle(h, len, budget * static_cast<std::uint64_t>(len));
    cert.stats += r.stats;
    if (r.found()) {
      cert.cycles[len] = {*r.witness, provenance::kDirectSearch};
    } else if (r.absent()) {
      cert.missing.push_back(len);
    } else {
      cert.unknown.push_back(len);
    }
  }
  if (!cert.missing.empty() || !cert.unknown.empty()) {
    trace("direct-search", "incomplete",
          "missing=" + join_lengths(cert.missing) + " unknown=" + join_lengths(cert.unknown));
  } else {
    trace("direct-search", "complete");
  }
  if (used) cert.phi = serialize_matching(*used);
  return cert;
}

}  // namespace berge
