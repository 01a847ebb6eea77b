#include "berge/shadow_matching.hpp"

#include <algorithm>

#include "berge/errors.hpp"
#include "berge/random.hpp"

namespace berge {

namespace {

// Pairs of an edge in lexicographic order.
std::vector<VertexPair> pairs_of(std::span<const Vertex> edge) {
  std::vector<VertexPair> out;
  for (std::size_t i = 0; i < edge.size(); ++i)
    for (std::size_t j = i + 1; j < edge.size(); ++j) out.push_back({edge[i], edge[j]});
  return out;
}

}  // namespace

ShadowMatching::ShadowMatching(const Hypergraph& h)
    : n_(h.order()),
      edge_to_pair_(static_cast<std::size_t>(h.edge_count())),
      pair_to_edge_(static_cast<std::size_t>(h.order()) * static_cast<std::size_t>(h.order()), -1),
      image_(h.order()) {
  edge_masks_.reserve(static_cast<std::size_t>(h.edge_count()));
  for (int e = 0; e < h.edge_count(); ++e) edge_masks_.push_back(h.edge_set(e));
}

ShadowMatching ShadowMatching::from_assignment(
    const Hypergraph& h, const std::vector<std::optional<VertexPair>>& table) {
  if (static_cast<int>(table.size()) != h.edge_count()) {
    throw InputError("assignment table size does not match edge count");
  }
  ShadowMatching phi(h);
  for (int e = 0; e < h.edge_count(); ++e) {
    if (const auto& p = table[static_cast<std::size_t>(e)]) phi.assign(e, VertexPair::of(p->u, p->v));
  }
  return phi;
}

std::optional<int> ShadowMatching::edge_of(VertexPair p) const {
  if (p.u < 0 || p.v >= n_ || p.u == p.v) return std::nullopt;
  const int e = pair_to_edge_[key(p)];
  if (e < 0) return std::nullopt;
  return e;
}

void ShadowMatching::assign(int edge, VertexPair p) {
  if (edge < 0 || edge >= edge_count()) throw InputError("edge index out of range");
  p = VertexPair::of(p.u, p.v);
  if (p.u == p.v || p.u < 0 || p.v >= n_) throw InputError("invalid vertex pair");
  if (is_matched(edge)) {
    throw InputError("edge " + std::to_string(edge) + " is already matched");
  }
  const auto& mask = edge_masks_[static_cast<std::size_t>(edge)];
  if (!mask.test(p.u) || !mask.test(p.v)) {
    throw InputError("pair " + std::to_string(p.u) + "," + std::to_string(p.v) +
                     " is not contained in edge " + std::to_string(edge));
  }
  if (pair_to_edge_[key(p)] >= 0) {
    throw InputError("pair " + std::to_string(p.u) + "," + std::to_string(p.v) +
                     " is already matched");
  }
  edge_to_pair_[static_cast<std::size_t>(edge)] = p;
  pair_to_edge_[key(p)] = edge;
  image_.add_edge(p.u, p.v);
  ++matched_;
}

void ShadowMatching::unassign(int edge) {
  if (edge < 0 || edge >= edge_count()) throw InputError("edge index out of range");
  auto& slot = edge_to_pair_[static_cast<std::size_t>(edge)];
  if (!slot) return;
  pair_to_edge_[key(*slot)] = -1;
  image_.remove_edge(slot->u, slot->v);
  slot.reset();
  --matched_;
}

std::vector<std::pair<int, VertexPair>> ShadowMatching::assignments() const {
  std::vector<std::pair<int, VertexPair>> out;
  for (int e = 0; e < edge_count(); ++e) {
    if (const auto& p = edge_to_pair_[static_cast<std::size_t>(e)]) out.emplace_back(e, *p);
  }
  return out;
}

ShadowMatching maximal_matching(const Hypergraph& h, TieBreak policy) {
  ShadowMatching phi(h);
  if (policy.kind == TieBreak::Kind::Lexicographic) {
    extend_to_maximal(h, phi);
    return phi;
  }
  Rng rng(policy.seed);
  std::vector<int> order(static_cast<std::size_t>(h.edge_count()));
  for (int e = 0; e < h.edge_count(); ++e) order[static_cast<std::size_t>(e)] = e;
  rng.shuffle(order);
  for (int e : order) {
    auto pairs = pairs_of(h.edge(e));
    rng.shuffle(pairs);
    for (const auto& p : pairs) {
      if (!phi.edge_of(p)) {
        phi.assign(e, p);
        break;
      }
    }
  }
  return phi;
}

void extend_to_maximal(const Hypergraph& h, ShadowMatching& phi) {
  for (int e = 0; e < h.edge_count(); ++e) {
    if (phi.is_matched(e)) continue;
    for (const auto& p : pairs_of(h.edge(e))) {
      if (!phi.edge_of(p)) {
        phi.assign(e, p);
        break;
      }
    }
  }
}

namespace {

// Kuhn's augmenting paths from the edge side.
class EdgeSideAugmenter {
 public:
  EdgeSideAugmenter(const Hypergraph& h, std::vector<std::vector<VertexPair>> allowed)
      : h_(h),
        allowed_(std::move(allowed)),
        pair_owner_(static_cast<std::size_t>(h.order() * h.order()), -1),
        edge_pair_(static_cast<std::size_t>(h.edge_count())),
        seen_(static_cast<std::size_t>(h.order() * h.order()), 0) {}

  bool augment_edge(int e) {
    ++stamp_;
    return visit_edge(e);
  }

  // Augments from a free pair toward a free edge.
  bool augment_pair(VertexPair p, std::vector<std::vector<int>>& edges_of_pair) {
    ++stamp_;
    edge_seen_.assign(static_cast<std::size_t>(h_.edge_count()), 0);
    return visit_pair(p, edges_of_pair);
  }

  int owner(VertexPair p) const { return pair_owner_[key(p)]; }
  const std::optional<VertexPair>& pair_of(int e) const { return edge_pair_[static_cast<std::size_t>(e)]; }

 private:
  std::size_t key(VertexPair p) const {
    return static_cast<std::size_t>(p.u * h_.order() + p.v);
  }

  bool visit_edge(int e) {
    for (const auto& p : allowed_[static_cast<std::size_t>(e)]) {
      auto& mark = seen_[key(p)];
      if (mark == stamp_) continue;
      mark = stamp_;
      const int holder = pair_owner_[key(p)];
      if (holder < 0 || visit_edge(holder)) {
        pair_owner_[key(p)] = e;
        edge_pair_[static_cast<std::size_t>(e)] = p;
        return true;
      }
    }
    return false;
  }

  bool visit_pair(VertexPair p, std::vector<std::vector<int>>& edges_of_pair) {
    for (int e : edges_of_pair[key(p)]) {
      auto& mark = edge_seen_[static_cast<std::size_t>(e)];
      if (mark) continue;
      mark = 1;
      const auto& held = edge_pair_[static_cast<std::size_t>(e)];
      if (!held || visit_pair(*held, edges_of_pair)) {
        if (held) pair_owner_[key(*held)] = -1;
        edge_pair_[static_cast<std::size_t>(e)] = p;
        pair_owner_[key(p)] = e;
        return true;
      }
    }
    return false;
  }

  const Hypergraph& h_;
  std::vector<std::vector<VertexPair>> allowed_;
  std::vector<int> pair_owner_;
  std::vector<std::optional<VertexPair>> edge_pair_;
  std::vector<std::uint32_t> seen_;
  std::vector<char> edge_seen_;
  std::uint32_t stamp_ = 0;
};

}  // namespace

ShadowMatching maximum_matching(const Hypergraph& h) {
  std::vector<std::vector<VertexPair>> allowed;
  allowed.reserve(static_cast<std::size_t>(h.edge_count()));
  for (int e = 0; e < h.edge_count(); ++e) allowed.push_back(pairs_of(h.edge(e)));
  EdgeSideAugmenter aug(h, std::move(allowed));
  for (int e = 0; e < h.edge_count(); ++e) aug.augment_edge(e);
  ShadowMatching phi(h);
  for (int e = 0; e < h.edge_count(); ++e) {
    if (const auto& p = aug.pair_of(e)) phi.assign(e, *p);
  }
  return phi;
}

ShadowMatching matching_respecting_cycle(const Hypergraph& h, const BergeCycle& c) {
  if (auto rep = verify_berge_cycle(h, c); !rep) {
    throw InputError("cycle fails verification: " + rep.reason);
  }
  ShadowMatching phi(h);
  const int len = c.length();
  for (int i = 0; i < len; ++i) {
    const Vertex a = c.vertices[static_cast<std::size_t>(i)];
    const Vertex b = c.vertices[static_cast<std::size_t>((i + 1) % len)];
    phi.assign(c.edges[static_cast<std::size_t>(i)], VertexPair::of(a, b));
  }
  extend_to_maximal(h, phi);
  return phi;
}

std::optional<ShadowMatching> matching_with_image(const Hypergraph& h, const Graph& target) {
  if (target.order() != h.order()) throw InputError("target graph has the wrong order");
  const int n = h.order();
  std::vector<std::vector<VertexPair>> allowed(static_cast<std::size_t>(h.edge_count()));
  std::vector<std::vector<int>> edges_of_pair(static_cast<std::size_t>(n * n));
  std::vector<int> must;
  for (int e = 0; e < h.edge_count(); ++e) {
    bool clique = true;
    for (const auto& p : pairs_of(h.edge(e))) {
      if (target.has_edge(p.u, p.v)) {
        allowed[static_cast<std::size_t>(e)].push_back(p);
        edges_of_pair[static_cast<std::size_t>(p.u * n + p.v)].push_back(e);
      } else {
        clique = false;
      }
    }
    if (!clique) must.push_back(e);
  }
  EdgeSideAugmenter aug(h, std::move(allowed));
  for (int e : must) {
    if (!aug.augment_edge(e)) return std::nullopt;
  }
  for (const auto& p : target.edges()) {
    if (aug.owner(p) >= 0) continue;
    if (!aug.augment_pair(p, edges_of_pair)) return std::nullopt;
  }
  ShadowMatching phi(h);
  for (int e = 0; e < h.edge_count(); ++e) {
    if (const auto& p = aug.pair_of(e)) phi.assign(e, *p);
  }
  return phi;
}

BergeCycle lift_cycle(const ShadowMatching& phi, const GraphCycle& c) {
  if (!is_cycle_in(phi.image(), c)) {
    throw InputError("cycle is not a cycle of the matched graph");
  }
  BergeCycle out;
  out.vertices = c.vertices;
  const int len = c.length();
  for (int i = 0; i < len; ++i) {
    const auto p = VertexPair::of(c.vertices[static_cast<std::size_t>(i)],
                                  c.vertices[static_cast<std::size_t>((i + 1) % len)]);
    out.edges.push_back(*phi.edge_of(p));
  }
  return out;
}

CliqueCheckReport unmatched_hyperedges_clique_check(const Hypergraph& h, const ShadowMatching& phi) {
  CliqueCheckReport rep;
  const Graph& f = phi.image();
  for (int e = 0; e < h.edge_count(); ++e) {
    if (phi.is_matched(e)) continue;
    for (const auto& p : pairs_of(h.edge(e))) {
      if (!f.has_edge(p.u, p.v)) {
        rep.pass = false;
        rep.edge = e;
        rep.missing_pair = p;
        return rep;
      }
    }
  }
  return rep;
}

bool is_valid_matching(const Hypergraph& h, const ShadowMatching& phi) {
  if (phi.edge_count() != h.edge_count() || phi.vertex_count() != h.order()) return false;
  Graph rebuilt(h.order());
  for (const auto& [e, p] : phi.assignments()) {
    if (!h.edge_contains(e, p.u, p.v)) return false;
    if (rebuilt.has_edge(p.u, p.v)) return false;
    if (phi.edge_of(p) != e) return false;
    rebuilt.add_edge(p.u, p.v);
  }
  return rebuilt == phi.image();
}

std::string serialize_matching(const ShadowMatching& phi) {
  std::string out;
  for (const auto& [e, p] : phi.assignments()) {
    out += "m " + std::to_string(e) + " " + std::to_string(p.u) + " " + std::to_string(p.v) + "\n";
  }
  return out;
}

}  // namespace berge
