#include "berge/berge_search.hpp"

#include <algorithm>
#include <numeric>

#include "berge/detail/cycle_dfs.hpp"
#include "berge/errors.hpp"
#include "berge/graph.hpp"
#include "berge/shadow_matching.hpp"

namespace berge {

VerifyReport verify_berge_cycle(const Hypergraph& h, const BergeCycle& c) {
  auto fail = [](std::string reason, int index = -1) {
    return VerifyReport{false, std::move(reason), index};
  };
  const int len = c.length();
  if (static_cast<int>(c.edges.size()) != len) return fail("vertex and edge counts differ");
  if (len < 3) return fail("length below 3");
  VertexSet seen;
  for (int i = 0; i < len; ++i) {
    const Vertex v = c.vertices[static_cast<std::size_t>(i)];
    if (v < 0 || v >= h.order()) return fail("vertex out of range", i);
    if (seen.test(v)) return fail("repeated vertex", i);
    seen.set(v);
  }
  std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
  for (int i = 0; i < len; ++i) {
    const int e = c.edges[static_cast<std::size_t>(i)];
    if (e < 0 || e >= h.edge_count()) return fail("edge out of range", i);
    if (used[static_cast<std::size_t>(e)]) return fail("repeated hyperedge", i);
    used[static_cast<std::size_t>(e)] = 1;
  }
  for (int i = 0; i < len; ++i) {
    const Vertex a = c.vertices[static_cast<std::size_t>(i)];
    const Vertex b = c.vertices[static_cast<std::size_t>((i + 1) % len)];
    if (!h.edge_contains(c.edges[static_cast<std::size_t>(i)], a, b)) {
      return fail("consecutive pair not contained in its hyperedge", i);
    }
  }
  return {};
}

namespace {

// Edges containing each pair, ascending, indexed by u * n + v.
std::vector<std::vector<int>> edges_by_pair(const Hypergraph& h) {
  const int n = h.order();
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n * n));
  for (int e = 0; e < h.edge_count(); ++e) {
    const auto verts = h.edge(e);
    for (std::size_t i = 0; i < verts.size(); ++i)
      for (std::size_t j = i + 1; j < verts.size(); ++j) {
        out[static_cast<std::size_t>(verts[i] * n + verts[j])].push_back(e);
        out[static_cast<std::size_t>(verts[j] * n + verts[i])].push_back(e);
      }
  }
  return out;
}

// Keeps the consecutive pairs of the partial cycle matched to distinct
// hyperedges.
class PairMatcher {
 public:
  PairMatcher(const std::vector<std::vector<int>>& edges_of_pair, int n, int edge_count)
      : edges_of_pair_(edges_of_pair),
        n_(n),
        owner_(static_cast<std::size_t>(edge_count), -1),
        seen_(static_cast<std::size_t>(edge_count), 0) {}

  bool push(Vertex a, Vertex b) {
    const std::size_t key = static_cast<std::size_t>(a * n_ + b);
    if (edges_of_pair_[key].empty()) return false;
    slot_key_.push_back(key);
    slot_edge_.push_back(-1);
    ++checks_;
    ++stamp_;
    if (augment(static_cast<int>(slot_key_.size()) - 1)) return true;
    slot_key_.pop_back();
    slot_edge_.pop_back();
    return false;
  }

  void pop() {
    owner_[static_cast<std::size_t>(slot_edge_.back())] = -1;
    slot_key_.pop_back();
    slot_edge_.pop_back();
  }

  std::uint64_t checks() const { return checks_; }

 private:
  bool augment(int slot) {
    for (int e : edges_of_pair_[slot_key_[static_cast<std::size_t>(slot)]]) {
      auto& mark = seen_[static_cast<std::size_t>(e)];
      if (mark == stamp_) continue;
      mark = stamp_;
      const int holder = owner_[static_cast<std::size_t>(e)];
      if (holder < 0 || augment(holder)) {
        owner_[static_cast<std::size_t>(e)] = slot;
        slot_edge_[static_cast<std::size_t>(slot)] = e;
        return true;
      }
    }
    return false;
  }

  const std::vector<std::vector<int>>& edges_of_pair_;
  int n_;
  std::vector<int> owner_;
  std::vector<std::uint32_t> seen_;
  std::vector<std::size_t> slot_key_;
  std::vector<int> slot_edge_;
  std::uint32_t stamp_ = 0;
  std::uint64_t checks_ = 0;
};

// Whether the listed pair keys can take distinct edges outside `used`.
bool has_sdr(const std::vector<std::vector<int>>& edges_of_pair, const std::vector<std::size_t>& keys,
             const std::vector<char>& used, int edge_count) {
  std::vector<int> owner(static_cast<std::size_t>(edge_count), -1);
  std::vector<char> seen;
  std::function<bool(int)> augment = [&](int slot) {
    for (int e : edges_of_pair[keys[static_cast<std::size_t>(slot)]]) {
      if (used[static_cast<std::size_t>(e)] || seen[static_cast<std::size_t>(e)]) continue;
      seen[static_cast<std::size_t>(e)] = 1;
      const int holder = owner[static_cast<std::size_t>(e)];
      if (holder < 0 || augment(holder)) {
        owner[static_cast<std::size_t>(e)] = slot;
        return true;
      }
    }
    return false;
  };
  for (int s = 0; s < static_cast<int>(keys.size()); ++s) {
    seen.assign(static_cast<std::size_t>(edge_count), 0);
    if (!augment(s)) return false;
  }
  return true;
}

// Lexicographically smallest distinct-edge assignment for a vertex cycle
// known to admit one.
std::vector<int> minimal_assignment(const Hypergraph& h,
                                    const std::vector<std::vector<int>>& edges_of_pair,
                                    const std::vector<Vertex>& cycle) {
  const int n = h.order();
  const int len = static_cast<int>(cycle.size());
  std::vector<std::size_t> keys;
  for (int i = 0; i < len; ++i) {
    keys.push_back(static_cast<std::size_t>(cycle[static_cast<std::size_t>(i)] * n +
                                            cycle[static_cast<std::size_t>((i + 1) % len)]));
  }
  std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
  std::vector<int> out;
  for (int i = 0; i < len; ++i) {
    std::vector<std::size_t> rest(keys.begin() + i + 1, keys.end());
    for (int e : edges_of_pair[keys[static_cast<std::size_t>(i)]]) {
      if (used[static_cast<std::size_t>(e)]) continue;
      used[static_cast<std::size_t>(e)] = 1;
      if (has_sdr(edges_of_pair, rest, used, h.edge_count())) {
        out.push_back(e);
        break;
      }
      used[static_cast<std::size_t>(e)] = 0;
    }
  }
  return out;
}

}  // namespace

SearchResult<BergeCycle> find_berge_cycle(const Hypergraph& h, int length, std::uint64_t budget) {
  const int n = h.order();
  if (length < 3 || length > n) {
    throw InputError("cycle length " + std::to_string(length) + " outside [3, " +
                     std::to_string(n) + "]");
  }
  SearchResult<BergeCycle> result;
  if (length > h.edge_count()) {
    result.status = SearchStatus::Absent;
    return result;
  }
  const Graph shadow = two_shadow(h);
  std::vector<VertexSet> adj;
  adj.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) adj.push_back(shadow.neighbors(v));

  std::vector<Vertex> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return shadow.degree(a) < shadow.degree(b); });

  const auto edges_of_pair = edges_by_pair(h);
  PairMatcher matcher(edges_of_pair, n, h.edge_count());
  detail::CycleDfs<PairMatcher> dfs(adj, order, matcher, budget);
  result.status = dfs.run(length);
  result.stats.expanded = dfs.expanded();
  result.stats.matching_checks = matcher.checks();
  if (result.found()) {
    BergeCycle c;
    c.vertices = dfs.path();
    c.edges = minimal_assignment(h, edges_of_pair, c.vertices);
    result.witness = std::move(c);
  }
  return result;
}

SearchResult<BergeCycle> berge_circumference(const Hypergraph& h, std::uint64_t budget) {
  SearchResult<BergeCycle> out;
  bool unsure = false;
  for (int len = h.order(); len >= 3; --len) {
    auto r = find_berge_cycle(h, len, budget * static_cast<std::uint64_t>(len));
    out.stats += r.stats;
    if (r.found()) {
      out.status = unsure ? SearchStatus::Unknown : SearchStatus::Found;
      out.witness = std::move(r.witness);
      return out;
    }
    if (r.unknown()) unsure = true;
  }
  out.status = unsure ? SearchStatus::Unknown : SearchStatus::Absent;
  return out;
}

bool brute_force_berge_cycles(const Hypergraph& h, int length,
                              const std::function<bool(const BergeCycle&)>& visit) {
  const int n = h.order();
  if (n > 9 || h.edge_count() > 20) {
    throw InputError("brute force limited to n <= 9 and at most 20 edges");
  }
  if (length < 3 || length > n) {
    throw InputError("cycle length " + std::to_string(length) + " outside [3, " +
                     std::to_string(n) + "]");
  }
  BergeCycle c;
  c.vertices.assign(static_cast<std::size_t>(length), 0);
  c.edges.assign(static_cast<std::size_t>(length), -1);
  std::vector<char> vused(static_cast<std::size_t>(n), 0);
  std::vector<char> eused(static_cast<std::size_t>(h.edge_count()), 0);
  bool stop = false;

  std::function<void(int)> assign = [&](int i) {
    if (stop) return;
    if (i == length) {
      if (!visit(c)) stop = true;
      return;
    }
    const Vertex a = c.vertices[static_cast<std::size_t>(i)];
    const Vertex b = c.vertices[static_cast<std::size_t>((i + 1) % length)];
    for (int e = 0; e < h.edge_count() && !stop; ++e) {
      if (eused[static_cast<std::size_t>(e)] || !h.edge_contains(e, a, b)) continue;
      eused[static_cast<std::size_t>(e)] = 1;
      c.edges[static_cast<std::size_t>(i)] = e;
      assign(i + 1);
      eused[static_cast<std::size_t>(e)] = 0;
    }
  };

  // Sequences starting at their minimum with v2 < vl: one per class.
  std::function<void(int)> place = [&](int i) {
    if (stop) return;
    if (i == length) {
      if (c.vertices[1] < c.vertices[static_cast<std::size_t>(length - 1)]) assign(0);
      return;
    }
    for (Vertex v = c.vertices[0] + 1; v < n && !stop; ++v) {
      if (vused[static_cast<std::size_t>(v)]) continue;
      vused[static_cast<std::size_t>(v)] = 1;
      c.vertices[static_cast<std::size_t>(i)] = v;
      place(i + 1);
      vused[static_cast<std::size_t>(v)] = 0;
    }
  };

  for (Vertex s = 0; s < n && !stop; ++s) {
    c.vertices[0] = s;
    vused[static_cast<std::size_t>(s)] = 1;
    place(1);
    vused[static_cast<std::size_t>(s)] = 0;
  }
  return !stop;
}

std::vector<BergeCycle> brute_force_berge_cycles(const Hypergraph& h, int length) {
  std::vector<BergeCycle> out;
  brute_force_berge_cycles(h, length, [&](const BergeCycle& c) {
    out.push_back(c);
    return true;
  });
  return out;
}

bool brute_force_has_berge_cycle(const Hypergraph& h, int length) {
  return !brute_force_berge_cycles(h, length, [](const BergeCycle&) { return false; });
}

PancyclicityCertificate pancyclicity_certificate(const Hypergraph& h, std::uint64_t budget) {
  PancyclicityCertificate cert;
  cert.n = h.order();
  cert.r = h.uniformity();
  const ShadowMatching phi = maximal_matching(h);
  const Graph& f = phi.image();
  bool used_phi = false;
  for (int len = 3; len <= h.order(); ++len) {
    auto g = find_cycle_of_length(f, len, budget);
    cert.stats.expanded += g.stats.expanded;
    if (g.found()) {
      cert.cycles[len] = {lift_cycle(phi, *g.witness), provenance::kLiftedF};
      used_phi = true;
      continue;
    }
    auto r = find_berge_cycle(h, len, budget * static_cast<std::uint64_t>(len));
    cert.stats += r.stats;
    if (r.found()) {
      cert.cycles[len] = {*r.witness, provenance::kDirectSearch};
    } else if (r.absent()) {
      cert.missing.push_back(len);
    } else {
      cert.unknown.push_back(len);
    }
  }
  if (used_phi) cert.phi = serialize_matching(phi);
  return cert;
}

VerifyReport verify_certificate(const Hypergraph& h, const PancyclicityCertificate& cert) {
  if (cert.n != h.order() || cert.r != h.uniformity()) {
    return {false, "certificate parameters do not match the hypergraph", -1};
  }
  for (const auto& [len, entry] : cert.cycles) {
    if (entry.cycle.length() != len) return {false, "cycle filed under the wrong length", len};
    if (auto rep = verify_berge_cycle(h, entry.cycle); !rep) {
      return {false, "length " + std::to_string(len) + ": " + rep.reason, len};
    }
  }
  for (const auto* list : {&cert.missing, &cert.unknown}) {
    for (int len : *list) {
      if (cert.cycles.count(len)) return {false, "length both certified and missing", len};
    }
  }
  return {};
}

}  // namespace berge
