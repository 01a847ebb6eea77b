#include "berge/hunt.hpp"

#include <algorithm>
#include <set>

#include "berge/errors.hpp"
#include "berge/random.hpp"

namespace berge {

namespace {

using EdgeList = std::vector<std::vector<Vertex>>;

std::optional<BergeCycle> hamiltonian(int n, int r, const EdgeList& edges, std::uint64_t budget) {
  if (static_cast<int>(edges.size()) < n) return std::nullopt;
  const Hypergraph h(n, r, edges);
  auto res = find_berge_cycle(h, n, budget);
  if (!res.found()) return std::nullopt;
  return res.witness;
}

std::vector<Vertex> random_edge(Rng& rng, int n, int r, std::vector<Vertex> forced) {
  while (static_cast<int>(forced.size()) < r) {
    const Vertex v = rng.below(n);
    if (std::find(forced.begin(), forced.end(), v) == forced.end()) forced.push_back(v);
  }
  std::sort(forced.begin(), forced.end());
  return forced;
}

// Drops edges (random order) while a hamiltonian Berge cycle survives.
void minimize(Rng& rng, int n, int r, EdgeList& edges, std::uint64_t budget) {
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  rng.shuffle(order);
  std::vector<char> gone(edges.size(), 0);
  for (std::size_t i : order) {
    gone[i] = 1;
    EdgeList trial;
    for (std::size_t j = 0; j < edges.size(); ++j)
      if (!gone[j]) trial.push_back(edges[j]);
    if (!hamiltonian(n, r, trial, budget)) gone[i] = 0;
  }
  EdgeList kept;
  for (std::size_t j = 0; j < edges.size(); ++j)
    if (!gone[j]) kept.push_back(edges[j]);
  edges = std::move(kept);
}

}  // namespace

HuntReport run_hunt(const HuntConfig& cfg) {
  if (cfg.r < 4) throw InputError("the hunt targets r >= 4");
  if (cfg.n_min < cfg.r + 1 || cfg.n_max < cfg.n_min || cfg.n_max > kMaxVertices) {
    throw InputError("need r < n_min <= n_max");
  }
  HuntReport report;
  std::set<EdgeList> tested;
  const int r = cfg.r;
  for (int n = cfg.n_min; n <= cfg.n_max; ++n) {
    for (int round = 0; round < cfg.rounds; ++round) {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(n) * 1'000'003ULL +
                                        static_cast<std::uint64_t>(round)));
      std::vector<Vertex> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
      rng.shuffle(perm);
      std::set<std::vector<Vertex>> pool;
      for (int i = 0; i < n; ++i) {
        const std::vector<Vertex> base{perm[static_cast<std::size_t>(i)],
                                       perm[static_cast<std::size_t>((i + 1) % n)]};
        auto e = random_edge(rng, n, r, base);
        while (pool.count(e)) e = random_edge(rng, n, r, base);
        pool.insert(e);
      }
      for (int i = 0; i < n; ++i) pool.insert(random_edge(rng, n, r, {}));
      EdgeList edges(pool.begin(), pool.end());
      if (!hamiltonian(n, r, edges, cfg.budget)) continue;

      auto test = [&](const EdgeList& cand) {
        EdgeList key = cand;
        std::sort(key.begin(), key.end());
        if (!tested.insert(key).second) return;
        ++report.instances;
        const Hypergraph h(n, r, cand);
        for (int len = 3; len < n; ++len) {
          auto res = find_berge_cycle(h, len, cfg.budget);
          if (res.unknown()) ++report.unknown_lengths;
          if (!res.absent()) continue;
          auto ham = find_berge_cycle(h, n, cfg.budget);
          if (!ham.found()) return;
          report.findings.push_back({h, *ham.witness, len, res.stats});
          return;
        }
      };

      minimize(rng, n, r, edges, cfg.budget);
      test(edges);
      for (int m = 0; m < cfg.mutations; ++m) {
        EdgeList next = edges;
        const auto victim = static_cast<std::size_t>(rng.below(static_cast<int>(next.size())));
        auto e = random_edge(rng, n, r, {});
        if (std::find(next.begin(), next.end(), e) != next.end()) continue;
        next[victim] = std::move(e);
        if (!hamiltonian(n, r, next, cfg.budget)) continue;
        minimize(rng, n, r, next, cfg.budget);
        edges = std::move(next);
        test(edges);
      }
    }
  }
  return report;
}

bool recheck_finding(const HuntFinding& f, std::uint64_t budget) {
  if (f.hamiltonian.length() != f.h.order()) return false;
  if (!verify_berge_cycle(f.h, f.hamiltonian)) return false;
  return find_berge_cycle(f.h, f.missing_length, budget).absent();
}

Json hunt_to_json(const HuntConfig& cfg, const HuntReport& rep) {
  Json findings = Json::array();
  for (const auto& f : rep.findings) {
    findings.push_back(Json{{"n", f.h.order()},
                            {"r", f.h.uniformity()},
                            {"edges", f.h.edges()},
                            {"hamiltonian", to_json(f.hamiltonian)},
                            {"missing_length", f.missing_length},
                            {"absent_stats", to_json(f.absent_stats)}});
  }
  Json out;
  out["command"] = "hunt";
  out["rng"] = std::string(Rng::kAlgorithm);
  out["config"] = Json{{"r", cfg.r},
                       {"n_min", cfg.n_min},
                       {"n_max", cfg.n_max},
                       {"rounds", cfg.rounds},
                       {"mutations", cfg.mutations},
                       {"seed", cfg.seed},
                       {"budget", cfg.budget}};
  out["instances"] = rep.instances;
  out["unknown_lengths"] = rep.unknown_lengths;
  out["findings"] = std::move(findings);
  return out;
}

}  // namespace berge
