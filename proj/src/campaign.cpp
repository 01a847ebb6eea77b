#include "berge/campaign.hpp"

#include <atomic>
#include <cmath>
#include <filesystem>
#include <set>
#include <thread>

#include "berge/errors.hpp"
#include "berge/extremal.hpp"
#include "berge/pipeline.hpp"
#include "berge/random.hpp"

namespace berge {

DegreeFloor DegreeFloor::parse(const std::string& text) {
  if (text == "at-threshold") return {FloorMode::AtThreshold, 0};
  if (text == "threshold-plus") return {FloorMode::ThresholdPlus, 0};
  std::size_t used = 0;
  int value = -1;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || value < 0) throw InputError("bad degree floor: " + text);
  return {FloorMode::Absolute, value};
}

std::string DegreeFloor::describe() const {
  switch (mode) {
    case FloorMode::AtThreshold: return "at-threshold";
    case FloorMode::ThresholdPlus: return "threshold-plus";
    case FloorMode::Absolute: return std::to_string(absolute);
  }
  return {};
}

int resolve_floor(int n, int r, const DegreeFloor& floor) {
  if (n < 1 || r < 2 || r > n) throw InputError("need 2 <= r <= n");
  const std::uint64_t base = binomial(half_floor(n), r - 1);
  std::uint64_t want = 0;
  switch (floor.mode) {
    case FloorMode::AtThreshold: want = base; break;
    case FloorMode::ThresholdPlus: want = base + 1; break;
    case FloorMode::Absolute: want = static_cast<std::uint64_t>(floor.absolute); break;
  }
  if (want > binomial(n - 1, r - 1)) {
    throw InputError("degree floor " + std::to_string(want) + " exceeds C(n-1, r-1)");
  }
  return static_cast<int>(want);
}

Hypergraph sample_with_floor(int n, int r, int floor, std::uint64_t seed) {
  if (static_cast<std::uint64_t>(floor) > binomial(n - 1, r - 1)) {
    throw InputError("degree floor unreachable");
  }
  Rng rng(seed);
  std::set<std::vector<Vertex>> edges;
  std::vector<int> deg(static_cast<std::size_t>(n), 0);
  auto add = [&](std::vector<Vertex> e) {
    std::sort(e.begin(), e.end());
    if (!edges.insert(e).second) return;
    for (Vertex v : e) ++deg[static_cast<std::size_t>(v)];
  };
  const auto start = static_cast<int>(std::ceil(n * std::log(static_cast<double>(n))));
  for (int i = 0; i < start; ++i) add(rng.sample(n, r));
  while (true) {
    const auto low = std::min_element(deg.begin(), deg.end());
    if (*low >= floor) break;
    const Vertex v = static_cast<Vertex>(low - deg.begin());
    // r-1 partners from the other vertices.
    std::vector<Vertex> e;
    for (Vertex x : rng.sample(n - 1, r - 1)) e.push_back(x < v ? x : x + 1);
    e.push_back(v);
    add(std::move(e));
  }
  return Hypergraph(n, r, {edges.begin(), edges.end()});
}

namespace {

InstanceOutcome run_instance(const CampaignConfig& cfg, int floor, int index) {
  InstanceOutcome out;
  out.index = index;
  out.seed = derive_seed(cfg.seed, static_cast<std::uint64_t>(index));
  const Hypergraph h = sample_with_floor(cfg.n, cfg.r, floor, out.seed);
  out.edges = h.edge_count();
  out.min_degree = min_degree(h);
  out.certificate = extract_pancyclicity(h, cfg.budget);
  out.verified = static_cast<bool>(verify_certificate(h, out.certificate));
  if (out.certificate.complete()) {
    out.status = "complete";
  } else {
    out.status = out.certificate.missing.empty() ? "unknown" : "incomplete";
  }
  if (out.status != "complete" && !cfg.artifact_dir.empty()) {
    std::filesystem::create_directories(cfg.artifact_dir);
    const std::string name = "n" + std::to_string(cfg.n) + "_r" + std::to_string(cfg.r) + "_i" +
                             std::to_string(index) + "_seed" + std::to_string(out.seed) + ".txt";
    const auto path = (std::filesystem::path(cfg.artifact_dir) / name).string();
    std::string text = "# campaign seed " + std::to_string(cfg.seed) + " index " +
                       std::to_string(index) + " instance seed " + std::to_string(out.seed) +
                       " floor " + std::to_string(floor) + " outcome " + out.status + "\n";
    write_text_file(path, text + serialize_hypergraph(h));
    out.artifact = path;
  }
  return out;
}

}  // namespace

CampaignSummary run_campaign(const CampaignConfig& cfg) {
  CampaignSummary summary;
  summary.floor = resolve_floor(cfg.n, cfg.r, cfg.floor);
  if (cfg.samples < 0) throw InputError("sample count must be non-negative");
  summary.instances.resize(static_cast<std::size_t>(cfg.samples));
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < cfg.samples; i = next++) {
      summary.instances[static_cast<std::size_t>(i)] = run_instance(cfg, summary.floor, i);
    }
  };
  const int threads = std::max(1, std::min(cfg.workers, cfg.samples));
  std::vector<std::thread> pool;
  for (int t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (const auto& inst : summary.instances) {
    if (inst.status == "complete") ++summary.complete;
    else if (inst.status == "incomplete") ++summary.incomplete;
    else ++summary.unknown;
  }
  return summary;
}

Json campaign_to_json(const CampaignConfig& cfg, const CampaignSummary& s) {
  Json instances = Json::array();
  for (const auto& inst : s.instances) {
    Json j;
    j["index"] = inst.index;
    j["seed"] = inst.seed;
    j["edges"] = inst.edges;
    j["min_degree"] = inst.min_degree;
    j["status"] = inst.status;
    j["verified"] = inst.verified;
    j["artifact"] = inst.artifact ? Json(*inst.artifact) : Json(nullptr);
    j["certificate"] = certificate_to_json(inst.certificate);
    instances.push_back(std::move(j));
  }
  Json out;
  out["command"] = "verify-theorem";
  out["rng"] = std::string(Rng::kAlgorithm);
  out["config"] = Json{{"n", cfg.n},
                       {"r", cfg.r},
                       {"samples", cfg.samples},
                       {"seed", cfg.seed},
                       {"delta_floor", cfg.floor.describe()},
                       {"budget", cfg.budget}};
  out["floor"] = s.floor;
  out["summary"] = Json{{"complete", s.complete}, {"incomplete", s.incomplete}, {"unknown", s.unknown}};
  out["instances"] = std::move(instances);
  return out;
}

bool SharpnessReport::pass() const {
  return !entries.empty() &&
         std::all_of(entries.begin(), entries.end(), [](const Entry& e) { return e.pass; });
}

bool SharpnessReport::unknown() const {
  return std::any_of(entries.begin(), entries.end(), [](const Entry& e) {
    return e.hamiltonian == SearchStatus::Unknown ||
           (e.name == "c1" && e.circumference_status == SearchStatus::Unknown);
  });
}

SharpnessReport run_sharpness(int n, int r, std::uint64_t budget) {
  SharpnessReport rep;
  rep.n = n;
  rep.r = r;
  rep.expected_min_degree = static_cast<int>(binomial(half_floor(n), r - 1));
  const int ceil_half = (n + 1) / 2;
  for (const char* name : {"c1", "c2"}) {
    const Hypergraph h = std::string(name) == "c1" ? construction_1(n, r) : construction_2(n, r);
    SharpnessReport::Entry e;
    e.name = name;
    e.min_degree = min_degree(h);
    e.hamiltonian = find_berge_cycle(h, n, budget * static_cast<std::uint64_t>(n)).status;
    e.pass = e.min_degree == rep.expected_min_degree && e.hamiltonian == SearchStatus::Absent;
    if (e.name == "c1") {
      const auto c = berge_circumference(h, budget);
      e.circumference_status = c.status;
      if (c.witness) e.circumference = c.witness->length();
      e.pass = e.pass && c.found() && e.circumference == ceil_half;
    }
    rep.entries.push_back(e);
  }
  return rep;
}

Json sharpness_to_json(const SharpnessReport& rep) {
  Json entries = Json::array();
  for (const auto& e : rep.entries) {
    Json j;
    j["construction"] = e.name;
    j["min_degree"] = e.min_degree;
    j["hamiltonian"] = std::string(to_string(e.hamiltonian));
    if (e.name == "c1") {
      j["circumference"] = e.circumference ? Json(*e.circumference) : Json(nullptr);
      j["circumference_status"] = std::string(to_string(e.circumference_status));
    }
    j["pass"] = e.pass;
    entries.push_back(std::move(j));
  }
  Json out;
  out["command"] = "sharpness";
  out["n"] = rep.n;
  out["r"] = rep.r;
  out["expected_min_degree"] = rep.expected_min_degree;
  out["constructions"] = std::move(entries);
  out["pass"] = rep.pass();
  return out;
}

}  // namespace berge
