// berge: generators, checks and campaigns for Berge cycles in uniform
// hypergraphs. Exit codes: 0 holds/complete, 1 fails/incomplete,
// 2 usage or parse error, 3 budget exhausted.

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "berge/berge_search.hpp"
#include "berge/campaign.hpp"
#include "berge/certificate_json.hpp"
#include "berge/errors.hpp"
#include "berge/extremal.hpp"
#include "berge/graph.hpp"
#include "berge/hunt.hpp"
#include "berge/hypergraph.hpp"
#include "berge/pipeline.hpp"
#include "berge/random.hpp"

namespace {

using namespace berge;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kUnknown = 3;

struct Globals {
  std::uint64_t seed = 1;
  std::uint64_t budget = kDefaultBudget;
  int workers = 1;
  bool reproducible = false;
  std::string out;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void emit_text(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
  } else {
    write_text_file(g.out, text);
  }
}

void emit_json(const Globals& g, Json j) {
  if (!g.reproducible) j["timestamp"] = utc_timestamp();
  emit_text(g, j.dump(2) + "\n");
}

int status_code(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return kOk;
    case SearchStatus::Absent: return kFail;
    case SearchStatus::Unknown: return kUnknown;
  }
  return kFail;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

Json stats_json(const SearchStats& s) { return to_json(s); }

// ---- gen -----------------------------------------------------------------

struct GenArgs {
  std::string family;
  int n = 0;
  int r = 0;
  int k = 0;
  int a = 0;
  int b = 0;
  bool random_extra = false;
  bool e0 = false;
  bool shuffle = false;
  std::string floor = "threshold-plus";
};

int run_gen(const Globals& g, const GenArgs& a) {
  auto need = [](int value, const char* flag) {
    if (value <= 0) throw InputError(std::string("missing ") + flag);
  };
  if (a.family == "c1") {
    need(a.n, "--n");
    need(a.r, "--r");
    const auto seed = a.random_extra ? std::optional<std::uint64_t>(g.seed) : std::nullopt;
    emit_text(g, serialize_hypergraph(construction_1(a.n, a.r, seed)));
  } else if (a.family == "c2") {
    need(a.n, "--n");
    need(a.r, "--r");
    emit_text(g, serialize_hypergraph(construction_2(a.n, a.r)));
  } else if (a.family == "c3") {
    need(a.k, "--k");
    emit_text(g, serialize_hypergraph(construction_3(a.k)));
  } else if (a.family == "kr") {
    need(a.n, "--n");
    need(a.r, "--r");
    emit_text(g, serialize_hypergraph(complete_hypergraph(a.n, a.r)));
  } else if (a.family == "kab") {
    need(a.a, "--a");
    need(a.b, "--b");
    emit_text(g, serialize_graph(complete_bipartite_graph(a.a, a.b)));
  } else if (a.family.rfind("voss:", 0) == 0) {
    need(a.k, "--k");
    const auto cls = parse_voss_class(a.family.substr(5));
    if (!cls) throw InputError("unknown Voss class " + a.family.substr(5));
    const auto inst = generate_voss(*cls, a.k, {a.e0, g.seed, a.shuffle});
    emit_text(g, serialize_graph(inst.graph));
  } else if (a.family == "random") {
    need(a.n, "--n");
    need(a.r, "--r");
    const int floor = resolve_floor(a.n, a.r, DegreeFloor::parse(a.floor));
    const Hypergraph h = sample_with_floor(a.n, a.r, floor, g.seed);
    const std::string header = "# random n=" + std::to_string(a.n) + " r=" + std::to_string(a.r) +
                               " floor=" + std::to_string(floor) + " seed=" + std::to_string(g.seed) +
                               " rng=" + std::string(Rng::kAlgorithm) + "\n";
    emit_text(g, header + serialize_hypergraph(h));
  } else {
    throw InputError("unknown family " + a.family);
  }
  return kOk;
}

// ---- check ---------------------------------------------------------------

int run_voss(const Globals& g, const std::string& file) {
  const Graph graph = parse_graph(read_file(file));
  const auto res = classify_voss(graph, g.budget);
  Json j{{"command", "classify-voss"}, {"n", graph.order()}, {"status", to_string(res.status)}};
  if (res.witness) {
    const auto& w = *res.witness;
    j["class"] = std::string(to_string(w.cls));
    j["k"] = w.k;
    j["v1"] = w.v1.to_vector();
    j["v2"] = w.v2.to_vector();
    j["x0"] = w.x0 ? Json(*w.x0) : Json(nullptr);
    j["e0"] = w.e0 ? Json::array({w.e0->u, w.e0->v}) : Json(nullptr);
  }
  emit_json(g, j);
  return status_code(res.status);
}

int run_check(const Globals& g, const std::string& mode, const std::string& file, int length) {
  if (mode == "voss") return run_voss(g, file);
  const Hypergraph h = parse_hypergraph(read_file(file));
  if (mode == "pancyclic") {
    const auto cert = extract_pancyclicity(h, g.budget);
    Json j = certificate_to_json(cert);
    j["verified"] = static_cast<bool>(verify_certificate(h, cert));
    emit_json(g, j);
    if (cert.complete()) return kOk;
    return cert.missing.empty() ? kUnknown : kFail;
  }
  if (mode == "berge-cycle") {
    if (length <= 0) throw InputError("berge-cycle needs --length");
    const auto res = find_berge_cycle(h, length, g.budget);
    Json j{{"command", "check berge-cycle"}, {"n", h.order()}, {"r", h.uniformity()},
           {"length", length}, {"status", to_string(res.status)}};
    j["cycle"] = res.witness ? to_json(*res.witness) : Json(nullptr);
    j["stats"] = stats_json(res.stats);
    emit_json(g, j);
    return status_code(res.status);
  }
  if (mode == "circumference") {
    const auto res = berge_circumference(h, g.budget);
    Json j{{"command", "check circumference"}, {"n", h.order()}, {"r", h.uniformity()},
           {"status", to_string(res.status)}};
    j["circumference"] = res.witness ? Json(res.witness->length()) : Json(nullptr);
    j["cycle"] = res.witness ? to_json(*res.witness) : Json(nullptr);
    j["stats"] = stats_json(res.stats);
    emit_json(g, j);
    return status_code(res.status);
  }
  if (mode == "shadow") {
    emit_text(g, serialize_graph(two_shadow(h)));
    return kOk;
  }
  throw InputError("unknown check mode " + mode);
}

// ---- campaigns -----------------------------------------------------------

struct TheoremArgs {
  int n = 13;
  int r = 3;
  int samples = 100;
  std::string floor = "threshold-plus";
  std::string artifacts;
};

int run_verify_theorem(const Globals& g, const TheoremArgs& a) {
  CampaignConfig cfg;
  cfg.n = a.n;
  cfg.r = a.r;
  cfg.samples = a.samples;
  cfg.seed = g.seed;
  cfg.floor = DegreeFloor::parse(a.floor);
  cfg.budget = g.budget;
  cfg.workers = g.workers;
  cfg.artifact_dir = a.artifacts;
  const auto summary = run_campaign(cfg);
  emit_json(g, campaign_to_json(cfg, summary));
  if (summary.incomplete > 0) return kFail;
  if (summary.unknown > 0) return kUnknown;
  for (const auto& inst : summary.instances)
    if (!inst.verified) return kFail;
  return kOk;
}

int run_sharpness_cmd(const Globals& g, int n, int r) {
  const auto rep = run_sharpness(n, r, g.budget);
  emit_json(g, sharpness_to_json(rep));
  if (rep.pass()) return kOk;
  return rep.unknown() ? kUnknown : kFail;
}

int run_hunt_cmd(const Globals& g, HuntConfig cfg) {
  cfg.seed = g.seed;
  if (cfg.r < 4) throw InputError("hunt needs r >= 4; construction 3 already settles r = 3");
  const auto rep = run_hunt(cfg);
  Json j = hunt_to_json(cfg, rep);
  Json checks = Json::array();
  for (const auto& f : rep.findings) checks.push_back(recheck_finding(f, cfg.budget));
  j["rechecked"] = std::move(checks);
  emit_json(g, j);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Berge cycles in uniform hypergraphs"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--seed", g.seed, "base seed")->capture_default_str();
  app.add_option("--budget", g.budget, "expanded-node budget per search")->capture_default_str();
  app.add_option("--workers", g.workers, "worker threads for campaigns")->check(CLI::PositiveNumber);
  app.add_flag("--reproducible", g.reproducible, "omit the timestamp from JSON output");
  app.add_option("--out", g.out, "output file (default stdout)");
  app.fallthrough();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "write a hypergraph or graph file");
  gen_cmd->add_option("family", gen.family, "c1 c2 c3 kr kab voss:G1..G5 random")->required();
  gen_cmd->add_option("--n", gen.n);
  gen_cmd->add_option("--r", gen.r);
  gen_cmd->add_option("--k", gen.k);
  gen_cmd->add_option("--a", gen.a);
  gen_cmd->add_option("--b", gen.b);
  gen_cmd->add_flag("--random-extra", gen.random_extra, "c1: seeded extra edge for even n");
  gen_cmd->add_flag("--e0", gen.e0, "voss: include the special edge");
  gen_cmd->add_flag("--shuffle", gen.shuffle, "voss: relabel vertices");
  gen_cmd->add_option("--delta-floor", gen.floor, "at-threshold, threshold-plus or an integer");

  std::string mode;
  std::string file;
  int length = 0;
  auto* check_cmd = app.add_subcommand("check", "check a property of a hypergraph file");
  check_cmd->add_option("mode", mode, "pancyclic berge-cycle circumference shadow voss")->required();
  check_cmd->add_option("file", file)->required();
  check_cmd->add_option("--length", length);

  TheoremArgs thm;
  auto* thm_cmd = app.add_subcommand("verify-theorem", "sample hypergraphs above the degree bound");
  thm_cmd->add_option("--n", thm.n);
  thm_cmd->add_option("--r", thm.r);
  thm_cmd->add_option("--samples", thm.samples);
  thm_cmd->add_option("--delta-floor", thm.floor);
  thm_cmd->add_option("--artifacts", thm.artifacts, "directory for incomplete instances");

  int sn = 0;
  int sr = 0;
  auto* sharp_cmd = app.add_subcommand("sharpness", "check constructions 1 and 2");
  sharp_cmd->add_option("--n", sn)->required();
  sharp_cmd->add_option("--r", sr)->required();

  HuntConfig hunt;
  auto* hunt_cmd = app.add_subcommand("hunt", "search for hamiltonian non-pancyclic hypergraphs");
  hunt_cmd->add_option("--r", hunt.r)->required();
  hunt_cmd->add_option("--n-min", hunt.n_min);
  hunt_cmd->add_option("--n-max", hunt.n_max);
  hunt_cmd->add_option("--rounds", hunt.rounds);
  hunt_cmd->add_option("--mutations", hunt.mutations);

  std::string voss_file;
  auto* voss_cmd = app.add_subcommand("classify-voss", "classify a graph file");
  voss_cmd->add_option("file", voss_file)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e) == 0 ? kOk : kUsage;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen_cmd) return run_gen(g, gen);
    if (*check_cmd) return run_check(g, mode, file, length);
    if (*thm_cmd) return run_verify_theorem(g, thm);
    if (*sharp_cmd) return run_sharpness_cmd(g, sn, sr);
    if (*hunt_cmd) {
      hunt.budget = app.get_option("--budget")->count() ? g.budget : hunt.budget;
      return run_hunt_cmd(g, hunt);
    }
    if (*voss_cmd) return run_voss(g, voss_file);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
