#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "berge/berge_search.hpp"
#include "berge/certificate_json.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

enum class FloorMode { AtThreshold, ThresholdPlus, Absolute };

struct DegreeFloor {
  FloorMode mode = FloorMode::ThresholdPlus;
  int absolute = 0;

  // "at-threshold", "threshold-plus" or a non-negative integer.
  static DegreeFloor parse(const std::string& text);
  std::string describe() const;
};

// Resolves the floor for (n, r); throws InputError when no r-uniform
// hypergraph on n vertices can reach it.
int resolve_floor(int n, int r, const DegreeFloor& floor);

// Starts from ceil(n ln n) random r-sets, then adds random edges through a
// current minimum-degree vertex until the floor holds.
Hypergraph sample_with_floor(int n, int r, int floor, std::uint64_t seed);

struct CampaignConfig {
  int n = 13;
  int r = 3;
  int samples = 100;
  std::uint64_t seed = 1;
  DegreeFloor floor;
  std::uint64_t budget = kDefaultBudget;
  int workers = 1;
  std::string artifact_dir;  // empty: do not write artifacts
};

struct InstanceOutcome {
  int index = 0;
  std::uint64_t seed = 0;
  int edges = 0;
  int min_degree = 0;
  std::string status;  // complete | incomplete | unknown
  bool verified = false;
  std::optional<std::string> artifact;
  PancyclicityCertificate certificate;
};

struct CampaignSummary {
  int floor = 0;
  int complete = 0;
  int incomplete = 0;
  int unknown = 0;
  std::vector<InstanceOutcome> instances;  // by index
};

// Instance i uses derive_seed(config.seed, i); results do not depend on the
// number of workers.
CampaignSummary run_campaign(const CampaignConfig& config);

Json campaign_to_json(const CampaignConfig& config, const CampaignSummary& summary);

// Checks both sharpness constructions for (n, r).
struct SharpnessReport {
  int n = 0;
  int r = 0;
  int expected_min_degree = 0;
  struct Entry {
    std::string name;
    int min_degree = 0;
    SearchStatus hamiltonian = SearchStatus::Unknown;  // expected Absent
    std::optional<int> circumference;                   // construction 1 only
    SearchStatus circumference_status = SearchStatus::Unknown;
    bool pass = false;
  };
  std::vector<Entry> entries;
  bool pass() const;
  bool unknown() const;
};

SharpnessReport run_sharpness(int n, int r, std::uint64_t budget = kDefaultBudget);
Json sharpness_to_json(const SharpnessReport& report);

}  // namespace berge
