#pragma once

#include <cstdint>
#include <vector>

#include "berge/berge_search.hpp"
#include "berge/certificate_json.hpp"
#include "berge/hypergraph.hpp"

namespace berge {

struct HuntConfig {
  int r = 4;
  int n_min = 8;
  int n_max = 12;
  int rounds = 4;          // restarts per n
  int mutations = 20;      // local-search moves per restart
  std::uint64_t seed = 1;
  std::uint64_t budget = 100'000;
};

// Berge-hamiltonian hypergraph with a length whose search completed Absent.
struct HuntFinding {
  Hypergraph h;
  BergeCycle hamiltonian;
  int missing_length = 0;
  SearchStats absent_stats;
};

struct HuntReport {
  std::vector<HuntFinding> findings;
  int instances = 0;        // candidate hypergraphs whose lengths were tested
  int unknown_lengths = 0;  // length tests that ran out of budget
};

// Plants a hamiltonian Berge cycle, deletes edges while a hamiltonian Berge
// cycle survives, then mutates edges (replace one, re-minimize) and tests
// lengths 3..n-1 on every minimized candidate. Throws InputError for r < 4.
HuntReport run_hunt(const HuntConfig& config);

// The hamiltonian witness verifies and the missing length re-searches to a
// completed Absent.
bool recheck_finding(const HuntFinding& f, std::uint64_t budget);

Json hunt_to_json(const HuntConfig& config, const HuntReport& report);

}  // namespace berge
