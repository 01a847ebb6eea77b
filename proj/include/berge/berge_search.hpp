#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "berge/berge_cycle.hpp"
#include "berge/hypergraph.hpp"
#include "berge/search.hpp"

namespace berge {

// Exhaustive search for a Berge cycle of the given length. Vertex sequences
// run over the 2-shadow; the consecutive pairs chosen so far are kept
// matched to distinct hyperedges by augmenting paths, and a partial
// sequence is cut as soon as no such system of distinct representatives
// exists. A found cycle carries the lexicographically smallest edge
// assignment for its vertex sequence. Throws InputError unless
// 3 <= length <= n.
SearchResult<BergeCycle> find_berge_cycle(const Hypergraph& h, int length,
                                          std::uint64_t budget = kDefaultBudget);

// Longest Berge cycle, searching lengths n, n-1, ... with budget * length
// per length. Found with the witness when every longer length completed
// Absent; Unknown if some longer length ran out of budget (the witness, if
// any, is then only a lower bound); Absent if there is no Berge cycle.
SearchResult<BergeCycle> berge_circumference(const Hypergraph& h,
                                             std::uint64_t budget = kDefaultBudget);

// Test oracle without pruning: every Berge cycle of the given length, one
// per rotation/reflection class. Requires n <= 9 and at most 20 edges.
std::vector<BergeCycle> brute_force_berge_cycles(const Hypergraph& h, int length);

// Same enumeration, stopping when the visitor returns false. Returns
// whether the enumeration ran to the end.
bool brute_force_berge_cycles(const Hypergraph& h, int length,
                              const std::function<bool(const BergeCycle&)>& visit);

bool brute_force_has_berge_cycle(const Hypergraph& h, int length);

// How a certified length was obtained.
namespace provenance {
inline constexpr const char* kLiftedF = "lifted-F";
inline constexpr const char* kLiftedSwapped = "lifted-F-swapped";
inline constexpr const char* kLiftedShifted = "lifted-F-shifted";
inline constexpr const char* kDirectSearch = "direct-search";
}  // namespace provenance

struct CertifiedCycle {
  BergeCycle cycle;
  std::string method;
};

struct TraceEntry {
  std::string stage;
  std::string outcome;
  std::string detail;
};

struct PancyclicityCertificate {
  int n = 0;
  int r = 0;
  std::map<int, CertifiedCycle> cycles;
  std::vector<int> missing;  // lengths whose search completed Absent
  std::vector<int> unknown;  // lengths where the budget ran out
  SearchStats stats;
  std::vector<TraceEntry> trace;
  std::optional<std::string> phi;  // serialized matching, when one was used

  bool complete() const { return static_cast<int>(cycles.size()) == (n >= 3 ? n - 2 : 0); }
  std::optional<int> first_missing() const {
    if (missing.empty()) return std::nullopt;
    return missing.front();
  }
};

// Certifies each length 3..n: a cycle of the canonical maximal matching's
// graph F is lifted when F has one, otherwise the length is searched
// directly with budget * length.
PancyclicityCertificate pancyclicity_certificate(const Hypergraph& h,
                                                 std::uint64_t budget = kDefaultBudget);

// Every entry verifies and sits under its own length; missing/unknown are
// disjoint from the certified lengths.
VerifyReport verify_certificate(const Hypergraph& h, const PancyclicityCertificate& cert);

}  // namespace berge
