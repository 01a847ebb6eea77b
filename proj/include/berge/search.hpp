#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

namespace berge {

// Expanded-node cap for a single exhaustive search call.
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

// Absent is only reported after the search tree was exhausted; running out
// of budget yields Unknown.
enum class SearchStatus { Found, Absent, Unknown };

constexpr std::string_view to_string(SearchStatus s) {
  switch (s) {
    case SearchStatus::Found: return "found";
    case SearchStatus::Absent: return "absent";
    case SearchStatus::Unknown: return "unknown";
  }
  return "unknown";
}

struct SearchStats {
  std::uint64_t expanded = 0;
  std::uint64_t matching_checks = 0;

  SearchStats& operator+=(const SearchStats& o) {
    expanded += o.expanded;
    matching_checks += o.matching_checks;
    return *this;
  }
};

template <class Witness>
struct SearchResult {
  SearchStatus status = SearchStatus::Unknown;
  std::optional<Witness> witness;
  SearchStats stats;

  bool found() const { return status == SearchStatus::Found; }
  bool absent() const { return status == SearchStatus::Absent; }
  bool unknown() const { return status == SearchStatus::Unknown; }
};

}  // namespace berge
