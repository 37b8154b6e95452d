#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symknot/fingerprint.hpp"
#include "symknot/reference_table.hpp"
#include "symknot/scheme.hpp"

namespace symknot {

inline constexpr const char* kVersion = "0.1.0";

struct SearchOptions {
  bool omit_after_found = false;
  int max_total_crossings = kDefaultCrossingCap;
  std::uint64_t max_expansions = UINT64_MAX;
  int jobs = 1;
};

struct SearchRow {
  std::vector<int> assignment;
  int total_crossings = 0;
  InvariantFingerprint fp;
  std::vector<std::string> candidates;
};

// Deterministic sweep result: identical for serial and parallel runs.
struct SearchReport {
  std::vector<int> slots;                     // open slots in template order
  std::vector<std::pair<int, int>> bounds;    // per slot, inclusive
  std::vector<SearchRow> rows;                // assignment-lexicographic
  std::uint64_t assignments_total = 0;
  std::uint64_t evaluated = 0;
  std::uint64_t skipped_multi_component = 0;
  std::uint64_t skipped_crossing_cap = 0;
  std::uint64_t identified_rows = 0;
  std::vector<std::string> names_found;       // first-hit order
  bool partial = false;
  bool omit_after_found = false;
  int max_total_crossings = 0;
  std::uint64_t template_hash = 0;
  std::string version = kVersion;
};

SearchReport search(const SymmetricUnionScheme& templ,
                    const std::vector<std::pair<int, int>>& bounds, const ReferenceTable& table,
                    const SearchOptions& options);

std::string report_to_json(const SearchReport& report);
std::string report_to_text(const SearchReport& report);

std::uint64_t fnv1a_hash(const std::string& text);

}  // namespace symknot
