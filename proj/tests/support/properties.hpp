#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace implicitus::testing {

struct PropertyResult {
  std::string name;
  size_t cases = 0;
  size_t failures = 0;
  std::string firstFailure;

  bool ok() const { return failures == 0; }
};

// Each property draws `cases` random inputs from `seed` and compares the
// library against an oracle written independently in test code.

PropertyResult conformance_matches_closure(size_t cases, std::uint32_t seed);
PropertyResult callsite_idioms_partition(size_t cases, std::uint32_t seed);
PropertyResult conversion_kinds_partition(size_t cases, std::uint32_t seed);
PropertyResult injected_count_matches_walk(size_t cases, std::uint32_t seed);
PropertyResult summary_merge_order_independent(size_t cases, std::uint32_t seed);

PropertyResult csv_round_trip(size_t cases, std::uint32_t seed);
PropertyResult facts_round_trip(size_t cases, std::uint32_t seed);
PropertyResult link_order_independent(size_t cases, std::uint32_t seed);
PropertyResult retention_matches_rules(size_t cases, std::uint32_t seed);
PropertyResult quartiles_match_sorting(size_t cases, std::uint32_t seed);
PropertyResult snapshot_round_trip(size_t cases, std::uint32_t seed);
PropertyResult labels_independent_of_jobs(size_t cases, std::uint32_t seed);

/// The five suites every release must pass, in a fixed order.
std::vector<PropertyResult> core_properties(size_t cases, std::uint32_t seed);

}  // namespace implicitus::testing
