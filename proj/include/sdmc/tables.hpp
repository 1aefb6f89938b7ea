#pragma once

#include <vector>

#include "sdmc/enumerate.hpp"

namespace sdmc {

// Bundled reference enumeration for the eight supported parameter sets:
// expected class counts and the multiset of per-class rank-weight
// distributions. verify_table_case diffs a classify() run against it.
inline constexpr int kReferenceTablesVersion = 1;

struct ReferenceCase {
  int q, l, m;
  int expected_classes;
  std::vector<std::vector<long long>> rank_dists;  // one A_0..A_min(l,m) row per class
};

const std::vector<ReferenceCase>& reference_cases();

struct TableDiff {
  bool ok = false;
  std::string detail;  // empty when ok
};

TableDiff verify_table_case(const ReferenceCase& ref, const ClassificationReport& report);

}  // namespace sdmc
