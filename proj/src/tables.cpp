#include "sdmc/tables.hpp"

#include <algorithm>
#include <sstream>

namespace sdmc {

const std::vector<ReferenceCase>& reference_cases() {
  static const std::vector<ReferenceCase> cases = {
      {2, 2, 2, 2, {{1, 3, 0}, {1, 1, 2}}},
      {2, 2, 3, 5, {{1, 7, 0}, {1, 3, 4}, {1, 3, 4}, {1, 1, 6}, {1, 5, 2}}},
      {3, 2, 2, 1, {{1, 0, 8}}},
      {3, 2, 4, 13,
       {{1, 0, 80},
        {1, 0, 80},
        {1, 0, 80},
        {1, 0, 80},
        {1, 0, 80},
        {1, 8, 72},
        {1, 8, 72},
        {1, 8, 72},
        {1, 4, 76},
        {1, 4, 76},
        {1, 16, 64},
        {1, 32, 48},
        {1, 20, 60}}},
      {4, 2, 2, 3, {{1, 15, 0}, {1, 3, 12}, {1, 3, 12}}},
      {5, 2, 2, 2, {{1, 24, 0}, {1, 8, 16}}},
      {5, 2, 3, 7,
       {{1, 124, 0}, {1, 4, 120}, {1, 4, 120}, {1, 28, 96}, {1, 28, 96}, {1, 12, 112}, {1, 44, 80}}},
      {5, 2, 4, 24,
       {{1, 624, 0},   {1, 48, 576}, {1, 48, 576}, {1, 48, 576}, {1, 24, 600}, {1, 24, 600},
        {1, 24, 600},  {1, 24, 600}, {1, 32, 592}, {1, 64, 560}, {1, 64, 560}, {1, 0, 624},
        {1, 0, 624},   {1, 0, 624},  {1, 0, 624},  {1, 0, 624},  {1, 16, 608}, {1, 16, 608},
        {1, 8, 616},   {1, 8, 616},  {1, 8, 616},  {1, 144, 480}, {1, 144, 480}, {1, 128, 496}}},
  };
  return cases;
}

TableDiff verify_table_case(const ReferenceCase& ref, const ClassificationReport& report) {
  TableDiff diff;
  std::ostringstream detail;
  if (int(report.classes.size()) != ref.expected_classes) {
    detail << "class count " << report.classes.size() << " != expected " << ref.expected_classes << "; ";
  }
  std::vector<std::vector<long long>> got;
  for (const ClassSummary& s : report.classes) got.push_back(s.rank_dist.counts);
  std::vector<std::vector<long long>> want = ref.rank_dists;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) detail << "rank-weight distribution multisets differ; ";
  diff.detail = detail.str();
  diff.ok = diff.detail.empty();
  return diff;
}

}  // namespace sdmc
