#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "sdmc/enumerate.hpp"

namespace sdmc {

// Stable field order: {q, l, m, total_codes, group_order,
// classes: [{gen, class_size, aut_order, rank_dist, hamming_dist, mrd}]}.
nlohmann::ordered_json report_to_json(const ClassificationReport& report);

// {q, l, m, k, gen, rank_dist, hamming_dist, mrd}
nlohmann::ordered_json code_to_json(const MatrixCode& code);

// One row per class: q,l,m,class,class_size,aut_order,mrd,rank_dist,
// hamming_dist,gen (distributions space-joined, generator in literal form).
std::string report_to_csv(const ClassificationReport& report);

// Human-readable table: one parameter header, then one block per class with
// its weight distribution and representative generator.
std::string report_to_table(const ClassificationReport& report);

std::string format_distribution(const WeightDistribution& d);  // "A_0=1, A_2=8"

}  // namespace sdmc
