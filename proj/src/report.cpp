#include "sdmc/report.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

namespace sdmc {

std::string format_distribution(const WeightDistribution& d) {
  std::string out;
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (d.counts[i] == 0) continue;
    if (!out.empty()) out += ", ";
    out += "A_" + std::to_string(i) + "=" + std::to_string(d.counts[i]);
  }
  return out.empty() ? "A_0=0" : out;
}

nlohmann::ordered_json code_to_json(const MatrixCode& code) {
  nlohmann::ordered_json j;
  j["q"] = code.field()->q();
  j["l"] = code.l();
  j["m"] = code.m();
  j["k"] = code.k();
  j["gen"] = format_mat(code.gen());
  j["rank_dist"] = rank_weight_distribution(code).counts;
  j["hamming_dist"] = hamming_weight_distribution(code).counts;
  j["mrd"] = code.k() > 0 && is_mrd(code);
  return j;
}

nlohmann::ordered_json report_to_json(const ClassificationReport& report) {
  nlohmann::ordered_json j;
  j["q"] = report.field->q();
  j["l"] = report.l;
  j["m"] = report.m;
  j["total_codes"] = report.total_codes;
  j["group_order"] = report.group_order;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const ClassSummary& s : report.classes) {
    nlohmann::ordered_json c;
    c["gen"] = format_mat(s.rep.gen());
    c["class_size"] = s.class_size;
    c["aut_order"] = s.aut_order;
    c["rank_dist"] = s.rank_dist.counts;
    c["hamming_dist"] = s.hamming_dist.counts;
    c["mrd"] = s.mrd;
    classes.push_back(std::move(c));
  }
  j["classes"] = std::move(classes);
  return j;
}

namespace {

std::string join_counts(const WeightDistribution& d) {
  std::string out;
  for (std::size_t i = 0; i < d.counts.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(d.counts[i]);
  }
  return out;
}

}  // namespace

std::string report_to_csv(const ClassificationReport& report) {
  std::ostringstream out;
  out << "q,l,m,class,class_size,aut_order,mrd,rank_dist,hamming_dist,gen\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const ClassSummary& s = report.classes[i];
    out << report.field->q() << ',' << report.l << ',' << report.m << ',' << (i + 1) << ','
        << s.class_size << ',' << s.aut_order << ',' << (s.mrd ? 1 : 0) << ','
        << join_counts(s.rank_dist) << ',' << join_counts(s.hamming_dist) << ','
        << format_mat(s.rep.gen()) << '\n';
  }
  return out.str();
}

std::string report_to_table(const ClassificationReport& report) {
  std::ostringstream out;
  int n = report.l * report.m;
  out << "q=" << report.field->q() << " l=" << report.l << " m=" << report.m << " n=" << n
      << (report.block ? "  [block equivalence]" : "  [matrix equivalence]") << "\n";
  out << "self-dual codes: " << report.total_codes << "   group order: " << report.group_order
      << "   classes: " << report.classes.size() << "\n";
  for (std::size_t i = 0; i < report.classes.size(); ++i) {
    const ClassSummary& s = report.classes[i];
    out << "  class " << (i + 1) << ": size " << s.class_size << ", aut " << s.aut_order
        << (s.mrd ? ", MRD" : "") << "\n";
    out << "    "
        << (report.block ? "hamming: " + format_distribution(s.hamming_dist)
                         : "rank: " + format_distribution(s.rank_dist))
        << "\n";
    out << "    gen: " << format_mat(s.rep.gen()) << "\n";
  }
  return out.str();
}

}  // namespace sdmc
