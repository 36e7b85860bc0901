#include "psg/io.hpp"

#include <ostream>

#include "json.hpp"

namespace psg {

const char* kSummaryCsvHeader =
    "n,p,f,g,e,u,f_even,f_minus_3p,c1_ratio_num,c1_ratio_den,"
    "wilf_lhs_num,wilf_lhs_den,wilf_rhs_num,wilf_rhs_den,window_factor_used,certified";

void write_summary_csv(std::ostream& os, std::span<const SemigroupSummary> rows) {
  os << kSummaryCsvHeader << '\n';
  for (const auto& r : rows) {
    os << r.n << ',' << r.p << ',' << r.f << ',' << r.g << ',' << r.e << ',' << r.u << ',';
    if (r.f_even) os << *r.f_even;
    os << ',' << (r.f - 3 * r.p) << ',' << r.f << ',' << r.p << ',' << r.g << ',' << (1 + r.f)
       << ',' << (r.e - 1) << ',' << r.e << ',' << decimal_string(r.window_factor) << ','
       << (r.certified ? 1 : 0) << '\n';
  }
}

namespace {

nlohmann::json row_to_json(const SemigroupSummary& r) {
  nlohmann::json j;
  j["n"] = r.n;
  j["p"] = r.p;
  j["f"] = r.f;
  j["g"] = r.g;
  j["e"] = r.e;
  j["u"] = r.u;
  if (r.f_even) j["f_even"] = *r.f_even;
  else j["f_even"] = nullptr;
  j["f_minus_3p"] = r.f - 3 * r.p;
  j["c1_ratio_num"] = r.f;
  j["c1_ratio_den"] = r.p;
  j["wilf_lhs_num"] = r.g;
  j["wilf_lhs_den"] = 1 + r.f;
  j["wilf_rhs_num"] = r.e - 1;
  j["wilf_rhs_den"] = r.e;
  j["window_factor_used"] = decimal_string(r.window_factor);
  j["certified"] = r.certified;
  return j;
}

}  // namespace

void write_summary_json(std::ostream& os, std::span<const SemigroupSummary> rows) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : rows) arr.push_back(row_to_json(r));
  os << arr.dump(2) << '\n';
}

void write_margin_figure(std::ostream& os, std::span<const SemigroupSummary> rows) {
  os << "p,four_p_minus_f_next\n";
  for (std::size_t i = 0; i + 1 < rows.size(); ++i)
    os << rows[i].p << ',' << (4 * rows[i].p - rows[i + 1].f) << '\n';
}

void write_gap_offset_figure(std::ostream& os, std::span<const SemigroupSummary> rows) {
  os << "n,f_minus_3p\n";
  for (const auto& r : rows) os << r.n << ',' << (r.f - 3 * r.p) << '\n';
}

void write_progression_figure(std::ostream& os, const ProgressionSweep& sweep) {
  os << "p,f\n";
  for (const auto& r : sweep.records) os << r.p << ',' << r.f << '\n';
}

void write_progression_csv(std::ostream& os, const ProgressionSweep& sweep) {
  os << "k,p,f,g,e,u,f_even,f_over_p_num,f_over_p_den,predicted_limit,certified\n";
  for (const auto& r : sweep.records) {
    os << r.n << ',' << r.p << ',' << r.f << ',' << r.g << ',' << r.e << ',' << r.u << ',';
    if (r.f_even) os << *r.f_even;
    os << ',' << r.f << ',' << r.p << ',' << sweep.predicted << ',' << (r.certified ? 1 : 0)
       << '\n';
  }
}

}  // namespace psg
