#include "goldbach/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace goldbach::report {

namespace {

const char* kTermNames[12] = {
    "term01_main", "term02_A", "term03_B", "term04", "term05", "term06",
    "term07",      "term08",   "term09",   "term10", "term11", "term12",
};
// term13 appended separately to keep the array literal aligned with names
// used in json output below.

std::vector<double> term_values(const formula::FormulaBreakdown& t) {
  return {t.term01_main, t.term02_A, t.term03_B, t.term04, t.term05,
          t.term06,      t.term07,   t.term08,   t.term09, t.term10,
          t.term11,      t.term12,   t.term13};
}

}  // namespace

std::string format_g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::string csv_header(bool sweep_columns) {
  std::string h =
      "N,k,T,M,gk_direct,explicit_total,abs_error,rel_error,est_zero_tail,"
      "est_residue_tail";
  for (const char* n : kTermNames) h += std::string(",") + n;
  h += ",term13";
  if (sweep_columns) h += ",trunc15_discrepancy,truncC_residual";
  h += ",wall_time_ms";
  return h;
}

std::string csv_row(const ReportRow& row, bool sweep_columns) {
  std::string s;
  s += std::to_string(row.N);
  s += "," + format_g17(row.k);
  s += "," + format_g17(row.T);
  s += "," + std::to_string(row.M);
  s += "," + format_g17(row.gk_direct);
  s += "," + format_g17(row.explicit_total);
  s += "," + format_g17(row.abs_error);
  s += "," + format_g17(row.rel_error);
  s += "," + format_g17(row.est_zero_tail);
  s += "," + format_g17(row.est_residue_tail);
  for (double v : term_values(row.terms)) s += "," + format_g17(v);
  if (sweep_columns) {
    s += "," + format_g17(row.trunc15_discrepancy);
    s += "," + format_g17(row.truncC_residual);
  }
  s += "," + format_g17(row.wall_time_ms);
  return s;
}

std::string json_rows(const std::vector<ReportRow>& rows, bool sweep_columns) {
  nlohmann::json arr = nlohmann::json::array();
  for (const ReportRow& row : rows) {
    nlohmann::json j;
    j["N"] = row.N;
    j["k"] = row.k;
    j["T"] = row.T;
    j["M"] = row.M;
    j["gk_direct"] = row.gk_direct;
    j["explicit_total"] = row.explicit_total;
    j["abs_error"] = row.abs_error;
    j["rel_error"] = row.rel_error;
    j["est_zero_tail"] = row.est_zero_tail;
    j["est_residue_tail"] = row.est_residue_tail;
    std::vector<double> tv = term_values(row.terms);
    for (int i = 0; i < 12; ++i) j[kTermNames[i]] = tv[i];
    j["term13"] = tv[12];
    if (sweep_columns) {
      j["trunc15_discrepancy"] = row.trunc15_discrepancy;
      j["truncC_residual"] = row.truncC_residual;
    }
    j["wall_time_ms"] = row.wall_time_ms;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace goldbach::report
