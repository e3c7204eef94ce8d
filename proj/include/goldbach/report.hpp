#pragma once

#include <string>
#include <vector>

#include "goldbach/formula.hpp"

namespace goldbach::report {

// One comparison row: direct mean vs explicit-formula total, with the
// thirteen term columns. Timing is written as 0 unless timings were
// explicitly requested, keeping repeated runs byte-identical.
struct ReportRow {
  long N = 0;
  double k = 0.0;
  double T = 0.0;
  int M = 0;
  double gk_direct = 0.0;
  double explicit_total = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double est_zero_tail = 0.0;
  double est_residue_tail = 0.0;
  formula::FormulaBreakdown terms;
  double wall_time_ms = 0.0;
  // sweep-only columns (unused by compare)
  bool has_truncated = false;
  double trunc15_discrepancy = 0.0;
  double truncC_residual = 0.0;
};

std::string format_g17(double v);

std::string csv_header(bool sweep_columns);
std::string csv_row(const ReportRow& row, bool sweep_columns);
std::string json_rows(const std::vector<ReportRow>& rows, bool sweep_columns);

}  // namespace goldbach::report
