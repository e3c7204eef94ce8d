// Command-line front end: compare the explicit-formula evaluation of the
// Riesz-smoothed Goldbach mean against the sieve-side computation, sweep
// parameter grids, verify the Mellin kernel, and tabulate Laurent data.
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "goldbach/arith.hpp"
#include "goldbach/continuation.hpp"
#include "goldbach/errors.hpp"
#include "goldbach/formula.hpp"
#include "goldbach/mellin.hpp"
#include "goldbach/parallel.hpp"
#include "goldbach/report.hpp"
#include "goldbach/special_functions.hpp"
#include "goldbach/zeros.hpp"
#include "goldbach/zeta.hpp"

namespace gb = goldbach;
using gb::cd;

namespace {

struct CommonOpts {
  std::string zeros_path;
  double T = 1000.0;
  int M = 8;
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double contour_height = 160.0;
  double series_tail_tol = 1e-11;
  double delta_exclusion = 0.25;
  double rel_guard = 1e-3;
  int jobs = 0;
  bool timings = false;
  std::string output_path;
  std::string format = "csv";
};

gb::quad::QuadratureConfig make_cfg(const CommonOpts& o) {
  gb::quad::QuadratureConfig cfg;
  cfg.abs_tol = o.abs_tol;
  cfg.rel_tol = o.rel_tol;
  cfg.contour_height = o.contour_height;
  cfg.series_tail_tol = o.series_tail_tol;
  return cfg;
}

void add_common(CLI::App* cmd, CommonOpts& o, bool needs_zeros) {
  auto* z = cmd->add_option("--zeros", o.zeros_path, "zero-table file (text, one ordinate per line)");
  z->envname("GOLDBACH_ZEROS");
  if (needs_zeros) z->required();
  cmd->add_option("--T", o.T, "zero-sum truncation height");
  cmd->add_option("--M", o.M, "residue-series cutoff");
  cmd->add_option("--abs-tol", o.abs_tol, "quadrature absolute tolerance");
  cmd->add_option("--rel-tol", o.rel_tol, "quadrature relative tolerance");
  cmd->add_option("--contour-height", o.contour_height, "vertical-line half height");
  cmd->add_option("--series-tail-tol", o.series_tail_tol, "series tail tolerance");
  cmd->add_option("--delta", o.delta_exclusion, "pole exclusion radius");
  cmd->add_option("--jobs", o.jobs, "worker threads (0 = hardware)");
  cmd->add_option("--out", o.output_path, "output file (default: stdout)");
  cmd->add_option("--format", o.format, "csv|json")
      ->check(CLI::IsMember({"csv", "json"}));
  cmd->add_flag("--timings", o.timings, "fill wall_time_ms (breaks byte-reproducibility)");
  cmd->add_option("--rel-guard", o.rel_guard, "relative guard in the pass criterion");
}

void emit(const CommonOpts& o, const std::vector<gb::report::ReportRow>& rows,
          bool sweep_columns) {
  std::string text;
  if (o.format == "json") {
    text = gb::report::json_rows(rows, sweep_columns) + "\n";
  } else {
    text = gb::report::csv_header(sweep_columns) + "\n";
    for (const auto& r : rows) text += gb::report::csv_row(r, sweep_columns) + "\n";
  }
  if (o.output_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(o.output_path);
    if (!out) throw gb::IoError("cannot write " + o.output_path);
    out << text;
  }
}

int resolve_jobs(const CommonOpts& o) {
  return o.jobs > 0 ? o.jobs : gb::default_jobs();
}

gb::report::ReportRow make_row(long N, double k, const CommonOpts& o,
                               const gb::zeros::ZeroSet& zs,
                               const gb::arith::LambdaTable& lambda,
                               const gb::arith::RepresentationTable& rep,
                               int inner_jobs, bool with_truncated) {
  auto t0 = std::chrono::steady_clock::now();
  gb::formula::TruncationPolicy policy;
  policy.zero_height_T = o.T;
  policy.residue_cutoff_M = o.M;
  policy.delta_exclusion = o.delta_exclusion;
  policy.quad = make_cfg(o);
  policy.jobs = inner_jobs;

  gb::report::ReportRow row;
  row.N = N;
  row.k = k;
  row.T = o.T;
  row.M = o.M;
  row.terms = gb::formula::theorem_eval(N, k, zs, lambda, policy);
  row.gk_direct = gb::arith::gk_direct(rep, N, k);
  row.explicit_total = row.terms.total;
  row.abs_error = std::abs(row.gk_direct - row.explicit_total);
  row.rel_error = row.abs_error / (1.0 + std::abs(row.gk_direct));
  row.est_zero_tail = row.terms.est_zero_tail;
  row.est_residue_tail = row.terms.est_residue_tail;
  if (with_truncated && k > 0.5) {
    row.has_truncated = true;
    row.trunc15_discrepancy =
        gb::formula::truncated_15(N, k, zs, o.T, lambda, policy.quad).discrepancy;
    row.truncC_residual =
        gb::formula::truncated_c(N, k, zs, o.T, lambda, policy.quad).discrepancy;
  }
  if (o.timings) {
    row.wall_time_ms = std::chrono::duration<double, std::milli>(
                           std::chrono::steady_clock::now() - t0)
                           .count();
  }
  return row;
}

bool rows_pass(const CommonOpts& o, const std::vector<gb::report::ReportRow>& rows) {
  for (const auto& r : rows) {
    double budget = r.est_zero_tail + r.est_residue_tail +
                    o.rel_guard * (1.0 + std::abs(r.gk_direct));
    if (!(r.abs_error <= budget)) return false;
  }
  return true;
}

int cmd_compare(const CommonOpts& o, const std::vector<long>& Ns,
                const std::vector<double>& ks) {
  if (Ns.empty() || ks.empty()) {
    std::cerr << "error: compare needs at least one --N and one --k\n";
    return 2;
  }
  for (long N : Ns)
    if (N < 4) {
      std::cerr << "error: N must be >= 4 (got " << N << ")\n";
      return 2;
    }
  for (double k : ks)
    if (!(k > 0.0)) {
      std::cerr << "error: k must be > 0\n";
      return 2;
    }
  gb::zeros::ZeroSet zs = gb::zeros::load_zeros(o.zeros_path);
  long maxN = *std::max_element(Ns.begin(), Ns.end());
  gb::arith::LambdaTable lambda = gb::arith::sieve_lambda(maxN);
  gb::arith::RepresentationTable rep = gb::arith::representation_table(lambda);

  struct Cell {
    long N;
    double k;
  };
  std::vector<Cell> cells;
  for (long N : Ns)
    for (double k : ks) cells.push_back({N, k});
  std::vector<gb::report::ReportRow> rows(cells.size());
  int jobs = resolve_jobs(o);
  int row_jobs = std::min<int>(jobs, static_cast<int>(cells.size()));
  int inner = std::max(1, jobs / std::max(1, row_jobs));
  gb::parallel_for_index(static_cast<long>(cells.size()), row_jobs, [&](long i) {
    rows[i] = make_row(cells[i].N, cells[i].k, o, zs, lambda, rep, inner, false);
  });
  emit(o, rows, false);
  return rows_pass(o, rows) ? 0 : 1;
}

int cmd_sweep(const CommonOpts& o, long Nmin, long Nmax, const std::string& step,
              const std::vector<double>& ks) {
  if (ks.empty()) {
    std::cerr << "error: sweep needs a nonempty --k list\n";
    return 2;
  }
  if (Nmin < 4 || Nmax < Nmin) {
    std::cerr << "error: need 4 <= Nmin <= Nmax\n";
    return 2;
  }
  std::vector<long> Ns;
  if (!step.empty() && step[0] == 'x') {
    double f = std::atof(step.c_str() + 1);
    if (!(f > 1.0)) {
      std::cerr << "error: multiplicative step must exceed 1 (got " << step << ")\n";
      return 2;
    }
    for (double N = static_cast<double>(Nmin); N <= static_cast<double>(Nmax); N *= f)
      Ns.push_back(static_cast<long>(std::llround(N)));
  } else {
    long d = std::atol(step.c_str()[0] == '+' ? step.c_str() + 1 : step.c_str());
    if (d <= 0) {
      std::cerr << "error: additive step must be positive (got " << step << ")\n";
      return 2;
    }
    for (long N = Nmin; N <= Nmax; N += d) Ns.push_back(N);
  }
  gb::zeros::ZeroSet zs = gb::zeros::load_zeros(o.zeros_path);
  gb::arith::LambdaTable lambda = gb::arith::sieve_lambda(Ns.back());
  gb::arith::RepresentationTable rep = gb::arith::representation_table(lambda);

  struct Cell {
    long N;
    double k;
  };
  std::vector<Cell> cells;
  for (long N : Ns)
    for (double k : ks) cells.push_back({N, k});
  std::vector<gb::report::ReportRow> rows(cells.size());
  int jobs = resolve_jobs(o);
  int row_jobs = std::min<int>(jobs, static_cast<int>(cells.size()));
  int inner = std::max(1, jobs / std::max(1, row_jobs));
  gb::parallel_for_index(static_cast<long>(cells.size()), row_jobs, [&](long i) {
    rows[i] = make_row(cells[i].N, cells[i].k, o, zs, lambda, rep, inner, true);
  });
  emit(o, rows, true);
  return rows_pass(o, rows) ? 0 : 1;
}

int cmd_verify_kernel(const CommonOpts& o, double c, double height, double tol) {
  gb::quad::QuadratureConfig cfg = make_cfg(o);
  const double xs[] = {0.25, 0.5, 0.9, 1.0, 1.5, 2.0};
  const cd zsv[] = {cd(1, 0), cd(2.5, 0), cd(2, 1)};
  bool ok = true;
  double worst = 0.0;
  double worst_x = 0.0;
  cd worst_z;
  std::cout << "x,z,computed_re,computed_im,expected_re,expected_im,abs_err\n";
  for (double x : xs)
    for (cd z : zsv) {
      gb::mellin::KernelResult r =
          gb::mellin::mellin_kernel_numeric(x, z, c, height, cfg);
      cd want = gb::mellin::mellin_kernel_closed(x, z);
      double err = std::abs(r.value - want);
      std::cout << x << "," << z.real() << (z.imag() >= 0 ? "+" : "")
                << z.imag() << "i," << gb::report::format_g17(r.value.real())
                << "," << gb::report::format_g17(r.value.imag()) << ","
                << gb::report::format_g17(want.real()) << ","
                << gb::report::format_g17(want.imag()) << ","
                << gb::report::format_g17(err) << "\n";
      if (err > worst) {
        worst = err;
        worst_x = x;
        worst_z = z;
      }
      if (err > tol) ok = false;
    }
  std::cout << "worst: x=" << worst_x << " z=" << worst_z.real() << "+"
            << worst_z.imag() << "i err=" << worst << (ok ? " PASS" : " FAIL")
            << "\n";
  return ok ? 0 : 1;
}

int cmd_laurent_table(const CommonOpts& o, const std::vector<long>& Ns) {
  if (o.M < 1) {
    std::cerr << "error: --M must be >= 1\n";
    return 2;
  }
  gb::quad::QuadratureConfig cfg = make_cfg(o);
  std::string header = "nu,parity,zeta_logderiv_or_a_nu,b_nu_digamma,b_nu_series,residue_of_zeta_term";
  for (long N : Ns) header += ",A_nu_N" + std::to_string(N);
  std::cout << header << "\n";
  for (int nu = 1; nu <= o.M; ++nu) {
    gb::formula::LaurentData d = gb::formula::laurent_data(nu, cfg);
    std::string row = std::to_string(nu);
    row += d.even ? ",even" : ",odd";
    row += "," + gb::report::format_g17(d.even ? d.a_nu : d.zeta_logderiv_value);
    if (d.even) {
      row += "," + gb::report::format_g17(d.b_nu_digamma);
      row += "," + gb::report::format_g17(d.b_nu_series);
      row += "," + gb::report::format_g17(d.residue_of_zeta_term);
    } else {
      row += ",,,";
    }
    for (long N : Ns)
      row += "," + gb::report::format_g17(d.A_nu(static_cast<double>(N)));
    std::cout << row << "\n";
  }
  return 0;
}

int cmd_selftest(const CommonOpts& o) {
  gb::quad::QuadratureConfig cfg = make_cfg(o);
  int failures = 0;
  auto check = [&](const std::string& name, bool ok) {
    std::cout << (ok ? "PASS " : "FAIL ") << name << "\n";
    if (!ok) ++failures;
  };

  gb::mellin::KernelResult kr = gb::mellin::mellin_kernel_numeric(0.5, cd(1, 0), 2.0, 200.0, cfg);
  check("mellin kernel x=0.5 z=1", std::abs(kr.value - cd(0.5, 0.0)) < 1e-8);
  kr = gb::mellin::mellin_kernel_numeric(1.5, cd(1, 0), 2.0, 200.0, cfg);
  check("mellin kernel x=1.5 z=1", std::abs(kr.value) < 1e-8);

  gb::arith::LambdaTable lam = gb::arith::sieve_lambda(256);
  gb::arith::RepresentationTable rep = gb::arith::representation_table(lam);
  double gd = gb::arith::gk_direct(rep, 200, 1.0);
  double gn = gb::arith::gk_nested(lam, 200, 1.0);
  check("nested-sum identity N=200 k=1",
        std::abs(gd - gn) <= 1e-10 * (1.0 + std::abs(gd)));

  cd s(-0.5, 30.0);
  cd once = gb::zt::zeta_logderiv(s);
  cd back = gb::zt::reflection_G(s) - gb::zt::zeta_logderiv(cd(1.5, -30.0));
  check("reflection involution", std::abs(once - back) < 1e-12);

  cd tc = gb::cont::t_closed(cd(1.5, 0.0), 10, cfg).total;
  cd to = gb::cont::t_contour_oracle(cd(1.5, 0.0), 10, cfg);
  check("T dual path w=1.5 N=10", std::abs(tc - to) < 1e-6 * (1.0 + std::abs(tc)));

  std::cout << (failures == 0 ? "selftest: all checks passed\n"
                              : "selftest: FAILURES\n");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit-formula evaluation of Riesz-smoothed Goldbach means"};
  app.require_subcommand(1);

  CommonOpts o;
  std::vector<long> Ns;
  std::vector<double> ks;
  long Nmin = 0, Nmax = 0;
  std::string step = "x2";
  double kernel_c = 2.0, kernel_height = 300.0, kernel_tol = 1e-7;
  std::vector<long> laurent_Ns = {4, 100};

  CLI::App* compare = app.add_subcommand("compare", "explicit formula vs direct sum");
  compare->add_option("--N", Ns, "values of N")->required();
  compare->add_option("--k", ks, "values of k")->required();
  add_common(compare, o, true);

  CLI::App* sweep = app.add_subcommand("sweep", "grid sweep with truncated-formula columns");
  sweep->add_option("--Nmin", Nmin)->required();
  sweep->add_option("--Nmax", Nmax)->required();
  sweep->add_option("--step", step, "x<factor> multiplicative or +<d> additive");
  sweep->add_option("--k", ks, "values of k");
  add_common(sweep, o, true);

  CLI::App* vk = app.add_subcommand("verify-kernel", "Mellin kernel battery");
  vk->add_option("--c", kernel_c, "contour abscissa");
  vk->add_option("--height", kernel_height, "contour half height");
  vk->add_option("--tol", kernel_tol, "pass tolerance");
  add_common(vk, o, false);

  CLI::App* lt = app.add_subcommand("laurent-table", "Laurent data for nu <= M");
  lt->add_option("--N", laurent_Ns, "N values for the A_nu columns");
  add_common(lt, o, false);

  CLI::App* st = app.add_subcommand("selftest", "quick internal consistency checks");
  add_common(st, o, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }

  try {
    if (compare->parsed()) return cmd_compare(o, Ns, ks);
    if (sweep->parsed()) return cmd_sweep(o, Nmin, Nmax, step, ks);
    if (vk->parsed()) return cmd_verify_kernel(o, kernel_c, kernel_height, kernel_tol);
    if (lt->parsed()) return cmd_laurent_table(o, laurent_Ns);
    if (st->parsed()) return cmd_selftest(o);
  } catch (const gb::InsufficientData& e) {
    std::cerr << "error: insufficient zero data: " << e.what()
              << " (table max height " << e.max_height() << ")\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gb::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gb::FormatError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const gb::SanityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
