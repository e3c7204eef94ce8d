#pragma once

#include <functional>
#include <vector>

#include "goldbach/arith.hpp"
#include "goldbach/continuation.hpp"
#include "goldbach/quadrature.hpp"
#include "goldbach/zeros.hpp"

namespace goldbach::formula {

using quad::QuadratureConfig;

struct TruncationPolicy {
  double zero_height_T = 1000.0;
  int residue_cutoff_M = 8;
  double delta_exclusion = 0.25;
  QuadratureConfig quad;
  int jobs = 1;
};

// Laurent data of -zeta'/zeta and Gamma at w = -nu. For even nu the leading
// coefficient of -zeta'/zeta is determined numerically (residue_of_zeta_term,
// which comes out -1: the residue of zeta'/zeta at a simple trivial zero is
// +1) and a_nu is the constant term under standard coefficient extraction.
struct LaurentData {
  int nu = 0;
  bool even = false;
  double a_nu = 0.0;                  // constant Laurent term of -zeta'/zeta (even nu)
  double zeta_logderiv_value = 0.0;   // zeta'/zeta(-nu) (odd nu)
  double b_nu_digamma = 0.0;          // psi(nu+1) (even nu)
  double b_nu_series = 0.0;           // Hadamard-series route for the same number
  double residue_of_zeta_term = 0.0;  // leading coefficient of -zeta'/zeta (even nu)
  double A_nu(double N) const;        // a_nu + r (b_nu + log N), resp. -zeta'/zeta(-nu)
};

LaurentData laurent_data(int nu, const QuadratureConfig& cfg);

// -Res_{w=-nu} [ zeta'/zeta(w) Gamma(w) F(w) ] by contour integration on
// |w + nu| = radius; ground truth for the residue series.
double residue_numeric(int nu, const std::function<cd(cd)>& F,
                       const QuadratureConfig& cfg, double radius = 0.25);

// The four residue series truncated at nu = M (canonical contour path), with
// closed-form cross values and data-driven tail estimates.
struct SigmaSums {
  double sigma_gamma_k = 0.0;       // Sigma_Gamma(N, k)
  double sigma_gamma_kplus1 = 0.0;  // Sigma_Gamma(N, k+1)
  double sigma_z = 0.0;             // Sigma_Z(N, k)
  double sigma_t = 0.0;             // Sigma_T(N, k)
  double tail_gamma_k = 0.0;
  double tail_gamma_kplus1 = 0.0;
  double tail_z = 0.0;
  double tail_t = 0.0;
  // per-nu terms 1..M, canonical (contour) and closed-form (Laurent algebra)
  std::vector<double> gamma_k_terms, gamma_k_closed;
  std::vector<double> gamma_kplus1_terms, gamma_kplus1_closed;
  std::vector<double> z_terms, z_closed;
  std::vector<double> t_terms, t_closed_terms;
};

SigmaSums sigma_sums(long N, double k, int M, const arith::LambdaTable& lambda,
                     const QuadratureConfig& cfg);

// Truncated A_k(N) = sum_rho Gamma(rho)/Gamma(rho+k+2) N^{rho+1}.
double a_k_sum(long N, double k, const zeros::ZeroSet& zs, double T);

// Truncated sum_rho Gamma(rho) Z_N(rho+k) N^rho with Z_N through the entire
// continuation (so T is the only truncation parameter).
double b_k_sum(long N, double k, const zeros::ZeroSet& zs, double T,
               const arith::LambdaTable& lambda, const QuadratureConfig& cfg);

struct FormulaBreakdown {
  double term01_main = 0.0;  // N^2/Gamma(k+3)
  double term02_A = 0.0;     // -2 N Z_N(k+1)
  double term03_B = 0.0;     // sum_rho Gamma(rho) Z_N(rho+k) N^rho
  double term04 = 0.0;       // -2 (z'/z)(0) N / Gamma(k+2)
  double term05 = 0.0;       // +2 (z'/z)(0) Z_N(k)
  double term06 = 0.0;       // N T_N(k+1)
  double term07 = 0.0;       // (z'/z)(0)^2 / Gamma(k+1)
  double term08 = 0.0;       // -sum_rho Gamma(rho) T_N(rho+k) N^rho
  double term09 = 0.0;       // -(z'/z)(0) T_N(k)
  double term10 = 0.0;       // N Sigma_Gamma(N, k+1)
  double term11 = 0.0;       // -Sigma_Z(N, k)
  double term12 = 0.0;       // -(z'/z)(0) Sigma_Gamma(N, k)
  double term13 = 0.0;       // Sigma_T(N, k)
  double total = 0.0;
  double est_zero_tail = 0.0;
  double est_residue_tail = 0.0;
  double max_imag_residual = 0.0;  // largest |Im|/(1+|Re|) over assembled terms
  double recombine() const {
    return term01_main + term02_A + term03_B + term04 + term05 + term06 +
           term07 + term08 + term09 + term10 + term11 + term12 + term13;
  }
};

FormulaBreakdown theorem_eval(long N, double k, const zeros::ZeroSet& zs,
                              const arith::LambdaTable& lambda,
                              const TruncationPolicy& policy);

struct TruncatedResult {
  double main = 0.0;
  double discrepancy = 0.0;  // gk_direct - main
};

// N^2/Gamma(k+3) - 2 A_k + B_k - 2 (z'/z)(0) N / Gamma(k+2); k > 1/2.
TruncatedResult truncated_15(long N, double k, const zeros::ZeroSet& zs,
                             double T, const arith::LambdaTable& lambda,
                             const QuadratureConfig& cfg);

// The sharper form with + 2 (z'/z)(0) Z_N(k) + C,
// C = ((z'/z)(0)^2 + 2 (z'/z)(-1)) / Gamma(k+1); k > 1/2.
TruncatedResult truncated_c(long N, double k, const zeros::ZeroSet& zs,
                            double T, const arith::LambdaTable& lambda,
                            const QuadratureConfig& cfg);

// Internal helper shared by theorem_eval / b_k_sum / truncated_*: one pass
// over the zero pairs computing both zero sums and their tail estimates.
struct ZeroSumsZT {
  double sum_z = 0.0;       // sum Gamma(rho) Z_N(rho+k) N^rho
  double sum_t = 0.0;       // sum Gamma(rho) T_N(rho+k) N^rho
  double sum_a = 0.0;       // sum Gamma(rho)/Gamma(rho+k+2) N^{rho+1}
  double est_tail_z = 0.0;
  double est_tail_t = 0.0;
  double est_tail_a = 0.0;
  double max_imag_residual = 0.0;
};
ZeroSumsZT zero_sums_zt(long N, double k, const zeros::ZeroSet& zs, double T,
                        const arith::LambdaTable& lambda,
                        const QuadratureConfig& cfg, int jobs);

}  // namespace goldbach::formula
