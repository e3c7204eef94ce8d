#pragma once

#include <vector>

#include "goldbach/arith.hpp"
#include "goldbach/complex_utils.hpp"
#include "goldbach/quadrature.hpp"
#include "goldbach/zeros.hpp"

namespace goldbach::cont {

using quad::QuadratureConfig;

// The six brace terms of the closed T_N(w) expression, before division by
// Gamma(w+1). Everything here stays finite for ordinates up to ~1e4, so
// zero-sum callers can combine `total()` with a Gamma ratio instead of
// forming T_N itself (which grows like 1/Gamma(w+1)).
struct TnBraces {
  cd prime_sum;      // sum_n Lambda(n)/n ((1-1/(nN))^w - 1)
  cd unit_interval;  // int_0^1 ((1-xi/N)^w - 1) dxi/xi
  cd log2pi_gamma;   // ((1-1/N)^w - 1) log(2 pi e^gamma)
  cd half_log;       // (1/2)(1-1/N)^w log(1-1/N^2)
  cd middle_regular; // [1,N] integral minus its [1,2] power part
  cd i_brace;        // the [1,2] power part, 2^{-(w+1)} sum a_N(m) 2^{-m}/(w+1+m)
  cd outer;          // N int_N^inf ((1-1/N)^w - (1-1/xi)^w) dxi/(xi^2-N^2)
  // -(prime) + unit - log2pi - half - middle_regular + outer, fixed fp order
  cd no_series() const {
    return ((((-prime_sum + unit_interval) - log2pi_gamma) - half_log) -
            middle_regular) + outer;
  }
  cd total() const { return no_series() - i_brace; }
};

TnBraces tn_braces(cd w, long N, const QuadratureConfig& cfg);

// Full term breakdown of the closed expression, T_N(w) = prefactor * braces.
struct TnBreakdown {
  cd prime_sum;
  cd unit_interval_integral;
  cd log2pi_gamma_term;
  cd half_log_term;
  cd middle_integral;  // middle_regular + i_brace (the whole [1,N] brace)
  cd outer_integral;
  cd prefactor;  // 1/Gamma(w+1)
  cd total;
  // split parts the evaluation is actually built from (total is assembled as
  // prefactor * braces_no_series - series_part, which stays finite at the
  // negative integers where the [1,2] power part and 1/Gamma(w+1) cancel)
  cd middle_regular;
  cd series_part;  // I(w), entire
  cd braces_no_series;
  cd recombine() const { return prefactor * braces_no_series - series_part; }
};

// Closed evaluation of T_N(w); entire in w. N >= 4.
TnBreakdown t_closed(cd w, long N, const QuadratureConfig& cfg);

// Taylor coefficients a_N(0..count-1) of 1/((1-z)(N^2(1-z)^2-1)).
std::vector<double> h_coefficients(long N, int count);

// I(w): the [1,2] singular part of the middle integral including its
// 1/Gamma(w+1) factor; entire in w (series poles cancel against the zeros of
// the reciprocal gamma).
cd i_series(cd w, long N, const QuadratureConfig& cfg);

// Gamma(w+1) * I(w): meromorphic brace-level value with simple poles at
// w = -1-m.
cd i_brace(cd w, long N, const QuadratureConfig& cfg);

// Independent oracle: -(1/2pi i) int_{(-1/2)} zeta'/zeta(s)
// Gamma(s)/Gamma(s+w+1) N^s ds, tails bent into the decaying half-plane.
// Requires Re w > 0.
cd t_contour_oracle(cd w, long N, const QuadratureConfig& cfg);

struct ZeroSumResult {
  cd value;
  double tail_estimate;  // heuristic, reported rather than trusted
};

// Truncated zero-sum definition of Z_N(w) (Re w > 0), conjugate pairs
// combined before accumulation in ascending |gamma|.
ZeroSumResult z_zero_sum(cd w, long N, const zeros::ZeroSet& zs, double T);

// Entire continuation of Z_N(w), valid for all complex w:
//   N/Gamma(w+2) - (zeta'/zeta)(0)/Gamma(w+1) + T_N(w)
//     - (1/Gamma(w+1)) sum_{n<N} Lambda(n)(1-n/N)^w
cd z_continued(cd w, long N, const arith::LambdaTable& lambda,
               const QuadratureConfig& cfg);

// sum_{n<N} Lambda(n) (1-n/N)^w
cd lambda_weighted_sum(cd w, long N, const arith::LambdaTable& lambda);

}  // namespace goldbach::cont
