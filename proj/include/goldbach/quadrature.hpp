#pragma once

#include <functional>

#include "goldbach/complex_utils.hpp"

namespace goldbach::quad {

struct QuadratureConfig {
  double abs_tol = 1e-10;
  double rel_tol = 1e-10;
  double contour_height = 160.0;  // vertical-line half-height before tail bend
  int max_subdivisions = 8000;
  double series_tail_tol = 1e-11;
};

struct QuadResult {
  cd value{0.0, 0.0};
  double error = 0.0;
  long evals = 0;
  bool converged = true;
};

using RealToComplex = std::function<cd(double)>;
using ComplexToComplex = std::function<cd(cd)>;

// Adaptive Gauss-Kronrod (G7,K15) on [a,b]. `initial_split` seeds the worklist
// with that many equal panels, which keeps oscillatory integrands from fooling
// the first error estimate.
QuadResult integrate(const RealToComplex& f, double a, double b,
                     const QuadratureConfig& cfg, int initial_split = 1);

// As above but throws ToleranceNotMet when the budget is exhausted.
cd integrate_or_throw(const RealToComplex& f, double a, double b,
                      const QuadratureConfig& cfg, int initial_split = 1);

// (1/2pi) \int_0^{2pi} f(center + r e^{i t}) e^{i k t} dt by the periodic
// trapezoid rule with node doubling (spectrally accurate for f analytic in a
// neighbourhood of the circle). Picks out the Laurent coefficient a_{-k} r^{-k}.
QuadResult circle_moment(const ComplexToComplex& f, cd center, double radius,
                         int k, const QuadratureConfig& cfg);

// f'(w0) via Cauchy's integral on |w - w0| = radius; `order` must be 1.
cd cauchy_derivative(const ComplexToComplex& f, cd w0, double radius, int order,
                     const QuadratureConfig& cfg);

// (1/2pi i) \oint f dw on the circle.
cd contour_integral_circle(const ComplexToComplex& f, cd center, double radius,
                           const QuadratureConfig& cfg);

enum class TailBend { left, right, none };

// (1/2pi i) \int f(s) ds along the vertical line Re s = c, with the two tails
// beyond |Im s| = H bent 45 degrees toward the decaying half-plane (`bend`);
// with TailBend::none the integral is plainly truncated at |Im s| = H.
// The integrand must be analytic in the swept regions {|Im s| >= H} on the
// bend side, which holds for every use in this library (all poles sit on the
// real axis or the critical line).
QuadResult line_integral_with_tails(const ComplexToComplex& f, double c,
                                    double H, TailBend bend,
                                    const QuadratureConfig& cfg,
                                    int line_presplit = 8);

}  // namespace goldbach::quad
