#pragma once

#include "goldbach/complex_utils.hpp"
#include "goldbach/quadrature.hpp"

namespace goldbach::mellin {

struct KernelResult {
  cd value;
  double error_estimate;
};

// (1/2pi i) int over Re s = c of Gamma(s) x^{-s} / Gamma(s+z+1) ds, the
// kernel that reproduces (1-x)^z / Gamma(z+1) for 0 < x < 1 and 0 for x >= 1.
// The line is truncated at |Im s| = height; with complete_tail the truncated
// tails are carried along 45-degree bends into the half-plane where x^{-s}
// (or, at x = 1, the Gamma ratio) decays, which is what makes tight
// tolerances reachable at moderate heights. complete_tail=false gives the
// plainly truncated integral whose error shrinks as the height grows.
// Requires x > 0, Re z > 0, c > 0.
KernelResult mellin_kernel_numeric(double x, cd z, double c, double height,
                                   const quad::QuadratureConfig& cfg = {},
                                   bool complete_tail = true);

// Closed-form right-hand side (1-x)^z / Gamma(z+1) for x < 1, else 0.
cd mellin_kernel_closed(double x, cd z);

}  // namespace goldbach::mellin
