#pragma once

#include "goldbach/complex_utils.hpp"

namespace goldbach::sf {

// Principal-branch log Gamma on the right half-plane (Stirling series with
// argument shift). For Re z < 0.5 the value is obtained by reflection and is
// exp-correct: exp(log_gamma(z)) == Gamma(z), though the imaginary part may
// differ from the continuous branch by a multiple of 2*pi there.
// Throws PoleError at nonpositive integers.
cd log_gamma(cd z);

cd gamma(cd z);

// 1/Gamma(z). Entire; returns exactly 0 at z = 0, -1, -2, ...
cd recip_gamma(cd z);

// d/dz (1/Gamma(z)), finite everywhere (equals (-1)^n n! at z = -n).
cd recip_gamma_derivative(cd z);

// (1/Gamma(y)) / (y + m) for integer m >= 0, stable through the removable
// point y = -m where it tends to (-1)^m m!.
cd recip_gamma_over_linear(cd y, int m);

// psi(z) = Gamma'/Gamma(z). Throws PoleError at nonpositive integers.
cd digamma(cd z);

// Gamma(a)/Gamma(b) via exp(log_gamma(a) - log_gamma(b)); no intermediate
// overflow for critical-line arguments with ordinates up to ~1e4.
cd gamma_ratio(cd a, cd b);

struct Constants {
  double euler_gamma;
  double log_two_pi;
  double zeta_logderiv_at_zero;       // zeta'/zeta(0)
  double zeta_logderiv_at_minus_one;  // zeta'/zeta(-1)
};

// Memoized. zeta_logderiv_at_zero is the exact reflection-formula limit
// log(2*pi); zeta_logderiv_at_minus_one is computed once through the
// functional equation. The unit tests re-derive both independently.
const Constants& constants();

}  // namespace goldbach::sf
