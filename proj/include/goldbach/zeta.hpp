#pragma once

#include "goldbach/complex_utils.hpp"

namespace goldbach::zt {

struct ZetaPair {
  cd zeta;
  cd zeta_prime;
};

// Euler-Maclaurin evaluation of zeta(s) and zeta'(s). Valid for Re s > -1
// away from s = 1; accuracy ~1e-14 relative for the ordinate range this
// library touches (|Im s| up to a few thousand).
ZetaPair zeta_em(cd s);

// zeta'/zeta(s) by Euler-Maclaurin, for Re s >= 1.05 (zero-free by a wide
// margin, so the quotient is safe).
cd zeta_logderiv_em(cd s);

// g'/g(s) for g(s) = Gamma(s) cos(pi s / 2), evaluated in the closed form
// psi(s) - (pi/2) tan(pi s / 2) with the pole cancellation at odd negative
// integers carried out analytically (both pieces have simple poles there
// that cancel; the combined function is regular).
cd g_over_g(cd s);

// G(s) = log(2 pi) - g'/g(s), the functional-equation factor in
// zeta'/zeta(s) = G(s) - zeta'/zeta(1-s).
cd reflection_G(cd s);

// zeta'/zeta(s) on the supported domain:
//   Re s >= 1.25          : Euler-Maclaurin quotient
//   Re s <= -0.25         : reflection G(s) - zeta_logderiv(1-s)
//   s == 0                : stored constant (log 2 pi)
// Elsewhere throws UnsupportedDomain. Within `pole_guard` of a trivial zero
// (even negative integers) throws PoleProximity.
cd zeta_logderiv(cd s, double pole_guard = 1e-6);

// S_m = sum_n Lambda(n) n^{-m} = -zeta'/zeta(m) for integer m >= 2; cached.
double lambda_series_value(int m);

// Direct truncated Dirichlet sum sum_{n<=cutoff} Lambda(n) n^{-s} together
// with a rigorous bound on the discarded tail (test oracle; converges far
// too slowly for production use at small Re s).
struct DirichletPartial {
  cd value;
  double tail_bound;
};
DirichletPartial lambda_dirichlet_partial(cd s, long cutoff);

}  // namespace goldbach::zt
