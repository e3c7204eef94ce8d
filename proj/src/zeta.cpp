#include "goldbach/zeta.hpp"

#include <cmath>
#include <mutex>
#include <vector>

#include "goldbach/errors.hpp"
#include "goldbach/special_functions.hpp"

namespace goldbach::zt {

namespace {

// (2k)! / B_{2k}, k = 1..12 (classical Euler-Maclaurin table).
constexpr double kEmCoeff[] = {
    12.0,
    -720.0,
    30240.0,
    -1209600.0,
    47900160.0,
    -1.8924375803183791606e9,
    7.47242496e10,
    -2.950130727918164224e12,
    1.1646782814350067249e14,
    -4.5979787224074726105e15,
    1.8152105401943546773e17,
    -7.1661652561756670113e18,
};

}  // namespace

ZetaPair zeta_em(cd s) {
  if (std::abs(s - 1.0) < 1e-12) throw PoleError("zeta_em: pole at s=1");
  if (s.real() <= -1.0)
    throw UnsupportedDomain("zeta_em: Re s <= -1 not supported");

  long nc = std::max<long>(16, static_cast<long>(std::ceil(1.3 * std::abs(s.imag()))) + 8);
  cd zeta = 0.0, zp = 0.0;
  for (long n = 1; n < nc; ++n) {
    double ln = std::log(static_cast<double>(n));
    cd npow = std::exp(-s * ln);
    zeta += npow;
    zp -= ln * npow;
  }
  double lnc = std::log(static_cast<double>(nc));
  cd cpow = std::exp(-s * lnc);  // nc^{-s}

  cd t1 = cpow * static_cast<double>(nc) / (s - 1.0);
  zeta += t1;
  zp += t1 * (-lnc) - cpow * static_cast<double>(nc) / ((s - 1.0) * (s - 1.0));

  zeta += 0.5 * cpow;
  zp += -0.5 * lnc * cpow;

  // Correction terms: B_{2j}/(2j)! * s(s+1)...(s+2j-2) * nc^{-s-2j+1}
  cd poch = s;             // s ... (s+2j-2), built incrementally
  cd poch_dlog = 1.0 / s;  // sum 1/(s+i)
  double ncinv = 1.0 / static_cast<double>(nc);
  cd tail_pow = cpow * ncinv;  // nc^{-s-1} initially
  double scale = std::max(1.0, std::abs(zeta));
  for (int j = 1; j <= 12; ++j) {
    cd term = poch * tail_pow / kEmCoeff[j - 1];
    zeta += term;
    zp += term * (poch_dlog - lnc);
    if (std::abs(term) < 1e-17 * scale) break;
    poch *= (s + static_cast<double>(2 * j - 1)) * (s + static_cast<double>(2 * j));
    poch_dlog += 1.0 / (s + static_cast<double>(2 * j - 1)) +
                 1.0 / (s + static_cast<double>(2 * j));
    tail_pow *= ncinv * ncinv;
  }
  return {zeta, zp};
}

cd zeta_logderiv_em(cd s) {
  ZetaPair zp = zeta_em(s);
  return zp.zeta_prime / zp.zeta;
}

cd g_over_g(cd s) {
  // Near an odd negative integer both psi and the tangent term have simple
  // poles that cancel; regroup each against 1/(s+n) before combining.
  double re = s.real();
  long m = static_cast<long>(std::llround(re));
  if (m <= -1 && (m % 2 != 0) && std::abs(s - static_cast<double>(m)) < 0.25) {
    long n = -m;  // positive odd
    cd x = s - static_cast<double>(m);
    // psi(s) + 1/x = psi(1+x) - sum_{j=0}^{n-1} 1/(m+j+x)
    cd acc = sf::digamma(1.0 + x);
    for (long j = 0; j < n; ++j) acc -= 1.0 / (static_cast<double>(m + j) + x);
    // -(pi/2) tan(pi s/2) - 1/x = (pi/2) cot(pi x/2) - 1/x
    return acc + half_pi_cot_half_pi_minus_inv(x);
  }
  return sf::digamma(s) - 0.5 * M_PI * tan_half_pi(s);
}

cd reflection_G(cd s) { return std::log(2.0 * M_PI) - g_over_g(s); }

cd zeta_logderiv(cd s, double pole_guard) {
  if (s == cd(0.0)) return sf::constants().zeta_logderiv_at_zero;
  double u = s.real();
  if (u >= 1.25) return zeta_logderiv_em(s);
  if (u > -0.25)
    throw UnsupportedDomain("zeta_logderiv: strip -0.25 < Re s < 1.25 unsupported");
  // Trivial zeros at even negative integers are genuine poles of zeta'/zeta.
  long m = static_cast<long>(std::llround(u));
  if (m <= -2 && (m % 2 == 0) &&
      std::abs(s - static_cast<double>(m)) < pole_guard)
    throw PoleProximity("zeta_logderiv: within pole guard of a trivial zero");
  return reflection_G(s) - zeta_logderiv_em(1.0 - s);
}

double lambda_series_value(int m) {
  if (m < 2) throw std::invalid_argument("lambda_series_value: m >= 2 required");
  static std::vector<double> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if (m >= static_cast<int>(cache.size())) {
    size_t old = cache.size();
    cache.resize(m + 1, 0.0);
    for (size_t j = std::max<size_t>(2, old); j <= static_cast<size_t>(m); ++j) {
      ZetaPair zp = zeta_em(cd(static_cast<double>(j), 0.0));
      cache[j] = -(zp.zeta_prime / zp.zeta).real();
    }
  }
  return cache[m];
}

DirichletPartial lambda_dirichlet_partial(cd s, long cutoff) {
  double sigma = s.real();
  if (sigma <= 1.0)
    throw UnsupportedDomain("lambda_dirichlet_partial: needs Re s > 1");
  cd acc = 0.0;
  std::vector<bool> composite(cutoff + 1, false);
  for (long p = 2; p <= cutoff; ++p) {
    if (composite[p]) continue;
    for (long q = 2 * p; q <= cutoff; q += p) composite[q] = true;
    double lp = std::log(static_cast<double>(p));
    for (double pk = static_cast<double>(p); pk <= static_cast<double>(cutoff);
         pk *= static_cast<double>(p))
      acc += lp * std::exp(-s * std::log(pk));
  }
  // sum_{n>c} Lambda(n) n^{-sigma} <= sum_{n>c} log(n) n^{-sigma}
  //   <= integral_c^inf log(t) t^{-sigma} dt + log(c+1) (c+1)^{-sigma}
  double c = static_cast<double>(cutoff);
  double tail = std::pow(c, 1.0 - sigma) *
                    (std::log(c) / (sigma - 1.0) + 1.0 / ((sigma - 1.0) * (sigma - 1.0))) +
                std::log(c + 1.0) * std::pow(c + 1.0, -sigma);
  return {acc, tail};
}

}  // namespace goldbach::zt

namespace goldbach::sf {

const Constants& constants() {
  static const Constants c = [] {
    Constants k{};
    k.euler_gamma = 0.5772156649015328606;
    k.log_two_pi = std::log(2.0 * M_PI);
    // The reflection limit at s=0 is exactly log(2 pi): the 1/s + gamma parts
    // of G(s) and zeta'/zeta(1-s) cancel identically.
    k.zeta_logderiv_at_zero = k.log_two_pi;
    k.zeta_logderiv_at_minus_one =
        (zt::reflection_G(cd(-1.0, 0.0)) - zt::zeta_logderiv_em(cd(2.0, 0.0))).real();
    return k;
  }();
  return c;
}

}  // namespace goldbach::sf
