#include "goldbach/special_functions.hpp"

#include <cmath>

#include "goldbach/errors.hpp"

namespace goldbach::sf {

namespace {

// B_{2n} / (2n (2n-1)), the Stirling-series coefficients for log Gamma.
constexpr double kLogGammaStirling[] = {
    1.0 / 12.0,           -1.0 / 360.0,         1.0 / 1260.0,
    -1.0 / 1680.0,        1.0 / 1188.0,         -691.0 / 360360.0,
    1.0 / 156.0,          -3617.0 / 122400.0,   43867.0 / 244188.0,
    -174611.0 / 125400.0,
};

// B_{2n} / (2n), the Stirling-series coefficients for psi.
constexpr double kDigammaStirling[] = {
    1.0 / 12.0,        -1.0 / 120.0,      1.0 / 252.0,        -1.0 / 240.0,
    1.0 / 132.0,       -691.0 / 32760.0,  1.0 / 12.0,         -3617.0 / 8160.0,
    43867.0 / 14364.0, -174611.0 / 6600.0,
};

constexpr double kShiftThreshold = 14.0;

cd log_gamma_right(cd z) {
  // Re z > 0 assumed. Shift upward until the asymptotic series is accurate.
  cd shift = 0.0;
  while (z.real() < kShiftThreshold) {
    shift += std::log(z);
    z += 1.0;
  }
  cd lz = std::log(z);
  cd acc = (z - 0.5) * lz - z + 0.5 * std::log(2.0 * M_PI);
  cd zinv = 1.0 / z;
  cd zpow = zinv;
  cd z2 = zinv * zinv;
  for (double c : kLogGammaStirling) {
    acc += c * zpow;
    zpow *= z2;
  }
  return acc - shift;
}

}  // namespace

cd log_gamma(cd z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at nonpositive integer");
  if (z.real() >= 0.5) return log_gamma_right(z);
  // Reflection: Gamma(z) Gamma(1-z) = pi / sin(pi z).
  return std::log(M_PI) - log_sin_pi(z) - log_gamma_right(1.0 - z);
}

cd gamma(cd z) {
  if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
  return std::exp(log_gamma(z));
}

cd recip_gamma(cd z) {
  if (is_nonpositive_integer(z)) return 0.0;
  if (z.real() >= 0.5) return std::exp(-log_gamma_right(z));
  // 1/Gamma(z) = sin(pi z) Gamma(1-z) / pi
  return std::exp(log_sin_pi(z) + log_gamma_right(1.0 - z) - std::log(M_PI));
}

cd recip_gamma_over_linear(cd y, int m) {
  cd delta = y + static_cast<double>(m);
  if (std::abs(delta) > 0.125) return recip_gamma(y) / delta;
  // 1/Gamma(y) = (-1)^m sin(pi delta) Gamma(1-y) / pi, so dividing by delta
  // leaves the stable sinc factor.
  double sign = (m % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(log_gamma_right(1.0 - y)) * sinc_pi(delta);
}

cd recip_gamma_derivative(cd z) {
  if (z.real() >= 0.5) return -digamma(z) * std::exp(-log_gamma_right(z));
  // d/dz [sin(pi z) Gamma(1-z) / pi]
  cd g = std::exp(log_gamma_right(1.0 - z));
  return g * (std::cos(M_PI * z) - std::sin(M_PI * z) * digamma(1.0 - z) / M_PI);
}

cd digamma(cd z) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at nonpositive integer");
  if (z.real() < 0.5) return digamma(1.0 - z) - M_PI * cot_pi(z);
  cd shift = 0.0;
  while (z.real() < kShiftThreshold) {
    shift += 1.0 / z;
    z += 1.0;
  }
  cd zinv = 1.0 / z;
  cd acc = std::log(z) - 0.5 * zinv;
  cd z2 = zinv * zinv;
  cd zpow = z2;
  for (double c : kDigammaStirling) {
    acc -= c * zpow;
    zpow *= z2;
  }
  return acc - shift;
}

cd gamma_ratio(cd a, cd b) {
  if (is_nonpositive_integer(a) || is_nonpositive_integer(b))
    throw PoleError("gamma_ratio: pole argument");
  return std::exp(log_gamma(a) - log_gamma(b));
}

}  // namespace goldbach::sf
