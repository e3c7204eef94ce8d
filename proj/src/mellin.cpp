#include "goldbach/mellin.hpp"

#include <cmath>
#include <stdexcept>

#include "goldbach/errors.hpp"
#include "goldbach/special_functions.hpp"

namespace goldbach::mellin {

KernelResult mellin_kernel_numeric(double x, cd z, double c, double height,
                                   const quad::QuadratureConfig& cfg,
                                   bool complete_tail) {
  if (!(x > 0.0)) throw std::invalid_argument("mellin_kernel_numeric: x > 0 required");
  if (!(z.real() > 0.0))
    throw std::invalid_argument("mellin_kernel_numeric: Re z > 0 required");
  if (!(c > 0.0)) throw std::invalid_argument("mellin_kernel_numeric: c > 0 required");
  double lx = std::log(x);
  auto f = [&](cd s) { return std::exp(sf::log_gamma(s) - sf::log_gamma(s + z + 1.0) - s * lx); };
  quad::TailBend bend = quad::TailBend::none;
  if (complete_tail) bend = (x < 1.0) ? quad::TailBend::left : quad::TailBend::right;
  int presplit = std::clamp(static_cast<int>(height * (std::abs(lx) + 0.5) / M_PI) + 4, 4, 4096);
  quad::QuadResult r =
      quad::line_integral_with_tails(f, c, height, bend, cfg, presplit);
  if (!r.converged)
    throw ToleranceNotMet("mellin_kernel_numeric did not converge", r.error);
  double err = r.error;
  if (!complete_tail) {
    // truncation bound ~ envelope of |Gamma(s)/Gamma(s+z+1)| x^{-c} past H
    err += std::pow(height, -z.real()) * std::pow(x, -c) / std::max(0.5, z.real());
  }
  return {r.value, err};
}

cd mellin_kernel_closed(double x, cd z) {
  if (x >= 1.0) return 0.0;
  return std::exp(z * std::log1p(-x)) * sf::recip_gamma(z + 1.0);
}

}  // namespace goldbach::mellin
