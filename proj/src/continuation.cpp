#include "goldbach/continuation.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "goldbach/errors.hpp"
#include "goldbach/special_functions.hpp"
#include "goldbach/zeta.hpp"

namespace goldbach::cont {

namespace {

constexpr long kPrimeTableLimit = 200000;

// Nonzero von Mangoldt entries (n, Lambda(n)) up to kPrimeTableLimit.
const std::vector<std::pair<long, double>>& lambda_entries() {
  static const std::vector<std::pair<long, double>> entries = [] {
    arith::LambdaTable t = arith::sieve_lambda(kPrimeTableLimit);
    std::vector<std::pair<long, double>> e;
    e.reserve(20000);
    for (long n = 2; n <= t.limit; ++n)
      if (t.values[n] != 0.0) e.emplace_back(n, t.values[n]);
    return e;
  }();
  return entries;
}

// sum_n Lambda(n)/n ((1-1/(nN))^w - 1): direct head over n <= n0, then the
// binomial expansion of the tail in powers of 1/(nN), whose coefficients are
// complete Dirichlet values S_{j+1} minus the head partial sums. With
// n0 >= 2|w|/N the expansion terms decay at least factorially.
cd tn_prime_sum(cd w, long N, double tol) {
  const auto& entries = lambda_entries();
  long n0 = std::clamp<long>(static_cast<long>(std::ceil(2.0 * std::abs(w) / N)) + 8,
                             32, kPrimeTableLimit);
  CompensatedSum head;
  size_t idx = 0;
  for (; idx < entries.size() && entries[idx].first <= n0; ++idx) {
    auto [n, lam] = entries[idx];
    double l = std::log1p(-1.0 / (static_cast<double>(n) * N));
    head.add(lam / n * expm1c(w * l));
  }
  long head_count = static_cast<long>(idx);

  // partial sums P_m = sum_{n<=n0} Lambda(n) n^{-m}, advanced one power of
  // 1/n per series term
  std::vector<double> inv_pow(head_count), lam_val(head_count);
  for (long i = 0; i < head_count; ++i) {
    inv_pow[i] = 1.0 / static_cast<double>(entries[i].first);
    lam_val[i] = entries[i].second;
  }
  std::vector<double> cur(head_count);
  for (long i = 0; i < head_count; ++i) cur[i] = lam_val[i] * inv_pow[i] * inv_pow[i];

  cd tail = 0.0;
  cd binom = 1.0;
  double ninv = -1.0 / static_cast<double>(N);
  cd npow = 1.0;
  int quiet = 0;
  for (int j = 1; j <= 64; ++j) {
    binom *= (w - static_cast<double>(j - 1)) / static_cast<double>(j);
    npow *= ninv;
    double partial = 0.0;
    for (long i = 0; i < head_count; ++i) partial += cur[i];
    double D = zt::lambda_series_value(j + 1) - partial;
    cd term = binom * npow * D;
    tail += term;
    if (std::abs(term) < 0.125 * tol) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    for (long i = 0; i < head_count; ++i) cur[i] *= inv_pow[i];
  }
  return head.value() + tail;
}

int presplit_for_phase(double phase_range) {
  return std::clamp(static_cast<int>(phase_range / M_PI) + 4, 4, 2048);
}

}  // namespace

std::vector<double> h_coefficients(long N, int count) {
  if (N < 4) throw std::invalid_argument("h_coefficients: N >= 4 required");
  if (count < 1) throw std::invalid_argument("h_coefficients: count >= 1 required");
  // Partial fractions of 1/(y (Ny-1)(Ny+1)) at y = 1-z give three geometric
  // series in z with ratios 1, N/(N-1), N/(N+1).
  // a_N(m) = -1 + (1/2)(N/(N-1))^{m+1} + (1/2)(N/(N+1))^{m+1}
  std::vector<double> a(count);
  double rm = static_cast<double>(N) / (N - 1);
  double rp = static_cast<double>(N) / (N + 1);
  double pm = rm, pp = rp;
  for (int m = 0; m < count; ++m) {
    a[m] = -1.0 + 0.5 * pm + 0.5 * pp;
    pm *= rm;
    pp *= rp;
  }
  return a;
}

cd i_brace(cd w, long N, const QuadratureConfig& cfg) {
  cd wp1 = w + 1.0;
  cd acc = 0.0;
  double half = 0.5;
  double pow_half = 1.0;  // 2^{-m}
  double absw = std::abs(wp1);
  std::vector<double> a = h_coefficients(N, 8);
  int m = 0;
  for (;; ++m) {
    if (m >= static_cast<int>(a.size())) {
      int grow = static_cast<int>(a.size()) * 2;
      a = h_coefficients(N, grow);
    }
    acc += a[m] * pow_half / (wp1 + static_cast<double>(m));
    pow_half *= half;
    double dist = std::max(0.5, static_cast<double>(m + 1) - absw);
    double majorant = 40.0 * std::pow(0.75, m + 1) / dist;
    if (majorant < cfg.series_tail_tol && m >= 4) break;
    if (m > 4000) throw ToleranceNotMet("i_brace series did not converge", majorant);
  }
  return std::exp(-wp1 * std::log(2.0)) * acc;
}

cd i_series(cd w, long N, const QuadratureConfig& cfg) {
  cd wp1 = w + 1.0;
  // Locate a possible cancellation point w+1 = -m*.
  long mstar = std::llround(-wp1.real());
  bool near_pole = false;
  if (mstar >= 0 && std::abs(wp1 + static_cast<double>(mstar)) < 0.125)
    near_pole = true;
  if (!near_pole) return sf::recip_gamma(wp1) * i_brace(w, N, cfg);

  // Split off the m* term: its simple pole cancels against the zero of
  // 1/Gamma(w+1); the quotient is evaluated by the stable sinc form.
  std::vector<double> a = h_coefficients(N, std::max<int>(64, mstar + 32));
  cd rest = 0.0;
  double pow_half = 1.0;
  for (int m = 0;; ++m) {
    if (m >= static_cast<int>(a.size())) a = h_coefficients(N, 2 * a.size());
    if (m != mstar) rest += a[m] * pow_half / (wp1 + static_cast<double>(m));
    pow_half *= 0.5;
    double dist = std::max(0.5, static_cast<double>(m + 1) - std::abs(wp1));
    if (40.0 * std::pow(0.75, m + 1) / dist < cfg.series_tail_tol && m >= mstar + 4)
      break;
  }
  cd pole_part = a[mstar] * std::pow(0.5, mstar) *
                 sf::recip_gamma_over_linear(wp1, static_cast<int>(mstar));
  return std::exp(-wp1 * std::log(2.0)) *
         (sf::recip_gamma(wp1) * rest + pole_part);
}

TnBraces tn_braces(cd w, long N, const QuadratureConfig& cfg) {
  if (N < 4) throw std::invalid_argument("t_closed: N >= 4 required");
  if (!std::isfinite(w.real()) || !std::isfinite(w.imag()))
    throw std::invalid_argument("t_closed: w must be finite");
  double dN = static_cast<double>(N);
  double vim = std::abs(w.imag());
  double l1N = std::log1p(-1.0 / dN);  // log(1-1/N)
  cd on_w = std::exp(w * l1N);

  TnBraces b;
  b.prime_sum = tn_prime_sum(w, N, cfg.series_tail_tol);

  b.unit_interval = quad::integrate_or_throw(
      [&](double xi) { return expm1c(w * std::log1p(-xi / dN)) / xi; }, 0.0,
      1.0, cfg, presplit_for_phase(vim / dN));

  b.log2pi_gamma = expm1c(w * l1N) *
                   (std::log(2.0 * M_PI) + sf::constants().euler_gamma);
  b.half_log = 0.5 * on_w * std::log1p(-1.0 / (dN * dN));

  // [2,N] piece; the integrand is regular at xi = N.
  cd m2N = quad::integrate_or_throw(
      [&](double xi) {
        double delta = (xi - dN) / (xi * (dN - 1.0));
        return on_w * expm1c(w * std::log1p(delta)) * xi /
               ((dN - xi) * (dN + xi));
      },
      2.0, dN, cfg, presplit_for_phase(vim * 0.7));
  // [1,2] part carrying (1-1/N)^w: exact antiderivative.
  cd m12 = on_w * 0.5 * std::log((dN * dN - 1.0) / (dN * dN - 4.0));
  b.middle_regular = m2N + m12;

  b.i_brace = i_brace(w, N, cfg);

  b.outer = quad::integrate_or_throw(
      [&](double eta) {
        double m = std::log1p((1.0 - eta) / (dN - 1.0));
        return -on_w * expm1c(w * m) / (1.0 - eta * eta);
      },
      0.0, 1.0, cfg, presplit_for_phase(vim / (dN - 1.0)));
  return b;
}

TnBreakdown t_closed(cd w, long N, const QuadratureConfig& cfg) {
  TnBraces b = tn_braces(w, N, cfg);
  TnBreakdown out;
  out.prime_sum = b.prime_sum;
  out.unit_interval_integral = b.unit_interval;
  out.log2pi_gamma_term = b.log2pi_gamma;
  out.half_log_term = b.half_log;
  out.middle_regular = b.middle_regular;
  out.middle_integral = b.middle_regular + b.i_brace;
  out.outer_integral = b.outer;
  out.prefactor = sf::recip_gamma(w + 1.0);
  out.series_part = i_series(w, N, cfg);
  out.braces_no_series = b.no_series();
  out.total = out.prefactor * out.braces_no_series - out.series_part;
  return out;
}

cd t_contour_oracle(cd w, long N, const QuadratureConfig& cfg) {
  if (!(w.real() > 0.0))
    throw UnsupportedDomain("t_contour_oracle: requires Re w > 0");
  if (N < 4) throw std::invalid_argument("t_contour_oracle: N >= 4 required");
  double lnN = std::log(static_cast<double>(N));
  auto integrand = [&](cd s) -> cd {
    cd zl = zt::reflection_G(s) - zt::zeta_logderiv_em(1.0 - s);
    return zl * sf::gamma_ratio(s, s + w + 1.0) * std::exp(s * lnN);
  };
  double H = std::max(50.0, cfg.contour_height);
  int presplit = presplit_for_phase(2.0 * H * lnN);
  quad::QuadResult r = quad::line_integral_with_tails(
      integrand, -0.5, H, quad::TailBend::left, cfg, presplit);
  if (!r.converged)
    throw ToleranceNotMet("t_contour_oracle quadrature did not converge", r.error);
  return -r.value;
}

ZeroSumResult z_zero_sum(cd w, long N, const zeros::ZeroSet& zs, double T) {
  if (!(w.real() > 0.0))
    throw UnsupportedDomain("z_zero_sum: requires Re w > 0");
  std::vector<zeros::Rho> rhos = zeros::zeros_up_to(zs, T);
  double lnN = std::log(static_cast<double>(N));
  CompensatedSum acc;
  for (size_t i = 0; i + 1 < rhos.size(); i += 2) {
    cd rho = rhos[i].value();
    cd rho_bar = rhos[i + 1].value();
    cd pair = sf::gamma_ratio(rho, rho + w + 1.0) * std::exp(rho * lnN) +
              sf::gamma_ratio(rho_bar, rho_bar + w + 1.0) * std::exp(rho_bar * lnN);
    acc.add(pair);
  }
  double u = w.real();
  double tail = 3.0 * std::sqrt(static_cast<double>(N)) * std::pow(T, -u) *
                std::log(std::max(T, 2.0)) / (M_PI * u);
  return {acc.value(), tail};
}

cd lambda_weighted_sum(cd w, long N, const arith::LambdaTable& lambda) {
  if (N > lambda.limit)
    throw std::invalid_argument("lambda_weighted_sum: N exceeds lambda table");
  double dN = static_cast<double>(N);
  CompensatedSum acc;
  for (long n = 2; n < N; ++n) {
    double lam = lambda.values[n];
    if (lam == 0.0) continue;
    acc.add(lam * std::exp(w * std::log1p(-n / dN)));
  }
  return acc.value();
}

cd z_continued(cd w, long N, const arith::LambdaTable& lambda,
               const QuadratureConfig& cfg) {
  if (N < 4) throw std::invalid_argument("z_continued: N >= 4 required");
  if (N > lambda.limit)
    throw std::invalid_argument("z_continued: N exceeds lambda table");
  TnBreakdown t = t_closed(w, N, cfg);
  cd rg1 = sf::recip_gamma(w + 1.0);
  return static_cast<double>(N) * sf::recip_gamma(w + 2.0) -
         sf::constants().zeta_logderiv_at_zero * rg1 + t.total -
         rg1 * lambda_weighted_sum(w, N, lambda);
}

}  // namespace goldbach::cont
