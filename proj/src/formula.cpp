#include "goldbach/formula.hpp"

#include <algorithm>
#include <cmath>

#include "goldbach/errors.hpp"
#include "goldbach/parallel.hpp"
#include "goldbach/special_functions.hpp"
#include "goldbach/zeta.hpp"

namespace goldbach::formula {

namespace {

// zeta'/zeta through the functional equation, composed directly (the public
// entry point's domain guard is not needed on residue contours, which stay
// a fixed distance from the real axis poles).
cd zl_reflected(cd w) {
  return zt::reflection_G(w) - zt::zeta_logderiv_em(1.0 - w);
}

double real_checked(cd v, double& max_residual) {
  double res = std::abs(v.imag()) / (1.0 + std::abs(v.real()));
  max_residual = std::max(max_residual, res);
  return v.real();
}

double factorial(int n) { return std::tgamma(static_cast<double>(n) + 1.0); }

// Geometric-extrapolation tail estimate from the two terms past the cutoff.
double tail_from_terms(double t1, double t2) {
  double a1 = std::abs(t1), a2 = std::abs(t2);
  double q = (a1 > 0.0) ? std::min(0.9, a2 / a1) : 0.0;
  return a1 + a2 * (1.0 + q / (1.0 - q));
}

}  // namespace

double LaurentData::A_nu(double N) const {
  if (even) return a_nu + residue_of_zeta_term * (b_nu_digamma + std::log(N));
  return -zeta_logderiv_value;
}

LaurentData laurent_data(int nu, const QuadratureConfig& cfg) {
  if (nu < 1) throw std::invalid_argument("laurent_data: nu >= 1 required");
  LaurentData d;
  d.nu = nu;
  d.even = (nu % 2 == 0);
  if (!d.even) {
    d.zeta_logderiv_value =
        zt::zeta_logderiv(cd(-static_cast<double>(nu), 0.0)).real();
    return d;
  }
  cd center(-static_cast<double>(nu), 0.0);
  auto f = [&](cd w) { return -zl_reflected(w); };
  quad::QuadResult mr = quad::circle_moment(f, center, 0.5, 1, cfg);
  quad::QuadResult ma = quad::circle_moment(f, center, 0.5, 0, cfg);
  if (!mr.converged || !ma.converged)
    throw ToleranceNotMet("laurent_data contour did not converge",
                          std::max(mr.error, ma.error));
  d.residue_of_zeta_term = (0.5 * mr.value).real();
  d.a_nu = ma.value.real();
  d.b_nu_digamma = sf::digamma(cd(nu + 1.0, 0.0)).real();
  // Hadamard-product route: the tail of the defining series telescopes to a
  // finite harmonic block, so the rearrangement below is exact.
  long c = nu + 2000;
  double b = -sf::constants().euler_gamma + 2.0 / nu;
  for (long n = 1; n <= c; ++n) {
    if (n == nu) continue;
    b += 1.0 / static_cast<double>(n) - 1.0 / static_cast<double>(n - nu);
  }
  for (long m = c - nu + 1; m <= c; ++m) b -= 1.0 / static_cast<double>(m);
  d.b_nu_series = b;
  return d;
}

double residue_numeric(int nu, const std::function<cd(cd)>& F,
                       const QuadratureConfig& cfg, double radius) {
  if (nu < 1) throw std::invalid_argument("residue_numeric: nu >= 1 required");
  radius = std::min(radius, 0.25);
  cd center(-static_cast<double>(nu), 0.0);
  auto integrand = [&](cd w) { return zl_reflected(w) * sf::gamma(w) * F(w); };
  cd res = quad::contour_integral_circle(integrand, center, radius, cfg);
  return -res.real();
}

SigmaSums sigma_sums(long N, double k, int M, const arith::LambdaTable& lambda,
                     const QuadratureConfig& cfg) {
  if (M < 2) throw std::invalid_argument("sigma_sums: M >= 2 required");
  if (!(k > 0.0)) throw std::invalid_argument("sigma_sums: k > 0 required");
  double lnN = std::log(static_cast<double>(N));

  auto F_gamma = [&](double kk) {
    return [lnN, kk](cd w) { return std::exp(w * lnN) * sf::recip_gamma(w + kk + 1.0); };
  };
  auto F_z = [&, k](cd w) {
    return cont::z_continued(w + k, N, lambda, cfg) * std::exp(w * lnN);
  };
  auto F_t = [&, k](cd w) {
    return cont::t_closed(w + k, N, cfg).total * std::exp(w * lnN);
  };

  SigmaSums out;
  std::vector<LaurentData> laur;
  laur.reserve(M + 2);
  for (int nu = 1; nu <= M + 2; ++nu) laur.push_back(laurent_data(nu, cfg));

  // closed-form term of the residue series at nu, from Laurent data and the
  // value/derivative of F
  auto closed_term = [&](const LaurentData& d, cd Fval, cd Fprime) {
    int nu = d.nu;
    if (!d.even) return d.zeta_logderiv_value * Fval.real() / factorial(nu);
    double r = d.residue_of_zeta_term;
    return (r * Fprime.real() + (r * d.b_nu_digamma + d.a_nu) * Fval.real()) /
           factorial(nu);
  };

  auto gamma_pair = [&](double kk, int nu, cd& Fval, cd& Fprime) {
    double nN = std::exp(-nu * lnN);
    cd y(kk + 1.0 - nu, 0.0);
    Fval = nN * sf::recip_gamma(y);
    Fprime = nN * (lnN * sf::recip_gamma(y) + sf::recip_gamma_derivative(y));
  };

  std::vector<double> cg_k, cg_k1, cz, ct;
  for (int nu = 1; nu <= M + 2; ++nu) {
    const LaurentData& d = laur[nu - 1];
    cd Fv, Fp;
    gamma_pair(k, nu, Fv, Fp);
    cg_k.push_back(closed_term(d, Fv, Fp));
    gamma_pair(k + 1.0, nu, Fv, Fp);
    cg_k1.push_back(closed_term(d, Fv, Fp));

    double nN = std::exp(-nu * lnN);
    cd wz(k - nu, 0.0);
    cd Zv = cont::z_continued(wz, N, lambda, cfg);
    cd Zp = d.even ? quad::cauchy_derivative(
                         [&](cd w) { return cont::z_continued(w, N, lambda, cfg); },
                         wz, 0.25, 1, cfg)
                   : cd(0.0);
    cz.push_back(closed_term(d, Zv * nN, (Zp + lnN * Zv) * nN));

    cd Tv = cont::t_closed(wz, N, cfg).total;
    cd Tp = d.even ? quad::cauchy_derivative(
                         [&](cd w) { return cont::t_closed(w, N, cfg).total; },
                         wz, 0.25, 1, cfg)
                   : cd(0.0);
    ct.push_back(closed_term(d, Tv * nN, (Tp + lnN * Tv) * nN));
  }

  for (int nu = 1; nu <= M; ++nu) {
    out.gamma_k_terms.push_back(residue_numeric(nu, F_gamma(k), cfg));
    out.gamma_kplus1_terms.push_back(residue_numeric(nu, F_gamma(k + 1.0), cfg));
    out.z_terms.push_back(residue_numeric(nu, F_z, cfg));
    out.t_terms.push_back(residue_numeric(nu, F_t, cfg));
    out.gamma_k_closed.push_back(cg_k[nu - 1]);
    out.gamma_kplus1_closed.push_back(cg_k1[nu - 1]);
    out.z_closed.push_back(cz[nu - 1]);
    out.t_closed_terms.push_back(ct[nu - 1]);
    out.sigma_gamma_k += out.gamma_k_terms.back();
    out.sigma_gamma_kplus1 += out.gamma_kplus1_terms.back();
    out.sigma_z += out.z_terms.back();
    out.sigma_t += out.t_terms.back();
  }
  out.tail_gamma_k = tail_from_terms(cg_k[M], cg_k[M + 1]);
  out.tail_gamma_kplus1 = tail_from_terms(cg_k1[M], cg_k1[M + 1]);
  out.tail_z = tail_from_terms(cz[M], cz[M + 1]);
  out.tail_t = tail_from_terms(ct[M], ct[M + 1]);
  return out;
}

ZeroSumsZT zero_sums_zt(long N, double k, const zeros::ZeroSet& zs, double T,
                        const arith::LambdaTable& lambda,
                        const QuadratureConfig& cfg, int jobs) {
  std::vector<zeros::Rho> rhos = zeros::zeros_up_to(zs, T);
  long pairs = static_cast<long>(rhos.size() / 2);
  ZeroSumsZT out;
  double dN = static_cast<double>(N);
  double lnN = std::log(dN);
  double L0 = sf::constants().zeta_logderiv_at_zero;

  std::vector<double> zc(pairs), tc(pairs), ac(pairs), gammas(pairs);
  parallel_for_index(pairs, jobs, [&](long i) {
    cd rho = rhos[2 * i].value();
    gammas[i] = rho.imag();
    cd w = rho + k;
    cd braces = cont::tn_braces(w, N, cfg).total();
    cd lamw = cont::lambda_weighted_sum(w, N, lambda);
    cd Nrho = std::exp(rho * lnN);
    cd g1 = sf::gamma_ratio(rho, w + 1.0);
    cd g2 = sf::gamma_ratio(rho, w + 2.0);
    cd zterm = Nrho * (dN * g2 - L0 * g1 + g1 * (braces - lamw));
    cd tterm = Nrho * g1 * braces;
    cd aterm = dN * Nrho * g2;
    zc[i] = 2.0 * zterm.real();
    tc[i] = 2.0 * tterm.real();
    ac[i] = 2.0 * aterm.real();
  });

  CompensatedSum sz, st, sa;
  for (long i = 0; i < pairs; ++i) {
    sz.add(zc[i]);
    st.add(tc[i]);
    sa.add(ac[i]);
  }
  out.sum_z = sz.value().real();
  out.sum_t = st.value().real();
  out.sum_a = sa.value().real();

  // Tail estimate from the terms in the window [0.75 T, T], extrapolated with
  // the gamma^{-(k+1)} envelope (gamma^{-(k+2)} for the A-sum).
  double wz = 0.0, wt = 0.0, wa = 0.0;
  bool any = false;
  for (long i = 0; i < pairs; ++i) {
    if (gammas[i] >= 0.75 * T) {
      wz += std::abs(zc[i]);
      wt += std::abs(tc[i]);
      wa += std::abs(ac[i]);
      any = true;
    }
  }
  if (any) {
    double ratio1 = 1.0 / (std::pow(0.75, -k) - 1.0);
    double ratio2 = 1.0 / (std::pow(0.75, -(k + 1.0)) - 1.0);
    out.est_tail_z = 2.0 * wz * ratio1;
    out.est_tail_t = 2.0 * wt * ratio1;
    out.est_tail_a = 2.0 * wa * ratio2;
  } else {
    double fallback =
        3.0 * std::sqrt(dN) * std::pow(std::max(T, 2.0), -k) *
        std::log(std::max(T, 2.0)) / (M_PI * k);
    out.est_tail_z = out.est_tail_t = out.est_tail_a = fallback;
  }
  return out;
}

double a_k_sum(long N, double k, const zeros::ZeroSet& zs, double T) {
  if (!(k > 0.0)) throw std::invalid_argument("a_k_sum: k > 0 required");
  std::vector<zeros::Rho> rhos = zeros::zeros_up_to(zs, T);
  double lnN = std::log(static_cast<double>(N));
  CompensatedSum acc;
  for (size_t i = 0; i + 1 < rhos.size(); i += 2) {
    cd rho = rhos[i].value();
    cd term = sf::gamma_ratio(rho, rho + k + 2.0) * std::exp((rho + 1.0) * lnN);
    acc.add(2.0 * term.real());
  }
  return acc.value().real();
}

double b_k_sum(long N, double k, const zeros::ZeroSet& zs, double T,
               const arith::LambdaTable& lambda, const QuadratureConfig& cfg) {
  if (!(k > 0.0)) throw std::invalid_argument("b_k_sum: k > 0 required");
  return zero_sums_zt(N, k, zs, T, lambda, cfg, 1).sum_z;
}

FormulaBreakdown theorem_eval(long N, double k, const zeros::ZeroSet& zs,
                              const arith::LambdaTable& lambda,
                              const TruncationPolicy& policy) {
  if (N < 4) throw std::invalid_argument("theorem_eval: N >= 4 required");
  if (!(k > 0.0)) throw std::invalid_argument("theorem_eval: k > 0 required");
  if (N > lambda.limit)
    throw std::invalid_argument("theorem_eval: N exceeds lambda table");
  const QuadratureConfig& cfg = policy.quad;
  double dN = static_cast<double>(N);
  double L0 = sf::constants().zeta_logderiv_at_zero;

  FormulaBreakdown fb;
  cd zc_k1 = cont::z_continued(cd(k + 1.0, 0.0), N, lambda, cfg);
  cd zc_k = cont::z_continued(cd(k, 0.0), N, lambda, cfg);
  cd t_k1 = cont::t_closed(cd(k + 1.0, 0.0), N, cfg).total;
  cd t_k = cont::t_closed(cd(k, 0.0), N, cfg).total;

  ZeroSumsZT zt_sums =
      zero_sums_zt(N, k, zs, policy.zero_height_T, lambda, cfg, policy.jobs);
  SigmaSums sig = sigma_sums(N, k, policy.residue_cutoff_M, lambda, cfg);

  double& mir = fb.max_imag_residual;
  fb.term01_main = dN * dN / std::tgamma(k + 3.0);
  fb.term02_A = -2.0 * dN * real_checked(zc_k1, mir);
  fb.term03_B = zt_sums.sum_z;
  fb.term04 = -2.0 * L0 * dN / std::tgamma(k + 2.0);
  fb.term05 = 2.0 * L0 * real_checked(zc_k, mir);
  fb.term06 = dN * real_checked(t_k1, mir);
  fb.term07 = L0 * L0 / std::tgamma(k + 1.0);
  fb.term08 = -zt_sums.sum_t;
  fb.term09 = -L0 * real_checked(t_k, mir);
  fb.term10 = dN * sig.sigma_gamma_kplus1;
  fb.term11 = -sig.sigma_z;
  fb.term12 = -L0 * sig.sigma_gamma_k;
  fb.term13 = sig.sigma_t;
  fb.total = fb.recombine();
  fb.est_zero_tail = zt_sums.est_tail_z + zt_sums.est_tail_t;
  fb.est_residue_tail = dN * sig.tail_gamma_kplus1 + sig.tail_z +
                        std::abs(L0) * sig.tail_gamma_k + sig.tail_t;
  return fb;
}

namespace {

double gk_direct_from_lambda(long N, double k, const arith::LambdaTable& lambda) {
  arith::LambdaTable slice;
  slice.limit = N;
  slice.values.assign(lambda.values.begin(), lambda.values.begin() + N + 1);
  return arith::gk_direct(arith::representation_table(slice), N, k);
}

}  // namespace

TruncatedResult truncated_15(long N, double k, const zeros::ZeroSet& zs,
                             double T, const arith::LambdaTable& lambda,
                             const QuadratureConfig& cfg) {
  if (!(k > 0.5)) throw std::invalid_argument("truncated_15: k > 1/2 required");
  double dN = static_cast<double>(N);
  double L0 = sf::constants().zeta_logderiv_at_zero;
  ZeroSumsZT ztz = zero_sums_zt(N, k, zs, T, lambda, cfg, 1);
  double main = dN * dN / std::tgamma(k + 3.0) - 2.0 * ztz.sum_a + ztz.sum_z -
                2.0 * L0 * dN / std::tgamma(k + 2.0);
  double gk = gk_direct_from_lambda(N, k, lambda);
  return {main, gk - main};
}

TruncatedResult truncated_c(long N, double k, const zeros::ZeroSet& zs,
                            double T, const arith::LambdaTable& lambda,
                            const QuadratureConfig& cfg) {
  if (!(k > 0.5)) throw std::invalid_argument("truncated_c: k > 1/2 required");
  double dN = static_cast<double>(N);
  const sf::Constants& cs = sf::constants();
  double L0 = cs.zeta_logderiv_at_zero;
  ZeroSumsZT ztz = zero_sums_zt(N, k, zs, T, lambda, cfg, 1);
  double zk = cont::z_continued(cd(k, 0.0), N, lambda, cfg).real();
  double C = (L0 * L0 + 2.0 * cs.zeta_logderiv_at_minus_one) / std::tgamma(k + 1.0);
  double main = dN * dN / std::tgamma(k + 3.0) - 2.0 * ztz.sum_a + ztz.sum_z -
                2.0 * L0 * dN / std::tgamma(k + 2.0) + 2.0 * L0 * zk + C;
  double gk = gk_direct_from_lambda(N, k, lambda);
  return {main, gk - main};
}

}  // namespace goldbach::formula
