#include "goldbach/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "goldbach/errors.hpp"

namespace goldbach::quad {

namespace {

// QUADPACK G7-K15 nodes and weights.
constexpr double kXgk[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
constexpr double kWgk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
constexpr double kWg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

struct Panel {
  double a, b;
  cd value;
  double error;
};

Panel gk15(const RealToComplex& f, double a, double b) {
  double hlgth = 0.5 * (b - a);
  double centr = 0.5 * (a + b);
  cd fc = f(centr);
  cd resg = fc * kWg[3];
  cd resk = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    double absc = hlgth * kXgk[j];
    cd f1 = f(centr - absc);
    cd f2 = f(centr + absc);
    resk += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) resg += kWg[j / 2] * (f1 + f2);
  }
  Panel p;
  p.a = a;
  p.b = b;
  p.value = resk * hlgth;
  p.error = std::abs((resk - resg) * hlgth);
  return p;
}

}  // namespace

QuadResult integrate(const RealToComplex& f, double a, double b,
                     const QuadratureConfig& cfg, int initial_split) {
  QuadResult out;
  if (a == b) return out;
  initial_split = std::max(1, initial_split);
  std::vector<Panel> panels;
  panels.reserve(initial_split + 64);
  double step = (b - a) / initial_split;
  for (int i = 0; i < initial_split; ++i) {
    double x0 = a + i * step;
    double x1 = (i + 1 == initial_split) ? b : x0 + step;
    panels.push_back(gk15(f, x0, x1));
    out.evals += 15;
  }
  int splits = 0;
  for (;;) {
    cd total = 0.0;
    double toterr = 0.0;
    size_t worst = 0;
    double worst_err = -1.0;
    for (size_t i = 0; i < panels.size(); ++i) {
      total += panels[i].value;
      toterr += panels[i].error;
      if (panels[i].error > worst_err) {
        worst_err = panels[i].error;
        worst = i;
      }
    }
    double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total));
    if (toterr <= tol || splits >= cfg.max_subdivisions) {
      out.value = total;
      out.error = toterr;
      out.converged = toterr <= std::max(tol, 8.0 * cfg.abs_tol);
      return out;
    }
    Panel p = panels[worst];
    double mid = 0.5 * (p.a + p.b);
    if (mid <= p.a || mid >= p.b) {  // interval exhausted at double precision
      out.value = total;
      out.error = toterr;
      out.converged = false;
      return out;
    }
    panels[worst] = gk15(f, p.a, mid);
    panels.push_back(gk15(f, mid, p.b));
    out.evals += 30;
    ++splits;
  }
}

cd integrate_or_throw(const RealToComplex& f, double a, double b,
                      const QuadratureConfig& cfg, int initial_split) {
  QuadResult r = integrate(f, a, b, cfg, initial_split);
  if (!r.converged) throw ToleranceNotMet("adaptive quadrature did not converge", r.error);
  return r.value;
}

QuadResult circle_moment(const ComplexToComplex& f, cd center, double radius,
                         int k, const QuadratureConfig& cfg) {
  QuadResult out;
  int n = 16;
  std::vector<cd> vals(n);
  for (int j = 0; j < n; ++j) {
    double t = 2.0 * M_PI * j / n;
    vals[j] = f(center + radius * std::exp(cd(0.0, t)));
  }
  out.evals = n;
  cd prev = 0.0;
  bool have_prev = false;
  for (;;) {
    cd acc = 0.0;
    for (int j = 0; j < n; ++j) {
      double t = 2.0 * M_PI * j / n;
      acc += vals[j] * std::exp(cd(0.0, k * t));
    }
    acc /= static_cast<double>(n);
    if (have_prev) {
      double diff = std::abs(acc - prev);
      double tol = std::max(cfg.abs_tol, cfg.rel_tol * std::abs(acc));
      if (diff <= tol) {
        out.value = acc;
        out.error = diff;
        return out;
      }
      if (2 * n > 8192) {
        out.value = acc;
        out.error = diff;
        out.converged = false;
        return out;
      }
    }
    prev = acc;
    have_prev = true;
    // double the node count, reusing existing evaluations
    std::vector<cd> next(2 * n);
    for (int j = 0; j < n; ++j) next[2 * j] = vals[j];
    for (int j = 0; j < n; ++j) {
      double t = 2.0 * M_PI * (2 * j + 1) / (2 * n);
      next[2 * j + 1] = f(center + radius * std::exp(cd(0.0, t)));
    }
    out.evals += n;
    n *= 2;
    vals.swap(next);
  }
}

cd cauchy_derivative(const ComplexToComplex& f, cd w0, double radius, int order,
                     const QuadratureConfig& cfg) {
  if (order != 1) throw std::invalid_argument("cauchy_derivative: order must be 1");
  if (!(radius > 0.0)) throw std::invalid_argument("cauchy_derivative: radius must be positive");
  QuadResult m = circle_moment(f, w0, radius, -1, cfg);
  if (!m.converged) throw ToleranceNotMet("cauchy_derivative did not converge", m.error);
  return m.value / radius;
}

cd contour_integral_circle(const ComplexToComplex& f, cd center, double radius,
                           const QuadratureConfig& cfg) {
  QuadResult m = circle_moment(f, center, radius, 1, cfg);
  if (!m.converged) throw ToleranceNotMet("contour integral did not converge", m.error);
  return m.value * radius;
}

QuadResult line_integral_with_tails(const ComplexToComplex& f, double c,
                                    double H, TailBend bend,
                                    const QuadratureConfig& cfg,
                                    int line_presplit) {
  QuadResult out;
  QuadratureConfig local = cfg;
  local.abs_tol = cfg.abs_tol / 4.0;

  QuadResult line = integrate([&](double t) { return f(cd(c, t)); }, -H, H,
                              local, std::max(4, line_presplit));
  out.evals += line.evals;
  out.error += line.error;
  out.converged = line.converged;
  cd total = line.value / (2.0 * M_PI);  // (1/2pi i) * i dt

  if (bend != TailBend::none) {
    double ang = (bend == TailBend::left) ? 3.0 * M_PI / 4.0 : M_PI / 4.0;
    cd dir_up = std::exp(cd(0.0, ang));
    cd dir_dn = std::conj(dir_up);
    const cd start_up(c, H), start_dn(c, -H);
    const cd two_pi_i(0.0, 2.0 * M_PI);

    auto ray = [&](cd start, cd dir, double sign) {
      double seg_a = 0.0;
      double seg_len = std::max(8.0, H);
      double prev_mag = HUGE_VAL;
      for (int seg = 0; seg < 64; ++seg) {
        QuadResult r = integrate(
            [&](double tau) { return f(start + tau * dir); }, seg_a,
            seg_a + seg_len, local, 8);
        out.evals += r.evals;
        out.error += r.error;
        if (!r.converged) out.converged = false;
        total += sign * dir * r.value / two_pi_i;
        double mag = std::abs(r.value);
        if (mag < 0.25 * cfg.abs_tol && mag <= prev_mag) return;
        prev_mag = mag;
        seg_a += seg_len;
        seg_len *= 2.0;
      }
      out.converged = false;  // ray failed to decay within budget
    };
    ray(start_up, dir_up, +1.0);
    ray(start_dn, dir_dn, -1.0);
  }
  out.value = total;
  return out;
}

}  // namespace goldbach::quad
