#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "goldbach/errors.hpp"
#include "goldbach/mellin.hpp"
#include "goldbach/quadrature.hpp"
#include "goldbach/special_functions.hpp"
#include "reference_values.hpp"

using goldbach::cd;
namespace quad = goldbach::quad;
namespace mellin = goldbach::mellin;

TEST_CASE("adaptive quadrature on smooth and oscillatory integrands") {
  quad::QuadratureConfig cfg;
  cd v = quad::integrate_or_throw([](double x) { return cd(std::exp(x), 0.0); }, 0.0, 1.0, cfg);
  CHECK(std::abs(v.real() - (std::exp(1.0) - 1.0)) < 1e-12);
  // int_0^1 cos(200 x) dx = sin(200)/200
  v = quad::integrate_or_throw([](double x) { return cd(std::cos(200.0 * x), 0.0); }, 0.0, 1.0, cfg, 32);
  CHECK(std::abs(v.real() - std::sin(200.0) / 200.0) < 1e-11);
  // complex-valued: int_0^pi e^{i x} dx = 2i
  v = quad::integrate_or_throw([](double x) { return std::exp(cd(0.0, x)); }, 0.0, M_PI, cfg);
  CHECK(std::abs(v - cd(0.0, 2.0)) < 1e-12);
}

TEST_CASE("cauchy_derivative on elementary functions") {
  quad::QuadratureConfig cfg;
  cd d = quad::cauchy_derivative([](cd w) { return w * w; }, cd(3, 0), 0.5, 1, cfg);
  CHECK(std::abs(d - cd(6.0, 0.0)) < 1e-10);
  d = quad::cauchy_derivative([](cd w) { return std::exp(w); }, cd(0, 0), 1.0, 1, cfg);
  CHECK(std::abs(d - cd(1.0, 0.0)) < 1e-12);
  d = quad::cauchy_derivative([](cd w) { return std::sin(w); }, cd(0.3, 0.2), 0.4, 1, cfg);
  CHECK(std::abs(d - std::cos(cd(0.3, 0.2))) < 1e-11);
  CHECK_THROWS_AS(quad::cauchy_derivative([](cd w) { return w; }, cd(0, 0), 0.5, 2, cfg),
                  std::invalid_argument);
}

TEST_CASE("contour circle picks residues") {
  quad::QuadratureConfig cfg;
  // f = 1/(w - 2) around 2: residue 1
  cd r = quad::contour_integral_circle([](cd w) { return 1.0 / (w - 2.0); }, cd(2, 0), 0.3, cfg);
  CHECK(std::abs(r - 1.0) < 1e-12);
  // f = exp(w)/(w+1)^2 around -1: residue e^{-1}
  r = quad::contour_integral_circle(
      [](cd w) { return std::exp(w) / ((w + 1.0) * (w + 1.0)); }, cd(-1, 0), 0.4, cfg);
  CHECK(std::abs(r - std::exp(-1.0)) < 1e-12);
}

TEST_CASE("mellin kernel battery at moderate height") {
  quad::QuadratureConfig cfg;
  for (double x : {0.25, 0.5, 0.9}) {
    mellin::KernelResult r = mellin::mellin_kernel_numeric(x, cd(1, 0), 2.0, 200.0, cfg);
    CHECK(std::abs(r.value - mellin::mellin_kernel_closed(x, cd(1, 0))) < 1e-8);
  }
  for (double x : {1.0, 1.5, 2.0}) {
    mellin::KernelResult r = mellin::mellin_kernel_numeric(x, cd(1, 0), 2.0, 200.0, cfg);
    CHECK(std::abs(r.value) < 1e-8);
  }
  // complex order, frozen closed form
  mellin::KernelResult r = mellin::mellin_kernel_numeric(0.25, cd(2, 1), 2.0, 300.0, cfg);
  CHECK(std::abs(r.value - ref::mellin_rhs_x0p25_z2_1i) < 1e-7);
  CHECK(std::abs(cd(ref::mellin_rhs_x0p25_z2_1i) -
                 mellin::mellin_kernel_closed(0.25, cd(2, 1))) < 1e-13);
}

TEST_CASE("mellin kernel argument validation") {
  quad::QuadratureConfig cfg;
  CHECK_THROWS_AS(mellin::mellin_kernel_numeric(-1.0, cd(1, 0), 2.0, 100.0, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(mellin::mellin_kernel_numeric(0.5, cd(-1, 0), 2.0, 100.0, cfg),
                  std::invalid_argument);
  CHECK_THROWS_AS(mellin::mellin_kernel_numeric(0.5, cd(1, 0), -2.0, 100.0, cfg),
                  std::invalid_argument);
}

TEST_CASE("plain truncation error decreases as the height doubles") {
  quad::QuadratureConfig cfg;
  for (double x : {0.3, 0.7}) {
    cd want = mellin::mellin_kernel_closed(x, cd(1, 0));
    double prev = HUGE_VAL;
    for (double H : {50.0, 100.0, 200.0, 400.0}) {
      mellin::KernelResult r =
          mellin::mellin_kernel_numeric(x, cd(1, 0), 2.0, H, cfg, /*complete_tail=*/false);
      double err = std::abs(r.value - want);
      CHECK(err <= 1.1 * prev);
      prev = err;
    }
    // and the bent-tail evaluation beats the largest plain-truncation height
    mellin::KernelResult full = mellin::mellin_kernel_numeric(x, cd(1, 0), 2.0, 50.0, cfg);
    CHECK(std::abs(full.value - want) < 1e-9);
  }
}
