#include <cmath>
#include <stdexcept>

#include <doctest.h>

#include "goldbach/arith.hpp"

namespace arith = goldbach::arith;

TEST_CASE("sieve_lambda values") {
  arith::LambdaTable t = arith::sieve_lambda(10);
  CHECK(t.values[1] == 0.0);
  CHECK(t.values[6] == 0.0);
  CHECK(t.values[7] == doctest::Approx(std::log(7.0)).epsilon(1e-15));
  CHECK(t.values[8] == doctest::Approx(std::log(2.0)).epsilon(1e-15));
  CHECK(t.values[9] == doctest::Approx(std::log(3.0)).epsilon(1e-15));
  CHECK(t.values[10] == 0.0);
  CHECK_THROWS_AS(arith::sieve_lambda(1), std::invalid_argument);
}

TEST_CASE("chebyshev sanity: psi(x) within 0.15 x of x") {
  arith::LambdaTable t = arith::sieve_lambda(20000);
  double psi = 0.0;
  for (long n = 1; n <= t.limit; ++n) {
    psi += t.values[n];
    if (n >= 100) CHECK(std::abs(psi - n) <= 0.15 * n);
  }
}

TEST_CASE("representation table by hand") {
  arith::LambdaTable t = arith::sieve_lambda(12);
  arith::RepresentationTable r = arith::representation_table(t);
  double l2 = std::log(2.0), l3 = std::log(3.0);
  CHECK(r.r[3] == 0.0);
  CHECK(r.r[4] == doctest::Approx(l2 * l2).epsilon(1e-14));
  CHECK(r.r[5] == doctest::Approx(2.0 * l2 * l3).epsilon(1e-14));
  CHECK(r.r[6] == doctest::Approx(2.0 * l2 * l2 + l3 * l3).epsilon(1e-14));
}

TEST_CASE("transform path agrees with the direct path") {
  arith::LambdaTable t = arith::sieve_lambda(5000);
  arith::RepresentationTable direct = arith::representation_table(t, false);
  arith::RepresentationTable fast = arith::representation_table(t, true);
  for (long n = 4; n <= t.limit; ++n) {
    double scale = 1.0 + std::abs(direct.r[n]);
    CHECK(std::abs(direct.r[n] - fast.r[n]) <= 1e-9 * scale);
  }
}

TEST_CASE("g0_direct primed-sum convention") {
  arith::LambdaTable t = arith::sieve_lambda(12);
  arith::RepresentationTable r = arith::representation_table(t);
  double l2 = std::log(2.0), l3 = std::log(3.0);
  CHECK(arith::g0_direct(r, 3) == 0.0);
  CHECK(arith::g0_direct(r, 4) == doctest::Approx(0.5 * l2 * l2).epsilon(1e-14));
  CHECK(arith::g0_direct(r, 5) == doctest::Approx(l2 * l2 + l2 * l3).epsilon(1e-14));
  CHECK_THROWS_AS(arith::g0_direct(r, 13), std::invalid_argument);
}

TEST_CASE("gk_direct small cases") {
  arith::LambdaTable t = arith::sieve_lambda(12);
  arith::RepresentationTable r = arith::representation_table(t);
  double l2 = std::log(2.0);
  CHECK(arith::gk_direct(r, 4, 1.0) == 0.0);
  CHECK(arith::gk_direct(r, 5, 1.0) == doctest::Approx(l2 * l2 / 5.0).epsilon(1e-14));
  CHECK_THROWS_AS(arith::gk_direct(r, 5, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(arith::gk_direct(r, 5, -1.0), std::invalid_argument);
}

TEST_CASE("nested rearrangement equals the direct mean") {
  arith::LambdaTable t = arith::sieve_lambda(2100);
  arith::RepresentationTable r = arith::representation_table(t);
  CHECK(arith::gk_nested(t, 4, 1.0) == 0.0);
  CHECK(std::abs(arith::gk_nested(t, 5, 1.0) - arith::gk_direct(r, 5, 1.0)) < 1e-12);
  for (long N : {50L, 200L, 2000L}) {
    for (double k : {0.6, 1.0, 1.5, 2.5}) {
      double a = arith::gk_direct(r, N, k);
      double b = arith::gk_nested(t, N, k);
      CHECK(std::abs(a - b) <= 1e-10 * (1.0 + std::abs(a)));
    }
  }
}

TEST_CASE("gk_direct is nonnegative") {
  arith::LambdaTable t = arith::sieve_lambda(600);
  arith::RepresentationTable r = arith::representation_table(t);
  for (long N = 4; N <= 600; N += 7)
    for (double k : {0.6, 1.0, 2.5}) CHECK(arith::gk_direct(r, N, k) >= 0.0);
}
