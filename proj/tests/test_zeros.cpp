#include <cstdio>
#include <fstream>
#include <string>

#include <doctest.h>
#include <nlohmann/json.hpp>

#include "goldbach/errors.hpp"
#include "goldbach/zeros.hpp"

namespace zeros = goldbach::zeros;

namespace {

std::string fixture(const std::string& name) {
  return std::string(GOLDBACH_FIXTURES_DIR) + "/" + name;
}

std::string write_temp(const std::string& content) {
  static int counter = 0;
  std::string path = "/tmp/goldbach_zeros_test_" + std::to_string(counter++) + ".txt";
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("two-line fixture loads") {
  zeros::ZeroSet zs = zeros::load_zeros(fixture("zeros_two.txt"));
  REQUIRE(zs.ordinates.size() == 2);
  CHECK(zs.ordinates[0] == doctest::Approx(14.134725141734694).epsilon(1e-12));
  CHECK(zs.ordinates[1] == doctest::Approx(21.022039638771555).epsilon(1e-12));
  CHECK(zs.max_height == zs.ordinates[1]);
}

TEST_CASE("full fixture matches its metadata") {
  zeros::ZeroSet zs = zeros::load_zeros(fixture("zeros_1000.txt"));
  std::ifstream meta(fixture("zeros_1000.meta.json"));
  REQUIRE(meta.good());
  nlohmann::json j;
  meta >> j;
  CHECK(zs.ordinates.size() == j["count"].get<size_t>());
  size_t le100 = 0;
  for (double g : zs.ordinates)
    if (g <= 100.0) ++le100;
  CHECK(le100 == j["count_le_100"].get<size_t>());
  CHECK(zs.max_height == doctest::Approx(j["max_height"].get<double>()));
}

TEST_CASE("empty file gives an empty set") {
  zeros::ZeroSet zs = zeros::load_zeros(write_temp("# only a comment\n\n"));
  CHECK(zs.ordinates.empty());
  CHECK(zs.max_height == 0.0);
}

TEST_CASE("loader error paths") {
  CHECK_THROWS_AS(zeros::load_zeros("/nonexistent/zeros.txt"), goldbach::IoError);
  try {
    zeros::load_zeros(write_temp("21.0\n14.1\n"));
    FAIL("expected FormatError");
  } catch (const goldbach::FormatError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(zeros::load_zeros(write_temp("-3.0\n")), goldbach::FormatError);
  CHECK_THROWS_AS(zeros::load_zeros(write_temp("14.13\nnot_a_number\n")),
                  goldbach::FormatError);
  CHECK_THROWS_AS(zeros::load_zeros(write_temp("14.13\n14.1300000001\n")),
                  goldbach::FormatError);
  CHECK_THROWS_AS(zeros::load_zeros(write_temp("21.0\n22.0\n")), goldbach::SanityError);
}

TEST_CASE("zeros_up_to enumeration and guards") {
  zeros::ZeroSet zs = zeros::load_zeros(fixture("zeros_two.txt"));
  CHECK(zeros::zeros_up_to(zs, 1.0).empty());
  auto pair = zeros::zeros_up_to(zs, 15.0);
  REQUIRE(pair.size() == 2);
  CHECK(pair[0].beta == 0.5);
  CHECK(pair[0].gamma_ord == doctest::Approx(14.134725141734694));
  CHECK(pair[1].gamma_ord == doctest::Approx(-14.134725141734694));
  try {
    zeros::zeros_up_to(zs, 1e6);
    FAIL("expected InsufficientData");
  } catch (const goldbach::InsufficientData& e) {
    CHECK(e.max_height() == doctest::Approx(zs.max_height));
  }
}

TEST_CASE("enumeration is conjugate-closed: symmetric sums are real") {
  zeros::ZeroSet zs = zeros::load_zeros(fixture("zeros_1000.txt"));
  auto rhos = zeros::zeros_up_to(zs, 200.0);
  std::complex<double> sum = 0.0;
  double sum_abs = 0.0;
  for (const auto& r : rhos) {
    // f(rho) = exp(rho)/(rho(rho+1)) has real-coefficient symmetry
    std::complex<double> v = std::exp(r.value()) / (r.value() * (r.value() + 1.0));
    sum += v;
    sum_abs += std::abs(v);
  }
  CHECK(std::abs(sum.imag()) <= 1e-12 * sum_abs);
}
