#include <doctest.h>

#include <cmath>
#include <numbers>

#include "dimerdyn/units.hpp"

using namespace dimerdyn;

namespace {

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

}  // namespace

TEST_CASE("angular frequency of a wavenumber") {
  CHECK(angular_frequency({0.0}) == 0.0);
  CHECK(close(angular_frequency({1.0}), 1.8836515673088533e11, 1e-13));
  // pi/(2 * 50 fs) expressed as a wavenumber round-trips to the same
  // angular frequency
  const double cutoff = std::numbers::pi / (2.0 * 50e-15) /
                        constants::rad_per_s_per_cm1;
  CHECK(close(cutoff, 166.78204759907602, 1e-13));
  CHECK(close(angular_frequency({cutoff}), std::numbers::pi / (2.0 * 50e-15),
              1e-13));
  CHECK_THROWS_AS(angular_frequency({std::nan("")}), std::invalid_argument);
}

TEST_CASE("thermal wavenumber") {
  CHECK(close(thermal_wavenumber({77.0}).cm1, 53.5176796, 1e-13));
  CHECK(close(thermal_wavenumber({294.0}).cm1, 204.3402312, 1e-13));
  CHECK(close(thermal_wavenumber({1.0 / 0.69503480}).cm1, 1.0, 1e-13));
  CHECK_THROWS_AS(thermal_wavenumber({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(thermal_wavenumber({-4.0}), std::invalid_argument);
}

TEST_CASE("thermal wavenumber is linear in temperature") {
  for (double t : {1.0, 13.7, 77.0, 300.0}) {
    for (double s : {2.0, 7.5, 0.25}) {
      CHECK(close(thermal_wavenumber({s * t}).cm1,
                  s * thermal_wavenumber({t}).cm1, 1e-14));
    }
  }
}

TEST_CASE("rate to lifetime") {
  CHECK(close(rate_to_lifetime({34.9}).fs, 152.11569, 1e-6));
  CHECK(close(rate_to_lifetime({59.9}).fs, 88.628338, 1e-6));
  // a rate whose lifetime is exactly one second
  const double one_second_rate = 1.0 / constants::rad_per_s_per_cm1;
  CHECK(close(rate_to_lifetime({one_second_rate}).fs, 1e15, 1e-13));
  CHECK_THROWS_AS(rate_to_lifetime({0.0}), std::invalid_argument);
  CHECK_THROWS_AS(rate_to_lifetime({-1.0}), std::invalid_argument);
}

TEST_CASE("lifetime/rate round trip") {
  for (int k = 0; k < 50; ++k) {
    const double t = std::pow(10.0, 15.0 * k / 49.0);  // 1 fs .. 1 s
    CHECK(close(rate_to_lifetime(lifetime_to_rate({t})).fs, t, 1e-12));
  }
}

TEST_CASE("period from Rabi frequency") {
  CHECK(close(period_from_rabi({206.3}).fs, 161.68885, 1e-6));
  CHECK(close(period_from_rabi({223.0}).fs, 149.58031, 1e-6));
  // doubling the frequency halves the period
  CHECK(close(period_from_rabi({100.0}).fs, 2.0 * period_from_rabi({200.0}).fs,
              1e-14));
  // identical constant path as 2*pi times the lifetime
  CHECK(period_from_rabi({123.4}).fs ==
        2.0 * std::numbers::pi * rate_to_lifetime({123.4}).fs);
  CHECK_THROWS_AS(period_from_rabi({0.0}), std::invalid_argument);
}
