// units.hpp — canonical units of the library and conversions between them
#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dimerdyn {

// Every energy, frequency and rate inside the library is carried as a
// wavenumber (cm^-1); times are femtoseconds and temperatures kelvin.
// Conversions to angular frequency and to lifetimes happen only through
// the functions below, so all derived quantities share one constant path.
namespace constants {

inline constexpr double speed_of_light_m_per_s = 2.99792458e8;

// k_B/(h c) in cm^-1 per kelvin.
inline constexpr double boltzmann_cm1_per_K = 0.69503480;

// Angular frequency of a 1 cm^-1 line: 2*pi*c*100 rad/s.
inline constexpr double rad_per_s_per_cm1 =
    2.0 * std::numbers::pi * speed_of_light_m_per_s * 100.0;

// Same conversion per femtosecond; rates in cm^-1 times this give 1/fs.
inline constexpr double rad_per_fs_per_cm1 = rad_per_s_per_cm1 * 1e-15;

inline constexpr double fs_per_s = 1e15;

}  // namespace constants

struct Wavenumber {
  double cm1{};
};

struct Duration {
  double fs{};
};

struct Temperature {
  double kelvin{};
};

// Angular frequency (rad/s) of a spectral line at the given wavenumber.
inline double angular_frequency(Wavenumber nu) {
  if (!std::isfinite(nu.cm1)) {
    throw std::invalid_argument("angular_frequency: wavenumber must be finite");
  }
  return constants::rad_per_s_per_cm1 * nu.cm1;
}

// Thermal energy k_B*T expressed as a wavenumber.
inline Wavenumber thermal_wavenumber(Temperature t) {
  if (!(t.kelvin > 0.0)) {
    throw std::invalid_argument("thermal_wavenumber: temperature must be positive");
  }
  return {constants::boltzmann_cm1_per_K * t.kelvin};
}

// Lifetime (fs) of an exponential decay whose rate is quoted as a wavenumber.
inline Duration rate_to_lifetime(Wavenumber rate) {
  if (!(rate.cm1 > 0.0)) {
    throw std::invalid_argument("rate_to_lifetime: rate must be positive");
  }
  return {constants::fs_per_s / (constants::rad_per_s_per_cm1 * rate.cm1)};
}

inline Wavenumber lifetime_to_rate(Duration t) {
  if (!(t.fs > 0.0)) {
    throw std::invalid_argument("lifetime_to_rate: lifetime must be positive");
  }
  return {constants::fs_per_s / (constants::rad_per_s_per_cm1 * t.fs)};
}

// Full oscillation period (fs) of a frequency quoted as a wavenumber.
inline Duration period_from_rabi(Wavenumber nu) {
  if (!(nu.cm1 > 0.0)) {
    throw std::invalid_argument("period_from_rabi: frequency must be positive");
  }
  return {2.0 * std::numbers::pi * rate_to_lifetime(nu).fs};
}

}  // namespace dimerdyn
