// spectral.hpp — bath spectral densities, noise power, and the
// principal-value integral entering the Rabi frequency
#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <variant>

namespace dimerdyn {

// Ohmic bath with exponential cutoff: J(w) = 2*K*w*exp(-w/cutoff).
struct OhmicExp {
  double damping{};      // dimensionless K, must lie in (0, 0.5)
  double cutoff_cm1{};   // cutoff frequency
};

// Overdamped Debye bath: J(w) = 2*lambda*(w*tau)/(1 + (w*tau)^2), with the
// w*tau product formed from the angular frequency of w and tau in seconds.
struct Debye {
  double reorganization_cm1{};  // lambda
  double relaxation_fs{};       // tau
};

using SpectralModel = std::variant<OhmicExp, Debye>;

// Parameter combinations outside the validity domain of the model.
struct RegimeError : std::domain_error {
  using std::domain_error::domain_error;
};

// Adaptive-quadrature failure; carries the error actually reached.
struct QuadratureError : std::runtime_error {
  QuadratureError(const std::string& what, double achieved)
      : std::runtime_error(what), achieved_abs_error(achieved) {}
  double achieved_abs_error{};
};

struct QuadratureControl {
  double abs_tol = 1e-9;    // in (0, 1e-6]
  double rel_tol = 1e-9;    // in (0, 1e-6]
  int panel_budget = 20000; // at least 10^3
};

// Build an Ohmic model from the reorganization energy and the phonon
// relaxation time: cutoff = pi/(2*tau), K = lambda/(2*cutoff).
// Throws RegimeError when the resulting K reaches 0.5.
OhmicExp ohmic_from_lambda_tau(double lambda_cm1, double tau_fs);

// lambda: 2*K*cutoff for Ohmic, the stored value for Debye.
double reorganization_energy_cm1(const SpectralModel& model);

// Cutoff frequency: stored for Ohmic, pi/(2*tau) for Debye.
double cutoff_equivalent_cm1(const SpectralModel& model);

// Dimensionless coupling measure used by regime diagnostics only:
// K for Ohmic, lambda*tau/pi (angular product) for Debye.
double coupling_strength(const SpectralModel& model);

// Spectral density J(w) >= 0 for w >= 0.
double j_omega(const SpectralModel& model, double omega_cm1);

// Noise power S(w) = J(w)*coth(h_bar w / 2 k_B T); S(0) is the analytic
// limit 2*J'(0)*k_B*T rather than the (indeterminate) generic product.
double noise_power(const SpectralModel& model, double omega_cm1,
                   double temperature_K);

// Re u(i*splitting) = (1/2) PV int_0^inf dw g(w)/(w^2 - splitting^2) with
// g(w) = j(w)*(coth(h_bar w/2 k_B T) - 1), for an arbitrary spectral density
// j (which must vanish at w = 0).  Evaluated by pole subtraction: since
// PV int_0^inf dw/(w^2 - a^2) = 0 exactly, subtracting g(splitting) leaves a
// regular integrand.  The thermal factor makes g decay like exp(-w/k_B T),
// so the integration window is extended until the analytic tail bound drops
// below tolerance.
double re_u_of_spectrum(const std::function<double(double)>& j_of_omega,
                        double splitting_cm1, double temperature_K,
                        const QuadratureControl& ctl = {});

// Same integral with j taken from the spectral model.
double re_u_at_rabi(const SpectralModel& model, double splitting_cm1,
                    double temperature_K, const QuadratureControl& ctl = {});

}  // namespace dimerdyn
