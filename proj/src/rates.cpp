#include "dimerdyn/rates.hpp"

#include <cmath>
#include <numbers>

#include "dimerdyn/special_functions.hpp"
#include "dimerdyn/units.hpp"

namespace dimerdyn {

namespace {

constexpr double pi = std::numbers::pi;

void validate(const DimerSystem& system) {
  if (!(system.bias_cm1 >= 0.0) || !std::isfinite(system.bias_cm1)) {
    throw std::invalid_argument(
        "DimerSystem: bias must be non-negative (site 1 is the higher site)");
  }
  if (!(system.coupling_cm1 > 0.0)) {
    throw std::invalid_argument("DimerSystem: coupling must be positive");
  }
  if (!(system.temperature_K > 0.0)) {
    throw std::invalid_argument("DimerSystem: temperature must be positive");
  }
}

double checked_damping(const OhmicExp& bath) {
  if (!(bath.damping > 0.0) || bath.damping >= 0.5) {
    throw RegimeError("Ohmic damping must lie in (0, 0.5) for a finite "
                      "tunneling renormalization");
  }
  return bath.damping;
}

struct RateTriple {
  double rabi{}, relaxation{}, decoherence{};
};

double checked_rabi_squared(double rabi_sq) {
  if (!(rabi_sq > 0.0)) {
    throw RegimeError("Rabi frequency is not real for these parameters");
  }
  return rabi_sq;
}

// Closed forms for the Ohmic bath; the cutoff enters only through the
// effective tunneling.
RateTriple ohmic_rates(const OhmicExp& bath, double bias, double eff,
                       double splitting, double kt) {
  const double damping = checked_damping(bath);
  const double y = splitting / (2.0 * pi * kt);
  const double bracket = re_digamma_imaginary(y) - std::log(y);
  const double rabi_sq = splitting * splitting +
                         2.0 * damping * eff * eff * bracket;
  RateTriple out;
  out.rabi = std::sqrt(checked_rabi_squared(rabi_sq));
  out.relaxation = pi * damping * coth_guarded(splitting / (2.0 * kt)) *
                   eff * eff / splitting;
  out.decoherence = out.relaxation / 2.0 +
                    2.0 * pi * damping * (bias * bias) /
                        (splitting * splitting) * kt;
  return out;
}

// General route: Rabi shift from the principal-value integral, relaxation
// from the noise power at the splitting, pure dephasing from S(0).
RateTriple spectral_rates(const std::function<double(double)>& j,
                          double s_at_splitting, double s_at_zero,
                          double bias, double eff, double splitting,
                          double temperature, const QuadratureControl& ctl) {
  const double re_u = re_u_of_spectrum(j, splitting, temperature, ctl);
  const double rabi_sq = eff * eff * (1.0 - 2.0 * re_u) + bias * bias;
  RateTriple out;
  out.rabi = std::sqrt(checked_rabi_squared(rabi_sq));
  out.relaxation = (pi / 2.0) * (eff * eff) / (splitting * splitting) *
                   s_at_splitting;
  out.decoherence = out.relaxation / 2.0 +
                    (pi / 2.0) * (bias * bias) / (splitting * splitting) *
                        s_at_zero;
  return out;
}

RateSet assemble(const DimerSystem& system, double eff, double splitting,
                 const RateTriple& triple) {
  RateSet rates;
  rates.effective_tunneling_cm1 = eff;
  rates.splitting_cm1 = splitting;
  rates.crossover_temperature_K = crossover_temperature_K(rates.splitting_cm1);
  rates.rabi_cm1 = triple.rabi;
  rates.relaxation_cm1 = triple.relaxation;
  rates.decoherence_cm1 = triple.decoherence;
  rates.flags = validate_regime(system, rates.crossover_temperature_K);
  return rates;
}

}  // namespace

std::pair<double, double> reduce_sites(const SiteParams& sites) {
  if (!(sites.coupling_cm1 > 0.0)) {
    throw std::invalid_argument("reduce_sites: coupling must be positive");
  }
  if (sites.site1_cm1 < sites.site2_cm1) {
    throw std::invalid_argument(
        "reduce_sites: site 1 must be the higher-energy site; swap the labels");
  }
  return {sites.site1_cm1 - sites.site2_cm1, sites.coupling_cm1};
}

double effective_tunneling(const DimerSystem& system) {
  validate(system);
  const double tunneling = system.tunneling_cm1();
  return std::visit(
      [tunneling](const auto& bath) -> double {
        using T = std::decay_t<decltype(bath)>;
        if constexpr (std::is_same_v<T, OhmicExp>) {
          const double k = checked_damping(bath);
          const double prefactor = std::pow(
              gamma_real(1.0 - 2.0 * k) * std::cos(pi * k),
              1.0 / (2.0 * (1.0 - k)));
          return prefactor *
                 std::pow(tunneling / bath.cutoff_cm1, k / (1.0 - k)) *
                 tunneling;
        } else {
          return tunneling;
        }
      },
      system.bath);
}

double crossover_temperature_K(double splitting_cm1) {
  if (!(splitting_cm1 > 0.0)) {
    throw std::invalid_argument("crossover_temperature_K: splitting must be positive");
  }
  return splitting_cm1 / constants::boltzmann_cm1_per_K;
}

RegimeFlags validate_regime(const DimerSystem& system,
                            double crossover_temperature) {
  RegimeFlags flags;
  flags.bias_ratio_ok = system.bias_cm1 < system.tunneling_cm1();
  flags.low_temperature_ok = system.temperature_K < crossover_temperature;
  flags.weak_coupling_ok = coupling_strength(system.bath) < 0.5;
  return flags;
}

RateSet compute_rates(const DimerSystem& system, const QuadratureControl& ctl) {
  validate(system);
  const double eff = effective_tunneling(system);
  const double splitting = std::hypot(eff, system.bias_cm1);
  const double kt = thermal_wavenumber({system.temperature_K}).cm1;

  const RateTriple triple = std::visit(
      [&](const auto& bath) -> RateTriple {
        using T = std::decay_t<decltype(bath)>;
        if constexpr (std::is_same_v<T, OhmicExp>) {
          return ohmic_rates(bath, system.bias_cm1, eff, splitting, kt);
        } else {
          return spectral_rates(
              [&](double w) { return j_omega(system.bath, w); },
              noise_power(system.bath, splitting, system.temperature_K),
              noise_power(system.bath, 0.0, system.temperature_K),
              system.bias_cm1, eff, splitting, system.temperature_K, ctl);
        }
      },
      system.bath);
  return assemble(system, eff, splitting, triple);
}

RateSet compute_rates_via_integrals(const DimerSystem& system,
                                    const QuadratureControl& ctl) {
  validate(system);
  const double eff = effective_tunneling(system);
  const double splitting = std::hypot(eff, system.bias_cm1);
  const double kt = thermal_wavenumber({system.temperature_K}).cm1;

  const RateTriple triple = std::visit(
      [&](const auto& bath) -> RateTriple {
        using T = std::decay_t<decltype(bath)>;
        if constexpr (std::is_same_v<T, OhmicExp>) {
          // scaling-limit density: the cutoff already renormalized the
          // tunneling, so the rate kernels use J(w) = 2*K*w
          const double k = checked_damping(bath);
          return spectral_rates(
              [k](double w) { return 2.0 * k * w; },
              2.0 * k * splitting * coth_guarded(splitting / (2.0 * kt)),
              4.0 * k * kt, system.bias_cm1, eff, splitting,
              system.temperature_K, ctl);
        } else {
          return spectral_rates(
              [&](double w) { return j_omega(system.bath, w); },
              noise_power(system.bath, splitting, system.temperature_K),
              noise_power(system.bath, 0.0, system.temperature_K),
              system.bias_cm1, eff, splitting, system.temperature_K, ctl);
        }
      },
      system.bath);
  return assemble(system, eff, splitting, triple);
}

NaiveEstimates naive_estimates(double lambda_cm1, double cutoff_cm1,
                               double temperature_K) {
  if (!(lambda_cm1 > 0.0) || !(cutoff_cm1 > 0.0)) {
    throw std::invalid_argument("naive_estimates: lambda and cutoff must be positive");
  }
  const double kt = thermal_wavenumber({temperature_K}).cm1;
  NaiveEstimates out;
  out.gaussian_time_fs =
      rate_to_lifetime({std::sqrt(2.0 * lambda_cm1 * kt)}).fs;
  out.dephasing_rate_cm1 = 2.0 * pi * kt * lambda_cm1 / cutoff_cm1;
  return out;
}

}  // namespace dimerdyn
