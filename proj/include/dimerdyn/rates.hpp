// rates.hpp — effective tunneling, crossover temperature, and the three
// coherence observables (Rabi frequency, relaxation rate, decoherence rate)
// of a biased two-level system in a bosonic bath
#pragma once

#include <utility>

#include "dimerdyn/spectral.hpp"

namespace dimerdyn {

// Raw two-chromophore parameters before reduction to the two-level form.
struct SiteParams {
  double site1_cm1{};
  double site2_cm1{};
  double coupling_cm1{};  // inter-site coupling, > 0
};

// Effective biased two-level system plus its bath.  The tunneling matrix
// element is twice the inter-site coupling.
struct DimerSystem {
  double bias_cm1{};      // site1 - site2, >= 0 (site 1 is the higher site)
  double coupling_cm1{};  // > 0
  double temperature_K{};
  SpectralModel bath{};

  double tunneling_cm1() const { return 2.0 * coupling_cm1; }
};

// (bias, coupling) from raw site parameters.  Throws when site 2 lies above
// site 1; callers relabel the sites in that case.
std::pair<double, double> reduce_sites(const SiteParams& sites);

struct RegimeFlags {
  bool bias_ratio_ok{};       // bias / tunneling < 1
  bool low_temperature_ok{};  // T below the crossover temperature
  bool weak_coupling_ok{};    // coupling_strength(bath) < 0.5

  bool all_ok() const {
    return bias_ratio_ok && low_temperature_ok && weak_coupling_ok;
  }
};

struct RateSet {
  double effective_tunneling_cm1{};  // bath-renormalized tunneling
  double splitting_cm1{};            // hypot(effective tunneling, bias)
  double crossover_temperature_K{};
  double rabi_cm1{};
  double relaxation_cm1{};
  double decoherence_cm1{};
  RegimeFlags flags{};
};

// Comparison estimators that treat the bath classically.
struct NaiveEstimates {
  double gaussian_time_fs{};     // tau_G = h_bar / sqrt(2 lambda k_B T)
  double dephasing_rate_cm1{};   // gamma_phi = 2 pi (k_B T) lambda / cutoff
};

// Bath-renormalized tunneling matrix element.  For an Ohmic bath the
// adiabatic renormalization [Gamma(1-2K) cos(pi K)]^(1/(2(1-K)))
// * (tunneling/cutoff)^(K/(1-K)) * tunneling; a Debye bath leaves the bare
// value unchanged.
double effective_tunneling(const DimerSystem& system);

// Temperature matching the renormalized level splitting.
double crossover_temperature_K(double splitting_cm1);

RegimeFlags validate_regime(const DimerSystem& system,
                            double crossover_temperature);

// Observables on the production route: closed forms (digamma/coth) for an
// Ohmic bath, noise-power and principal-value integrals for a Debye bath.
RateSet compute_rates(const DimerSystem& system,
                      const QuadratureControl& ctl = {});

// Observables through the spectral-integral route for any bath.  For an
// Ohmic bath the cutoff is already absorbed into the effective tunneling,
// so the integrals run over the scaling-limit density 2*K*w; the result
// matches compute_rates to quadrature accuracy.
RateSet compute_rates_via_integrals(const DimerSystem& system,
                                    const QuadratureControl& ctl = {});

NaiveEstimates naive_estimates(double lambda_cm1, double cutoff_cm1,
                               double temperature_K);

}  // namespace dimerdyn
