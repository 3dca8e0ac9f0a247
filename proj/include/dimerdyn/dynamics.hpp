// dynamics.hpp — population evolution of the two single-excitation states
// and the persistence time of the coherent envelope
#pragma once

#include <vector>

#include "dimerdyn/rates.hpp"

namespace dimerdyn {

// Uniformly sampled population dynamics.  population_difference holds
// <sigma_z>(t) in [-1, 1]; site1 + site2 = 1 at every sample.
struct Trajectory {
  std::vector<double> t_fs;
  std::vector<double> population_difference;
  std::vector<double> site1;
  std::vector<double> site2;
};

struct PersistenceReport {
  double threshold{};
  double persistence_fs{};
};

// Two-channel damped evolution starting from the full excitation on site 1:
//   P(t) = P_inf + (a_inc - P_inf) e^{-gamma_r t}
//         + a_coh e^{-gamma t} [cos(Omega t) + (gamma/Omega) sin(Omega t)],
// with a_coh = (effective tunneling / splitting)^2, a_inc = 1 - a_coh and
// the equilibrium value P_inf = -(bias/splitting) tanh(splitting/2 k_B T).
Trajectory evolve(const RateSet& rates, const DimerSystem& system,
                  double t_max_fs, int n_samples);

// Largest t for which the coherent envelope
// a_coh e^{-gamma t} sqrt(1 + (gamma/Omega)^2) stays above the threshold;
// zero when the envelope starts below it.
PersistenceReport persistence(const RateSet& rates, double threshold);

}  // namespace dimerdyn
