#include "dimerdyn/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "dimerdyn/units.hpp"

namespace dimerdyn {

Trajectory evolve(const RateSet& rates, const DimerSystem& system,
                  double t_max_fs, int n_samples) {
  if (n_samples < 2) {
    throw std::invalid_argument("evolve: need at least two samples");
  }
  if (!(t_max_fs > 0.0)) {
    throw std::invalid_argument("evolve: t_max must be positive");
  }
  if (!(rates.rabi_cm1 > 0.0) || !std::isfinite(rates.relaxation_cm1) ||
      !std::isfinite(rates.decoherence_cm1)) {
    throw std::invalid_argument("evolve: rates must be finite with a positive Rabi frequency");
  }

  const double splitting = rates.splitting_cm1;
  const double kt = thermal_wavenumber({system.temperature_K}).cm1;
  const double p_inf = system.bias_cm1 == 0.0
                           ? 0.0
                           : -(system.bias_cm1 / splitting) *
                                 std::tanh(splitting / (2.0 * kt));
  const double coherent_weight =
      (rates.effective_tunneling_cm1 / splitting) *
      (rates.effective_tunneling_cm1 / splitting);
  const double incoherent_weight = 1.0 - coherent_weight;

  const double omega = constants::rad_per_fs_per_cm1 * rates.rabi_cm1;
  const double relax = constants::rad_per_fs_per_cm1 * rates.relaxation_cm1;
  const double decoh = constants::rad_per_fs_per_cm1 * rates.decoherence_cm1;
  const double slope_ratio = decoh / omega;

  Trajectory traj;
  traj.t_fs.resize(n_samples);
  traj.population_difference.resize(n_samples);
  traj.site1.resize(n_samples);
  traj.site2.resize(n_samples);

  for (int i = 0; i < n_samples; ++i) {
    const double t = t_max_fs * static_cast<double>(i) /
                     static_cast<double>(n_samples - 1);
    const double decay_r = std::exp(-relax * t);
    // grouped so that P(0) = a_inc + a_coh <= 1 to the last bit
    const double incoherent = incoherent_weight * decay_r +
                              p_inf * (1.0 - decay_r);
    const double coherent = coherent_weight * std::exp(-decoh * t) *
                            (std::cos(omega * t) +
                             slope_ratio * std::sin(omega * t));
    const double p = incoherent + coherent;
    traj.t_fs[i] = t;
    traj.population_difference[i] = p;
    traj.site1[i] = 0.5 * (1.0 + p);
    traj.site2[i] = 1.0 - traj.site1[i];
  }
  return traj;
}

PersistenceReport persistence(const RateSet& rates, double threshold) {
  if (!(threshold > 0.0) || !(threshold < 1.0)) {
    throw std::invalid_argument("persistence: threshold must lie in (0, 1)");
  }
  if (!(rates.rabi_cm1 > 0.0) || !(rates.decoherence_cm1 > 0.0)) {
    throw std::invalid_argument("persistence: needs positive Rabi and decoherence rates");
  }
  const double coherent_weight =
      (rates.effective_tunneling_cm1 / rates.splitting_cm1) *
      (rates.effective_tunneling_cm1 / rates.splitting_cm1);
  const double slope_ratio = rates.decoherence_cm1 / rates.rabi_cm1;
  const double envelope0 = coherent_weight *
                           std::sqrt(1.0 + slope_ratio * slope_ratio);

  PersistenceReport report;
  report.threshold = threshold;
  if (envelope0 <= threshold) {
    report.persistence_fs = 0.0;
    return report;
  }
  const double decoh = constants::rad_per_fs_per_cm1 * rates.decoherence_cm1;
  report.persistence_fs = std::log(envelope0 / threshold) / decoh;
  return report;
}

}  // namespace dimerdyn
