// report.hpp — result assembly and deterministic text/CSV emission
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dimerdyn/config.hpp"
#include "dimerdyn/dynamics.hpp"
#include "dimerdyn/rates.hpp"

namespace dimerdyn {

// Everything the rates command prints.
struct RatesReport {
  RateSet rates;
  NaiveEstimates naive;
  double bias_cm1{};
  double tunneling_cm1{};
  double lambda_cm1{};
  double cutoff_cm1{};
  double coupling_measure{};
  double bias_over_tunneling{};
  double tunneling_over_cutoff{};
  double tunneling_over_thermal{};
  double rabi_period_fs{};
  double relaxation_time_fs{};
  double decoherence_time_fs{};
  double naive_dephasing_time_fs{};
};

RatesReport build_rates_report(const DimerSystem& system,
                               const QuadratureControl& ctl = {});

// One sweep point at fixed coupling and varying bias.
struct SweepRow {
  double bias_over_tunneling{};
  double relaxation_time_fs{};
  double decoherence_time_fs{};
  double naive_dephasing_time_fs{};
  double gaussian_time_fs{};
};

// Rates along bias/tunneling in [ratio_min, ratio_max] (exclusive bounds of
// the validity window (0, 1)), all other parameters from the base system.
std::vector<SweepRow> compute_sweep(const DimerSystem& base, double ratio_min,
                                    double ratio_max, int n_points,
                                    const QuadratureControl& ctl = {});

// Provenance lines (# prefixed) identifying the resolved parameters; no
// timestamps, so identical inputs give identical bytes.
std::string provenance(const std::string& command, const DimerSystem& system);

std::string format_rates_text(const RatesReport& report);
std::string format_rates_csv(const RatesReport& report,
                             const std::string& provenance_lines);
std::string format_trajectory_csv(
    const Trajectory& trajectory, const RateSet& rates,
    const std::string& provenance_lines,
    const std::optional<PersistenceReport>& persistence = std::nullopt);
std::string format_sweep_csv(const std::vector<SweepRow>& rows,
                             const std::string& provenance_lines);

}  // namespace dimerdyn
