#include "dimerdyn/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "dimerdyn/units.hpp"

namespace dimerdyn {

namespace {

std::string num(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

std::string flag(bool ok) { return ok ? "ok" : "FAIL"; }

const char* bath_name(const SpectralModel& model) {
  return std::holds_alternative<OhmicExp>(model) ? "ohmic" : "debye";
}

}  // namespace

RatesReport build_rates_report(const DimerSystem& system,
                               const QuadratureControl& ctl) {
  RatesReport report;
  report.rates = compute_rates(system, ctl);
  report.bias_cm1 = system.bias_cm1;
  report.tunneling_cm1 = system.tunneling_cm1();
  report.lambda_cm1 = reorganization_energy_cm1(system.bath);
  report.cutoff_cm1 = cutoff_equivalent_cm1(system.bath);
  report.coupling_measure = coupling_strength(system.bath);
  report.naive = naive_estimates(report.lambda_cm1, report.cutoff_cm1,
                                 system.temperature_K);

  const double kt = thermal_wavenumber({system.temperature_K}).cm1;
  report.bias_over_tunneling = system.bias_cm1 / report.tunneling_cm1;
  report.tunneling_over_cutoff = report.tunneling_cm1 / report.cutoff_cm1;
  report.tunneling_over_thermal = report.tunneling_cm1 / kt;
  report.rabi_period_fs = period_from_rabi({report.rates.rabi_cm1}).fs;
  report.relaxation_time_fs = rate_to_lifetime({report.rates.relaxation_cm1}).fs;
  report.decoherence_time_fs = rate_to_lifetime({report.rates.decoherence_cm1}).fs;
  report.naive_dephasing_time_fs =
      rate_to_lifetime({report.naive.dephasing_rate_cm1}).fs;
  return report;
}

std::vector<SweepRow> compute_sweep(const DimerSystem& base, double ratio_min,
                                    double ratio_max, int n_points,
                                    const QuadratureControl& ctl) {
  if (!(ratio_min > 0.0) || !(ratio_min < ratio_max) || !(ratio_max < 1.0)) {
    throw std::invalid_argument(
        "compute_sweep: need 0 < ratio_min < ratio_max < 1");
  }
  if (n_points < 2) {
    throw std::invalid_argument("compute_sweep: need at least two points");
  }

  const double lambda = reorganization_energy_cm1(base.bath);
  const double cutoff = cutoff_equivalent_cm1(base.bath);
  const NaiveEstimates naive =
      naive_estimates(lambda, cutoff, base.temperature_K);
  const double naive_time =
      rate_to_lifetime({naive.dephasing_rate_cm1}).fs;

  std::vector<SweepRow> rows;
  rows.reserve(n_points);
  for (int i = 0; i < n_points; ++i) {
    const double ratio = ratio_min + (ratio_max - ratio_min) *
                                         static_cast<double>(i) /
                                         static_cast<double>(n_points - 1);
    DimerSystem system = base;
    system.bias_cm1 = ratio * base.tunneling_cm1();
    const RateSet rates = compute_rates(system, ctl);
    rows.push_back({ratio, rate_to_lifetime({rates.relaxation_cm1}).fs,
                    rate_to_lifetime({rates.decoherence_cm1}).fs, naive_time,
                    naive.gaussian_time_fs});
  }
  return rows;
}

std::string provenance(const std::string& command, const DimerSystem& system) {
  std::ostringstream out;
  out << "# dimerdyn " << command << '\n';
  out << "# system: epsilon_cm1=" << num(system.bias_cm1)
      << " delta_cm1=" << num(system.coupling_cm1)
      << " temperature_K=" << num(system.temperature_K) << '\n';
  out << "# bath: " << bath_name(system.bath);
  if (const auto* ohmic = std::get_if<OhmicExp>(&system.bath)) {
    out << " K=" << num(ohmic->damping)
        << " omega_c_cm1=" << num(ohmic->cutoff_cm1);
  } else {
    const auto& debye = std::get<Debye>(system.bath);
    out << " lambda_cm1=" << num(debye.reorganization_cm1)
        << " tau_fs=" << num(debye.relaxation_fs);
  }
  out << '\n';
  return out.str();
}

std::string format_rates_text(const RatesReport& r) {
  std::ostringstream out;
  out << "effective tunneling     " << num(r.rates.effective_tunneling_cm1)
      << " cm^-1\n";
  out << "level splitting         " << num(r.rates.splitting_cm1) << " cm^-1\n";
  out << "crossover temperature   " << num(r.rates.crossover_temperature_K)
      << " K\n";
  out << "Rabi frequency          " << num(r.rates.rabi_cm1)
      << " cm^-1   (period " << num(r.rabi_period_fs) << " fs)\n";
  out << "relaxation rate         " << num(r.rates.relaxation_cm1)
      << " cm^-1   (lifetime " << num(r.relaxation_time_fs) << " fs)\n";
  out << "decoherence rate        " << num(r.rates.decoherence_cm1)
      << " cm^-1   (lifetime " << num(r.decoherence_time_fs) << " fs)\n";
  out << "naive tau_G             " << num(r.naive.gaussian_time_fs) << " fs\n";
  out << "naive gamma_phi         " << num(r.naive.dephasing_rate_cm1)
      << " cm^-1   (lifetime " << num(r.naive_dephasing_time_fs) << " fs)\n";
  out << "bias / tunneling        " << num(r.bias_over_tunneling) << '\n';
  out << "coupling strength       " << num(r.coupling_measure) << '\n';
  out << "tunneling / cutoff      " << num(r.tunneling_over_cutoff) << '\n';
  out << "tunneling / k_B T       " << num(r.tunneling_over_thermal) << '\n';
  out << "regime: bias ratio " << flag(r.rates.flags.bias_ratio_ok)
      << ", low temperature " << flag(r.rates.flags.low_temperature_ok)
      << ", weak coupling " << flag(r.rates.flags.weak_coupling_ok) << '\n';
  return out.str();
}

std::string format_rates_csv(const RatesReport& r,
                             const std::string& provenance_lines) {
  std::ostringstream out;
  out << provenance_lines;
  out << "delta_eff_cm1,splitting_cm1,crossover_K,rabi_cm1,rabi_period_fs,"
         "gamma_r_cm1,gamma_r_inv_fs,gamma_cm1,gamma_inv_fs,tau_G_fs,"
         "gamma_phi_cm1,gamma_phi_inv_fs,eps_over_2delta,coupling_strength,"
         "tunneling_over_cutoff,tunneling_over_kT,bias_ratio_ok,"
         "low_temperature_ok,weak_coupling_ok\n";
  out << num(r.rates.effective_tunneling_cm1) << ','
      << num(r.rates.splitting_cm1) << ','
      << num(r.rates.crossover_temperature_K) << ',' << num(r.rates.rabi_cm1)
      << ',' << num(r.rabi_period_fs) << ',' << num(r.rates.relaxation_cm1)
      << ',' << num(r.relaxation_time_fs) << ','
      << num(r.rates.decoherence_cm1) << ',' << num(r.decoherence_time_fs)
      << ',' << num(r.naive.gaussian_time_fs) << ','
      << num(r.naive.dephasing_rate_cm1) << ','
      << num(r.naive_dephasing_time_fs) << ',' << num(r.bias_over_tunneling)
      << ',' << num(r.coupling_measure) << ',' << num(r.tunneling_over_cutoff)
      << ',' << num(r.tunneling_over_thermal) << ','
      << (r.rates.flags.bias_ratio_ok ? 1 : 0) << ','
      << (r.rates.flags.low_temperature_ok ? 1 : 0) << ','
      << (r.rates.flags.weak_coupling_ok ? 1 : 0) << '\n';
  return out.str();
}

std::string format_trajectory_csv(
    const Trajectory& trajectory, const RateSet& rates,
    const std::string& provenance_lines,
    const std::optional<PersistenceReport>& persistence) {
  std::ostringstream out;
  out << provenance_lines;
  out << "# rates: delta_eff_cm1=" << num(rates.effective_tunneling_cm1)
      << " splitting_cm1=" << num(rates.splitting_cm1)
      << " crossover_K=" << num(rates.crossover_temperature_K)
      << " rabi_cm1=" << num(rates.rabi_cm1)
      << " gamma_r_cm1=" << num(rates.relaxation_cm1)
      << " gamma_cm1=" << num(rates.decoherence_cm1) << '\n';
  if (persistence) {
    out << "# persistence: threshold=" << num(persistence->threshold)
        << " persistence_fs=" << num(persistence->persistence_fs) << '\n';
  }
  out << "t_fs,P,rho1,rho2\n";
  for (std::size_t i = 0; i < trajectory.t_fs.size(); ++i) {
    out << num(trajectory.t_fs[i]) << ','
        << num(trajectory.population_difference[i]) << ','
        << num(trajectory.site1[i]) << ',' << num(trajectory.site2[i]) << '\n';
  }
  return out.str();
}

std::string format_sweep_csv(const std::vector<SweepRow>& rows,
                             const std::string& provenance_lines) {
  std::ostringstream out;
  out << provenance_lines;
  out << "eps_over_2delta,gamma_r_inv_fs,gamma_inv_fs,gamma_phi_inv_fs,tau_G_fs\n";
  for (const auto& row : rows) {
    out << num(row.bias_over_tunneling) << ',' << num(row.relaxation_time_fs)
        << ',' << num(row.decoherence_time_fs) << ','
        << num(row.naive_dephasing_time_fs) << ','
        << num(row.gaussian_time_fs) << '\n';
  }
  return out.str();
}

}  // namespace dimerdyn
