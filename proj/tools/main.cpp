// dimerdyn command-line interface: rates, dynamics, sweep, preset dump
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "dimerdyn/config.hpp"
#include "dimerdyn/dynamics.hpp"
#include "dimerdyn/report.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_error = 1;
constexpr int exit_regime_warning = 2;

struct CommonOptions {
  std::string config_path;
  std::string preset_name;
  std::string out_path;
};

void add_common(CLI::App* cmd, CommonOptions& opts) {
  auto* config = cmd->add_option("--config", opts.config_path,
                                 "path to a key = value configuration file");
  auto* preset = cmd->add_option("--preset", opts.preset_name,
                                 "named preset (fmo77, fmo277, pc645)");
  config->excludes(preset);
  preset->excludes(config);
  cmd->add_option("--out", opts.out_path,
                  "write CSV here instead of standard output");
}

dimerdyn::RunConfig resolve_config(const CommonOptions& opts) {
  if (!opts.preset_name.empty()) {
    return dimerdyn::preset(opts.preset_name);
  }
  if (!opts.config_path.empty()) {
    return dimerdyn::load_config(opts.config_path);
  }
  throw dimerdyn::ConfigError("give --config <path> or --preset <name>");
}

void emit(const std::string& text, const std::string& out_path,
          const std::optional<std::string>& config_path) {
  std::string path = out_path;
  if (path.empty() && config_path) {
    path = *config_path;
  }
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file '" + path + "'");
  }
  out << text;
}

int run_rates(const CommonOptions& opts) {
  const auto config = resolve_config(opts);
  const auto system = dimerdyn::make_system(config);
  const auto report =
      dimerdyn::build_rates_report(system, dimerdyn::quadrature_control(config));

  std::cout << dimerdyn::format_rates_text(report);
  if (!opts.out_path.empty() || config.output_path) {
    emit(dimerdyn::format_rates_csv(report,
                                    dimerdyn::provenance("rates", system)),
         opts.out_path, config.output_path);
  }
  return report.rates.flags.all_ok() ? exit_ok : exit_regime_warning;
}

int run_dynamics(const CommonOptions& opts, double t_max_override,
                 int samples_override, double threshold_override) {
  auto config = resolve_config(opts);
  if (t_max_override > 0.0) {
    config.t_max_fs = t_max_override;
  }
  if (samples_override > 0) {
    config.samples = samples_override;
  }
  if (threshold_override > 0.0) {
    config.threshold = threshold_override;
  }

  const auto system = dimerdyn::make_system(config);
  const auto ctl = dimerdyn::quadrature_control(config);
  const auto rates = dimerdyn::compute_rates(system, ctl);
  const auto trajectory =
      dimerdyn::evolve(rates, system, config.t_max_fs, config.samples);
  std::optional<dimerdyn::PersistenceReport> persistence;
  if (config.threshold) {
    persistence = dimerdyn::persistence(rates, *config.threshold);
  }

  emit(dimerdyn::format_trajectory_csv(
           trajectory, rates, dimerdyn::provenance("dynamics", system),
           persistence),
       opts.out_path, config.output_path);
  return rates.flags.all_ok() ? exit_ok : exit_regime_warning;
}

int run_sweep(const CommonOptions& opts, double ratio_min, double ratio_max,
              int points) {
  const auto config = resolve_config(opts);
  const auto system = dimerdyn::make_system(config);
  const auto ctl = dimerdyn::quadrature_control(config);

  const auto rows =
      dimerdyn::compute_sweep(system, ratio_min, ratio_max, points, ctl);
  emit(dimerdyn::format_sweep_csv(rows, dimerdyn::provenance("sweep", system)),
       opts.out_path, config.output_path);

  const auto rates = dimerdyn::compute_rates(system, ctl);
  return rates.flags.all_ok() ? exit_ok : exit_regime_warning;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coherence observables of an excitonic dimer in a bosonic bath"};
  app.require_subcommand(1);

  CommonOptions rates_opts;
  auto* rates_cmd = app.add_subcommand(
      "rates", "effective tunneling, crossover temperature and the "
               "Rabi/relaxation/decoherence observables");
  add_common(rates_cmd, rates_opts);

  CommonOptions dynamics_opts;
  double t_max_override = 0.0;
  int samples_override = 0;
  double threshold_override = 0.0;
  auto* dynamics_cmd = app.add_subcommand(
      "dynamics", "site-population trajectory as CSV");
  add_common(dynamics_cmd, dynamics_opts);
  dynamics_cmd->add_option("--t-max-fs", t_max_override,
                           "trajectory length in fs");
  dynamics_cmd->add_option("--samples", samples_override,
                           "number of uniform samples");
  dynamics_cmd->add_option("--threshold", threshold_override,
                           "report the persistence time of the coherent "
                           "envelope at this amplitude");

  CommonOptions sweep_opts;
  double ratio_min = 0.05;
  double ratio_max = 0.95;
  int points = 19;
  auto* sweep_cmd = app.add_subcommand(
      "sweep", "rates versus bias/tunneling at fixed coupling, as CSV");
  add_common(sweep_cmd, sweep_opts);
  sweep_cmd->add_option("--ratio-min", ratio_min, "lower bias/tunneling ratio");
  sweep_cmd->add_option("--ratio-max", ratio_max, "upper bias/tunneling ratio");
  sweep_cmd->add_option("--points", points, "number of sweep points");

  std::string dump_name;
  auto* preset_cmd = app.add_subcommand("preset", "preset utilities");
  preset_cmd->require_subcommand(1);
  auto* dump_cmd =
      preset_cmd->add_subcommand("dump", "print a preset as a config file");
  dump_cmd->add_option("name", dump_name, "preset name")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_error;
  }

  try {
    if (rates_cmd->parsed()) {
      return run_rates(rates_opts);
    }
    if (dynamics_cmd->parsed()) {
      return run_dynamics(dynamics_opts, t_max_override, samples_override,
                          threshold_override);
    }
    if (sweep_cmd->parsed()) {
      return run_sweep(sweep_opts, ratio_min, ratio_max, points);
    }
    if (dump_cmd->parsed()) {
      std::cout << dimerdyn::dump_config(dimerdyn::preset(dump_name));
      return exit_ok;
    }
  } catch (const std::exception& e) {
    std::cerr << "dimerdyn: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
