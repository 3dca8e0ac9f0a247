// config.hpp — run configuration files, named presets, serialization
#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "dimerdyn/rates.hpp"

namespace dimerdyn {

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class BathKind { ohmic, debye };

// Flat key = value document.  The system is given either as an explicit
// bias (epsilon_cm1) or as two site energies; the Ohmic bath either as
// (lambda_cm1, tau_fs) or as (K, omega_c_cm1), never both.
struct RunConfig {
  // system
  std::optional<double> epsilon_cm1;
  std::optional<double> site1_cm1;
  std::optional<double> site2_cm1;
  double delta_cm1{};
  double temperature_K{};

  // bath
  BathKind bath{BathKind::ohmic};
  std::optional<double> lambda_cm1;
  std::optional<double> tau_fs;
  std::optional<double> damping_K;       // key "K"
  std::optional<double> omega_c_cm1;

  // output
  std::optional<std::string> output_path;
  std::string output_format{"csv"};

  // numerics
  double quad_abs_tol{1e-9};
  double quad_rel_tol{1e-9};
  int quad_panels{20000};
  int samples{2048};
  double t_max_fs{1000.0};
  std::optional<double> threshold;

  bool operator==(const RunConfig&) const = default;
};

// Parse and validate; errors carry the offending key or line.
RunConfig parse_config(std::string_view text, const std::string& origin);
RunConfig load_config(const std::string& path);

// Serialization that re-parses to an identical RunConfig.
std::string dump_config(const RunConfig& config);

const RunConfig& preset(std::string_view name);
std::vector<std::string> preset_names();

// Effective two-level system described by the configuration; normalizes
// an (lambda, tau) Ohmic bath to (K, cutoff).
DimerSystem make_system(const RunConfig& config);

QuadratureControl quadrature_control(const RunConfig& config);

}  // namespace dimerdyn
