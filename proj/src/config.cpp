#include "dimerdyn/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <tuple>

namespace dimerdyn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

double parse_number(std::string_view value, const std::string& key, int line) {
  double out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("config: value of '" + key + "' is not a number (line " +
                      std::to_string(line) + ")");
  }
  return out;
}

long parse_integer(std::string_view value, const std::string& key, int line) {
  long out{};
  const char* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc{} || ptr != end) {
    throw ConfigError("config: value of '" + key + "' is not an integer (line " +
                      std::to_string(line) + ")");
  }
  return out;
}

void require_positive(double v, const std::string& key) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw ConfigError("config: '" + key + "' must be positive and finite");
  }
}

std::string format_number(double v) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

void validate(const RunConfig& c) {
  const bool have_epsilon = c.epsilon_cm1.has_value();
  const bool have_sites = c.site1_cm1.has_value() || c.site2_cm1.has_value();
  if (have_epsilon && have_sites) {
    throw ConfigError(
        "config: give either 'epsilon_cm1' or the pair 'site1_cm1'/'site2_cm1', not both");
  }
  if (!have_epsilon) {
    if (!c.site1_cm1 || !c.site2_cm1) {
      throw ConfigError(
          "config: the system needs 'epsilon_cm1' or both 'site1_cm1' and 'site2_cm1'");
    }
  } else if (!(*c.epsilon_cm1 >= 0.0) || !std::isfinite(*c.epsilon_cm1)) {
    throw ConfigError("config: 'epsilon_cm1' must be non-negative and finite");
  }
  if (c.delta_cm1 == 0.0) {
    throw ConfigError("config: 'delta_cm1' is required");
  }
  require_positive(c.delta_cm1, "delta_cm1");
  if (c.temperature_K == 0.0) {
    throw ConfigError("config: 'temperature_K' is required");
  }
  require_positive(c.temperature_K, "temperature_K");

  const bool lambda_tau = c.lambda_cm1.has_value() || c.tau_fs.has_value();
  const bool k_cutoff = c.damping_K.has_value() || c.omega_c_cm1.has_value();
  if (c.bath == BathKind::ohmic) {
    if (lambda_tau && k_cutoff) {
      throw ConfigError(
          "config: conflicting bath parameterizations; give 'lambda_cm1'/'tau_fs' "
          "or 'K'/'omega_c_cm1', not both");
    }
    if (lambda_tau) {
      if (!c.lambda_cm1 || !c.tau_fs) {
        throw ConfigError("config: the ohmic bath needs both 'lambda_cm1' and 'tau_fs'");
      }
      require_positive(*c.lambda_cm1, "lambda_cm1");
      require_positive(*c.tau_fs, "tau_fs");
    } else if (k_cutoff) {
      if (!c.damping_K || !c.omega_c_cm1) {
        throw ConfigError("config: the ohmic bath needs both 'K' and 'omega_c_cm1'");
      }
      if (!(*c.damping_K > 0.0) || *c.damping_K >= 0.5) {
        throw ConfigError("config: 'K' must lie in (0, 0.5)");
      }
      require_positive(*c.omega_c_cm1, "omega_c_cm1");
    } else {
      throw ConfigError(
          "config: the ohmic bath needs 'lambda_cm1'/'tau_fs' or 'K'/'omega_c_cm1'");
    }
  } else {
    if (k_cutoff) {
      throw ConfigError("config: 'K'/'omega_c_cm1' apply to the ohmic bath only");
    }
    if (!c.lambda_cm1 || !c.tau_fs) {
      throw ConfigError("config: the debye bath needs both 'lambda_cm1' and 'tau_fs'");
    }
    require_positive(*c.lambda_cm1, "lambda_cm1");
    require_positive(*c.tau_fs, "tau_fs");
  }

  if (c.output_format != "csv") {
    throw ConfigError("config: 'output_format' supports only 'csv'");
  }
  if (!(c.quad_abs_tol > 0.0) || c.quad_abs_tol > 1e-6) {
    throw ConfigError("config: 'quad_abs_tol' must lie in (0, 1e-6]");
  }
  if (!(c.quad_rel_tol > 0.0) || c.quad_rel_tol > 1e-6) {
    throw ConfigError("config: 'quad_rel_tol' must lie in (0, 1e-6]");
  }
  if (c.quad_panels < 1000) {
    throw ConfigError("config: 'quad_panels' must be at least 1000");
  }
  if (c.samples < 2) {
    throw ConfigError("config: 'samples' must be at least 2");
  }
  require_positive(c.t_max_fs, "t_max_fs");
  if (c.threshold && (!(*c.threshold > 0.0) || !(*c.threshold < 1.0))) {
    throw ConfigError("config: 'threshold' must lie in (0, 1)");
  }
}

}  // namespace

RunConfig parse_config(std::string_view text, const std::string& origin) {
  RunConfig config;
  std::map<std::string, int> seen;

  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto eol = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
    pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
    ++line_no;

    line = trim(line);
    if (line.empty() || line.front() == '#') {
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError(origin + ": expected 'key = value' (line " +
                        std::to_string(line_no) + ")");
    }
    const std::string key{trim(line.substr(0, eq))};
    const std::string_view value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError(origin + ": empty key or value (line " +
                        std::to_string(line_no) + ")");
    }
    if (const auto [it, inserted] = seen.emplace(key, line_no); !inserted) {
      throw ConfigError(origin + ": duplicate key '" + key + "' (line " +
                        std::to_string(line_no) + ", first on line " +
                        std::to_string(it->second) + ")");
    }

    if (key == "epsilon_cm1") {
      config.epsilon_cm1 = parse_number(value, key, line_no);
    } else if (key == "site1_cm1") {
      config.site1_cm1 = parse_number(value, key, line_no);
    } else if (key == "site2_cm1") {
      config.site2_cm1 = parse_number(value, key, line_no);
    } else if (key == "delta_cm1") {
      config.delta_cm1 = parse_number(value, key, line_no);
    } else if (key == "temperature_K") {
      config.temperature_K = parse_number(value, key, line_no);
    } else if (key == "bath") {
      if (value == "ohmic") {
        config.bath = BathKind::ohmic;
      } else if (value == "debye") {
        config.bath = BathKind::debye;
      } else {
        throw ConfigError(origin + ": 'bath' must be 'ohmic' or 'debye' (line " +
                          std::to_string(line_no) + ")");
      }
    } else if (key == "lambda_cm1") {
      config.lambda_cm1 = parse_number(value, key, line_no);
    } else if (key == "tau_fs") {
      config.tau_fs = parse_number(value, key, line_no);
    } else if (key == "K") {
      config.damping_K = parse_number(value, key, line_no);
    } else if (key == "omega_c_cm1") {
      config.omega_c_cm1 = parse_number(value, key, line_no);
    } else if (key == "output_path") {
      config.output_path = std::string{value};
    } else if (key == "output_format") {
      config.output_format = std::string{value};
    } else if (key == "quad_abs_tol") {
      config.quad_abs_tol = parse_number(value, key, line_no);
    } else if (key == "quad_rel_tol") {
      config.quad_rel_tol = parse_number(value, key, line_no);
    } else if (key == "quad_panels") {
      config.quad_panels = static_cast<int>(parse_integer(value, key, line_no));
    } else if (key == "samples") {
      config.samples = static_cast<int>(parse_integer(value, key, line_no));
    } else if (key == "t_max_fs") {
      config.t_max_fs = parse_number(value, key, line_no);
    } else if (key == "threshold") {
      config.threshold = parse_number(value, key, line_no);
    } else {
      throw ConfigError(origin + ": unknown key '" + key + "' (line " +
                        std::to_string(line_no) + ")");
    }
  }

  validate(config);
  return config;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("config: cannot open '" + path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), path);
}

std::string dump_config(const RunConfig& config) {
  std::ostringstream out;
  if (config.epsilon_cm1) {
    out << "epsilon_cm1 = " << format_number(*config.epsilon_cm1) << '\n';
  }
  if (config.site1_cm1) {
    out << "site1_cm1 = " << format_number(*config.site1_cm1) << '\n';
  }
  if (config.site2_cm1) {
    out << "site2_cm1 = " << format_number(*config.site2_cm1) << '\n';
  }
  out << "delta_cm1 = " << format_number(config.delta_cm1) << '\n';
  out << "temperature_K = " << format_number(config.temperature_K) << '\n';
  out << "bath = " << (config.bath == BathKind::ohmic ? "ohmic" : "debye") << '\n';
  if (config.lambda_cm1) {
    out << "lambda_cm1 = " << format_number(*config.lambda_cm1) << '\n';
  }
  if (config.tau_fs) {
    out << "tau_fs = " << format_number(*config.tau_fs) << '\n';
  }
  if (config.damping_K) {
    out << "K = " << format_number(*config.damping_K) << '\n';
  }
  if (config.omega_c_cm1) {
    out << "omega_c_cm1 = " << format_number(*config.omega_c_cm1) << '\n';
  }
  if (config.output_path) {
    out << "output_path = " << *config.output_path << '\n';
  }
  out << "output_format = " << config.output_format << '\n';
  out << "quad_abs_tol = " << format_number(config.quad_abs_tol) << '\n';
  out << "quad_rel_tol = " << format_number(config.quad_rel_tol) << '\n';
  out << "quad_panels = " << config.quad_panels << '\n';
  out << "samples = " << config.samples << '\n';
  out << "t_max_fs = " << format_number(config.t_max_fs) << '\n';
  if (config.threshold) {
    out << "threshold = " << format_number(*config.threshold) << '\n';
  }
  return out.str();
}

namespace {

RunConfig make_preset(double epsilon, double delta, double temperature,
                      BathKind bath, double lambda, double tau) {
  RunConfig c;
  c.epsilon_cm1 = epsilon;
  c.delta_cm1 = delta;
  c.temperature_K = temperature;
  c.bath = bath;
  c.lambda_cm1 = lambda;
  c.tau_fs = tau;
  return c;
}

// Literature parameter sets: the BChl 1-2 dimer of the FMO monomer at the
// two benchmark temperatures, and the central DBV dimer of PC645 at room
// temperature.
const std::map<std::string, RunConfig, std::less<>>& preset_table() {
  static const std::map<std::string, RunConfig, std::less<>> table = {
      {"fmo77", make_preset(75.0, 87.7, 77.0, BathKind::ohmic, 35.0, 50.0)},
      {"fmo277", make_preset(75.0, 87.7, 277.0, BathKind::ohmic, 35.0, 50.0)},
      {"pc645", make_preset(82.0, 319.4, 294.0, BathKind::debye, 130.0, 50.0)},
  };
  return table;
}

}  // namespace

const RunConfig& preset(std::string_view name) {
  const auto& table = preset_table();
  const auto it = table.find(name);
  if (it == table.end()) {
    std::string names;
    for (const auto& [key, value] : table) {
      names += names.empty() ? key : ", " + key;
    }
    throw ConfigError("unknown preset '" + std::string{name} +
                      "'; available: " + names);
  }
  return it->second;
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& [key, value] : preset_table()) {
    names.push_back(key);
  }
  return names;
}

DimerSystem make_system(const RunConfig& config) {
  validate(config);
  DimerSystem system;
  if (config.epsilon_cm1) {
    system.bias_cm1 = *config.epsilon_cm1;
    system.coupling_cm1 = config.delta_cm1;
  } else {
    SiteParams sites{*config.site1_cm1, *config.site2_cm1, config.delta_cm1};
    std::tie(system.bias_cm1, system.coupling_cm1) = reduce_sites(sites);
  }
  system.temperature_K = config.temperature_K;
  if (config.bath == BathKind::ohmic) {
    if (config.lambda_cm1) {
      system.bath = ohmic_from_lambda_tau(*config.lambda_cm1, *config.tau_fs);
    } else {
      system.bath = OhmicExp{*config.damping_K, *config.omega_c_cm1};
    }
  } else {
    system.bath = Debye{*config.lambda_cm1, *config.tau_fs};
  }
  return system;
}

QuadratureControl quadrature_control(const RunConfig& config) {
  return {config.quad_abs_tol, config.quad_rel_tol, config.quad_panels};
}

}  // namespace dimerdyn
