#include "dimerdyn/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <queue>
#include <vector>

#include "dimerdyn/special_functions.hpp"
#include "dimerdyn/units.hpp"

namespace dimerdyn {

namespace {

void validate(const QuadratureControl& ctl) {
  if (!(ctl.abs_tol > 0.0) || ctl.abs_tol > 1e-6 || !(ctl.rel_tol > 0.0) ||
      ctl.rel_tol > 1e-6) {
    throw std::invalid_argument("QuadratureControl: tolerances must lie in (0, 1e-6]");
  }
  if (ctl.panel_budget < 1000) {
    throw std::invalid_argument("QuadratureControl: panel budget must be at least 10^3");
  }
}

// Angular w*tau product for a wavenumber and a time in fs, dimensionless.
double angular_product(double omega_cm1, double tau_fs) {
  return constants::rad_per_fs_per_cm1 * omega_cm1 * tau_fs;
}

// 15-point Kronrod rule with the embedded 7-point Gauss rule (positive
// half of the symmetric node set).
constexpr double kronrod_x[8] = {
    0.99145537112081263921, 0.94910791234275852453, 0.86486442335976907279,
    0.74153118559939443986, 0.58608723546769113029, 0.40584515137739716691,
    0.20778495500789846760, 0.0,
};
constexpr double kronrod_w[8] = {
    0.02293532201052922496, 0.06309209262997855329, 0.10479001032225018384,
    0.14065325971552591875, 0.16900472663926790283, 0.19035057806478540991,
    0.20443294007529889241, 0.20948214108472782801,
};
constexpr double gauss_w[4] = {
    0.12948496616886969327, 0.27970539148927666790, 0.38183005050511894495,
    0.41795918367346938776,
};

struct PanelResult {
  double integral{};
  double error{};
};

template <typename F>
PanelResult gauss_kronrod_15(const F& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double gauss = 0.0;
  double kronrod = 0.0;
  for (int i = 0; i < 8; ++i) {
    double fsum;
    if (i == 7) {
      fsum = f(mid);
    } else {
      fsum = f(mid - half * kronrod_x[i]) + f(mid + half * kronrod_x[i]);
    }
    kronrod += kronrod_w[i] * fsum;
    if (i % 2 == 1) {
      // odd Kronrod indices are the embedded Gauss-7 nodes (centre included)
      gauss += gauss_w[i / 2] * fsum;
    }
  }
  PanelResult r;
  r.integral = kronrod * half;
  r.error = std::abs((kronrod - gauss) * half);
  return r;
}

struct Panel {
  double a{}, b{};
  PanelResult result{};
  long order{};  // insertion index, breaks ties deterministically
};

struct PanelWorse {
  bool operator()(const Panel& lhs, const Panel& rhs) const {
    if (lhs.result.error != rhs.result.error) {
      return lhs.result.error < rhs.result.error;
    }
    return lhs.order > rhs.order;
  }
};

// Adaptive integration of f over the union of the seed intervals.
template <typename F>
double adaptive_integrate(const F& f, const std::vector<double>& breakpoints,
                          const QuadratureControl& ctl) {
  std::priority_queue<Panel, std::vector<Panel>, PanelWorse> queue;
  long order = 0;
  int panels = 0;
  for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
    Panel p{breakpoints[i], breakpoints[i + 1], {}, order++};
    p.result = gauss_kronrod_15(f, p.a, p.b);
    queue.push(p);
    ++panels;
  }

  double total_integral = 0.0;
  double total_error = 0.0;
  {
    std::priority_queue<Panel, std::vector<Panel>, PanelWorse> copy = queue;
    while (!copy.empty()) {
      total_integral += copy.top().result.integral;
      total_error += copy.top().result.error;
      copy.pop();
    }
  }

  while (total_error > std::max(ctl.abs_tol, ctl.rel_tol * std::abs(total_integral))) {
    if (panels + 2 > ctl.panel_budget) {
      throw QuadratureError(
          "re_u quadrature did not converge within the panel budget (achieved "
          "absolute error " + std::to_string(total_error) + ")",
          total_error);
    }
    Panel worst = queue.top();
    queue.pop();
    total_integral -= worst.result.integral;
    total_error -= worst.result.error;

    const double mid = 0.5 * (worst.a + worst.b);
    Panel left{worst.a, mid, {}, order++};
    Panel right{mid, worst.b, {}, order++};
    left.result = gauss_kronrod_15(f, left.a, left.b);
    right.result = gauss_kronrod_15(f, right.a, right.b);
    total_integral += left.result.integral + right.result.integral;
    total_error += left.result.error + right.result.error;
    queue.push(left);
    queue.push(right);
    panels += 2;
  }
  return total_integral;
}

}  // namespace

OhmicExp ohmic_from_lambda_tau(double lambda_cm1, double tau_fs) {
  if (!(lambda_cm1 > 0.0) || !(tau_fs > 0.0)) {
    throw std::invalid_argument("ohmic_from_lambda_tau: lambda and tau must be positive");
  }
  // cutoff = pi/(2 tau), expressed as a wavenumber
  const double cutoff_cm1 =
      std::numbers::pi / (2.0 * tau_fs * constants::rad_per_fs_per_cm1);
  const double damping = lambda_cm1 / (2.0 * cutoff_cm1);
  if (damping >= 0.5) {
    throw RegimeError(
        "ohmic_from_lambda_tau: damping K = lambda/(2 cutoff) = " +
        std::to_string(damping) + " reaches 0.5; model out of range");
  }
  return {damping, cutoff_cm1};
}

double reorganization_energy_cm1(const SpectralModel& model) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OhmicExp>) {
          return 2.0 * m.damping * m.cutoff_cm1;
        } else {
          return m.reorganization_cm1;
        }
      },
      model);
}

double cutoff_equivalent_cm1(const SpectralModel& model) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OhmicExp>) {
          return m.cutoff_cm1;
        } else {
          return std::numbers::pi /
                 (2.0 * m.relaxation_fs * constants::rad_per_fs_per_cm1);
        }
      },
      model);
}

double coupling_strength(const SpectralModel& model) {
  return std::visit(
      [](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OhmicExp>) {
          return m.damping;
        } else {
          return angular_product(m.reorganization_cm1, m.relaxation_fs) /
                 std::numbers::pi;
        }
      },
      model);
}

double j_omega(const SpectralModel& model, double omega_cm1) {
  if (omega_cm1 < 0.0) {
    throw std::invalid_argument("j_omega: frequency must be non-negative");
  }
  return std::visit(
      [omega_cm1](const auto& m) -> double {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, OhmicExp>) {
          return 2.0 * m.damping * omega_cm1 * std::exp(-omega_cm1 / m.cutoff_cm1);
        } else {
          const double x = angular_product(omega_cm1, m.relaxation_fs);
          return 2.0 * m.reorganization_cm1 * x / (1.0 + x * x);
        }
      },
      model);
}

double noise_power(const SpectralModel& model, double omega_cm1,
                   double temperature_K) {
  if (omega_cm1 < 0.0) {
    throw std::invalid_argument("noise_power: frequency must be non-negative");
  }
  const double kt = thermal_wavenumber({temperature_K}).cm1;
  if (omega_cm1 == 0.0) {
    // S(0) = 2*J'(0)*k_B*T
    return std::visit(
        [kt](const auto& m) -> double {
          using T = std::decay_t<decltype(m)>;
          if constexpr (std::is_same_v<T, OhmicExp>) {
            return 4.0 * m.damping * kt;
          } else {
            return 4.0 * m.reorganization_cm1 *
                   angular_product(1.0, m.relaxation_fs) * kt;
          }
        },
        model);
  }
  return j_omega(model, omega_cm1) * coth_guarded(omega_cm1 / (2.0 * kt));
}

double re_u_of_spectrum(const std::function<double(double)>& j_of_omega,
                        double splitting_cm1, double temperature_K,
                        const QuadratureControl& ctl) {
  validate(ctl);
  if (!(splitting_cm1 > 0.0)) {
    throw std::invalid_argument("re_u_of_spectrum: splitting must be positive");
  }
  const double kt = thermal_wavenumber({temperature_K}).cm1;
  const double pole = splitting_cm1;

  // coth(x) - 1 = 2/expm1(2x), free of cancellation for all x > 0.
  auto g = [&](double w) -> double {
    const double boltzmann = std::expm1(w / kt);
    if (std::isinf(boltzmann)) {
      return 0.0;
    }
    return j_of_omega(w) * 2.0 / boltzmann;
  };

  const double g_pole = g(pole);
  const double step = 1e-5 * pole;
  const double g_slope = (g(pole + step) - g(pole - step)) / (2.0 * step);
  const double h_pole = g_slope / (2.0 * pole);

  auto integrand = [&](double w) -> double {
    if (std::abs(w - pole) <= 1e-9 * pole) {
      return h_pole;
    }
    return (g(w) - g_pole) / ((w - pole) * (w + pole));
  };

  // Extend the window until the discarded part of g is provably below
  // tolerance: past w_max >= 2*max(pole, k_B T) the integrand of the g-term
  // is dominated by a decaying exponential, giving the bound
  // |tail| <= 2*k_B*T*g(w_max)/(w_max^2 - pole^2).
  double w_max = std::max({4.0 * pole, 8.0 * kt, 1.0});
  while (2.0 * kt * g(w_max) / ((w_max - pole) * (w_max + pole)) >
         0.25 * ctl.abs_tol) {
    w_max *= 2.0;
    if (!std::isfinite(w_max)) {
      throw QuadratureError("re_u_of_spectrum: tail bound never satisfied",
                            std::numeric_limits<double>::infinity());
    }
  }

  std::vector<double> breaks{0.0, 0.5 * pole, pole};
  for (double b = 2.0 * pole; b < w_max; b *= 2.0) {
    breaks.push_back(b);
  }
  breaks.push_back(w_max);

  const double body = adaptive_integrate(integrand, breaks, ctl);

  // Exact remainder of the subtracted pole term on [w_max, inf):
  // -g_pole * int dw/(w^2 - pole^2) = -g_pole/(2 pole) * ln((w+p)/(w-p)).
  const double subtraction_tail =
      -g_pole / (2.0 * pole) * std::log((w_max + pole) / (w_max - pole));

  return 0.5 * (body + subtraction_tail);
}

double re_u_at_rabi(const SpectralModel& model, double splitting_cm1,
                    double temperature_K, const QuadratureControl& ctl) {
  return re_u_of_spectrum(
      [&model](double w) { return j_omega(model, w); }, splitting_cm1,
      temperature_K, ctl);
}

}  // namespace dimerdyn
