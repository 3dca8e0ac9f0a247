#include <doctest.h>

#include <cmath>
#include <random>

#include "dimerdyn/rates.hpp"
#include "dimerdyn/units.hpp"

using namespace dimerdyn;

namespace {

bool close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::abs(b);
}

DimerSystem fmo(double temperature) {
  return {75.0, 87.7, temperature, ohmic_from_lambda_tau(35.0, 50.0)};
}

DimerSystem pc645() {
  return {82.0, 319.4, 294.0, Debye{130.0, 50.0}};
}

}  // namespace

TEST_CASE("site reduction") {
  CHECK(reduce_sites({315.0, 240.0, 87.7}) == std::pair{75.0, 87.7});
  CHECK(reduce_sites({120.0, 120.0, 10.0}).first == 0.0);
  CHECK(reduce_sites({17116.0, 17034.0, 319.4}).first == 82.0);
  CHECK_THROWS_WITH_AS(reduce_sites({240.0, 315.0, 87.7}),
                       doctest::Contains("swap the labels"),
                       std::invalid_argument);
  CHECK_THROWS_AS(reduce_sites({315.0, 240.0, 0.0}), std::invalid_argument);
}

TEST_CASE("effective tunneling") {
  // vanishing coupling leaves the bare tunneling
  DimerSystem weak = fmo(77.0);
  weak.bath = OhmicExp{1e-12, 166.782};
  CHECK(close(effective_tunneling(weak), weak.tunneling_cm1(), 1e-9));

  CHECK(close(effective_tunneling(fmo(77.0)), 187.23729955932321, 1e-10));

  // Debye baths pass the bare value through
  CHECK(effective_tunneling(pc645()) == 2.0 * 319.4);

  DimerSystem bad = fmo(77.0);
  bad.bath = OhmicExp{0.5, 166.782};
  CHECK_THROWS_AS(effective_tunneling(bad), RegimeError);
}

TEST_CASE("crossover temperature") {
  const RateSet fmo_rates = compute_rates(fmo(77.0));
  CHECK(close(fmo_rates.crossover_temperature_K, 290.2009980337991, 1e-10));
  const RateSet pc_rates = compute_rates(pc645());
  CHECK(close(pc_rates.crossover_temperature_K, 926.63200367343565, 1e-9));
  // unbiased dimer: splitting reduces to the effective tunneling
  DimerSystem unbiased = fmo(77.0);
  unbiased.bias_cm1 = 0.0;
  const RateSet rates = compute_rates(unbiased);
  CHECK(close(rates.crossover_temperature_K,
              rates.effective_tunneling_cm1 / constants::boltzmann_cm1_per_K,
              1e-12));
}

TEST_CASE("ohmic observables at both benchmark temperatures") {
  const RateSet cold = compute_rates(fmo(77.0));
  CHECK(close(cold.rabi_cm1, 206.50765883220365, 1e-9));
  CHECK(close(cold.relaxation_cm1, 60.002229948668251, 1e-9));
  CHECK(close(cold.decoherence_cm1, 34.879516178205691, 1e-9));
  CHECK(close(period_from_rabi({cold.rabi_cm1}).fs, 163.0, 0.03));
  CHECK(close(rate_to_lifetime({cold.relaxation_cm1}).fs, 90.0, 0.03));
  CHECK(close(rate_to_lifetime({cold.decoherence_cm1}).fs, 153.0, 0.03));

  const RateSet warm = compute_rates(fmo(277.0));
  CHECK(close(warm.rabi_cm1, 223.28269770659562, 1e-9));
  CHECK(close(warm.relaxation_cm1, 119.2036201124201, 1e-9));
  CHECK(close(warm.decoherence_cm1, 77.151383218189579, 1e-9));
  CHECK(close(period_from_rabi({warm.rabi_cm1}).fs, 151.0, 0.03));
  CHECK(close(rate_to_lifetime({warm.relaxation_cm1}).fs, 45.0, 0.03));
  CHECK(close(rate_to_lifetime({warm.decoherence_cm1}).fs, 69.0, 0.03));
}

TEST_CASE("debye observables at room temperature") {
  const RateSet rates = compute_rates(pc645());
  CHECK(close(rates.rabi_cm1, 728.14280770372578, 1e-7));
  CHECK(close(rates.relaxation_cm1, 70.249159760601875, 1e-9));
  CHECK(close(rates.decoherence_cm1, 60.607411828768838, 1e-9));
  CHECK(close(period_from_rabi({rates.rabi_cm1}).fs, 49.0, 0.10));
  CHECK(close(rate_to_lifetime({rates.relaxation_cm1}).fs, 76.0, 0.05));
  CHECK(close(rate_to_lifetime({rates.decoherence_cm1}).fs, 88.0, 0.05));
}

TEST_CASE("bare limit of the Rabi frequency") {
  DimerSystem bare = fmo(77.0);
  bare.bias_cm1 = 0.0;
  bare.bath = OhmicExp{1e-13, 166.782};
  const RateSet rates = compute_rates(bare);
  CHECK(close(rates.rabi_cm1, bare.tunneling_cm1(), 1e-9));
}

TEST_CASE("unbiased decoherence is half the relaxation") {
  DimerSystem unbiased = fmo(77.0);
  unbiased.bias_cm1 = 0.0;
  const RateSet rates = compute_rates(unbiased);
  CHECK(rates.decoherence_cm1 == rates.relaxation_cm1 / 2.0);

  DimerSystem unbiased_debye = pc645();
  unbiased_debye.bias_cm1 = 0.0;
  const RateSet debye_rates = compute_rates(unbiased_debye);
  CHECK(debye_rates.decoherence_cm1 == debye_rates.relaxation_cm1 / 2.0);
}

TEST_CASE("rate set internal ordering") {
  for (const RateSet& rates :
       {compute_rates(fmo(77.0)), compute_rates(fmo(277.0)),
        compute_rates(pc645())}) {
    CHECK(rates.splitting_cm1 >= rates.effective_tunneling_cm1);
    CHECK(rates.decoherence_cm1 >= rates.relaxation_cm1 / 2.0);
    CHECK(rates.rabi_cm1 > 0.0);
    CHECK(rates.relaxation_cm1 > 0.0);
  }
}

TEST_CASE("dimensionless characterization matches the benchmark table") {
  const DimerSystem system = fmo(77.0);
  const auto& bath = std::get<OhmicExp>(system.bath);
  const double tunneling = system.tunneling_cm1();

  CHECK(std::abs(system.bias_cm1 / tunneling - 0.428) < 5e-4);
  CHECK(std::abs(bath.damping - 0.105) < 5e-4);
  CHECK(std::abs(tunneling / bath.cutoff_cm1 - 1.052) < 5e-4);
  CHECK(std::abs(tunneling / thermal_wavenumber({77.0}).cm1 - 3.28) < 5e-3);
  CHECK(std::abs(tunneling / thermal_wavenumber({277.0}).cm1 - 0.911) < 5e-4);
  // the Debye dimer ratio quoted alongside
  CHECK(std::abs(2.0 * 319.4 / thermal_wavenumber({294.0}).cm1 - 3.1262) < 5e-4);
}

TEST_CASE("closed forms agree with the spectral-integral route") {
  std::mt19937 rng(77277);
  std::uniform_real_distribution<double> factor(0.5, 1.5);
  for (int draw = 0; draw < 20; ++draw) {
    DimerSystem system;
    system.bias_cm1 = 75.0 * factor(rng);
    system.coupling_cm1 = 87.7 * factor(rng);
    system.temperature_K = 77.0 * factor(rng) * (draw % 2 ? 1.0 : 3.6);
    system.bath = ohmic_from_lambda_tau(35.0 * factor(rng), 50.0 * factor(rng));

    const RateSet closed = compute_rates(system);
    const RateSet integral = compute_rates_via_integrals(system);
    CHECK(close(integral.rabi_cm1, closed.rabi_cm1, 1e-6));
    CHECK(close(integral.relaxation_cm1, closed.relaxation_cm1, 1e-12));
    CHECK(close(integral.decoherence_cm1, closed.decoherence_cm1, 1e-12));
  }
  // the Debye route is the same on both entry points
  const RateSet a = compute_rates(pc645());
  const RateSet b = compute_rates_via_integrals(pc645());
  CHECK(a.rabi_cm1 == b.rabi_cm1);
  CHECK(a.relaxation_cm1 == b.relaxation_cm1);
}

TEST_CASE("observables scale with a common energy factor") {
  for (double s : {0.5, 2.0, 10.0}) {
    DimerSystem base = fmo(77.0);
    DimerSystem scaled = base;
    scaled.bias_cm1 *= s;
    scaled.coupling_cm1 *= s;
    scaled.temperature_K *= s;
    auto bath = std::get<OhmicExp>(base.bath);
    bath.cutoff_cm1 *= s;
    scaled.bath = bath;

    const RateSet r0 = compute_rates(base);
    const RateSet r1 = compute_rates(scaled);
    CHECK(close(r1.rabi_cm1, s * r0.rabi_cm1, 1e-9));
    CHECK(close(r1.relaxation_cm1, s * r0.relaxation_cm1, 1e-9));
    CHECK(close(r1.decoherence_cm1, s * r0.decoherence_cm1, 1e-9));
  }
  // Debye: scaling energies and shrinking tau by the same factor
  for (double s : {0.5, 3.0}) {
    DimerSystem base = pc645();
    DimerSystem scaled = base;
    scaled.bias_cm1 *= s;
    scaled.coupling_cm1 *= s;
    scaled.temperature_K *= s;
    auto bath = std::get<Debye>(base.bath);
    bath.reorganization_cm1 *= s;
    bath.relaxation_fs /= s;
    scaled.bath = bath;

    const RateSet r0 = compute_rates(base);
    const RateSet r1 = compute_rates(scaled);
    CHECK(close(r1.rabi_cm1, s * r0.rabi_cm1, 1e-7));
    CHECK(close(r1.relaxation_cm1, s * r0.relaxation_cm1, 1e-9));
    CHECK(close(r1.decoherence_cm1, s * r0.decoherence_cm1, 1e-9));
  }
}

TEST_CASE("naive estimators") {
  const NaiveEstimates cold = naive_estimates(130.0, 166.782, 77.0);
  CHECK(close(cold.gaussian_time_fs, 45.005347268410825, 1e-10));
  const NaiveEstimates warm = naive_estimates(130.0, 166.782, 294.0);
  CHECK(close(warm.gaussian_time_fs, 23.032220759215923, 1e-10));

  const NaiveEstimates fmo_naive =
      naive_estimates(35.0, 166.78204759907602, 77.0);
  CHECK(close(fmo_naive.dephasing_rate_cm1, 70.566062740091131, 1e-10));
  CHECK(close(rate_to_lifetime({fmo_naive.dephasing_rate_cm1}).fs,
              75.232161930723709, 1e-10));
  CHECK_THROWS_AS(naive_estimates(0.0, 166.782, 77.0), std::invalid_argument);
}

TEST_CASE("regime flags") {
  const RateSet cold = compute_rates(fmo(77.0));
  CHECK(cold.flags.bias_ratio_ok);
  CHECK(cold.flags.low_temperature_ok);
  CHECK(cold.flags.weak_coupling_ok);
  CHECK(cold.flags.all_ok());

  // 277 K sits narrowly below the crossover, 300 K above it
  CHECK(compute_rates(fmo(277.0)).flags.low_temperature_ok);
  CHECK_FALSE(compute_rates(fmo(300.0)).flags.low_temperature_ok);

  // bias equal to the tunneling is already outside the window
  DimerSystem boundary = fmo(77.0);
  boundary.bias_cm1 = boundary.tunneling_cm1();
  CHECK_FALSE(compute_rates(boundary).flags.bias_ratio_ok);

  CHECK(compute_rates(pc645()).flags.all_ok());
  DimerSystem strong = pc645();
  strong.bath = Debye{600.0, 50.0};
  CHECK_FALSE(compute_rates(strong).flags.weak_coupling_ok);
}

TEST_CASE("system validation") {
  DimerSystem negative_bias = fmo(77.0);
  negative_bias.bias_cm1 = -5.0;
  CHECK_THROWS_AS(compute_rates(negative_bias), std::invalid_argument);
  DimerSystem cold_zero = fmo(0.0);
  CHECK_THROWS_AS(compute_rates(cold_zero), std::invalid_argument);
  DimerSystem no_coupling = fmo(77.0);
  no_coupling.coupling_cm1 = 0.0;
  CHECK_THROWS_AS(compute_rates(no_coupling), std::invalid_argument);
}
