// Copyright 2026 The entwit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <doctest.h>

#include "entwit/bell.hpp"
#include "entwit/experiments.hpp"
#include "entwit/random_states.hpp"
#include "entwit/record_io.hpp"
#include "entwit/state.hpp"
#include "entwit/witness.hpp"

using namespace entwit;

namespace {

constexpr double kPi = std::numbers::pi;

PopulationTable uniform_table() {
  PopulationTable t;
  for (auto& v : t.values) v = MeasuredValue(0.125, 0.01);
  return t;
}

double scan_amplitude(const QuantumState& state, int frequency) {
  std::vector<std::pair<double, double>> samples;
  for (int k = 0; k < 16; ++k) {
    const double phi = 2.0 * kPi * k / 16;
    samples.emplace_back(
        phi, expectation(state, bell_signal_difference_observable(phi)));
  }
  return harmonic_extract(samples, frequency).amplitude;
}

}  // namespace

TEST_CASE("population tables enforce range and normalization") {
  PopulationTable t = uniform_table();
  CHECK_NOTHROW(t.validate());
  CHECK(t.sum().value == doctest::Approx(1.0));
  CHECK(t.sum().sigma == doctest::Approx(std::sqrt(8.0) * 0.01));

  t.at(BasisIndex{3}) = MeasuredValue(1.4, 0.01);
  CHECK_THROWS_AS(t.validate(), std::invalid_argument);

  PopulationTable negative = uniform_table();
  negative.at(BasisIndex{5}) = MeasuredValue(-0.05, 0.01);
  CHECK_THROWS_AS(negative.validate(), std::invalid_argument);
  // Slightly below zero but within sigma is measurement noise, not an error.
  negative.at(BasisIndex{5}) = MeasuredValue(-0.005, 0.01);
  negative.at(BasisIndex{1}) = MeasuredValue(0.255, 0.01);
  CHECK_NOTHROW(negative.validate());

  PopulationTable drifted = uniform_table();
  drifted.at(BasisIndex{1}) = MeasuredValue(0.35, 0.01);
  CHECK_THROWS_AS(drifted.validate(), std::invalid_argument);
}

TEST_CASE("experiment records require at least one measurement") {
  ExperimentRecord empty;
  empty.name = "nothing";
  CHECK_THROWS_AS(empty.validate(), std::invalid_argument);

  ExperimentRecord ok;
  ok.name = "one";
  ok.mermin_value = MeasuredValue(2.0, 0.1);
  CHECK_NOTHROW(ok.validate());
}

TEST_CASE("two-particle model matches its closed-form diagnostics") {
  for (int k = 0; k <= 100; ++k) {
    const double alpha = k / 100.0;
    QuantumState w = build_w_state(alpha);
    CHECK(validate_density(w).accepted);

    CHECK(population(w, BasisIndex{2}) ==
          doctest::Approx(0.5 - alpha / 4).epsilon(1e-12));
    CHECK(population(w, BasisIndex{7}) ==
          doctest::Approx(0.5 - alpha / 4).epsilon(1e-12));
    CHECK(population(w, BasisIndex{4}) ==
          doctest::Approx(alpha / 4).epsilon(1e-12));
    CHECK(population(w, BasisIndex{5}) ==
          doctest::Approx(alpha / 4).epsilon(1e-12));

    // Interference difference: x projectors on parties 1, 2, x on party 3.
    ComplexMatrix interference =
        tensor({x_projector(+1), x_projector(-1), pauli(Axis::x)});
    CHECK(expectation(w, interference) ==
          doctest::Approx(-alpha / 2).epsilon(1e-12));

    // Control: projecting party 1 onto spin-up kills the signal identically.
    ComplexMatrix control =
        tensor({z_projector(0), x_projector(-1), pauli(Axis::x)});
    CHECK(std::abs(expectation(w, control)) < 1e-12);
  }
  CHECK_THROWS_AS(build_w_state(-0.01), std::invalid_argument);
  CHECK_THROWS_AS(build_w_state(1.01), std::invalid_argument);
}

TEST_CASE("two-particle model never crosses the fidelity ceiling") {
  for (double alpha : {0.0, 0.25, 0.375, 0.5, 1.0}) {
    QuantumState w = build_w_state(alpha);
    for (const QuantumState& target : ghz_class_targets()) {
      CHECK(fidelity(w, target) <= 0.5 + 1e-9);
    }
  }
}

TEST_CASE("fit recovers the three-eighths weight from the published targets") {
  WFitReport fit = fit_w_state();
  CHECK(fit.alpha == doctest::Approx(0.375).epsilon(1e-12));
  CHECK(fit.residuals.at(kInterferenceDifference) < 1e-9);
  CHECK(fit.residuals.at(kControlNoInterference) < 1e-12);
  // Populations are reported but cannot be met: 1/2 - alpha/4 = 0.40625.
  CHECK(fit.predicted.at(kPopulationUpUpDown) ==
        doctest::Approx(13.0 / 32.0).epsilon(1e-12));
  CHECK(fit.residuals.at(kPopulationUpUpDown) ==
        doctest::Approx(13.0 / 32.0 - 0.4).epsilon(1e-9));
  CHECK(!fit.notes.empty());
  CHECK(fit.targets.size() == default_w_fit_targets().size());
}

TEST_CASE("fit validates its constraint ids") {
  std::map<std::string, MeasuredValue> bad = default_w_fit_targets();
  bad["no_such_constraint"] = MeasuredValue(0.0, 0.1);
  CHECK_THROWS_AS(fit_w_state(bad), std::invalid_argument);

  std::map<std::string, MeasuredValue> missing = default_w_fit_targets();
  missing.erase(kInterferenceDifference);
  CHECK_THROWS_AS(fit_w_state(missing), std::invalid_argument);
}

TEST_CASE("fit tracks a shifted interference target") {
  std::map<std::string, MeasuredValue> targets = default_w_fit_targets();
  targets[kInterferenceDifference] = MeasuredValue(-0.25, 0.01);
  WFitReport fit = fit_w_state(targets);
  // -alpha/2 = -0.25 at alpha = 0.5.
  CHECK(fit.alpha == doctest::Approx(0.5).epsilon(1e-9));
}

TEST_CASE("worst-case accounting reproduces the bundled-record numbers") {
  ExperimentRecord record = bundled_record("rauschenbeutel");
  REQUIRE(record.populations.has_value());
  REQUIRE(record.signal_amplitude.has_value());
  WorstCaseReport r =
      worst_case_amplitude(*record.populations, *record.signal_amplitude);

  CHECK(r.alpha.value == doctest::Approx(0.06).epsilon(1e-12));
  CHECK(r.alpha.sigma == doctest::Approx(0.02).epsilon(1e-12));
  CHECK(r.beta.value == doctest::Approx(0.08).epsilon(1e-12));
  CHECK(r.gamma.value == doctest::Approx(0.12).epsilon(1e-12));

  CHECK(r.w.value == doctest::Approx(0.26).epsilon(1e-12));
  CHECK(r.w.value ==
        doctest::Approx(r.alpha.value + r.beta.value + r.gamma.value));
  CHECK(r.w.sigma == doctest::Approx(std::sqrt(3.0) * 0.02).epsilon(1e-12));

  CHECK(r.two_re_offdiag.value == doctest::Approx(0.02).epsilon(1e-9));
  CHECK(r.two_re_offdiag.sigma ==
        doctest::Approx(std::hypot(0.04, std::sqrt(3.0) * 0.02)).epsilon(1e-12));
  CHECK(r.re_offdiag.value == doctest::Approx(0.01).epsilon(1e-9));

  CHECK(r.corrected_fidelity.value == doctest::Approx(0.30).epsilon(1e-9));
  const double expected_sigma = std::sqrt(
      0.005 * 0.005 + 0.005 * 0.005 +
      0.25 * (0.04 * 0.04 + 3.0 * 0.02 * 0.02));
  CHECK(r.corrected_fidelity.sigma ==
        doctest::Approx(expected_sigma).epsilon(1e-12));
  CHECK(!r.notes.empty());
}

TEST_CASE("worst-case accounting picks the smaller population of each pair") {
  PopulationTable t = uniform_table();
  t.at(BasisIndex{1}) = MeasuredValue(0.20, 0.03);
  t.at(BasisIndex{8}) = MeasuredValue(0.05, 0.02);
  CHECK_NOTHROW(t.validate());
  WorstCaseReport r = worst_case_amplitude(t, MeasuredValue(0.5, 0.01));
  CHECK(r.alpha.value == doctest::Approx(0.10).epsilon(1e-12));
  // Sigma follows the selected (smaller) population.
  CHECK(r.alpha.sigma == doctest::Approx(0.04).epsilon(1e-12));
}

TEST_CASE("worst-case state is a valid density with additive amplitude") {
  ExperimentRecord record = bundled_record("rauschenbeutel");
  QuantumState state = worst_case_state(*record.populations);
  CHECK(validate_density(state).accepted);

  const double coherences =
      std::abs(matrix_element(state, BasisIndex{1}, BasisIndex{8})) +
      std::abs(matrix_element(state, BasisIndex{2}, BasisIndex{7})) +
      std::abs(matrix_element(state, BasisIndex{3}, BasisIndex{6})) +
      std::abs(matrix_element(state, BasisIndex{4}, BasisIndex{5}));
  CHECK(scan_amplitude(state, 1) ==
        doctest::Approx(2.0 * coherences).epsilon(1e-9));
}

TEST_CASE("counterfeit mixture imitates the interference diagnostics") {
  QuantumState rho = rho_mix();
  CHECK(validate_density(rho).accepted);

  ContaminationDemo demo = demonstrate_rho_mix();
  CHECK(demo.p_first == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(demo.p_second == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(demo.amplitude == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(demo.implied_fidelity == doctest::Approx(0.75).epsilon(1e-9));
  CHECK(demo.true_fidelity == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(demo.offdiag_abs == doctest::Approx(0.25).epsilon(1e-12));

  CHECK(fidelity(rho, psi_b()) == doctest::Approx(0.5).epsilon(1e-12));
  // The witness correctly refuses the counterfeit.
  CHECK(!condition_b(rho, psi_b()));
}

TEST_CASE("bell-combination record analysis matches the bundled numbers") {
  BellMeasurementAnalysis a = analyze_pan(bundled_record("pan"));
  CHECK(a.verdict.classification == Classification::local_realism_violated);
  CHECK(a.verdict.n_partite == ThresholdStatus::straddling);
  CHECK(a.inferred_re_offdiag.value == doctest::Approx(2.83 / 8.0).epsilon(1e-12));
  CHECK(a.inferred_re_offdiag.sigma == doctest::Approx(0.09 / 8.0).epsilon(1e-12));
  CHECK(a.assumed_population.value == doctest::Approx(0.40));
  CHECK(a.hypothetical_fidelity.fidelity.value ==
        doctest::Approx(0.40 + 2.83 / 8.0).epsilon(1e-12));
  CHECK(a.hypothetical_fidelity.condition_b_met);

  ExperimentRecord no_mermin = bundled_record("rauschenbeutel");
  CHECK_THROWS_AS(analyze_pan(no_mermin), std::invalid_argument);
}

TEST_CASE("bell-combination inference closes the loop on synthetic records") {
  std::mt19937_64 rng(311);
  for (int trial = 0; trial < 20; ++trial) {
    QuantumState rho = random_density(3, rng);
    const double e = expectation(rho, mermin_operator().matrix);
    ExperimentRecord record;
    record.name = "synthetic";
    record.mermin_value = MeasuredValue(e, 0.0);
    BellMeasurementAnalysis a = analyze_pan(record);
    const double re18 = matrix_element(rho, BasisIndex{1}, BasisIndex{8}).real();
    CHECK(a.inferred_re_offdiag.value ==
          doctest::Approx(std::abs(re18)).epsilon(1e-9));
  }
}

TEST_CASE("amplitude-fidelity analysis flags the unmet witness") {
  AmplitudeFidelityAnalysis a = analyze_rauschenbeutel(bundled_record("rauschenbeutel"));
  CHECK(a.naive_fidelity.value == doctest::Approx(0.43).epsilon(1e-12));
  CHECK(a.naive_fidelity.sigma ==
        doctest::Approx(std::sqrt(0.005 * 0.005 * 2 + 0.02 * 0.02)).epsilon(1e-12));
  CHECK(!a.naive_condition_b_met);
  CHECK(a.claimed_fidelity.value == doctest::Approx(0.54));
  CHECK(a.claimed_fidelity.sigma == doctest::Approx(0.03));
  CHECK(a.worst_case.corrected_fidelity.value == doctest::Approx(0.30).epsilon(1e-9));
  CHECK(a.condition_b_unmet);
  CHECK(!a.notes.empty());

  ExperimentRecord no_populations = bundled_record("pan");
  CHECK_THROWS_AS(analyze_rauschenbeutel(no_populations), std::invalid_argument);
}

TEST_CASE("bundled records are enumerable and guarded") {
  std::vector<std::string> names = bundled_record_names();
  REQUIRE(names.size() == 2);
  CHECK(names[0] == "pan");
  CHECK(names[1] == "rauschenbeutel");
  CHECK_NOTHROW(bundled_record("pan").validate());
  CHECK_NOTHROW(bundled_record("rauschenbeutel").validate());
  CHECK_THROWS_AS(bundled_record("unknown"), std::invalid_argument);
}
