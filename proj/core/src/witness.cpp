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

#include "entwit/witness.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace entwit {

namespace {

// Margin for strict threshold comparisons on exactly computed values, so a
// state sitting numerically on a ceiling (e.g. 2*sqrt(2) against the
// three-party biseparable ceiling) is never misread as clearing it.
constexpr double kEdgeTolerance = 1e-9;

ThresholdStatus classify_against(const MeasuredValue& v, double threshold) {
  if (v.low() > threshold + kEdgeTolerance) return ThresholdStatus::above;
  if (v.high() <= threshold + kEdgeTolerance) return ThresholdStatus::below;
  return ThresholdStatus::straddling;
}

}  // namespace

WitnessThresholds WitnessThresholds::for_parties(int n) {
  if (n < 2 || n > 6) {
    throw std::invalid_argument("WitnessThresholds: party count must be in [2, 6]");
  }
  WitnessThresholds t;
  t.local_realist = 2.0;
  t.biseparable = std::pow(2.0, 0.5 * n);
  t.quantum_max = std::pow(2.0, 0.5 * (n + 1));
  return t;
}

WitnessVerdict condition_a_from_data(const MeasuredValue& magnitude, int n_parties) {
  WitnessVerdict verdict;
  verdict.n_parties = n_parties;
  verdict.tested_value = magnitude;
  verdict.thresholds = WitnessThresholds::for_parties(n_parties);
  verdict.local_realism = classify_against(magnitude, verdict.thresholds.local_realist);
  verdict.n_partite = classify_against(magnitude, verdict.thresholds.biseparable);

  if (verdict.n_partite == ThresholdStatus::above) {
    verdict.classification = Classification::n_partite_witnessed;
  } else if (verdict.local_realism == ThresholdStatus::above) {
    verdict.classification = Classification::local_realism_violated;
  } else if (verdict.local_realism == ThresholdStatus::straddling) {
    verdict.classification = Classification::inconclusive;
  } else {
    verdict.classification = Classification::no_violation;
  }
  return verdict;
}

WitnessVerdict condition_a(const QuantumState& state, const PartySettings& settings) {
  if (settings.n() != state.n_parties()) {
    throw std::invalid_argument("condition_a: settings party count does not match state");
  }
  const BellOperator op = klyshko_operator(settings);
  const double value = expectation(state, op.matrix);
  return condition_a_from_data(MeasuredValue(std::abs(value), 0.0), state.n_parties());
}

double fidelity(const QuantumState& state, const QuantumState& pure_target) {
  if (!pure_target.is_pure()) {
    throw std::invalid_argument("fidelity: target must be a pure state");
  }
  if (pure_target.n_parties() != state.n_parties()) {
    throw std::invalid_argument("fidelity: party counts do not match");
  }
  // <t| rho |t>.
  const std::vector<Complex>& t = *pure_target.ket();
  const std::vector<Complex> rt = state.rho().apply(t);
  Complex overlap(0.0, 0.0);
  for (size_t i = 0; i < t.size(); ++i) overlap += std::conj(t[i]) * rt[i];
  return overlap.real();
}

FidelityReport fidelity_from_components(const MeasuredValue& p_first,
                                        const MeasuredValue& p_second,
                                        const MeasuredValue& re_offdiag) {
  const double slack_first = p_first.sigma + 1e-12;
  const double slack_second = p_second.sigma + 1e-12;
  if (p_first.value < -slack_first || p_first.value > 1.0 + slack_first ||
      p_second.value < -slack_second || p_second.value > 1.0 + slack_second) {
    throw std::invalid_argument("fidelity_from_components: populations must lie in "
                                "[0, 1] within sigma slack");
  }
  const double sum_slack = std::hypot(p_first.sigma, p_second.sigma) + 1e-12;
  if (p_first.value + p_second.value > 1.0 + sum_slack) {
    throw std::invalid_argument("fidelity_from_components: populations sum above 1 "
                                "beyond sigma slack");
  }
  FidelityReport report;
  report.p_first = p_first;
  report.p_second = p_second;
  report.re_offdiag = re_offdiag;
  report.fidelity = scaled(p_first + p_second, 0.5) + re_offdiag;
  report.condition_b_met = report.fidelity.low() > 0.5;
  return report;
}

bool condition_b(const QuantumState& state, const QuantumState& pure_target) {
  return fidelity(state, pure_target) > 0.5 + 1e-12;
}

std::vector<QuantumState> ghz_class_targets() {
  std::vector<QuantumState> targets;
  targets.reserve(8);
  for (int pair = 1; pair <= 4; ++pair) {
    for (int sign : {1, -1}) {
      targets.push_back(ghz_class_state(pair, sign));
    }
  }
  return targets;
}

Harmonic harmonic_extract(const std::vector<std::pair<double, double>>& samples,
                          int frequency) {
  if (frequency < 0) {
    throw std::invalid_argument("harmonic_extract: frequency must be nonnegative");
  }
  const size_t m = samples.size();
  if (m < static_cast<size_t>(2 * frequency + 1)) {
    throw std::invalid_argument("harmonic_extract: too few samples (" + std::to_string(m) +
                                ") for frequency " + std::to_string(frequency) +
                                "; need at least " + std::to_string(2 * frequency + 1));
  }
  const double step = 2.0 * std::numbers::pi / static_cast<double>(m);
  for (size_t k = 0; k < m; ++k) {
    const double expected = samples[0].first + static_cast<double>(k) * step;
    if (std::abs(samples[k].first - expected) > 1e-9) {
      throw std::invalid_argument("harmonic_extract: samples must be uniformly spaced "
                                  "over [0, 2pi) (offset at index " + std::to_string(k) + ")");
    }
  }
  Complex projection(0.0, 0.0);
  for (size_t k = 0; k < m; ++k) {
    const double angle = -static_cast<double>(frequency) * samples[k].first;
    projection += samples[k].second * Complex(std::cos(angle), std::sin(angle));
  }
  projection *= 2.0 / static_cast<double>(m);
  Harmonic h;
  h.amplitude = std::abs(projection);
  h.phase = h.amplitude > 1e-300 ? std::arg(projection) : 0.0;
  return h;
}

}  // namespace entwit
