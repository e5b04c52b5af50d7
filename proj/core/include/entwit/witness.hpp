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

#pragma once

#include <optional>
#include <vector>

#include "entwit/bell.hpp"
#include "entwit/measured.hpp"
#include "entwit/state.hpp"

namespace entwit {

enum class Classification {
  no_violation,
  local_realism_violated,
  n_partite_witnessed,
  inconclusive,
};

enum class ThresholdStatus { below, above, straddling };

/** The three reference levels for the N-party recursive Bell combination. */
struct WitnessThresholds {
  double local_realist = 2.0;    // ceiling for local hidden-variable models
  double biseparable = 0.0;      // 2^(N/2): ceiling without genuine N-party entanglement
  double quantum_max = 0.0;      // 2^((N+1)/2): algebraic quantum ceiling
  static WitnessThresholds for_parties(int n);
};

/**
 * Verdict on a Bell-combination magnitude. `tested_value` is |E| with its
 * sigma (zero for exact state computations). Status fields compare the
 * one-sigma interval against each threshold; `above` requires the whole
 * interval to clear the threshold by more than 1e-9, `straddling` means the
 * interval contains it. The overall classification is n_partite_witnessed
 * if the biseparable ceiling is cleared, else local_realism_violated if the
 * local-realist ceiling is cleared, else inconclusive if the interval
 * straddles the local-realist ceiling, else no_violation.
 */
struct WitnessVerdict {
  int n_parties = 0;
  MeasuredValue tested_value;
  WitnessThresholds thresholds;
  ThresholdStatus local_realism = ThresholdStatus::below;
  ThresholdStatus n_partite = ThresholdStatus::below;
  Classification classification = Classification::no_violation;
};

/**
 * Entanglement witness from a Bell scan: evaluates |E(F_N)| for the given
 * settings on the state and classifies it. A value above 2^(N/2) witnesses
 * genuine N-party entanglement.
 */
WitnessVerdict condition_a(const QuantumState& state, const PartySettings& settings);

/** Same classification applied to an experimentally measured magnitude. */
WitnessVerdict condition_a_from_data(const MeasuredValue& magnitude, int n_parties);

/** <target| rho |target> for a pure target; plain overlap, exact arithmetic. */
double fidelity(const QuantumState& state, const QuantumState& pure_target);

/**
 * Fidelity report for preparation of a two-branch superposition
 * (|i> + |j>)/sqrt(2) assembled from measured pieces:
 *   F = (p_i + p_j)/2 + re_offdiag.
 * Condition B: F - sigma > 1/2 certifies genuine three-party entanglement
 * (no biseparable state exceeds 1/2).
 */
struct FidelityReport {
  MeasuredValue p_first;
  MeasuredValue p_second;
  MeasuredValue re_offdiag;
  MeasuredValue fidelity;
  bool condition_b_met = false;
};

FidelityReport fidelity_from_components(const MeasuredValue& p_first,
                                        const MeasuredValue& p_second,
                                        const MeasuredValue& re_offdiag);

/** True iff fidelity(state, target) > 1/2 (+1e-12 guard), i.e. condition B on exact states. */
bool condition_b(const QuantumState& state, const QuantumState& pure_target);

/**
 * All eight maximally entangled three-party basis targets
 * (|pair> ± |flipped pair>)/sqrt(2), pair = 1..4; the fidelity ceiling 1/2
 * for biseparable states holds against every one of them.
 */
std::vector<QuantumState> ghz_class_targets();

/** Result of the deterministic settings search. */
struct OptimizeResult {
  PartySettings settings;
  double achieved = 0.0;  // |E(F_N)| at the returned settings
};

/**
 * Deterministic search for settings maximizing |E(F_N)| on the state.
 * Angles restricted to `plane` when given (one angle per direction),
 * otherwise full sphere (two angles per direction). Coordinate ascent over
 * a 24-point grid per angle (12x24 per direction on the sphere) followed by
 * cyclic golden-section refinement until a sweep improves by less than
 * 1e-10 (or 200 sweeps); run from a fixed list of starts, best result wins,
 * exact ties resolved toward the earlier/lower candidate.
 */
OptimizeResult optimize_settings(const QuantumState& state,
                                 std::optional<Plane> plane);

/** One extracted Fourier component of a periodic scan. */
struct Harmonic {
  double amplitude = 0.0;
  double phase = 0.0;
};

/**
 * Amplitude and phase of the cos(frequency * phi + phase) component of a
 * scan sampled at M uniformly spaced phi on [0, 2pi), via the projection
 *   c = (2/M) * sum_k value_k * exp(-i * frequency * phi_k).
 * Exact for signals bandlimited to f_max when M >= 2*f_max + 1 (the scans
 * produced here have f_max = 3). Requires frequency >= 0 and
 * M >= 2*frequency + 1; rejects non-uniform grids (tolerance 1e-9). The
 * factor 2 compensates the two-sided spectrum of genuine oscillations, so
 * projecting at frequency 0 returns twice the mean.
 */
Harmonic harmonic_extract(const std::vector<std::pair<double, double>>& samples,
                          int frequency);

}  // namespace entwit
