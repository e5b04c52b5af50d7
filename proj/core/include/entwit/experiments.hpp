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

#ifndef ENTWIT_EXPERIMENTS_HPP_
#define ENTWIT_EXPERIMENTS_HPP_

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "entwit/basis.hpp"
#include "entwit/measured.hpp"
#include "entwit/state.hpp"
#include "entwit/witness.hpp"

namespace entwit {

/**
 * Measured three-qubit basis populations, indexed by basis label 1..8.
 * Valid tables have every entry in [0, 1] within its one-sigma slack and
 * sum to 1 within the quadrature-combined sigma plus an 0.02 allowance for
 * normalization drift in published tables.
 */
struct PopulationTable {
  std::array<MeasuredValue, 8> values;

  const MeasuredValue& at(BasisIndex index) const;
  MeasuredValue& at(BasisIndex index);
  /** Sum of all eight entries, sigma combined in quadrature. */
  MeasuredValue sum() const;
  /** Throws std::invalid_argument naming the violated invariant. */
  void validate() const;
};

/** One correlation measurement tagged with a free-form setting label. */
struct CorrelationEntry {
  std::string setting;
  MeasuredValue value;
};

/**
 * A published experiment's numbers, as bundled or loaded from JSON.
 * At least one measurement field must be present.
 */
struct ExperimentRecord {
  std::string name;
  std::optional<PopulationTable> populations;
  std::vector<CorrelationEntry> correlations;
  std::optional<MeasuredValue> signal_amplitude;  // fitted oscillation amplitude A
  std::optional<MeasuredValue> mermin_value;      // measured x/y Bell combination

  /** Throws std::invalid_argument if no measurement field is present. */
  void validate() const;
};

/**
 * Analysis of a Bell-combination measurement (the bundled "pan" record):
 * threshold verdict on the measured magnitude, the far off-diagonal
 * magnitude it implies (|value| / 8 for the x/y Bell combination), and the
 * fidelity that would follow if both extreme populations took the supplied
 * value (default 0.40 +- 0.01, the published 12:1 population scenario).
 */
struct BellMeasurementAnalysis {
  WitnessVerdict verdict;
  MeasuredValue inferred_re_offdiag;
  MeasuredValue assumed_population;
  FidelityReport hypothetical_fidelity;
};

BellMeasurementAnalysis analyze_pan(
    const ExperimentRecord& record,
    const MeasuredValue& assumed_population = MeasuredValue(0.40, 0.01));

/**
 * Two-particle-entangled three-qubit mixture with one tunable weight:
 *   alpha * (x-minus projector on party 2) x (singlet on parties 1,3)
 *   + (1 - alpha)/2 * (|uud><uud| + |ddu><ddu|).
 * By construction no genuine three-party entanglement is present, yet the
 * populations and one interference signal can imitate a two-branch
 * superposition. alpha must lie in [0, 1].
 */
QuantumState build_w_state(double alpha);

/** Constraint ids used by fit_w_state maps. */
inline constexpr const char* kPopulationUpUpDown = "population_up_up_down";
inline constexpr const char* kPopulationDownDownUp = "population_down_down_up";
inline constexpr const char* kResidualPopulationsPaired = "residual_populations_paired";
inline constexpr const char* kResidualPopulationsEmpty = "residual_populations_empty";
inline constexpr const char* kInterferenceDifference = "interference_difference";
inline constexpr const char* kControlNoInterference = "control_no_interference";

/**
 * Fit of build_w_state's weight against measured constraints. `predicted`
 * holds every constraint's value at the selected alpha, recomputed from the
 * assembled density matrix (never from closed forms); `residuals` holds
 * |predicted - target| for each supplied target. The fit minimizes the
 * maximum residual over the two correlation constraints
 * (interference_difference, control_no_interference) on a 1e-4 grid over
 * [0, 1], ties resolved toward smaller alpha; population constraints are
 * reported but deliberately left out of the objective, since no alpha can
 * satisfy them simultaneously with the interference constraint. `notes`
 * spells out the constraints the model cannot meet.
 */
struct WFitReport {
  double alpha = 0.0;
  std::map<std::string, double> predicted;
  std::map<std::string, MeasuredValue> targets;
  std::map<std::string, double> residuals;
  std::vector<std::string> notes;
};

/** The published constraint targets for the fit. */
std::map<std::string, MeasuredValue> default_w_fit_targets();

WFitReport fit_w_state(const std::map<std::string, MeasuredValue>& targets);
WFitReport fit_w_state();

/**
 * Worst-case accounting of how much of a measured interference amplitude A
 * could come from coherences other than the one between the two target
 * branches. Cross-branch coherences are bounded by the populations they
 * connect: alpha/2 = min(P1, P8), beta/2 = min(P4, P5), gamma/2 =
 * min(P3, P6), each inheriting the sigma of the selected population (first
 * index on ties). w = alpha + beta + gamma (quadrature sigma) is the
 * maximal spurious amplitude; the corrected branch coherence is
 * 2*Re rho_72 = A - w, and the corrected fidelity is
 * (P2 + P7)/2 + (A - w)/2, both with quadrature sigmas. All phases are
 * taken worst-case aligned.
 */
struct WorstCaseReport {
  MeasuredValue alpha;  // full mixture fractions: w = alpha + beta + gamma
  MeasuredValue beta;
  MeasuredValue gamma;
  MeasuredValue w;
  MeasuredValue two_re_offdiag;      // A - w
  MeasuredValue re_offdiag;          // (A - w)/2
  MeasuredValue corrected_fidelity;  // (P2 + P7)/2 + (A - w)/2
  std::vector<std::string> notes;    // sigma-convention comparisons vs quoted values
};

WorstCaseReport worst_case_amplitude(const PopulationTable& populations,
                                     const MeasuredValue& amplitude);

/**
 * The extremal mixture realizing the worst case: maximal-coherence pure
 * pieces on the (1,8), (4,5), (3,6) cross-diagonal pairs with aligned
 * phases, plus a diagonal remainder. Populations are renormalized to unit
 * trace. Throws std::invalid_argument when the fractions exceed 1 (no such
 * decomposition exists).
 */
QuantumState worst_case_state(const PopulationTable& populations);

/**
 * Incoherent two-branch mixture that counterfeits the interference
 * diagnostics of the (|uud> + |ddu>)/sqrt(2) superposition: equal mixture
 * of (x-plus on party 2) x (triplet on parties 1,3) and (x-minus on
 * party 2) x (singlet on parties 1,3).
 */
QuantumState rho_mix();

/**
 * Numbers demonstrating why populations-plus-amplitude overstates fidelity
 * on rho_mix: populations 1/4 each, unit difference-signal amplitude (from
 * a 16-point phase scan), implied fidelity 3/4 — while the true overlap
 * with the target superposition is only 1/2.
 */
struct ContaminationDemo {
  double p_first = 0.0;          // population of |uud>
  double p_second = 0.0;         // population of |ddu>
  double amplitude = 0.0;        // frequency-1 amplitude of the difference signal
  double implied_fidelity = 0.0; // (p_first + p_second + amplitude) / 2
  double true_fidelity = 0.0;    // exact overlap with (|uud> + |ddu>)/sqrt(2)
  double offdiag_abs = 0.0;      // |<uud| rho |ddu>|
};

ContaminationDemo demonstrate_rho_mix();

/**
 * Full analysis of a populations-plus-amplitude record (the bundled
 * "rauschenbeutel" record): the naive fidelity (P2 + P7 + A)/2 with
 * quadrature sigma, the experiment's published fidelity claim carried for
 * comparison, and the worst-case correction. condition_b_unmet is set when
 * the corrected fidelity's one-sigma interval lies entirely below 1/2.
 */
struct AmplitudeFidelityAnalysis {
  MeasuredValue naive_fidelity;
  MeasuredValue claimed_fidelity;
  WorstCaseReport worst_case;
  bool naive_condition_b_met = false;
  bool condition_b_unmet = false;
  std::vector<std::string> notes;
};

AmplitudeFidelityAnalysis analyze_rauschenbeutel(const ExperimentRecord& record);

/** JSON renderings of the analysis reports (canonical: sorted keys, 2-space indent). */
std::string to_json(const BellMeasurementAnalysis& report);
std::string to_json(const WFitReport& report);
std::string to_json(const WorstCaseReport& report);
std::string to_json(const ContaminationDemo& report);
std::string to_json(const AmplitudeFidelityAnalysis& report);

}  // namespace entwit

#endif  // ENTWIT_EXPERIMENTS_HPP_
