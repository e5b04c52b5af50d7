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

#include "entwit/complex_matrix.hpp"
#include "entwit/spin.hpp"
#include "entwit/state.hpp"

namespace entwit {

/** Primary and alternative measurement direction for one party. */
struct PartySetting {
  SpinDirection a;
  SpinDirection a_prime;
};

/** One (a, a') pair per party, party 1 first. */
struct PartySettings {
  std::vector<PartySetting> parties;
  int n() const { return static_cast<int>(parties.size()); }
};

enum class Plane { xy, xz };

/** Per-party angle pair within a fixed plane; angles are radians from the x axis. */
struct PlanarParty {
  double a = 0.0;
  double a_prime = 0.0;
};

struct PlanarSettings {
  Plane plane = Plane::xy;
  std::vector<PlanarParty> parties;
  PartySettings to_party_settings() const;
};

enum class BellKind { chsh, recursive, recursive_primed, mermin };

/** A Bell combination materialized as a Hermitian matrix on n parties. */
struct BellOperator {
  int n_parties = 0;
  BellKind kind = BellKind::chsh;
  ComplexMatrix matrix;
};

/**
 * Two-party combination AB + A'B + AB' - A'B'. Local hidden-variable models
 * keep its expectation within [-2, 2]; quantum states reach 2*sqrt(2).
 */
BellOperator chsh_operator(const PartySettings& settings);

/**
 * N-party recursive Bell combination built from the two-party base by
 *   F_N = 1/2 (A_N + A'_N) F_{N-1} + 1/2 (A_N - A'_N) F'_{N-1},
 * where the primed combination swaps every a <-> a' and the newly added
 * factor acts on the highest-numbered party. For three parties this expands
 * exactly to A(x)B(x)C' + A(x)B'(x)C + A'(x)B(x)C - A'(x)B'(x)C'.
 * `primed` requests F'_N instead. Accepts 2 to 6 parties.
 *
 * Expectation bounds: 2 for local-realist (and fully separable) states,
 * 2^(N/2) for states with no genuine N-party entanglement, 2^((N+1)/2) for
 * arbitrary quantum states.
 */
BellOperator klyshko_operator(const PartySettings& settings, bool primed = false);

/**
 * The three-party combination xyy + yxy + yyx - xxx of spin components.
 * Algebraically equal to -4 (|ddd><uuu| + |uuu><ddd|), so its expectation
 * on any three-party state is -8 * Re <uuu| rho |ddd>.
 */
BellOperator mermin_operator();

struct IdentityCheck {
  bool ok = false;
  double max_defect = 0.0;
};

/** Verifies the mermin combination equals -4 (|ddd><uuu| + |uuu><ddd|) entrywise. */
IdentityCheck mermin_identity_check();

/**
 * Three-party product observable n_phi . sigma (x) n_phi . sigma (x)
 * n_{sign*phi} . sigma with n_phi = (cos phi, sin phi, 0); sign is +1 or -1.
 * Scanning phi exposes the third-harmonic interference of ghz-class states.
 */
ComplexMatrix sackett_observable(int sign, double phi);

/**
 * sigma_x (x) sigma_x (x) n_phi . sigma: the difference of the two
 * party-2-conditioned interference signals. Only the four anti-diagonal
 * coherences rho(7,2), rho(5,4), rho(3,6), rho(1,8) feed its phi-dependence.
 */
ComplexMatrix bell_signal_difference_observable(double phi);

/**
 * Tr(rho sigma_x (x) P_sign (x) n_phi . sigma) / Tr(rho 1 (x) P_sign (x) 1):
 * the party-1/party-3 interference signal conditioned on projecting party 2
 * onto the x-basis outcome `sign` (+1 or -1). Throws if the conditioning
 * probability is below 1e-12.
 */
double conditional_bell_signal(const QuantumState& state, int sign, double phi);

}  // namespace entwit
