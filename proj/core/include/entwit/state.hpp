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
#include <span>
#include <string>
#include <vector>

#include "entwit/basis.hpp"
#include "entwit/complex_matrix.hpp"

namespace entwit {

enum class StateKind { pure, density };

/**
 * Outcome of density-matrix validation. `accepted` is true iff the matrix is
 * Hermitian (defect <= 1e-9), unit-trace (defect <= 1e-9) and positive
 * semidefinite (smallest eigenvalue >= -1e-9, solver tolerance 1e-12).
 * `failures` names each violated requirement.
 */
struct ValidationReport {
  double hermiticity_defect = 0.0;
  double trace_defect = 0.0;
  double min_eigenvalue = 0.0;
  bool accepted = false;
  std::vector<std::string> failures;
};

/**
 * State of n spin-1/2 parties, either a pure ket or a density matrix.
 *
 * A density matrix is always carried (for pure states it is the ket's outer
 * product), so expectation values take one code path. Pure kets are stored
 * with unit norm and the global phase fixed so that the first amplitude
 * larger than 1e-12 in magnitude is real and positive.
 */
class QuantumState {
 public:
  /**
   * Pure state from amplitudes ordered by basis label. The input must have
   * length 2^n and unit norm within 1e-9; it is then normalized exactly and
   * phase-fixed as above.
   */
  static QuantumState pure(int n_parties, std::vector<Complex> amplitudes);

  /**
   * Mixed state from a density matrix; rejects input that fails
   * validate_density_matrix.
   */
  static QuantumState density(int n_parties, ComplexMatrix rho);

  int n_parties() const { return n_parties_; }
  StateKind kind() const { return kind_; }
  bool is_pure() const { return kind_ == StateKind::pure; }

  /** Amplitudes; only present for pure states. */
  const std::optional<std::vector<Complex>>& ket() const { return ket_; }
  const ComplexMatrix& rho() const { return rho_; }

 private:
  QuantumState(int n, StateKind kind, std::optional<std::vector<Complex>> ket,
               ComplexMatrix rho);

  int n_parties_;
  StateKind kind_;
  std::optional<std::vector<Complex>> ket_;
  ComplexMatrix rho_;
};

/** (|up..up> + |down..down>)/sqrt(2) on n parties (2 <= n <= 6). */
QuantumState ghz(int n_parties);

/** (|up,up,down> + |down,down,up>)/sqrt(2), the three-photon interference target. */
QuantumState psi_b();

/**
 * Maximally entangled three-party basis state
 * (|pair> + sign * |bit-flipped pair>)/sqrt(2), where `pair` runs over the
 * basis labels 1..4 and sign is +1 or -1. pair 1, sign +1 is ghz(3);
 * pair 2, sign +1 is psi_b().
 */
QuantumState ghz_class_state(int pair, int sign);

/**
 * Equal mixture of (spin-up on party 1) x (singlet on parties 2,3) and
 * (spin-down on party 1) x (triplet on parties 2,3). Only two-party
 * entangled, yet it drives the three-party Bell combination to 2*sqrt(2).
 */
QuantumState singlet_triplet_mix();

/** Convex mixture sum_i weights[i] * states[i]; weights nonnegative, sum 1 within 1e-9. */
QuantumState mix(std::span<const double> weights, std::span<const QuantumState> states);

/** Tr(rho * obs) for a Hermitian observable; imaginary residue above 1e-9 is an error. */
double expectation(const QuantumState& state, const ComplexMatrix& obs);

/** <i| rho |j> by one-based basis labels. */
Complex matrix_element(const QuantumState& state, BasisIndex i, BasisIndex j);

/** Diagonal element <i| rho |i> as a real population. */
double population(const QuantumState& state, BasisIndex i);

/** Validation verdict for an alleged density matrix (see ValidationReport). */
ValidationReport validate_density_matrix(const ComplexMatrix& rho);

/** Validation verdict for the state's density matrix. */
ValidationReport validate_density(const QuantumState& state);

/**
 * Relabel parties: party p of the input becomes party perm[p-1] of the
 * output (perm is a 1-based permutation of 1..n). Pure stays pure.
 */
QuantumState permute_parties(const QuantumState& state, std::span<const int> perm);

}  // namespace entwit
