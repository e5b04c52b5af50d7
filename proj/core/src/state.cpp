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

#include "entwit/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

#include "entwit/hermitian_eigen.hpp"

namespace entwit {

QuantumState::QuantumState(int n, StateKind kind,
                           std::optional<std::vector<Complex>> ket,
                           ComplexMatrix rho)
    : n_parties_(n), kind_(kind), ket_(std::move(ket)), rho_(std::move(rho)) {}

QuantumState QuantumState::pure(int n_parties, std::vector<Complex> amplitudes) {
  const int dim = basis_dim(n_parties);
  if (amplitudes.size() != static_cast<size_t>(dim)) {
    throw std::invalid_argument("QuantumState::pure: expected " + std::to_string(dim) +
                                " amplitudes, got " + std::to_string(amplitudes.size()));
  }
  double norm2 = 0.0;
  for (const Complex& a : amplitudes) norm2 += std::norm(a);
  if (std::abs(norm2 - 1.0) > 1e-9) {
    throw std::invalid_argument("QuantumState::pure: ket norm must be 1 within 1e-9 "
                                "(|ket|^2 = " + std::to_string(norm2) + ")");
  }
  const double inv_norm = 1.0 / std::sqrt(norm2);
  for (Complex& a : amplitudes) a *= inv_norm;

  // Global phase: first non-negligible amplitude made real positive.
  for (const Complex& a : amplitudes) {
    const double mag = std::abs(a);
    if (mag > 1e-12) {
      const Complex rotation = std::conj(a) / mag;
      for (Complex& b : amplitudes) b *= rotation;
      break;
    }
  }

  ComplexMatrix rho = ComplexMatrix::outer(amplitudes, amplitudes);
  return QuantumState(n_parties, StateKind::pure, std::move(amplitudes), std::move(rho));
}

QuantumState QuantumState::density(int n_parties, ComplexMatrix rho) {
  const int dim = basis_dim(n_parties);
  if (rho.dim() != dim) {
    throw std::invalid_argument("QuantumState::density: expected dimension " +
                                std::to_string(dim) + ", got " + std::to_string(rho.dim()));
  }
  const ValidationReport report = validate_density_matrix(rho);
  if (!report.accepted) {
    std::string msg = "QuantumState::density: invalid density matrix:";
    for (const std::string& f : report.failures) msg += " " + f + ";";
    throw std::invalid_argument(msg);
  }
  return QuantumState(n_parties, StateKind::density, std::nullopt, std::move(rho));
}

QuantumState ghz(int n_parties) {
  if (n_parties < 2 || n_parties > 6) {
    throw std::invalid_argument("ghz: party count must be in [2, 6], got " +
                                std::to_string(n_parties));
  }
  const int dim = basis_dim(n_parties);
  std::vector<Complex> ket(static_cast<size_t>(dim), Complex(0.0, 0.0));
  const double amp = 1.0 / std::sqrt(2.0);
  ket.front() = amp;
  ket.back() = amp;
  return QuantumState::pure(n_parties, std::move(ket));
}

QuantumState ghz_class_state(int pair, int sign) {
  if (pair < 1 || pair > 4) {
    throw std::invalid_argument("ghz_class_state: pair must be in [1, 4]");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("ghz_class_state: sign must be +1 or -1");
  }
  std::vector<Complex> ket(8, Complex(0.0, 0.0));
  const double amp = 1.0 / std::sqrt(2.0);
  ket[static_cast<size_t>(pair - 1)] = amp;
  ket[static_cast<size_t>(8 - pair)] = sign * amp;
  return QuantumState::pure(3, std::move(ket));
}

QuantumState psi_b() { return ghz_class_state(2, 1); }

QuantumState singlet_triplet_mix() {
  const double amp = 1.0 / std::sqrt(2.0);
  // Spin-up on party 1, singlet on parties 2 and 3: (|uud> - |udu>)/sqrt(2).
  std::vector<Complex> branch_up(8, Complex(0.0, 0.0));
  branch_up[1] = amp;
  branch_up[2] = -amp;
  // Spin-down on party 1, triplet on parties 2 and 3: (|dud> + |ddu>)/sqrt(2).
  std::vector<Complex> branch_down(8, Complex(0.0, 0.0));
  branch_down[5] = amp;
  branch_down[6] = amp;
  const QuantumState parts[] = {QuantumState::pure(3, std::move(branch_up)),
                                QuantumState::pure(3, std::move(branch_down))};
  const double weights[] = {0.5, 0.5};
  return mix(weights, parts);
}

QuantumState mix(std::span<const double> weights, std::span<const QuantumState> states) {
  if (weights.empty() || weights.size() != states.size()) {
    throw std::invalid_argument("mix: need equally many weights and states, at least one");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < 0.0) {
      throw std::invalid_argument("mix: weights must be nonnegative, got " + std::to_string(w));
    }
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw std::invalid_argument("mix: weights must sum to 1 within 1e-9 (sum = " +
                                std::to_string(total) + ")");
  }
  const int n = states[0].n_parties();
  for (const QuantumState& s : states) {
    if (s.n_parties() != n) {
      throw std::invalid_argument("mix: all states must share the same party count");
    }
  }
  ComplexMatrix rho(basis_dim(n));
  for (size_t i = 0; i < weights.size(); ++i) {
    rho += states[i].rho().scaled(weights[i]);
  }
  return QuantumState::density(n, std::move(rho));
}

double expectation(const QuantumState& state, const ComplexMatrix& obs) {
  if (obs.dim() != state.rho().dim()) {
    throw std::invalid_argument("expectation: observable dimension does not match state");
  }
  if (!obs.is_hermitian(1e-9)) {
    throw std::invalid_argument("expectation: observable must be Hermitian within 1e-9");
  }
  // Tr(rho * obs) without forming the product matrix.
  Complex tr(0.0, 0.0);
  const int dim = obs.dim();
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      tr += state.rho().at(r, c) * obs.at(c, r);
    }
  }
  if (std::abs(tr.imag()) > 1e-9) {
    throw std::runtime_error("expectation: non-real trace (imaginary part " +
                             std::to_string(tr.imag()) + "); internal inconsistency");
  }
  return tr.real();
}

Complex matrix_element(const QuantumState& state, BasisIndex i, BasisIndex j) {
  const int r = basis_offset(i, state.n_parties());
  const int c = basis_offset(j, state.n_parties());
  return state.rho().at(r, c);
}

double population(const QuantumState& state, BasisIndex i) {
  return matrix_element(state, i, i).real();
}

ValidationReport validate_density_matrix(const ComplexMatrix& rho) {
  ValidationReport report;
  report.hermiticity_defect = rho.hermiticity_defect();
  report.trace_defect = std::abs(rho.trace() - Complex(1.0, 0.0));
  if (report.hermiticity_defect > 1e-9) {
    report.failures.push_back("hermiticity (defect " +
                              std::to_string(report.hermiticity_defect) + " > 1e-9)");
  }
  if (report.trace_defect > 1e-9) {
    report.failures.push_back("unit trace (defect " +
                              std::to_string(report.trace_defect) + " > 1e-9)");
  }
  if (report.hermiticity_defect <= 1e-9) {
    report.min_eigenvalue = min_eigenvalue(rho, 1e-12);
    if (report.min_eigenvalue < -1e-9) {
      report.failures.push_back("positivity (smallest eigenvalue " +
                                std::to_string(report.min_eigenvalue) + " < -1e-9)");
    }
  } else {
    report.min_eigenvalue = 0.0;
  }
  report.accepted = report.failures.empty();
  return report;
}

ValidationReport validate_density(const QuantumState& state) {
  return validate_density_matrix(state.rho());
}

QuantumState permute_parties(const QuantumState& state, std::span<const int> perm) {
  const int n = state.n_parties();
  if (perm.size() != static_cast<size_t>(n)) {
    throw std::invalid_argument("permute_parties: permutation length must equal party count");
  }
  std::vector<bool> seen(static_cast<size_t>(n), false);
  for (int p : perm) {
    if (p < 1 || p > n || seen[static_cast<size_t>(p - 1)]) {
      throw std::invalid_argument("permute_parties: not a permutation of 1.." +
                                  std::to_string(n));
    }
    seen[static_cast<size_t>(p - 1)] = true;
  }

  const int dim = basis_dim(n);
  // new_offset[old basis offset] under the party relabeling.
  std::vector<int> map(static_cast<size_t>(dim));
  for (int off = 0; off < dim; ++off) {
    int out = 0;
    for (int p = 0; p < n; ++p) {
      const int bit = (off >> (n - 1 - p)) & 1;
      const int new_pos = perm[static_cast<size_t>(p)] - 1;
      out |= bit << (n - 1 - new_pos);
    }
    map[static_cast<size_t>(off)] = out;
  }

  if (state.is_pure()) {
    const std::vector<Complex>& in = *state.ket();
    std::vector<Complex> out(static_cast<size_t>(dim));
    for (int off = 0; off < dim; ++off) {
      out[static_cast<size_t>(map[static_cast<size_t>(off)])] = in[static_cast<size_t>(off)];
    }
    return QuantumState::pure(n, std::move(out));
  }
  ComplexMatrix out(dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) {
      out.at(map[static_cast<size_t>(r)], map[static_cast<size_t>(c)]) = state.rho().at(r, c);
    }
  }
  return QuantumState::density(n, std::move(out));
}

}  // namespace entwit
