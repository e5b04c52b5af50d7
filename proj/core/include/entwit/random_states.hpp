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

// Deterministic sampling helpers for property checks and demonstrations:
// Haar-like random kets, product/biseparable states, mixtures, and random
// measurement settings. All draws come from the caller's generator, so a
// fixed seed reproduces the exact sequence.

#ifndef ENTWIT_RANDOM_STATES_HPP_
#define ENTWIT_RANDOM_STATES_HPP_

#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "entwit/bell.hpp"
#include "entwit/state.hpp"

namespace entwit {

/** Complex Gaussian vector normalized to unit length. */
template <class URBG>
std::vector<Complex> random_ket(int dim, URBG& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> ket(static_cast<size_t>(dim));
  double norm_sq = 0.0;
  do {
    norm_sq = 0.0;
    for (Complex& a : ket) {
      a = Complex(gauss(rng), gauss(rng));
      norm_sq += std::norm(a);
    }
  } while (norm_sq < 1e-12);
  const double inv = 1.0 / std::sqrt(norm_sq);
  for (Complex& a : ket) a *= inv;
  return ket;
}

template <class URBG>
QuantumState random_pure_state(int n_parties, URBG& rng) {
  return QuantumState::pure(n_parties, random_ket(basis_dim(n_parties), rng));
}

/** Fully product pure state: independent single-qubit kets per party. */
template <class URBG>
QuantumState random_product_pure(int n_parties, URBG& rng) {
  std::vector<std::vector<Complex>> factors;
  factors.reserve(static_cast<size_t>(n_parties));
  for (int p = 0; p < n_parties; ++p) factors.push_back(random_ket(2, rng));
  return QuantumState::pure(n_parties, tensor_vector(factors));
}

/**
 * Three-party pure state separable across the bipartition that isolates
 * `isolated_party` (1..3): a random qubit there, a random (possibly
 * entangled) pair state on the other two.
 */
template <class URBG>
QuantumState random_biseparable_pure(int isolated_party, URBG& rng) {
  if (isolated_party < 1 || isolated_party > 3) {
    throw std::invalid_argument("random_biseparable_pure: party must be 1..3");
  }
  const std::vector<std::vector<Complex>> factors = {random_ket(2, rng),
                                                     random_ket(4, rng)};
  QuantumState built = QuantumState::pure(3, tensor_vector(factors));
  if (isolated_party == 1) return built;
  // Built order is (isolated, lower remaining, higher remaining); send the
  // first slot back to its true position.
  const std::vector<int> perm = isolated_party == 2 ? std::vector<int>{2, 1, 3}
                                                    : std::vector<int>{3, 1, 2};
  return permute_parties(built, perm);
}

/** Random convex mixture of biseparable pure states across random cuts. */
template <class URBG>
QuantumState random_biseparable_mixture(int components, URBG& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<int> party(1, 3);
  std::vector<QuantumState> states;
  std::vector<double> weights;
  states.reserve(static_cast<size_t>(components));
  weights.reserve(static_cast<size_t>(components));
  double total = 0.0;
  for (int k = 0; k < components; ++k) {
    states.push_back(random_biseparable_pure(party(rng), rng));
    const double w = unit(rng) + 1e-6;
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;
  return mix(weights, states);
}

/** Random full-rank-ish density state: mixture of dim random pure states. */
template <class URBG>
QuantumState random_density(int n_parties, URBG& rng) {
  const int dim = basis_dim(n_parties);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<QuantumState> states;
  std::vector<double> weights;
  double total = 0.0;
  for (int k = 0; k < dim; ++k) {
    states.push_back(random_pure_state(n_parties, rng));
    const double w = unit(rng) + 1e-6;
    weights.push_back(w);
    total += w;
  }
  for (double& w : weights) w /= total;
  return mix(weights, states);
}

/** Uniform random direction on the unit sphere. */
template <class URBG>
SpinDirection random_direction(URBG& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double z = 1.0 - 2.0 * unit(rng);
  const double phi = 2.0 * std::numbers::pi * unit(rng);
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  double x = s * std::cos(phi);
  double y = s * std::sin(phi);
  const double norm = std::sqrt(x * x + y * y + z * z);
  return SpinDirection(x / norm, y / norm, z / norm);
}

/** Independent random direction pairs for every party. */
template <class URBG>
PartySettings random_settings(int n_parties, URBG& rng) {
  PartySettings settings;
  settings.parties.reserve(static_cast<size_t>(n_parties));
  for (int p = 0; p < n_parties; ++p) {
    settings.parties.push_back({random_direction(rng), random_direction(rng)});
  }
  return settings;
}

}  // namespace entwit

#endif  // ENTWIT_RANDOM_STATES_HPP_
