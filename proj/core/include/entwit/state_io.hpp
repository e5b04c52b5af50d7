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

#include <string>

#include "entwit/state.hpp"

namespace entwit {

/**
 * State file format (JSON object):
 *   n_parties : integer
 *   kind      : "pure" | "density"
 *   ket       : array of [re, im] pairs (basis-label order), or null
 *   rho       : array of rows, each an array of [re, im] pairs (always present)
 *
 * Readers validate the same invariants the constructors enforce and reject
 * violations with a message naming the failed invariant (unit ket norm,
 * ket/rho consistency for pure states, hermiticity / unit trace / positivity
 * for densities).
 */
std::string state_to_json(const QuantumState& state);
QuantumState state_from_json(const std::string& text);

void write_state_file(const std::string& path, const QuantumState& state);
QuantumState read_state_file(const std::string& path);

}  // namespace entwit
