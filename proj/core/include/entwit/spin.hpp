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

#include "entwit/complex_matrix.hpp"

namespace entwit {

enum class Axis { x, y, z };

/**
 * Unit vector on the Bloch sphere naming a spin measurement direction.
 * Construction rejects non-unit input (norm must be 1 within 1e-12);
 * callers that build from angles get exact-unit vectors by construction.
 */
struct SpinDirection {
  SpinDirection(double x_in, double y_in, double z_in);

  /** Direction at angle phi from the x axis within the x-y plane. */
  static SpinDirection from_xy_angle(double phi);
  /** Direction at angle theta from the x axis within the x-z plane. */
  static SpinDirection from_xz_angle(double theta);

  double x;
  double y;
  double z;
};

/**
 * The three spin component operators in the spin-up/spin-down basis.
 * The y component uses the sign convention with +i in the lower-left entry.
 */
ComplexMatrix pauli(Axis axis);

/** n . sigma for a measurement direction n; Hermitian, unit-involutory. */
ComplexMatrix spin_op(const SpinDirection& direction);

/** Projector onto the +1 / -1 eigenvector of the x spin component. */
ComplexMatrix x_projector(int sign);

/** Projector onto spin-up (bit 0) / spin-down (bit 1) along z. */
ComplexMatrix z_projector(int bit);

}  // namespace entwit
