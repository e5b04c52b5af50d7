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

#include <vector>

#include "entwit/complex_matrix.hpp"

namespace entwit {

struct HermitianEigen {
  /** Eigenvalues in ascending order. */
  std::vector<double> eigenvalues;
  /** Column k is the eigenvector for eigenvalues[k]; unitary up to tolerance. */
  ComplexMatrix eigenvectors;
  /** Sweeps actually performed. */
  int sweeps = 0;
  /** Frobenius norm of the off-diagonal part at exit. */
  double off_norm = 0.0;
};

/**
 * Full eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.
 *
 * Each rotation annihilates one off-diagonal pair; sweeps repeat until the
 * off-diagonal Frobenius norm drops below `tol` or `max_sweeps` is reached.
 * Intended for the small dimensions used here (<= 64); quadratic convergence
 * makes a handful of sweeps typical. Throws std::invalid_argument if the
 * input is not Hermitian within 1e-9.
 */
HermitianEigen hermitian_eigen(const ComplexMatrix& a, double tol = 1e-12,
                               int max_sweeps = 100);

/** Smallest eigenvalue of a Hermitian matrix (same solver). */
double min_eigenvalue(const ComplexMatrix& a, double tol = 1e-12);

}  // namespace entwit
