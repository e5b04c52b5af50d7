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

#include <complex>
#include <initializer_list>
#include <span>
#include <vector>

namespace entwit {

using Complex = std::complex<double>;

/**
 * Dense square complex matrix, row-major.
 *
 * Dimensions here are tiny (2^n for a handful of spin-1/2 parties, at most
 * 64), so every operation is a plain loop; no sparsity, no blocking.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() : dim_(0) {}
  explicit ComplexMatrix(int dim);
  ComplexMatrix(int dim, std::initializer_list<Complex> entries);

  static ComplexMatrix identity(int dim);
  /** Rank-one matrix |u><v| from two vectors of equal length. */
  static ComplexMatrix outer(std::span<const Complex> u,
                             std::span<const Complex> v);

  int dim() const { return dim_; }

  Complex& at(int row, int col) { return data_[index(row, col)]; }
  const Complex& at(int row, int col) const { return data_[index(row, col)]; }

  const std::vector<Complex>& data() const { return data_; }

  ComplexMatrix operator+(const ComplexMatrix& other) const;
  ComplexMatrix operator-(const ComplexMatrix& other) const;
  ComplexMatrix operator*(const ComplexMatrix& other) const;
  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);

  ComplexMatrix scaled(Complex factor) const;
  ComplexMatrix adjoint() const;
  Complex trace() const;

  /** max_ij |a_ij - conj(a_ji)|: zero iff exactly Hermitian. */
  double hermiticity_defect() const;
  bool is_hermitian(double tol) const { return hermiticity_defect() <= tol; }

  /** max_ij |a_ij - b_ij|; matrices must share dimensions. */
  double max_abs_diff(const ComplexMatrix& other) const;

  /** Matrix-vector product a * v. */
  std::vector<Complex> apply(std::span<const Complex> v) const;

 private:
  int index(int row, int col) const { return row * dim_ + col; }
  void check_same_dim(const ComplexMatrix& other) const;

  int dim_;
  std::vector<Complex> data_;
};

/**
 * Tensor (Kronecker) product of the given factors, first factor slowest
 * (party 1 owns the most significant basis bits). Throws
 * std::invalid_argument on an empty factor list.
 */
ComplexMatrix tensor(std::span<const ComplexMatrix> factors);
ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors);

/** Tensor product of state vectors, same ordering convention. */
std::vector<Complex> tensor_vector(std::span<const std::vector<Complex>> factors);

}  // namespace entwit
