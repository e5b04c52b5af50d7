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

#include "entwit/hermitian_eigen.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace entwit {

namespace {

double off_diagonal_norm(const ComplexMatrix& a) {
  double sum = 0.0;
  for (int r = 0; r < a.dim(); ++r) {
    for (int c = 0; c < a.dim(); ++c) {
      if (r == c) continue;
      sum += std::norm(a.at(r, c));
    }
  }
  return std::sqrt(sum);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix& input, double tol,
                               int max_sweeps) {
  if (!input.is_hermitian(1e-9)) {
    throw std::invalid_argument("hermitian_eigen: matrix is not Hermitian within 1e-9");
  }
  const int n = input.dim();

  // Work on an exactly Hermitian copy so rounding in the input cannot feed
  // a complex residue into the rotations.
  ComplexMatrix a(n);
  for (int r = 0; r < n; ++r) {
    a.at(r, r) = Complex(input.at(r, r).real(), 0.0);
    for (int c = r + 1; c < n; ++c) {
      const Complex v = 0.5 * (input.at(r, c) + std::conj(input.at(c, r)));
      a.at(r, c) = v;
      a.at(c, r) = std::conj(v);
    }
  }

  ComplexMatrix v = ComplexMatrix::identity(n);
  HermitianEigen result;

  int sweep = 0;
  double off = off_diagonal_norm(a);
  while (off > tol && sweep < max_sweeps) {
    ++sweep;
    for (int p = 0; p < n - 1; ++p) {
      for (int q = p + 1; q < n; ++q) {
        const Complex apq = a.at(p, q);
        const double r = std::abs(apq);
        if (r <= 1e-300) continue;

        // Factor out the phase so a real 2x2 rotation annihilates the pair.
        const Complex phase = apq / r;
        const double app = a.at(p, p).real();
        const double aqq = a.at(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;

        // Unitary update U: U(p,p)=c, U(p,q)=s, U(q,p)=-s*conj(phase),
        // U(q,q)=c*conj(phase). Apply as column then row transform.
        const Complex uqp = -s * std::conj(phase);
        const Complex uqq = c * std::conj(phase);

        for (int i = 0; i < n; ++i) {
          const Complex aip = a.at(i, p);
          const Complex aiq = a.at(i, q);
          a.at(i, p) = aip * c + aiq * uqp;
          a.at(i, q) = aip * s + aiq * uqq;
        }
        for (int j = 0; j < n; ++j) {
          const Complex apj = a.at(p, j);
          const Complex aqj = a.at(q, j);
          a.at(p, j) = c * apj + std::conj(uqp) * aqj;
          a.at(q, j) = s * apj + std::conj(uqq) * aqj;
        }
        // Pin the annihilated pair and the diagonal to exact reals.
        a.at(p, q) = Complex(0.0, 0.0);
        a.at(q, p) = Complex(0.0, 0.0);
        a.at(p, p) = Complex(a.at(p, p).real(), 0.0);
        a.at(q, q) = Complex(a.at(q, q).real(), 0.0);

        for (int i = 0; i < n; ++i) {
          const Complex vip = v.at(i, p);
          const Complex viq = v.at(i, q);
          v.at(i, p) = vip * c + viq * uqp;
          v.at(i, q) = vip * s + viq * uqq;
        }
      }
    }
    off = off_diagonal_norm(a);
  }

  // Sort ascending, carrying columns along.
  std::vector<int> order(static_cast<size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&a](int lhs, int rhs) {
    return a.at(lhs, lhs).real() < a.at(rhs, rhs).real();
  });

  result.eigenvalues.resize(static_cast<size_t>(n));
  result.eigenvectors = ComplexMatrix(n);
  for (int k = 0; k < n; ++k) {
    result.eigenvalues[static_cast<size_t>(k)] = a.at(order[static_cast<size_t>(k)],
                                                      order[static_cast<size_t>(k)]).real();
    for (int i = 0; i < n; ++i) {
      result.eigenvectors.at(i, k) = v.at(i, order[static_cast<size_t>(k)]);
    }
  }
  result.sweeps = sweep;
  result.off_norm = off;
  return result;
}

double min_eigenvalue(const ComplexMatrix& a, double tol) {
  return hermitian_eigen(a, tol).eigenvalues.front();
}

}  // namespace entwit
