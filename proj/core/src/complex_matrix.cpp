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

#include "entwit/complex_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace entwit {

ComplexMatrix::ComplexMatrix(int dim) : dim_(dim) {
  if (dim <= 0) {
    throw std::invalid_argument("ComplexMatrix: dimension must be positive, got " +
                                std::to_string(dim));
  }
  data_.assign(static_cast<size_t>(dim) * dim, Complex(0.0, 0.0));
}

ComplexMatrix::ComplexMatrix(int dim, std::initializer_list<Complex> entries)
    : ComplexMatrix(dim) {
  if (entries.size() != data_.size()) {
    throw std::invalid_argument("ComplexMatrix: entry list size does not match dim^2");
  }
  std::copy(entries.begin(), entries.end(), data_.begin());
}

ComplexMatrix ComplexMatrix::identity(int dim) {
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i) m.at(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::outer(std::span<const Complex> u,
                                   std::span<const Complex> v) {
  if (u.size() != v.size() || u.empty()) {
    throw std::invalid_argument("ComplexMatrix::outer: vectors must be nonempty and equal-length");
  }
  ComplexMatrix m(static_cast<int>(u.size()));
  for (size_t r = 0; r < u.size(); ++r) {
    for (size_t c = 0; c < v.size(); ++c) {
      m.at(static_cast<int>(r), static_cast<int>(c)) = u[r] * std::conj(v[c]);
    }
  }
  return m;
}

void ComplexMatrix::check_same_dim(const ComplexMatrix& other) const {
  if (dim_ != other.dim_) {
    throw std::invalid_argument("ComplexMatrix: dimension mismatch (" +
                                std::to_string(dim_) + " vs " +
                                std::to_string(other.dim_) + ")");
  }
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix& other) const {
  ComplexMatrix out = *this;
  out += other;
  return out;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix& other) const {
  ComplexMatrix out = *this;
  out -= other;
  return out;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  check_same_dim(other);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  check_same_dim(other);
  for (size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix& other) const {
  check_same_dim(other);
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int k = 0; k < dim_; ++k) {
      const Complex a = at(r, k);
      if (a == Complex(0.0, 0.0)) continue;
      for (int c = 0; c < dim_; ++c) {
        out.at(r, c) += a * other.at(k, c);
      }
    }
  }
  return out;
}

ComplexMatrix ComplexMatrix::scaled(Complex factor) const {
  ComplexMatrix out = *this;
  for (auto& x : out.data_) x *= factor;
  return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
  ComplexMatrix out(dim_);
  for (int r = 0; r < dim_; ++r) {
    for (int c = 0; c < dim_; ++c) {
      out.at(c, r) = std::conj(at(r, c));
    }
  }
  return out;
}

Complex ComplexMatrix::trace() const {
  Complex t(0.0, 0.0);
  for (int i = 0; i < dim_; ++i) t += at(i, i);
  return t;
}

double ComplexMatrix::hermiticity_defect() const {
  double worst = 0.0;
  for (int r = 0; r < dim_; ++r) {
    for (int c = r; c < dim_; ++c) {
      worst = std::max(worst, std::abs(at(r, c) - std::conj(at(c, r))));
    }
  }
  return worst;
}

double ComplexMatrix::max_abs_diff(const ComplexMatrix& other) const {
  check_same_dim(other);
  double worst = 0.0;
  for (size_t i = 0; i < data_.size(); ++i) {
    worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
  }
  return worst;
}

std::vector<Complex> ComplexMatrix::apply(std::span<const Complex> v) const {
  if (static_cast<int>(v.size()) != dim_) {
    throw std::invalid_argument("ComplexMatrix::apply: vector length does not match dim");
  }
  std::vector<Complex> out(static_cast<size_t>(dim_), Complex(0.0, 0.0));
  for (int r = 0; r < dim_; ++r) {
    Complex acc(0.0, 0.0);
    for (int c = 0; c < dim_; ++c) acc += at(r, c) * v[c];
    out[static_cast<size_t>(r)] = acc;
  }
  return out;
}

ComplexMatrix tensor(std::span<const ComplexMatrix> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor: factor list must be nonempty");
  }
  ComplexMatrix acc = factors[0];
  for (size_t f = 1; f < factors.size(); ++f) {
    const ComplexMatrix& b = factors[f];
    const int da = acc.dim();
    const int db = b.dim();
    ComplexMatrix out(da * db);
    for (int ra = 0; ra < da; ++ra) {
      for (int ca = 0; ca < da; ++ca) {
        const Complex a = acc.at(ra, ca);
        if (a == Complex(0.0, 0.0)) continue;
        for (int rb = 0; rb < db; ++rb) {
          for (int cb = 0; cb < db; ++cb) {
            out.at(ra * db + rb, ca * db + cb) = a * b.at(rb, cb);
          }
        }
      }
    }
    acc = std::move(out);
  }
  return acc;
}

ComplexMatrix tensor(std::initializer_list<ComplexMatrix> factors) {
  return tensor(std::span<const ComplexMatrix>(factors.begin(), factors.size()));
}

std::vector<Complex> tensor_vector(std::span<const std::vector<Complex>> factors) {
  if (factors.empty()) {
    throw std::invalid_argument("tensor_vector: factor list must be nonempty");
  }
  std::vector<Complex> acc = factors[0];
  for (size_t f = 1; f < factors.size(); ++f) {
    const std::vector<Complex>& b = factors[f];
    std::vector<Complex> out;
    out.reserve(acc.size() * b.size());
    for (const Complex& a : acc) {
      for (const Complex& x : b) out.push_back(a * x);
    }
    acc = std::move(out);
  }
  return acc;
}

}  // namespace entwit
