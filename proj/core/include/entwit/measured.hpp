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

#include <cmath>
#include <stdexcept>

namespace entwit {

/**
 * A number with a one-standard-deviation uncertainty. Combination rules are
 * the usual independent-error ones: sums and differences add sigmas in
 * quadrature, scaling multiplies sigma by |factor|. Correlations between
 * inputs are deliberately ignored, matching how the analyzed experiments
 * propagate their quoted errors.
 */
struct MeasuredValue {
  double value = 0.0;
  double sigma = 0.0;

  MeasuredValue() = default;
  MeasuredValue(double v, double s) : value(v), sigma(s) {
    if (s < 0.0) throw std::invalid_argument("MeasuredValue: sigma must be nonnegative");
  }

  double low() const { return value - sigma; }
  double high() const { return value + sigma; }
};

inline MeasuredValue operator+(const MeasuredValue& a, const MeasuredValue& b) {
  return MeasuredValue(a.value + b.value, std::hypot(a.sigma, b.sigma));
}

inline MeasuredValue operator-(const MeasuredValue& a, const MeasuredValue& b) {
  return MeasuredValue(a.value - b.value, std::hypot(a.sigma, b.sigma));
}

inline MeasuredValue scaled(const MeasuredValue& a, double factor) {
  return MeasuredValue(a.value * factor, a.sigma * std::abs(factor));
}

inline MeasuredValue abs(const MeasuredValue& a) {
  return MeasuredValue(std::abs(a.value), a.sigma);
}

}  // namespace entwit
