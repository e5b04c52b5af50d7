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

#include "entwit/spin.hpp"

#include <cmath>
#include <stdexcept>

namespace entwit {

SpinDirection::SpinDirection(double x_in, double y_in, double z_in)
    : x(x_in), y(y_in), z(z_in) {
  const double norm2 = x * x + y * y + z * z;
  if (std::abs(norm2 - 1.0) > 1e-12) {
    throw std::invalid_argument("SpinDirection: vector must be unit length (|v|^2 - 1 = " +
                                std::to_string(norm2 - 1.0) + ")");
  }
}

SpinDirection SpinDirection::from_xy_angle(double phi) {
  return SpinDirection(std::cos(phi), std::sin(phi), 0.0);
}

SpinDirection SpinDirection::from_xz_angle(double theta) {
  return SpinDirection(std::cos(theta), 0.0, std::sin(theta));
}

ComplexMatrix pauli(Axis axis) {
  ComplexMatrix m(2);
  switch (axis) {
    case Axis::x:
      m.at(0, 1) = 1.0;
      m.at(1, 0) = 1.0;
      break;
    case Axis::y:
      m.at(0, 1) = Complex(0.0, -1.0);
      m.at(1, 0) = Complex(0.0, 1.0);
      break;
    case Axis::z:
      m.at(0, 0) = 1.0;
      m.at(1, 1) = -1.0;
      break;
  }
  return m;
}

ComplexMatrix spin_op(const SpinDirection& d) {
  ComplexMatrix m(2);
  m.at(0, 0) = d.z;
  m.at(1, 1) = -d.z;
  m.at(0, 1) = Complex(d.x, -d.y);
  m.at(1, 0) = Complex(d.x, d.y);
  return m;
}

ComplexMatrix x_projector(int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("x_projector: sign must be +1 or -1");
  }
  ComplexMatrix m(2);
  const double off = 0.5 * sign;
  m.at(0, 0) = 0.5;
  m.at(1, 1) = 0.5;
  m.at(0, 1) = off;
  m.at(1, 0) = off;
  return m;
}

ComplexMatrix z_projector(int bit) {
  if (bit != 0 && bit != 1) {
    throw std::invalid_argument("z_projector: bit must be 0 (up) or 1 (down)");
  }
  ComplexMatrix m(2);
  m.at(bit, bit) = 1.0;
  return m;
}

}  // namespace entwit
