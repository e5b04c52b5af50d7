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

#include "entwit/bell.hpp"

#include <cmath>
#include <stdexcept>

namespace entwit {

PartySettings PlanarSettings::to_party_settings() const {
  PartySettings out;
  out.parties.reserve(parties.size());
  for (const PlanarParty& p : parties) {
    if (plane == Plane::xy) {
      out.parties.push_back({SpinDirection::from_xy_angle(p.a),
                             SpinDirection::from_xy_angle(p.a_prime)});
    } else {
      out.parties.push_back({SpinDirection::from_xz_angle(p.a),
                             SpinDirection::from_xz_angle(p.a_prime)});
    }
  }
  return out;
}

namespace {

void check_party_count(const PartySettings& settings, int min_parties) {
  if (settings.n() < min_parties || settings.n() > 6) {
    throw std::invalid_argument("bell operator: party count must be in [" +
                                std::to_string(min_parties) + ", 6], got " +
                                std::to_string(settings.n()));
  }
}

/**
 * F_N by the recursion, returned alongside its primed (all a <-> a') twin;
 * both are needed at each level, so they are built together.
 */
void build_recursive(const PartySettings& settings, ComplexMatrix& plain,
                     ComplexMatrix& primed) {
  const ComplexMatrix a1 = spin_op(settings.parties[0].a);
  const ComplexMatrix a1p = spin_op(settings.parties[0].a_prime);
  const ComplexMatrix b1 = spin_op(settings.parties[1].a);
  const ComplexMatrix b1p = spin_op(settings.parties[1].a_prime);

  // Two-party base: AB + A'B + AB' - A'B' and its primed twin.
  plain = tensor({a1, b1}) + tensor({a1p, b1}) + tensor({a1, b1p}) - tensor({a1p, b1p});
  primed = tensor({a1p, b1p}) + tensor({a1, b1p}) + tensor({a1p, b1}) - tensor({a1, b1});

  for (int k = 2; k < settings.n(); ++k) {
    const ComplexMatrix ak = spin_op(settings.parties[static_cast<size_t>(k)].a);
    const ComplexMatrix akp = spin_op(settings.parties[static_cast<size_t>(k)].a_prime);
    const ComplexMatrix sum = (ak + akp).scaled(0.5);
    const ComplexMatrix diff = (ak - akp).scaled(0.5);
    ComplexMatrix next = tensor({plain, sum}) + tensor({primed, diff});
    // Under a <-> a' the sum factor is invariant and the diff factor flips sign.
    ComplexMatrix next_primed = tensor({primed, sum}) - tensor({plain, diff});
    plain = std::move(next);
    primed = std::move(next_primed);
  }
}

}  // namespace

BellOperator chsh_operator(const PartySettings& settings) {
  if (settings.n() != 2) {
    throw std::invalid_argument("chsh_operator: exactly two parties required, got " +
                                std::to_string(settings.n()));
  }
  ComplexMatrix plain, primed;
  build_recursive(settings, plain, primed);
  return BellOperator{2, BellKind::chsh, std::move(plain)};
}

BellOperator klyshko_operator(const PartySettings& settings, bool primed) {
  check_party_count(settings, 2);
  ComplexMatrix plain, primed_m;
  build_recursive(settings, plain, primed_m);
  if (primed) {
    return BellOperator{settings.n(), BellKind::recursive_primed, std::move(primed_m)};
  }
  return BellOperator{settings.n(), BellKind::recursive, std::move(plain)};
}

BellOperator mermin_operator() {
  const ComplexMatrix x = pauli(Axis::x);
  const ComplexMatrix y = pauli(Axis::y);
  ComplexMatrix m = tensor({x, y, y}) + tensor({y, x, y}) + tensor({y, y, x}) -
                    tensor({x, x, x});
  return BellOperator{3, BellKind::mermin, std::move(m)};
}

IdentityCheck mermin_identity_check() {
  const ComplexMatrix m = mermin_operator().matrix;
  ComplexMatrix expected(8);
  expected.at(7, 0) = -4.0;  // |ddd><uuu|
  expected.at(0, 7) = -4.0;  // |uuu><ddd|
  IdentityCheck check;
  check.max_defect = m.max_abs_diff(expected);
  check.ok = check.max_defect <= 1e-12;
  return check;
}

ComplexMatrix sackett_observable(int sign, double phi) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sackett_observable: sign must be +1 or -1");
  }
  const ComplexMatrix first = spin_op(SpinDirection::from_xy_angle(phi));
  const ComplexMatrix third = spin_op(SpinDirection::from_xy_angle(sign * phi));
  return tensor({first, first, third});
}

ComplexMatrix bell_signal_difference_observable(double phi) {
  const ComplexMatrix x = pauli(Axis::x);
  return tensor({x, x, spin_op(SpinDirection::from_xy_angle(phi))});
}

double conditional_bell_signal(const QuantumState& state, int sign, double phi) {
  if (state.n_parties() != 3) {
    throw std::invalid_argument("conditional_bell_signal: three parties required");
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("conditional_bell_signal: sign must be +1 or -1");
  }
  const ComplexMatrix identity2 = ComplexMatrix::identity(2);
  const ComplexMatrix projector = x_projector(sign);
  const double prob = expectation(state, tensor({identity2, projector, identity2}));
  if (prob < 1e-12) {
    throw std::invalid_argument("conditional_bell_signal: conditioning probability "
                                "below 1e-12");
  }
  const ComplexMatrix numerator_obs =
      tensor({pauli(Axis::x), projector, spin_op(SpinDirection::from_xy_angle(phi))});
  return expectation(state, numerator_obs) / prob;
}

}  // namespace entwit
