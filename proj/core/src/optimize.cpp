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

#include <cmath>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <vector>

#include "entwit/witness.hpp"

namespace entwit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kPi = std::numbers::pi;

// Parameter vector layout: planar searches use one angle per direction
// (2 per party); spherical searches use polar + azimuth per direction
// (4 per party). Polar parameters are clamped to [0, pi], the rest wrap.
struct SearchSpace {
  std::optional<Plane> plane;
  int n_parties = 0;

  int params_per_party() const { return plane.has_value() ? 2 : 4; }
  int total_params() const { return n_parties * params_per_party(); }
  bool is_polar(int index) const { return !plane.has_value() && index % 2 == 0; }
};

SpinDirection direction_from(const SearchSpace& space, const double* params) {
  if (space.plane.has_value()) {
    return *space.plane == Plane::xy ? SpinDirection::from_xy_angle(params[0])
                                     : SpinDirection::from_xz_angle(params[0]);
  }
  const double theta = params[0];
  const double phi = params[1];
  const double s = std::sin(theta);
  // Renormalize so rounding in sin/cos can never trip the unit check.
  double x = s * std::cos(phi);
  double y = s * std::sin(phi);
  double z = std::cos(theta);
  const double norm = std::sqrt(x * x + y * y + z * z);
  return SpinDirection(x / norm, y / norm, z / norm);
}

PartySettings settings_from(const SearchSpace& space, const std::vector<double>& p) {
  PartySettings out;
  out.parties.reserve(static_cast<size_t>(space.n_parties));
  const int per_direction = space.plane.has_value() ? 1 : 2;
  for (int party = 0; party < space.n_parties; ++party) {
    const double* base = p.data() + static_cast<size_t>(party) * 2 * per_direction;
    out.parties.push_back({direction_from(space, base),
                           direction_from(space, base + per_direction)});
  }
  return out;
}

double objective(const QuantumState& state, const SearchSpace& space,
                 const std::vector<double>& p) {
  const BellOperator op = klyshko_operator(settings_from(space, p));
  return std::abs(expectation(state, op.matrix));
}

/** Golden-section maximization on [lo, hi]; deterministic, ~1e-12 bracket. */
double golden_max(const std::function<double(double)>& f, double lo, double hi) {
  constexpr double inv_phi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int i = 0; i < 80 && (b - a) > 1e-12; ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  return 0.5 * (a + b);
}

/** One full coordinate-ascent run from a fixed starting point. */
void ascend(const QuantumState& state, const SearchSpace& space,
            std::vector<double>& p, double& best) {
  best = objective(state, space, p);

  // Stage 1: cyclic per-parameter grid scans (24 points per angle, 12 per
  // polar parameter), repeated until a pass leaves everything in place.
  for (int pass = 0; pass < 32; ++pass) {
    bool moved = false;
    for (int i = 0; i < space.total_params(); ++i) {
      const bool polar = space.is_polar(i);
      const int points = polar ? 12 : 24;
      const double saved = p[static_cast<size_t>(i)];
      double best_value = saved;
      for (int k = 0; k < points; ++k) {
        const double candidate = polar ? (k + 0.5) * kPi / 12.0 : k * kTwoPi / 24.0;
        p[static_cast<size_t>(i)] = candidate;
        const double v = objective(state, space, p);
        if (v > best) {  // strict: equal values keep the earlier (lower) angle
          best = v;
          best_value = candidate;
        }
      }
      p[static_cast<size_t>(i)] = best_value;
      if (best_value != saved) moved = true;
    }
    if (!moved) break;
  }

  // Stage 2: cyclic golden-section refinement, one parameter at a time,
  // bracketing one grid step around the current value.
  const double step = kPi / 12.0;
  for (int sweep = 0; sweep < 200; ++sweep) {
    const double before = best;
    for (int i = 0; i < space.total_params(); ++i) {
      const bool polar = space.is_polar(i);
      double lo = p[static_cast<size_t>(i)] - step;
      double hi = p[static_cast<size_t>(i)] + step;
      if (polar) {
        lo = std::max(lo, 0.0);
        hi = std::min(hi, kPi);
      }
      const double saved = p[static_cast<size_t>(i)];
      auto line = [&](double v) {
        p[static_cast<size_t>(i)] = v;
        return objective(state, space, p);
      };
      const double candidate = golden_max(line, lo, hi);
      const double v = line(candidate);
      if (v > best) {
        best = v;
        p[static_cast<size_t>(i)] = candidate;
      } else {
        p[static_cast<size_t>(i)] = saved;
      }
    }
    if (best - before < 1e-10) break;
  }
}

}  // namespace

OptimizeResult optimize_settings(const QuantumState& state, std::optional<Plane> plane) {
  SearchSpace space{plane, state.n_parties()};
  if (space.n_parties < 2 || space.n_parties > 6) {
    throw std::invalid_argument("optimize_settings: party count must be in [2, 6]");
  }

  // Deterministic start list: the all-zero configuration plus fixed-seed
  // pseudo-random tuples. Single-chain ascent can stall on flat ridges of
  // |E| (the all-zero start does exactly that for the three-party maximum),
  // so several independent chains run and the best outcome wins.
  std::vector<std::vector<double>> starts;
  starts.emplace_back(static_cast<size_t>(space.total_params()), 0.0);
  std::mt19937_64 rng(0x5eedc0defull);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int s = 0; s < 9; ++s) {
    std::vector<double> p(static_cast<size_t>(space.total_params()));
    for (int i = 0; i < space.total_params(); ++i) {
      p[static_cast<size_t>(i)] = space.is_polar(i) ? unit(rng) * kPi : unit(rng) * kTwoPi;
    }
    starts.push_back(std::move(p));
  }

  OptimizeResult result;
  double best = -1.0;
  std::vector<double> best_params;
  for (std::vector<double>& p : starts) {
    double achieved = 0.0;
    ascend(state, space, p, achieved);
    if (achieved > best) {  // strict: ties keep the earlier start
      best = achieved;
      best_params = p;
    }
  }
  result.settings = settings_from(space, best_params);
  result.achieved = best;
  return result;
}

}  // namespace entwit
