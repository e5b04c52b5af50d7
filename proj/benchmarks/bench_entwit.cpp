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

#include <benchmark/benchmark.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "entwit/bell.hpp"
#include "entwit/hermitian_eigen.hpp"
#include "entwit/random_states.hpp"
#include "entwit/state.hpp"
#include "entwit/witness.hpp"

namespace {

using namespace entwit;

constexpr double kPi = std::numbers::pi;

PartySettings planar_settings(int n_parties) {
  PartySettings s;
  for (int party = 1; party <= n_parties; ++party) {
    s.parties.push_back({SpinDirection::from_xy_angle(kPi / 2),
                         SpinDirection::from_xy_angle(0.0)});
  }
  return s;
}

void BM_TensorBuild(benchmark::State& state) {
  const int factors = static_cast<int>(state.range(0));
  std::vector<ComplexMatrix> parts(static_cast<std::size_t>(factors),
                                   pauli(Axis::x));
  for (auto _ : state) {
    benchmark::DoNotOptimize(tensor(parts));
  }
}
BENCHMARK(BM_TensorBuild)->Arg(3)->Arg(5)->Arg(8);

void BM_KlyshkoOperator(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PartySettings settings = planar_settings(n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(klyshko_operator(settings));
  }
}
BENCHMARK(BM_KlyshkoOperator)->Arg(3)->Arg(4)->Arg(5);

void BM_Expectation(benchmark::State& state) {
  std::mt19937_64 rng(11);
  const QuantumState rho = random_density(3, rng);
  const ComplexMatrix op = klyshko_operator(planar_settings(3)).matrix;
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(rho, op));
  }
}
BENCHMARK(BM_Expectation);

void BM_JacobiEigen(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  std::mt19937_64 rng(12);
  std::normal_distribution<double> gauss(0.0, 1.0);
  ComplexMatrix h(dim);
  for (int i = 0; i < dim; ++i) {
    for (int j = i; j < dim; ++j) {
      const Complex z(gauss(rng), i == j ? 0.0 : gauss(rng));
      h.at(i, j) = z;
      h.at(j, i) = std::conj(z);
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigen(h));
  }
}
BENCHMARK(BM_JacobiEigen)->Arg(4)->Arg(8)->Arg(16);

void BM_OptimizeSettingsPlanar(benchmark::State& state) {
  const QuantumState g = ghz(3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(optimize_settings(g, Plane::xy));
  }
}
BENCHMARK(BM_OptimizeSettingsPlanar)->Unit(benchmark::kMillisecond);

void BM_HarmonicExtract(benchmark::State& state) {
  const QuantumState g = ghz(3);
  std::vector<std::pair<double, double>> samples;
  for (int k = 0; k < 16; ++k) {
    const double phi = 2.0 * kPi * k / 16;
    samples.emplace_back(phi, expectation(g, sackett_observable(+1, phi)));
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(harmonic_extract(samples, 3));
  }
}
BENCHMARK(BM_HarmonicExtract);

}  // namespace

BENCHMARK_MAIN();
