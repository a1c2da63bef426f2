// Copyright 2026 The qfield Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>

#include <cmath>
#include <vector>

#include "qfield/beamsplitter.hpp"
#include "qfield/fock_oracle.hpp"
#include "qfield/geometry.hpp"
#include "qfield/mode_space.hpp"
#include "qfield/observables.hpp"
#include "qfield/quadrature.hpp"

namespace {

using namespace qfield;

void BM_QuadratureRule(benchmark::State& state) {
  const int order = static_cast<int>(state.range(0));
  for (auto _ : state) {
    QuadratureRule rule(order);
    benchmark::DoNotOptimize(rule.nodes().data());
  }
}
BENCHMARK(BM_QuadratureRule)->Arg(16)->Arg(48)->Arg(128);

void BM_Decompose(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  const BeamGeometry g(1.0, 1.0);
  const ModeBasis basis(g, n_max);
  const QuadratureRule quad(2 * n_max + 16);
  const SampledField field{g, [g](double x, double y, double z) {
                             return mode_2d({1, 0}, x + 0.7, y, z, g);
                           }};
  for (auto _ : state) {
    benchmark::DoNotOptimize(decompose(field, basis, 0.0, quad));
  }
}
BENCHMARK(BM_Decompose)->Arg(4)->Arg(8)->Arg(14);

void BM_RSurface(benchmark::State& state) {
  const int steps = static_cast<int>(state.range(0));
  const ModeBasis basis(BeamGeometry(1.0, 1.0), 14);
  const auto grid = linspace(-3.0, 3.0, steps);
  for (auto _ : state) {
    benchmark::DoNotOptimize(r_surface(grid, grid, basis, SplitterCoefficients::balanced()));
  }
}
BENCHMARK(BM_RSurface)->Arg(11)->Arg(41)->Unit(benchmark::kMillisecond);

void BM_SplitterUnitary(benchmark::State& state) {
  const int cutoff = static_cast<int>(state.range(0));
  const fock::FockSpace space = fock::FockSpace::two_port({{0, 0}, {0, 1}}, cutoff);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fock::bs_unitary(space, SplitterCoefficients::balanced()));
  }
  state.counters["dim"] = static_cast<double>(space.dim());
}
BENCHMARK(BM_SplitterUnitary)->Arg(2)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
