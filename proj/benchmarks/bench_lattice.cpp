// Copyright 2026 The dhsim Authors
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

#include "dhsim/lattice.hpp"

namespace {

using namespace dhsim;

Loop boundary_loop(int width, int height) {
  std::vector<Vertex> vertices;
  for (int x = 0; x < width; ++x) vertices.push_back({x, 0});
  for (int y = 1; y < height; ++y) vertices.push_back({width - 1, y});
  for (int x = width - 2; x >= 0; --x) vertices.push_back({x, height - 1});
  for (int y = height - 2; y >= 0; --y) vertices.push_back({0, y});
  return loop_from_vertices(vertices);
}

void BM_LoopPhase(benchmark::State& state) {
  const int size = int(state.range(0));
  const LatticeField field =
      solenoid_field(size, size, {size / 2, size / 2}, 1.0);
  const Loop loop = boundary_loop(size, size);
  for (auto _ : state) {
    benchmark::DoNotOptimize(loop_phase(field, loop));
  }
}
BENCHMARK(BM_LoopPhase)->RangeMultiplier(2)->Range(4, 64);

void BM_FluxMap(benchmark::State& state) {
  const int size = int(state.range(0));
  const LatticeField field =
      solenoid_field(size, size, {size / 2, size / 2}, 1.0);
  for (auto _ : state) {
    double acc = 0.0;
    for (int y = 0; y < field.plaquette_rows(); ++y) {
      for (int x = 0; x < field.plaquette_cols(); ++x) {
        acc += plaquette_flux(field, {x, y});
      }
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_FluxMap)->RangeMultiplier(2)->Range(4, 64);

void BM_GaugeFixRegion(benchmark::State& state) {
  const int size = int(state.range(0));
  const LatticeField field = solenoid_field(size, size, {0, 0}, 1.0);
  // Everything except the solenoid's row and column: flux-free and
  // simply connected.
  std::vector<Plaquette> region;
  for (int y = 1; y < size - 1; ++y) {
    for (int x = 1; x < size - 1; ++x) {
      region.push_back({x, y});
    }
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(gauge_fix_region(field, region));
  }
}
BENCHMARK(BM_GaugeFixRegion)->RangeMultiplier(2)->Range(4, 32);

void BM_ApplyScalarGauge(benchmark::State& state) {
  const int size = int(state.range(0));
  const LatticeField field =
      solenoid_field(size, size, {size / 2, size / 2}, 1.0);
  ScalarGauge g(size, size);
  for (int i = 0; i < size * size; ++i) {
    g.f[i] = 0.01 * double(i % 17);
  }
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_scalar_gauge(field, g));
  }
}
BENCHMARK(BM_ApplyScalarGauge)->RangeMultiplier(2)->Range(4, 64);

}  // namespace
