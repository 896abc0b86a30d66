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

#include "dhsim/descriptor_state.hpp"
#include "dhsim/evolution.hpp"
#include "dhsim/gauge.hpp"
#include "dhsim/tensor.hpp"

namespace {

using namespace dhsim;

Circuit ladder_circuit(int n, int depth) {
  Circuit c;
  c.n = n;
  for (int step = 0; step < depth; ++step) {
    c.ops.push_back(Gate::single(GateKind::kH, step % n));
    if (n > 1) {
      c.ops.push_back(Gate::two(GateKind::kCNOT, step % n, (step + 1) % n));
    }
  }
  return c;
}

void BM_ApplyGateDense(benchmark::State& state) {
  const int n = int(state.range(0));
  const DescriptorState fresh = DescriptorState::init(n, Backend::kDense);
  const Gate g = Gate::two(GateKind::kCNOT, 0, n - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_gate(fresh, g));
  }
}
BENCHMARK(BM_ApplyGateDense)->DenseRange(2, 6);

void BM_ApplyGatePauliClifford(benchmark::State& state) {
  const int n = int(state.range(0));
  const DescriptorState fresh = DescriptorState::init(n, Backend::kPauliSum);
  const Gate g = Gate::two(GateKind::kCNOT, 0, n - 1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(apply_gate(fresh, g));
  }
}
BENCHMARK(BM_ApplyGatePauliClifford)->DenseRange(2, 8, 2);

void BM_RunCircuitDense(benchmark::State& state) {
  const int n = int(state.range(0));
  const Circuit c = ladder_circuit(n, 16);
  const DescriptorState fresh = DescriptorState::init(n, Backend::kDense);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_circuit(fresh, c));
  }
}
BENCHMARK(BM_RunCircuitDense)->DenseRange(2, 6);

void BM_RunCircuitPauli(benchmark::State& state) {
  const int n = int(state.range(0));
  const Circuit c = ladder_circuit(n, 16);
  const DescriptorState fresh = DescriptorState::init(n, Backend::kPauliSum);
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_circuit(fresh, c));
  }
}
BENCHMARK(BM_RunCircuitPauli)->DenseRange(2, 8, 2);

void BM_ExpectationDense(benchmark::State& state) {
  const int n = int(state.range(0));
  const DescriptorState bell = run_circuit(
      DescriptorState::init(n, Backend::kDense), ladder_circuit(n, 8));
  PauliString obs(n);
  for (int q = 0; q < n; ++q) obs.set_letter(q, PauliLetter::Z);
  const PauliSum sum = PauliSum::single(n, 1.0, obs);
  for (auto _ : state) {
    benchmark::DoNotOptimize(expectation(bell, sum));
  }
}
BENCHMARK(BM_ExpectationDense)->DenseRange(2, 6);

void BM_ReducedDensity(benchmark::State& state) {
  const int n = int(state.range(0));
  const DescriptorState evolved = run_circuit(
      DescriptorState::init(n, Backend::kDense), ladder_circuit(n, 8));
  std::set<int> all;
  for (int q = 0; q < n; ++q) all.insert(q);
  for (auto _ : state) {
    benchmark::DoNotOptimize(reduced_density(evolved, all));
  }
}
BENCHMARK(BM_ReducedDensity)->DenseRange(2, 5);

void BM_MatExp(benchmark::State& state) {
  const int n = int(state.range(0));
  PauliString zz(n);
  zz.set_letter(0, PauliLetter::Z);
  zz.set_letter(n - 1, PauliLetter::Z);
  PauliString xs(n);
  xs.set_letter(0, PauliLetter::X);
  const ComplexMatrix h = pauli_sum_matrix(PauliSum::from_terms(
      n, {{Complex(0.7, 0.0), zz}, {Complex(0.4, 0.0), xs}}));
  const ComplexMatrix arg = h * Complex(0.0, 1.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mat_exp(arg));
  }
}
BENCHMARK(BM_MatExp)->DenseRange(2, 6);

void BM_RandomStabilizingUnitary(benchmark::State& state) {
  const int n = int(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_stabilizing_unitary(n, seed++));
  }
}
BENCHMARK(BM_RandomStabilizingUnitary)->DenseRange(2, 6);

void BM_GaugedFlow(benchmark::State& state) {
  const int n = int(state.range(0));
  PauliString zz(n);
  zz.set_letter(0, PauliLetter::Z);
  zz.set_letter(n - 1, PauliLetter::Z);
  const HamiltonianSpec h =
      make_hamiltonian(PauliSum::single(n, 0.6, zz));
  PauliString zi(n);
  zi.set_letter(0, PauliLetter::Z);
  const GaugeFamily fam =
      GaugeFamily::exp_generator(PauliSum::single(n, 0.7, zi), 1.0);
  const DescriptorState fresh = DescriptorState::init(n, Backend::kDense);
  for (auto _ : state) {
    benchmark::DoNotOptimize(integrate_gauged_flow(fresh, h, fam, 0.1, 1e-2));
  }
}
BENCHMARK(BM_GaugedFlow)->DenseRange(1, 4);

}  // namespace
