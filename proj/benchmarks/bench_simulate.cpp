// Copyright 2026 The qasmtrans Authors
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

#include <random>

#include "qasmtrans/oracle.hpp"

namespace {

using namespace qasmtrans;

Circuit layered(int n, int layers) {
  Circuit c = Circuit::with_qubits(n);
  for (int l = 0; l < layers; ++l) {
    for (int q = 0; q < n; ++q) c.add("u3", {q}, {0.1 * q, 0.2, 0.3 * l});
    for (int q = l % 2; q + 1 < n; q += 2) c.add("cx", {q, q + 1});
  }
  return c;
}

void BM_Statevector(benchmark::State& state) {
  const Circuit c = layered(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(simulate(c));
}
BENCHMARK(BM_Statevector)->DenseRange(8, 18, 2)->Unit(benchmark::kMillisecond);

void BM_CircuitUnitary(benchmark::State& state) {
  const Circuit c = layered(static_cast<int>(state.range(0)), 10);
  for (auto _ : state) benchmark::DoNotOptimize(circuit_unitary(c));
}
BENCHMARK(BM_CircuitUnitary)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
