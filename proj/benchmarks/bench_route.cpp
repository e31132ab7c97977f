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

#include "qasmtrans/device.hpp"
#include "qasmtrans/pipeline.hpp"
#include "qasmtrans/route.hpp"

namespace {

using namespace qasmtrans;

Circuit random_cx(int n, int gates, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Circuit c = Circuit::with_qubits(n);
  for (int g = 0; g < gates; ++g) {
    const int a = static_cast<int>(rng() % static_cast<unsigned>(n));
    if (rng() % 2) {
      int b = static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      if (b >= a) ++b;
      c.add("cx", {a, b});
    } else {
      c.add("h", {a});
    }
  }
  return c;
}

void BM_SabreIncremental(benchmark::State& state) {
  const DeviceModel d = make_device("grid4x5", 20, grid_edges(4, 5), "ibmq");
  const Circuit c = random_cx(20, static_cast<int>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(sabre_route(c, d));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SabreIncremental)->RangeMultiplier(4)->Range(1 << 10, 1 << 16)->Complexity()->Unit(benchmark::kMillisecond);

void BM_SabreRescan(benchmark::State& state) {
  const DeviceModel d = make_device("grid4x5", 20, grid_edges(4, 5), "ibmq");
  const Circuit c = random_cx(20, static_cast<int>(state.range(0)), 1);
  RouteOptions opts;
  opts.rescan_front = true;
  for (auto _ : state) benchmark::DoNotOptimize(sabre_route(c, d, 0, opts));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SabreRescan)->RangeMultiplier(4)->Range(1 << 8, 1 << 12)->Complexity()->Unit(benchmark::kMillisecond);

void BM_TranspileFalcon(benchmark::State& state) {
  const DeviceModel d = make_device("falcon27", 27, falcon27_edges(), "ibmq");
  const Circuit c = random_cx(21, static_cast<int>(state.range(0)), 2);
  for (auto _ : state) benchmark::DoNotOptimize(transpile(c, d));
}
BENCHMARK(BM_TranspileFalcon)->Arg(10000)->Arg(87000)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
