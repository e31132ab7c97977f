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

#include "qasmtrans/kak.hpp"
#include "qasmtrans/linalg.hpp"

namespace {

using namespace qasmtrans;

void BM_KakDecompose(benchmark::State& state) {
  std::mt19937_64 rng(3);
  std::vector<Mat4> us;
  for (int i = 0; i < 64; ++i) us.push_back(random_unitary(4, rng));
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(kak_decompose(us[i++ % us.size()]));
}
BENCHMARK(BM_KakDecompose);

void BM_EulerTwoPulse(benchmark::State& state) {
  std::mt19937_64 rng(4);
  const Mat2 u = random_unitary(2, rng);
  for (auto _ : state) benchmark::DoNotOptimize(euler_two_pulse(u));
}
BENCHMARK(BM_EulerTwoPulse);

}  // namespace

BENCHMARK_MAIN();
