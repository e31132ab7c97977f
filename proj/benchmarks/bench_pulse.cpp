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

#include "qasmtrans/ashn.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/pulsesim.hpp"

namespace {

using namespace qasmtrans;

PulseModel driven_chain(int n) {
  PulseModel m;
  m.num_qubits = n;
  for (int q = 0; q < n; ++q) {
    DriveControl d;
    d.qubit = q;
    d.envelope.shape = Envelope::Shape::Gaussian;
    d.envelope.duration = 40.0;
    d.amplitude = 0.1;
    m.drives.push_back(d);
    m.kappa.push_back(1.0 / 30000.0);
    m.gamma.push_back(1.0 / 40000.0);
  }
  for (int q = 0; q + 1 < n; ++q) {
    CouplerControl c;
    c.a = q;
    c.b = q + 1;
    c.envelope.duration = 40.0;
    c.amplitude = 0.02;
    m.couplers.push_back(c);
  }
  return m;
}

void BM_Propagate(benchmark::State& state) {
  const PulseModel m = driven_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(propagate(m, 40.0));
}
BENCHMARK(BM_Propagate)->DenseRange(1, 5)->Unit(benchmark::kMillisecond);

void BM_Lindblad(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const PulseModel m = driven_chain(n);
  CMat rho = CMat::Zero(Eigen::Index{1} << n, Eigen::Index{1} << n);
  rho(0, 0) = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(lindblad_evolve(m, rho, 40.0));
}
BENCHMARK(BM_Lindblad)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_SynthesizeCnot(benchmark::State& state) {
  PulseParams p;
  p.coupling_hz = 0.25 / 30.0 * 1e9;
  const AshnPairModel model = AshnPairModel::from(p);
  const Mat4 cx = gate_matrix("cx", {});
  for (auto _ : state) benchmark::DoNotOptimize(synthesize_ashn(cx, model));
}
BENCHMARK(BM_SynthesizeCnot)->Unit(benchmark::kMillisecond)->Iterations(1);

}  // namespace

BENCHMARK_MAIN();
