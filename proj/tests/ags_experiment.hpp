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

// GHZ-3 on the noisy 7-qubit chain, scheduled once with the rx/iswap
// decomposition and once with every two-qubit critical-path block replaced
// by a calibrated AshN pulse.

#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "qasmtrans/ashn.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/pipeline.hpp"
#include "qasmtrans/pulse.hpp"
#include "qasmtrans/pulsesim.hpp"
#include "support.hpp"

namespace qasmtrans::testing {

struct ScheduleRun {
  double makespan_ns = 0.0;
  double state_fidelity = 0.0;
  /// Same schedule without decoherence.
  double noiseless_fidelity = 0.0;
};

struct AgsExperiment {
  ScheduleRun baseline;
  ScheduleRun ags;
  int replaced_blocks = 0;
  double worst_block_fidelity = 1.0;
};

inline std::vector<int> active_qubits(const Circuit& c) {
  std::vector<int> q;
  for (const auto& g : c.gates) q.insert(q.end(), g.qubits.begin(), g.qubits.end());
  std::sort(q.begin(), q.end());
  q.erase(std::unique(q.begin(), q.end()), q.end());
  return q;
}

// Final-state fidelity against the GHZ state on `active`. GHZ is symmetric
// under qubit permutations, so the final layout does not matter.
inline ScheduleRun run_ghz_schedule(const Schedule& s, const DeviceModel& d, const std::vector<int>& active) {
  const Eigen::Index dim = Eigen::Index{1} << active.size();
  CMat rho0 = CMat::Zero(dim, dim);
  rho0(0, 0) = 1.0;
  CVec ghz = CVec::Zero(dim);
  ghz(0) = ghz(dim - 1) = 1.0 / std::sqrt(2.0);
  const CMat frames = frame_unitary(s, active);
  ScheduleRun r;
  r.makespan_ns = s.makespan_ns;
  for (bool noise : {true, false}) {
    const PulseModel m = model_from_schedule(s, d, active, noise);
    const CMat rho = frames * lindblad_evolve(m, rho0, s.makespan_ns) * frames.adjoint();
    (noise ? r.state_fidelity : r.noiseless_fidelity) = state_fidelity(rho, ghz);
  }
  return r;
}

inline AgsExperiment ghz3_ags_experiment() {
  const DeviceModel d = device("pulse_chain7");
  Circuit ghz = Circuit::with_qubits(3);
  ghz.add("h", {0}).add("cx", {0, 1}).add("cx", {1, 2});
  const Circuit out = strip_measurements(transpile(ghz, d).output);
  const std::vector<int> active = active_qubits(out);

  const PulseLibrary lib = default_library(d);
  AgsExperiment ex;
  ex.baseline = run_ghz_schedule(build_schedule(out, lib, d), d, active);

  PulseLibrary ags = lib;
  const GateBlocks blocks = collect_blocks(out);
  const AshnPairModel pair = AshnPairModel::from(*d.pulse);
  for (const AgsCandidate& c : ags_candidates(out, library_durations(lib, d))) {
    if (c.qubits.size() != 2) continue;
    const auto& blk = blocks.blocks[static_cast<std::size_t>(c.example_block)];
    const AshnGate gate = synthesize_ashn(block_unitary(out, blk), pair);
    ex.worst_block_fidelity = std::min(ex.worst_block_fidelity, gate.fidelity);
    ags.ags.push_back({c.signature, c.qubits, gate.total_duration_ns(), gate});
    ++ex.replaced_blocks;
  }
  ex.ags = run_ghz_schedule(build_schedule(out, ags, d), d, active);
  return ex;
}

}  // namespace qasmtrans::testing
