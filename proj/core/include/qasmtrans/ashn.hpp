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

#pragma once

#include <cstdint>

#include "qasmtrans/device.hpp"
#include "qasmtrans/kak.hpp"
#include "qasmtrans/pulsesim.hpp"

namespace qasmtrans {

/// Two coupled qubits under simultaneous X drives and a shared detuning:
///   H(t) = s(t) [ (Delta/2)(Z0 + Z1) + (g/2)(XX + YY) + (W1/2) X0 + (W2/2) X1 ]
/// with one flat-top envelope s for every term.
struct AshnPairModel {
  double g = 0.0;          // rad/ns
  double max_drive = 0.0;  // rad/ns, bound on |W1|, |W2| and |Delta|
  double ramp_ns = 10.0;
  double dt_ns = 0.1;
  /// Length of each single-qubit correction pulse.
  double drive_duration_ns = 10.0;

  static AshnPairModel from(const PulseParams& p);
};

struct AshnParams {
  double omega1 = 0.0;  // rad/ns
  double omega2 = 0.0;
  double delta = 0.0;
  double g = 0.0;
  /// Flat-top event length including both ramps (0 when no interaction is
  /// needed); the interaction integral is duration - ramp.
  double duration_ns = 0.0;
};

struct AshnOptions {
  /// Total objective evaluations across all durations and starts.
  int budget = 20000;
  int evals_per_start = 200;
  int starts_per_duration = 6;
  /// Coarse duration step; the last coarse interval is refined in 1 ns steps.
  double coarse_step_ns = 4.0;
  /// Below this after the budget: DidNotConverge.
  double threshold = 0.999;
  /// A duration is accepted once some start reaches this.
  double target = 0.9999;
  std::uint64_t seed = 0;
};

struct AshnGate {
  AshnParams params;
  AshnPairModel model;
  Mat4 target = Mat4::Identity();
  /// Propagator of the bare AshN pulse.
  Mat4 entangler = Mat4::Identity();
  WeylPoint target_weyl;
  WeylPoint entangler_weyl;
  /// F_avg between the canonical nonlocal parts of entangler and target.
  double nonlocal_fidelity = 1.0;
  /// F_avg of the simulated corrected block against the target.
  double fidelity = 1.0;
  int evaluations = 0;

  /// Two correction slots, the AshN pulse, two correction slots.
  double total_duration_ns() const;
};

/// exp(-i H area) for the constant part of the pair Hamiltonian; with one
/// common envelope this equals the time-ordered propagator exactly.
Mat4 ashn_unitary(const AshnParams& p, const AshnPairModel& model);

/// Searches durations upward from (a + b + |c|) / g on a 1 ns grid for the
/// shortest one reaching `target` (else the best seen). Each duration
/// maximizes the nonlocal F_avg over (W1, W2, Delta) with multi-start bounded
/// quasi-Newton. Local parts come from KAK and are
/// realized by two equatorial pulses per qubit on each side.
/// Throws DidNotConverge(best F).
AshnGate synthesize_ashn(const Mat4& target, const AshnPairModel& model,
                         const AshnOptions& opts = {});

/// Full two-qubit control set realizing `physical_target` (little-endian,
/// model qubit 0 = low bit) from `gate`'s entangler, starting at t0.
PulseModel ashn_block_model(const AshnGate& gate, const Mat4& physical_target, double t0 = 0.0);

}  // namespace qasmtrans
