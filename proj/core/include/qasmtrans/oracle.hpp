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
#include <optional>
#include <vector>

#include "qasmtrans/circuit.hpp"
#include "qasmtrans/linalg.hpp"

namespace qasmtrans {

inline constexpr int kMaxSimulatedQubits = 14;
inline constexpr int kMaxUnitaryQubits = 7;
/// Active candidate wires (reference qubits plus routing ancillas) that
/// equivalent() will simulate.
inline constexpr int kMaxEquivalenceWires = 20;

/// Applies a 2^k x 2^k gate to `state`. Index bit q of the state is qubit q;
/// `qubits[0]` is the most significant bit of the gate matrix.
void apply_gate(CVec& state, int num_qubits, const CMat& gate,
                const std::vector<int>& qubits);

/// Ideal statevector simulation, starting from |0..0> unless `initial` is
/// given. Measurements must be terminal and are ignored.
/// Throws TooManyQubits, MidCircuitMeasurement, DimensionMismatch.
CVec simulate(const Circuit& circuit, const std::optional<CVec>& initial = std::nullopt);

/// Full unitary, one simulated column per basis state. Throws TooManyQubits.
CMat circuit_unitary(const Circuit& circuit);

struct EquivalenceOptions {
  /// Logical qubit i of the reference sits on wire initial_layout[i] of the
  /// candidate before it runs and on final_layout[i] afterwards. Empty means
  /// identity. Wires outside the layout are ancillas that start in |0>.
  std::vector<int> initial_layout;
  std::vector<int> final_layout;
  double tol = 1e-8;
  /// Number of Haar-random input states to compare. 0 compares every basis
  /// column, which is exact but exponential.
  int random_states = 0;
  std::uint64_t seed = 0;
};

struct EquivalenceResult {
  bool equivalent = false;
  /// Largest amplitude deviation after removing the global phase.
  double max_deviation = 0.0;
};

/// Checks U2 P = e^{i phi} U1 where P maps reference wires to candidate wires
/// through the layouts. Measurements are stripped first.
EquivalenceResult equivalent(const Circuit& reference, const Circuit& candidate,
                             const EquivalenceOptions& opts = {});

/// Layout-free form: both layouts equal `perm`.
EquivalenceResult equivalent(const Circuit& reference, const Circuit& candidate,
                             const std::vector<int>& perm, double tol = 1e-8);

}  // namespace qasmtrans
