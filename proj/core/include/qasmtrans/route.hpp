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

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "qasmtrans/circuit.hpp"
#include "qasmtrans/device.hpp"

namespace qasmtrans {

/// Virtual-to-physical qubit assignment. Unassigned physical slots hold -1.
struct Layout {
  std::vector<int> virt_to_phys;
  std::vector<int> phys_to_virt;

  /// Virtual qubit i on physical qubit i.
  static Layout identity(int num_virtual, int num_physical);
  /// Throws NotAPermutation unless injective and consistent.
  void validate() const;
  void swap_physical(int a, int b);
};

struct RouteOptions {
  /// Emit each inserted SWAP as three CX rather than a `swap` gate.
  bool expand_swaps = true;
  /// Forward/backward passes used to refine the initial layout (0 or 3).
  int refinement_rounds = 0;
  int extended_set_size = 20;
  double extended_set_weight = 0.5;
  double decay_delta = 0.001;
  int decay_reset_interval = 5;
  /// Reference mode: recompute the front layer by scanning the whole DAG
  /// after every step instead of updating it incrementally.
  bool rescan_front = false;
  /// Abort with Timeout once this instant passes.
  std::optional<std::chrono::steady_clock::time_point> deadline;
  /// Start from this layout instead of the identity.
  std::optional<Layout> initial_layout;
};

struct RoutingResult {
  /// Circuit over the device's physical qubits; measurements are placed at
  /// the end and follow the final layout.
  Circuit circuit;
  Layout initial_layout;
  Layout final_layout;
  int swaps_inserted = 0;
};

/// Sabre SWAP insertion. Ties in the swap score break toward the lowest edge
/// index when seed is 0 and through a seeded XorShift64 otherwise.
/// Throws TooManyQubits, Disconnected, Timeout.
RoutingResult sabre_route(const Circuit& circuit, const DeviceModel& device,
                          std::uint64_t seed = 0, const RouteOptions& opts = {});

/// Routes inside partial_graph(device, k); indices in the result refer to the
/// full device. Throws TooManyQubits when k is below the circuit width.
RoutingResult constrained_route(const Circuit& circuit, const DeviceModel& device,
                                int k, std::uint64_t seed = 0,
                                const RouteOptions& opts = {});

/// Renames the qubit with the i-th largest gate count to priority_order[i]
/// (equal counts rank by ascending index). Throws NotAPermutation.
Circuit prioritize_qubits(const Circuit& circuit,
                          const std::vector<int>& priority_order);

/// The relabeling prioritize_qubits applies: result[q] is the new name of q.
std::vector<int> priority_relabeling(const Circuit& circuit,
                                     const std::vector<int>& priority_order);

}  // namespace qasmtrans
