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

#include <string>
#include <vector>

#include "qasmtrans/circuit.hpp"
#include "qasmtrans/device.hpp"
#include "qasmtrans/ir.hpp"

namespace qasmtrans {

struct InteractionEdge {
  int a = 0;  // a < b
  int b = 0;
  int weight = 0;
};

/// Qubits that carry at least one gate, and the pairs joined by two-qubit
/// gates, weighted by how many such gates they share.
struct InteractionGraph {
  int num_qubits = 0;
  std::vector<int> vertices;           // ascending
  std::vector<InteractionEdge> edges;  // sorted by (a, b)

  std::vector<int> neighbors(int v) const;
};

InteractionGraph interaction_graph(const Circuit& circuit);

/// An embedding maps circuit qubit q to device qubit mapping[q]; qubits that
/// are not interaction-graph vertices hold -1.
using Embedding = std::vector<int>;

/// Subgraph monomorphisms of `ig` into the coupling graph, found by
/// backtracking with forward checking. At most `limit` results (0 means no
/// limit), sorted lexicographically. Throws NoEmbedding.
std::vector<Embedding> enumerate_embeddings(const InteractionGraph& ig,
                                            const CouplingGraph& coupling,
                                            std::size_t limit = 10000);

struct CriticalPath {
  std::vector<int> gates;  // gate indices in program order, barriers omitted
  double latency_ns = 0.0;
};

/// Longest duration-weighted dependency chain. Among equal-latency chains
/// the one ending earliest is chosen, then predecessors are picked by lowest
/// gate index. Throws MissingDuration through `durations`.
CriticalPath critical_path(const Circuit& circuit, const DurationFn& durations);

/// Placement-independent durations: named 1q gates use the device table
/// (unknown ones the slowest listed 1q gate), 2q gates the mean coupler time.
DurationFn placement_durations(const DeviceModel& device);

struct PlacementScore {
  Embedding mapping;
  int cp_length = 0;
  std::vector<int> cp_gates;
  /// Mean calibrated error along the critical path under `mapping`.
  double score = 0.0;
};

/// (1 / |cp|) * sum of e1 (1q) or e2 on the mapped coupler (2q) over cp.
double critical_path_error(const Circuit& circuit, const std::vector<int>& cp_gates,
                           const Embedding& mapping, const DeviceModel& device);

struct PlacementResult {
  PlacementScore best;
  /// Every enumerated mapping, ordered by score then mapping.
  std::vector<PlacementScore> all;
};

/// Throws NoEmbedding.
PlacementResult select_placement(const Circuit& circuit, const DeviceModel& device,
                                 std::size_t limit = 10000,
                                 const DurationFn& durations = nullptr);

/// Completes an embedding to a permutation of all device qubits: unused
/// circuit qubits take the free device qubits in ascending order.
std::vector<int> complete_embedding(const Embedding& mapping, int num_physical);

}  // namespace qasmtrans
