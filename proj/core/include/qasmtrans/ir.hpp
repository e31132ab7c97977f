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

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "qasmtrans/circuit.hpp"

namespace qasmtrans {

/// Gate dependency DAG with an incrementally maintained front layer.
///
/// Node i is gate i of the source circuit. Edges join consecutive gates that
/// share a qubit; barriers are ordinary nodes over their qubits.
class CircuitDag {
 public:
  enum class State : unsigned char { Future, Front, Executed };

  int size() const { return static_cast<int>(state_.size()); }
  /// Front node ids in ascending order.
  const std::vector<int>& front() const { return front_; }
  bool in_front(int node) const { return state_[node] == State::Front; }
  State state(int node) const { return state_[node]; }
  int executed_count() const { return executed_; }
  int future_count() const { return size() - executed_ - static_cast<int>(front_.size()); }
  bool finished() const { return executed_ == size(); }

  const std::vector<int>& successors(int node) const { return succ_[node]; }
  const std::vector<int>& predecessors(int node) const { return pred_[node]; }

  friend CircuitDag build_dag(const Circuit& circuit);
  friend void advance_front(CircuitDag& dag, const std::vector<int>& executed);

 private:
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<int>> pred_;
  std::vector<int> remaining_;
  std::vector<State> state_;
  std::vector<int> front_;
  int executed_ = 0;
};

CircuitDag build_dag(const Circuit& circuit);

/// Marks `executed` (all in the front) as done and admits successors whose
/// dependencies are now all satisfied. Work is proportional to the number of
/// executed nodes, their out-edges and the front size; never to the total
/// gate count. Throws NotInFront.
void advance_front(CircuitDag& dag, const std::vector<int>& executed);

/// Replaces every 3- and 4-qubit qelib1 gate by its library body, applied
/// recursively, so only 1- and 2-qubit gates remain. `ccx` becomes 6 CX and
/// 9 single-qubit gates. Throws UnsupportedGate for anything wider.
Circuit decompose_3q(const Circuit& circuit);

using DurationFn = std::function<double(const GateIR&)>;

/// Gate-level circuit metrics.
///
/// Depth uses as-soon-as-possible layering; a barrier occupies one layer on
/// its qubits but is not a gate. gate_density = total / (depth * n).
/// retention_lifespan = max over qubits of last - first layer + 1.
/// measurement_density = mean layer of measured qubits' final gates over
/// depth (0 without measurements). entanglement_variance = population
/// variance of per-qubit two-qubit gate counts.
struct CircuitStats {
  int depth = 0;
  double gate_density = 0.0;
  int retention_lifespan = 0;
  double measurement_density = 0.0;
  double entanglement_variance = 0.0;
  int one_qubit_gates = 0;
  int two_qubit_gates = 0;
  int total_gates = 0;
  /// ASAP schedule length when durations were supplied.
  std::optional<double> latency_ns;
};

CircuitStats stats(const Circuit& circuit,
                   const DurationFn& durations = nullptr);

/// Flat `key: value` lines.
std::string stats_text(const CircuitStats& s);
/// JSON object with the keys depth, gate_density, retention_lifespan,
/// measurement_density, entanglement_variance, gates_1q, gates_2q,
/// gates_total.
std::string stats_json(const CircuitStats& s);

/// Copy without measurements.
Circuit strip_measurements(const Circuit& circuit);

/// Renames qubit q to perm[q] everywhere (gates and measurements) and
/// resizes the circuit to `new_size` qubits (default: unchanged).
Circuit relabel_qubits(const Circuit& circuit, const std::vector<int>& perm,
                       int new_size = -1);

}  // namespace qasmtrans
