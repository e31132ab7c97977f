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

#include <climits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qasmtrans/circuit.hpp"

namespace qasmtrans {

/// Undirected coupling graph with all-pairs hop distances.
class CouplingGraph {
 public:
  static constexpr int kUnreachable = INT_MAX / 4;

  CouplingGraph() = default;
  CouplingGraph(int num_qubits, std::vector<std::pair<int, int>> edges);

  int num_qubits() const { return n_; }
  /// Edges with first < second, sorted.
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  /// Sorted neighbour list.
  const std::vector<int>& neighbors(int q) const { return adj_[q]; }
  int distance(int a, int b) const { return dist_[static_cast<std::size_t>(a * n_ + b)]; }
  bool has_edge(int a, int b) const { return distance(a, b) == 1; }
  /// Position of {a,b} in edges(), or -1.
  int edge_index(int a, int b) const;
  int component_count() const { return components_; }
  /// One row per qubit, comma separated; unreachable pairs print as "inf".
  std::string distances_csv() const;

 private:
  int n_ = 0;
  std::vector<std::pair<int, int>> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> dist_;
  int components_ = 0;
};

struct QubitCalibration {
  double t1_us = 100.0;
  double t2_us = 100.0;
  double readout_error = 0.0;
  double e1 = 0.0;
  std::map<std::string, double> gate_durations_ns;
};

struct EdgeCalibration {
  double e2 = 0.0;
  double duration_ns = 0.0;
};

/// Per-qubit and per-edge calibration. `edges` is aligned with
/// CouplingGraph::edges().
struct CalibrationData {
  std::vector<QubitCalibration> qubits;
  std::vector<EdgeCalibration> edges;
  /// Device-wide defaults for basis gate durations.
  std::map<std::string, double> gate_durations_ns;
};

/// Parameters of the pulse-level model of the device.
struct PulseParams {
  double dt_ns = 0.1;               // integration step
  double drive_duration_ns = 10.0;  // single-qubit drive pulse length
  double coupler_duration_ns = 40.0;  // iswap length, ramps included
  double ramp_ns = 10.0;            // cosine ramp length of flat-top events
  double coupling_hz = 0.0;         // g/2pi of the XX+YY coupler at full swing
  double max_drive_hz = 100e6;      // bound on |omega|/2pi for AshN drives
};

struct DeviceModel {
  std::string name;
  CouplingGraph coupling;
  CalibrationData calibration;
  /// "ibmq", "rigetti", "ionq", "quantinuum" or "custom".
  std::string basis = "ibmq";
  /// Gate names for a custom basis.
  std::vector<std::string> basis_gates;
  bool quantized_rx = false;
  std::optional<PulseParams> pulse;
  /// Non-fatal load diagnostics (for example a disconnected graph).
  std::vector<std::string> warnings;

  int num_qubits() const { return coupling.num_qubits(); }
  double e2(int a, int b) const;
  /// Calibrated duration of a device-native gate. Throws MissingDuration.
  double gate_duration(const GateIR& gate) const;
};

/// Accepts a file path or the JSON text itself (anything starting with '{').
DeviceModel load_device(const std::string& path_or_text);
DeviceModel parse_device_json(const std::string& text);
std::string device_to_json(const DeviceModel& device);

/// penalty(q) = e1_q + mean of e2 over q's couplers. Throws IsolatedQubit.
double penalty(int q, const DeviceModel& device);

struct PartialDevice {
  DeviceModel device;
  /// Sub-device qubit index -> parent qubit index (ascending).
  std::vector<int> to_parent;
};

/// Connected induced subgraph of exactly k qubits, grown greedily from the
/// anchor (default: lowest-penalty qubit) by repeatedly taking the frontier
/// qubit with the most edges into the selection, lower index first.
PartialDevice partial_graph(const DeviceModel& device, int k,
                            std::optional<int> anchor = std::nullopt);

/// Restriction of a device to an explicit qubit subset (ascending order).
PartialDevice restrict_device(const DeviceModel& device, std::vector<int> qubits);

// Topology generators with uniform calibration, used by tests, benchmarks
// and the device-file generator tool.

struct UniformCalibration {
  double t1_us = 100.0;
  double t2_us = 80.0;
  double readout_error = 0.02;
  double e1 = 3e-4;
  double e2 = 1e-2;
  double two_qubit_duration_ns = 300.0;
};

DeviceModel make_device(const std::string& name, int num_qubits,
                        std::vector<std::pair<int, int>> edges,
                        const std::string& basis,
                        const UniformCalibration& cal = {});
std::vector<std::pair<int, int>> line_edges(int n);
std::vector<std::pair<int, int>> grid_edges(int rows, int cols);
std::vector<std::pair<int, int>> complete_edges(int n);
/// 27-qubit Falcon layout.
std::vector<std::pair<int, int>> falcon27_edges();
/// 127-qubit heavy-hex Eagle layout.
std::vector<std::pair<int, int>> heavy_hex127_edges();

/// Default gate durations for a named basis.
std::map<std::string, double> default_gate_durations(const std::string& basis);

}  // namespace qasmtrans
