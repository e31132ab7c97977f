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

// qasmtrans_devgen: writes device JSON files for standard topologies.

#include <algorithm>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qasmtrans/device.hpp"
#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/pipeline.hpp"

int main(int argc, char** argv) {
  using namespace qasmtrans;
  CLI::App app{"qasmtrans_devgen: generate device description files"};
  std::string topology = "line";
  int n = 5;
  int rows = 2;
  int cols = 3;
  std::string basis = "ibmq";
  std::vector<std::string> gates;
  std::string name;
  std::string output;
  UniformCalibration cal;
  double jitter = 0.0;
  std::uint64_t seed = 0;
  bool pulse = false;
  PulseParams pp;

  app.add_option("-t,--topology", topology, "line, ring, grid, complete, falcon27 or heavyhex127")
      ->check(CLI::IsMember({"line", "ring", "grid", "complete", "falcon27", "heavyhex127"}));
  app.add_option("-n,--qubits", n, "Qubit count for line, ring and complete");
  app.add_option("--rows", rows, "Grid rows");
  app.add_option("--cols", cols, "Grid columns");
  app.add_option("-b,--basis", basis, "ibmq, rigetti, ionq or quantinuum");
  app.add_option("--gates", gates, "Custom basis gate names, comma separated")->delimiter(',');
  app.add_option("--name", name, "Device name");
  app.add_option("-o,--output", output, "Output path (default: stdout)");
  app.add_option("--t1", cal.t1_us, "T1 in us");
  app.add_option("--t2", cal.t2_us, "T2 in us");
  app.add_option("--readout", cal.readout_error, "Readout error");
  app.add_option("--e1", cal.e1, "Single-qubit gate error");
  app.add_option("--e2", cal.e2, "Two-qubit gate error");
  app.add_option("--duration-2q", cal.two_qubit_duration_ns, "Two-qubit gate duration in ns");
  app.add_option("--jitter", jitter, "Relative spread applied to errors and coherence times")
      ->check(CLI::Range(0.0, 0.9));
  app.add_option("--seed", seed, "Seed for --jitter");
  app.add_flag("--pulse", pulse, "Add a pulse-model section");
  app.add_option("--coupling-hz", pp.coupling_hz, "g / 2pi of the coupler");
  app.add_option("--drive-ns", pp.drive_duration_ns, "Single-qubit drive length");
  app.add_option("--coupler-ns", pp.coupler_duration_ns, "iswap length");
  app.add_option("--ramp-ns", pp.ramp_ns, "Flat-top ramp length");
  app.add_option("--max-drive-hz", pp.max_drive_hz, "AshN drive bound");
  CLI11_PARSE(app, argc, argv);

  std::vector<std::pair<int, int>> edges;
  if (topology == "line") {
    edges = line_edges(n);
  } else if (topology == "ring") {
    edges = line_edges(n);
    if (n > 2) edges.push_back({0, n - 1});
  } else if (topology == "grid") {
    n = rows * cols;
    edges = grid_edges(rows, cols);
  } else if (topology == "complete") {
    edges = complete_edges(n);
  } else if (topology == "falcon27") {
    n = 27;
    edges = falcon27_edges();
  } else {
    n = 127;
    edges = heavy_hex127_edges();
  }
  if (name.empty()) name = topology + "_" + std::to_string(n);

  try {
    DeviceModel d = make_device(name, n, edges, gates.empty() ? basis : "custom", cal);
    if (!gates.empty()) {
      d.basis_gates = gates;
      d.calibration.gate_durations_ns.clear();
      for (const std::string& g : gates) {
        const GateSpec* spec = find_gate(g);
        if (spec == nullptr) throw UnknownGate(g);
        if (spec->num_qubits != 1) continue;  // couplers take the edge duration
        d.calibration.gate_durations_ns[g] = g == "rz" || g == "gz" ? 0.0 : pp.drive_duration_ns;
      }
    }
    if (jitter > 0.0) {
      std::mt19937_64 rng(seed);
      std::uniform_real_distribution<double> u(1.0 - jitter, 1.0 + jitter);
      for (auto& q : d.calibration.qubits) {
        q.e1 *= u(rng);
        q.readout_error *= u(rng);
        q.t1_us *= u(rng);
        q.t2_us = std::min(q.t2_us * u(rng), 2.0 * q.t1_us);
      }
      for (auto& e : d.calibration.edges) e.e2 *= u(rng);
    }
    if (pulse) {
      if (!(pp.coupling_hz > 0.0)) {
        // Default: a flat-top coupler pulse of the configured length is iSWAP.
        const double area = pp.coupler_duration_ns - pp.ramp_ns;
        pp.coupling_hz = (0.25 / area) * 1e9;
      }
      d.pulse = pp;
      for (auto& e : d.calibration.edges) e.duration_ns = pp.coupler_duration_ns;
    }
    const std::string text = device_to_json(d);
    if (output.empty()) {
      std::cout << text;
    } else {
      write_file_atomic(output, text);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  }
  return 0;
}
