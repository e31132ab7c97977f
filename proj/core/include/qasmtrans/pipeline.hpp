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
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qasmtrans/circuit.hpp"
#include "qasmtrans/device.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/place.hpp"
#include "qasmtrans/route.hpp"

namespace qasmtrans {

struct TranspileOptions {
  /// Vendor basis to lower into; empty means the device's own basis.
  std::string backend;
  std::uint64_t seed = 0;
  /// Relocate the routed circuit with select_placement.
  bool noise_adaptive = false;
  /// Route inside partial_graph(device, k).
  std::optional<int> constrain_k;
  /// Busiest qubit is renamed priority[0], and so on.
  std::optional<std::vector<int>> priority;
  RouteOptions route;
  std::size_t placement_limit = 10000;
  /// Placements kept in the report.
  int top_placements = 5;
};

struct StageTimings {
  double decompose_ms = 0.0;
  double route_ms = 0.0;
  double place_ms = 0.0;
  double lower_ms = 0.0;
  double total_ms = 0.0;
};

struct TranspileResult {
  Circuit input;
  /// After qubit prioritization and 3-qubit decomposition.
  Circuit decomposed;
  /// After routing and placement, before lowering.
  Circuit routed;
  Circuit output;
  /// Input qubit -> device qubit at the start and at the end of the output.
  std::vector<int> initial_layout;
  std::vector<int> final_layout;
  int swaps_inserted = 0;
  std::optional<PlacementScore> placement;
  std::vector<PlacementScore> top_placements;
  StageTimings timings;
  CircuitStats before;
  CircuitStats after;
};

/// decompose_3q -> route -> [place] -> lower, in that order.
TranspileResult transpile(const Circuit& circuit, const DeviceModel& device,
                          const TranspileOptions& opts = {});

/// Oracle check of output against input under the composed layouts.
struct VerifyReport {
  bool equivalent = false;
  double max_deviation = 0.0;
};
VerifyReport verify_transpile(const TranspileResult& result, double tol = 1e-8);

struct JobConfig {
  std::vector<std::string> inputs;
  std::string device_path;
  std::string backend;
  std::string output_path;  // empty: standard output
  /// Defaults to <output>.summary.json when an output path is set.
  std::string summary_path;
  std::string pulse_path;
  /// Region report for space sharing; defaults to <output>.regions.json.
  std::string regions_path;
  std::uint64_t seed = 0;
  bool noise_adaptive = false;
  bool space_share = false;
  std::optional<int> constrain_k;
  std::optional<std::vector<int>> priority;
  /// Print the summary JSON to standard output.
  bool print_stats = false;
  bool verify = false;
};

/// Runs one job, writing artifacts atomically. Returns the process exit
/// code: 0 success, 1 parse, 2 device, 3 routing, 4 internal.
int run(const JobConfig& config, std::ostream& out, std::ostream& err);

/// Writes through a temporary file and a rename.
void write_file_atomic(const std::string& path, const std::string& contents);

}  // namespace qasmtrans
