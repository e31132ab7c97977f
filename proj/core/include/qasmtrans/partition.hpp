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
#include "qasmtrans/pipeline.hpp"

namespace qasmtrans {

struct Region {
  int id = 0;
  std::vector<int> qubits;  // ascending
  int seed = -1;
  int requested_size = 0;
};

/// Seeds in input order. The largest request is seeded first on the
/// lowest-penalty qubit; each later one takes the qubit farthest (by minimum
/// hop distance) from all earlier seeds, ties to lower penalty then index.
/// Isolated qubits are never seeded. Throws TooManyQubitsRequested.
std::vector<int> seed_regions(const std::vector<int>& sizes, const DeviceModel& device);

/// Lockstep growth: each round every unfinished region, largest request
/// first, claims its best free frontier qubit (most links into the region,
/// then lower penalty, then lower index). A region without one may take a
/// leaf from an adjacent region that is ahead of its proportional schedule,
/// ceil(requested * round / max_rounds), provided the donor stays connected
/// and keeps its seed. Throws GrowthStuck.
std::vector<Region> grow_regions(const std::vector<int>& seeds, const std::vector<int>& sizes,
                                 const DeviceModel& device);

/// Throws GrowthStuck unless regions are disjoint, connected and exactly
/// sized.
void validate_regions(const std::vector<Region>& regions, const DeviceModel& device);

/// seed_regions + grow_regions + validate_regions. If lockstep growth stalls,
/// retries with other seeds and finally an exhaustive (step-capped) search.
std::vector<Region> partition_device(const std::vector<int>& sizes, const DeviceModel& device);

struct SpaceShareResult {
  /// Concurrent program over the full device; circuit i's clbits start at
  /// the sum of the clbit counts before it.
  Circuit merged;
  std::vector<Region> regions;
  /// Per-circuit results lifted to full-device qubit indices.
  std::vector<TranspileResult> parts;
  std::vector<int> clbit_offsets;
};

/// Transpiles each circuit inside its own region and merges the results.
SpaceShareResult space_share(const std::vector<Circuit>& circuits, const DeviceModel& device,
                             const TranspileOptions& opts = {});

/// [{"region_id", "qubits", "seed", "circuit_file"}, ...]
std::string region_report_json(const SpaceShareResult& result);

}  // namespace qasmtrans
