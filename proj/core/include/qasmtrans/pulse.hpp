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

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qasmtrans/ashn.hpp"
#include "qasmtrans/circuit.hpp"
#include "qasmtrans/device.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/pulsesim.hpp"

namespace qasmtrans {

struct Channel {
  enum class Kind { Drive, Flux, Coupler };
  Kind kind = Kind::Drive;
  /// Qubit for drive channels, edge index (CouplingGraph::edges()) otherwise.
  int index = 0;

  bool operator==(const Channel&) const = default;
};

const char* channel_kind_name(Channel::Kind kind);

struct Waveform {
  /// "gaussian", "flat_top" or "constant".
  std::string name = "gaussian";
  std::map<std::string, double> params;
};

/// One pulse on one channel. Amplitude and detuning are angular rates in
/// rad/ns; the JSON form reports both in Hz.
struct PulseEvent {
  Channel channel;
  double t_start_ns = 0.0;
  double duration_ns = 0.0;
  Waveform waveform;
  double amplitude = 0.0;
  double phase_rad = 0.0;
  double detuning = 0.0;
  /// Source gate index in the scheduled circuit (-1 for none).
  int gate = -1;

  double end_ns() const { return t_start_ns + duration_ns; }
};

/// Accumulated virtual-Z phase per qubit.
struct FrameMap {
  std::vector<double> phase;
};

/// Calibrated pulse for one basis gate on one qubit or edge.
struct PulseTemplate {
  Channel::Kind kind = Channel::Kind::Drive;
  double duration_ns = 0.0;
  std::string waveform = "gaussian";
  double ramp_ns = 0.0;
  /// Fixed amplitude in rad/ns for entangling pulses. Drive templates are
  /// scaled per gate from the rotation angle.
  double amplitude = 0.0;
};

/// Application-tailored entry replacing a gate block on a fixed qubit pair.
struct AgsEntry {
  std::string signature;
  std::vector<int> qubits;
  double duration_ns = 0.0;
  /// When present the block is realized as an AshN pulse with frame-aware
  /// local corrections; otherwise a single opaque coupler event is emitted.
  std::optional<AshnGate> ashn;
};

struct PulseLibrary {
  double dt_ns = 0.1;
  /// Pulse-model parameters used to expand AshN entries.
  std::optional<PulseParams> params;
  /// Keyed by (gate name, qubit) for 1q gates and (gate name, edge index) for
  /// 2q gates.
  std::map<std::pair<std::string, int>, PulseTemplate> templates;
  std::vector<AgsEntry> ags;

  const PulseTemplate* find(const std::string& gate, int index) const;
  const AgsEntry* find_ags(const std::string& signature, const std::vector<int>& qubits) const;
};

/// Templates for every basis gate of the device. Durations come from the
/// calibration; the pulse section (if any) sets envelopes and coupler swing.
PulseLibrary default_library(const DeviceModel& device);

struct Schedule {
  int num_qubits = 0;
  double dt_ns = 0.1;
  std::vector<PulseEvent> events;
  FrameMap frames;
  double makespan_ns = 0.0;
};

/// ASAP schedule in program order. Z rotations only move the frame; drive
/// phases are emitted as base phase minus the frame at emission time, so the
/// logical action is RZ(final frame) times the physical evolution. Blocks
/// matching an AGS entry are replaced as a whole. Throws MissingTemplate.
Schedule build_schedule(const Circuit& circuit, const PulseLibrary& lib,
                        const DeviceModel& device);

/// Maximal runs of gates confined to one qubit or one pair, contiguous on
/// each qubit. block_of[g] is the block of gate g (-1 for barriers).
struct GateBlocks {
  struct Block {
    std::vector<int> qubits;  // ascending, one or two entries
    std::vector<int> gates;   // program order
  };
  std::vector<Block> blocks;
  std::vector<int> block_of;
};

GateBlocks collect_blocks(const Circuit& circuit);

/// Canonical text of a block: gate names, angles rounded to 1e-9 and qubit
/// roles, minimized over the two role assignments of a pair.
std::string block_signature(const Circuit& circuit, const GateBlocks::Block& block);

struct AgsCandidate {
  std::string signature;
  std::vector<int> qubits;
  double cumulative_ns = 0.0;
  int occurrences = 0;
  /// First block index with this signature, for reconstruction.
  int example_block = -1;
};

/// Blocks met along the critical path, grouped by (signature, qubits) and
/// ranked by summed critical-path latency (then occurrences, signature).
std::vector<AgsCandidate> ags_candidates(const Circuit& circuit, const DurationFn& durations);

/// Same ranking with blocks and critical path supplied by the caller.
std::vector<AgsCandidate> ags_candidates(const Circuit& circuit, const GateBlocks& blocks,
                                         const std::vector<int>& cp_gates,
                                         const DurationFn& durations);

/// Unitary of a block on its own qubits (little-endian in the block's
/// ascending qubit order).
CMat block_unitary(const Circuit& circuit, const GateBlocks::Block& block);

/// Durations that build_schedule assigns to circuit gates.
DurationFn library_durations(const PulseLibrary& lib, const DeviceModel& device);

/// {"version":"qasmtrans-pulse/1", ...}.
std::string schedule_to_json(const Schedule& schedule);

/// Pulse model over `qubits` (device indices, any order; position i becomes
/// model qubit i). Flux events are not part of the XX+YY model and raise
/// DimensionMismatch, as do events touching qubits outside the subset.
PulseModel model_from_schedule(const Schedule& schedule, const DeviceModel& device,
                               const std::vector<int>& qubits, bool noise);

/// prod_q RZ(frame_q) over the model qubits, the last step from physical to
/// logical frame.
CMat frame_unitary(const Schedule& schedule, const std::vector<int>& qubits);

Envelope envelope_of(const PulseEvent& event);

}  // namespace qasmtrans
