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
#include <string_view>
#include <vector>

#include "qasmtrans/circuit.hpp"
#include "qasmtrans/linalg.hpp"

namespace qasmtrans {

enum class GateKind {
  Basic,      // u3, u2, u1, cx, id
  Standard,   // x .. rz
  Composite,  // defined in qelib1.inc from the two groups above
  Extension,  // vendor basis gates outside qelib1.inc
  Directive,  // barrier
  Unsupported // c4x: known, but rejected by the frontend
};

struct GateSpec {
  std::string_view name;
  int num_qubits;  // 0 for variadic directives
  int num_params;
  GateKind kind;
};

/// Lookup in the gate table; nullptr for unknown names.
const GateSpec* find_gate(std::string_view name);

/// All known gate specs in table order.
const std::vector<GateSpec>& gate_table();

/// Defining matrix of a gate, built from closed forms (never from the
/// qelib1 body). The first qubit is the most significant index bit.
CMat gate_matrix(std::string_view name, const std::vector<double>& params);

/// Builds a GateIR with its matrix. Throws UnknownGate or ArityMismatch.
GateIR make_gate(const std::string& name, std::vector<int> qubits,
                 std::vector<double> params = {});

/// Barrier over the given qubits (no matrix).
GateIR make_barrier(std::vector<int> qubits);

/// Controlled version of `u` with `num_controls` leading control qubits.
CMat controlled(const CMat& u, int num_controls);

}  // namespace qasmtrans
