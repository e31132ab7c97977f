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

#include <optional>
#include <string>
#include <vector>

#include "qasmtrans/linalg.hpp"

namespace qasmtrans {

/// Dense 2^k x 2^k matrix held as separate real and imaginary planes,
/// row-major. A zero dimension marks a directive with no unitary action.
struct GateMatrix {
  int dim = 0;
  std::vector<double> re;
  std::vector<double> im;

  static GateMatrix from(const CMat& m);
  CMat to_eigen() const;
  bool empty() const { return dim == 0; }
  cplx at(int row, int col) const {
    const auto k = static_cast<std::size_t>(row * dim + col);
    return {re[k], im[k]};
  }
};

/// One quantum operation. `qubits[0]` is the most significant bit of the
/// matrix index, so for `cx a,b` the control sits on the high bit.
struct GateIR {
  std::string name;
  std::vector<int> qubits;
  std::vector<double> params;
  GateMatrix matrix;

  int arity() const { return static_cast<int>(qubits.size()); }
  bool is_barrier() const { return name == "barrier"; }
};

/// Terminal measurement of a flattened qubit into a flattened classical bit.
struct Measurement {
  int qubit = 0;
  int clbit = 0;
  /// Number of gates that precede the measurement in program order.
  int position = 0;
};

struct Register {
  std::string name;
  int size = 0;
  int offset = 0;
};

/// Flattening of declared registers onto contiguous index ranges.
class RegisterMap {
 public:
  const Register& add_qreg(const std::string& name, int size);
  const Register& add_creg(const std::string& name, int size);

  std::optional<Register> find_qreg(const std::string& name) const;
  std::optional<Register> find_creg(const std::string& name) const;

  const std::vector<Register>& qregs() const { return qregs_; }
  const std::vector<Register>& cregs() const { return cregs_; }
  int total_qubits() const { return total_qubits_; }
  int total_clbits() const { return total_clbits_; }

  /// A single `q[n]` / `c[m]` pair, as produced by the emitter.
  static RegisterMap flat(int num_qubits, int num_clbits);

 private:
  std::vector<Register> qregs_;
  std::vector<Register> cregs_;
  int total_qubits_ = 0;
  int total_clbits_ = 0;
};

struct Circuit {
  int num_qubits = 0;
  int num_clbits = 0;
  std::vector<GateIR> gates;
  std::vector<Measurement> measurements;
  RegisterMap register_map;
  std::string source_name;

  /// Empty circuit over flat registers of the given sizes.
  static Circuit with_qubits(int num_qubits, int num_clbits = 0);

  /// Appends a gate built from the standard gate table.
  Circuit& add(const std::string& name, std::vector<int> qubits,
               std::vector<double> params = {});
  Circuit& add(GateIR gate);
  Circuit& measure(int qubit, int clbit);

  /// True when some gate acts on a qubit after that qubit was measured.
  bool has_mid_circuit_measurement() const;
};

}  // namespace qasmtrans
