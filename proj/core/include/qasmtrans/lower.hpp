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
#include "qasmtrans/linalg.hpp"

namespace qasmtrans {

/// Native gate set of a target machine.
struct BasisSet {
  std::string name;
  std::vector<std::string> one_qubit_gates;
  std::string two_qubit_gate;
  /// rx only at 0, +-pi/2 and +-pi.
  bool quantized_rx = false;

  bool contains(const std::string& gate) const;
};

/// ibmq: id rz sx x / cx. rigetti: rx rz / cz. ionq: gpi gpi2 gz / ms.
/// quantinuum: rx rz / zz. Throws NoRuleFor for other names.
BasisSet vendor_basis(const std::string& name);

/// Vendor basis named by the device, or its custom gate list.
BasisSet device_basis(const DeviceModel& device);

/// U = e^{i phi} RZ(alpha) RX(beta) RZ(gamma), so in time order the gates are
/// rz(gamma), rx(beta), rz(alpha). beta lies in [0, pi].
struct ZxzAngles {
  double alpha = 0.0;
  double beta = 0.0;
  double gamma = 0.0;
};

ZxzAngles lower_1q_zxz(const Mat2& u);

/// Rewrites every gate into the basis and merges runs of adjacent Z
/// rotations on the same qubit. Two-qubit gates keep their qubit pair.
/// Throws NoRuleFor.
Circuit lower(const Circuit& circuit, const BasisSet& basis);

}  // namespace qasmtrans
