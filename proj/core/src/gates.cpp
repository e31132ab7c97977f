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

#include "qasmtrans/gates.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "qasmtrans/errors.hpp"

namespace qasmtrans {

// ---- circuit containers ----------------------------------------------------

GateMatrix GateMatrix::from(const CMat& m) {
  GateMatrix g;
  g.dim = static_cast<int>(m.rows());
  const auto n = static_cast<std::size_t>(g.dim * g.dim);
  g.re.resize(n);
  g.im.resize(n);
  for (int r = 0; r < g.dim; ++r) {
    for (int c = 0; c < g.dim; ++c) {
      const auto k = static_cast<std::size_t>(r * g.dim + c);
      g.re[k] = m(r, c).real();
      g.im[k] = m(r, c).imag();
    }
  }
  return g;
}

CMat GateMatrix::to_eigen() const {
  CMat m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) m(r, c) = at(r, c);
  }
  return m;
}

const Register& RegisterMap::add_qreg(const std::string& name, int size) {
  qregs_.push_back({name, size, total_qubits_});
  total_qubits_ += size;
  return qregs_.back();
}

const Register& RegisterMap::add_creg(const std::string& name, int size) {
  cregs_.push_back({name, size, total_clbits_});
  total_clbits_ += size;
  return cregs_.back();
}

std::optional<Register> RegisterMap::find_qreg(const std::string& name) const {
  for (const auto& r : qregs_) {
    if (r.name == name) return r;
  }
  return std::nullopt;
}

std::optional<Register> RegisterMap::find_creg(const std::string& name) const {
  for (const auto& r : cregs_) {
    if (r.name == name) return r;
  }
  return std::nullopt;
}

RegisterMap RegisterMap::flat(int num_qubits, int num_clbits) {
  RegisterMap m;
  if (num_qubits > 0) m.add_qreg("q", num_qubits);
  if (num_clbits > 0) m.add_creg("c", num_clbits);
  return m;
}

Circuit Circuit::with_qubits(int num_qubits, int num_clbits) {
  Circuit c;
  c.num_qubits = num_qubits;
  c.num_clbits = num_clbits;
  c.register_map = RegisterMap::flat(num_qubits, num_clbits);
  return c;
}

Circuit& Circuit::add(const std::string& name, std::vector<int> qubits,
                      std::vector<double> params) {
  if (name == "barrier") return add(make_barrier(std::move(qubits)));
  return add(make_gate(name, std::move(qubits), std::move(params)));
}

Circuit& Circuit::add(GateIR gate) {
  for (int q : gate.qubits) {
    if (q < 0 || q >= num_qubits) {
      throw InternalError("gate " + gate.name + " uses qubit " +
                          std::to_string(q) + " outside the circuit");
    }
  }
  gates.push_back(std::move(gate));
  return *this;
}

Circuit& Circuit::measure(int qubit, int clbit) {
  if (clbit >= num_clbits) {
    num_clbits = clbit + 1;
    register_map = RegisterMap::flat(num_qubits, num_clbits);
  }
  measurements.push_back({qubit, clbit, static_cast<int>(gates.size())});
  return *this;
}

bool Circuit::has_mid_circuit_measurement() const {
  if (measurements.empty()) return false;
  std::vector<int> last_use(static_cast<std::size_t>(num_qubits), -1);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    if (gates[i].is_barrier()) continue;
    for (int q : gates[i].qubits) last_use[q] = static_cast<int>(i);
  }
  for (const auto& m : measurements) {
    if (last_use[m.qubit] >= m.position) return true;
  }
  return false;
}

// ---- gate table --------------------------------------------------------------

namespace {

const std::vector<GateSpec> kTable = {
    {"u3", 1, 3, GateKind::Basic},
    {"u2", 1, 2, GateKind::Basic},
    {"u1", 1, 1, GateKind::Basic},
    {"cx", 2, 0, GateKind::Basic},
    {"id", 1, 0, GateKind::Basic},
    {"x", 1, 0, GateKind::Standard},
    {"y", 1, 0, GateKind::Standard},
    {"z", 1, 0, GateKind::Standard},
    {"h", 1, 0, GateKind::Standard},
    {"s", 1, 0, GateKind::Standard},
    {"sdg", 1, 0, GateKind::Standard},
    {"t", 1, 0, GateKind::Standard},
    {"tdg", 1, 0, GateKind::Standard},
    {"rx", 1, 1, GateKind::Standard},
    {"ry", 1, 1, GateKind::Standard},
    {"rz", 1, 1, GateKind::Standard},
    {"cz", 2, 0, GateKind::Composite},
    {"cy", 2, 0, GateKind::Composite},
    {"swap", 2, 0, GateKind::Composite},
    {"ch", 2, 0, GateKind::Composite},
    {"ccx", 3, 0, GateKind::Composite},
    {"cswap", 3, 0, GateKind::Composite},
    {"crx", 2, 1, GateKind::Composite},
    {"cry", 2, 1, GateKind::Composite},
    {"crz", 2, 1, GateKind::Composite},
    {"cu1", 2, 1, GateKind::Composite},
    {"cu3", 2, 3, GateKind::Composite},
    {"rxx", 2, 1, GateKind::Composite},
    {"rzz", 2, 1, GateKind::Composite},
    {"rccx", 3, 0, GateKind::Composite},
    {"rc3x", 4, 0, GateKind::Composite},
    {"c3x", 4, 0, GateKind::Composite},
    {"c3sqrtx", 4, 0, GateKind::Composite},
    {"c4x", 5, 0, GateKind::Unsupported},
    {"u", 1, 3, GateKind::Extension},
    {"p", 1, 1, GateKind::Extension},
    {"sx", 1, 0, GateKind::Extension},
    {"sxdg", 1, 0, GateKind::Extension},
    {"gpi", 1, 1, GateKind::Extension},
    {"gpi2", 1, 1, GateKind::Extension},
    {"gz", 1, 1, GateKind::Extension},
    {"ms", 2, 2, GateKind::Extension},
    {"zz", 2, 0, GateKind::Extension},
    {"iswap", 2, 0, GateKind::Extension},
    {"barrier", 0, 0, GateKind::Directive},
};

CMat u3_matrix(double theta, double phi, double lambda) {
  const double c = std::cos(theta / 2), s = std::sin(theta / 2);
  CMat m(2, 2);
  m << c, -std::exp(cplx(0, lambda)) * s, std::exp(cplx(0, phi)) * s,
      std::exp(cplx(0, phi + lambda)) * c;
  return m;
}

CMat diag2(cplx a, cplx b) {
  CMat m = CMat::Zero(2, 2);
  m(0, 0) = a;
  m(1, 1) = b;
  return m;
}

CMat hadamard() {
  const double r = 1.0 / std::sqrt(2.0);
  CMat m(2, 2);
  m << r, r, r, -r;
  return m;
}

CMat sqrt_x() {
  CMat m(2, 2);
  m << cplx(0.5, 0.5), cplx(0.5, -0.5), cplx(0.5, -0.5), cplx(0.5, 0.5);
  return m;
}

CMat swap_matrix() {
  CMat m = CMat::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

CMat two_qubit_rotation(const Mat2& pauli, double theta) {
  const CMat pp = kron(pauli, pauli);
  return std::cos(theta / 2) * CMat::Identity(4, 4) -
         kI * std::sin(theta / 2) * pp;
}

}  // namespace

const std::vector<GateSpec>& gate_table() { return kTable; }

const GateSpec* find_gate(std::string_view name) {
  for (const auto& g : kTable) {
    if (g.name == name) return &g;
  }
  return nullptr;
}

CMat controlled(const CMat& u, int num_controls) {
  const Eigen::Index d = u.rows();
  const Eigen::Index n = d << num_controls;
  CMat m = CMat::Identity(n, n);
  m.block(n - d, n - d, d, d) = u;
  return m;
}

CMat gate_matrix(std::string_view name, const std::vector<double>& p) {
  const GateSpec* spec = find_gate(name);
  if (spec == nullptr || spec->kind == GateKind::Directive) {
    throw UnknownGate(std::string(name));
  }
  if (static_cast<int>(p.size()) != spec->num_params) {
    throw ArityMismatch("gate " + std::string(name) + " expects " +
                        std::to_string(spec->num_params) + " parameters");
  }
  const cplx i = kI;
  if (name == "u3" || name == "u") return u3_matrix(p[0], p[1], p[2]);
  if (name == "u2") return u3_matrix(kPi / 2, p[0], p[1]);
  if (name == "u1" || name == "p") return diag2(1.0, std::exp(i * p[0]));
  if (name == "id") return CMat::Identity(2, 2);
  if (name == "x") return pauli_x();
  if (name == "y") return pauli_y();
  if (name == "z") return pauli_z();
  if (name == "h") return hadamard();
  if (name == "s") return diag2(1.0, i);
  if (name == "sdg") return diag2(1.0, -i);
  if (name == "t") return diag2(1.0, std::exp(i * (kPi / 4)));
  if (name == "tdg") return diag2(1.0, std::exp(-i * (kPi / 4)));
  if (name == "rx") return rx_matrix(p[0]);
  if (name == "ry") return ry_matrix(p[0]);
  if (name == "rz" || name == "gz") return rz_matrix(p[0]);
  if (name == "sx") return sqrt_x();
  if (name == "sxdg") return sqrt_x().adjoint();
  if (name == "gpi") {
    CMat m(2, 2);
    m << 0, std::exp(-i * p[0]), std::exp(i * p[0]), 0;
    return m;
  }
  if (name == "gpi2") {
    const double r = 1.0 / std::sqrt(2.0);
    CMat m(2, 2);
    m << r, -i * r * std::exp(-i * p[0]), -i * r * std::exp(i * p[0]), r;
    return m;
  }
  if (name == "cx") return controlled(pauli_x(), 1);
  if (name == "cz") return controlled(pauli_z(), 1);
  if (name == "cy") return controlled(pauli_y(), 1);
  if (name == "ch") return controlled(hadamard(), 1);
  if (name == "swap") return swap_matrix();
  if (name == "crx") return controlled(rx_matrix(p[0]), 1);
  if (name == "cry") return controlled(ry_matrix(p[0]), 1);
  if (name == "crz") return controlled(rz_matrix(p[0]), 1);
  if (name == "cu1") return controlled(diag2(1.0, std::exp(i * p[0])), 1);
  if (name == "cu3") return controlled(u3_matrix(p[0], p[1], p[2]), 1);
  if (name == "rxx") return two_qubit_rotation(pauli_x(), p[0]);
  if (name == "rzz") return two_qubit_rotation(pauli_z(), p[0]);
  if (name == "ccx") return controlled(pauli_x(), 2);
  if (name == "cswap") return controlled(swap_matrix(), 1);
  if (name == "c3x") return controlled(pauli_x(), 3);
  if (name == "c3sqrtx") return controlled(sqrt_x(), 3);
  if (name == "c4x") return controlled(pauli_x(), 4);
  if (name == "rccx") {
    // Toffoli with relative phases: -1 on |101>, +-i on the flipped pair.
    CMat m = CMat::Identity(8, 8);
    m(5, 5) = -1.0;
    m(6, 6) = m(7, 7) = 0.0;
    m(7, 6) = i;
    m(6, 7) = -i;
    return m;
  }
  if (name == "rc3x") {
    CMat m = CMat::Identity(16, 16);
    m(12, 12) = i;
    m(13, 13) = -i;
    m(14, 14) = m(15, 15) = 0.0;
    m(15, 14) = -1.0;
    m(14, 15) = 1.0;
    return m;
  }
  if (name == "ms") {
    const double r = 1.0 / std::sqrt(2.0);
    const double s = p[0] + p[1], d = p[0] - p[1];
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = m(1, 1) = m(2, 2) = m(3, 3) = r;
    m(0, 3) = -i * r * std::exp(-i * s);
    m(1, 2) = -i * r * std::exp(-i * d);
    m(2, 1) = -i * r * std::exp(i * d);
    m(3, 0) = -i * r * std::exp(i * s);
    return m;
  }
  if (name == "zz") {
    const cplx a = std::exp(-i * (kPi / 4)), b = std::exp(i * (kPi / 4));
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = a;
    m(1, 1) = b;
    m(2, 2) = b;
    m(3, 3) = a;
    return m;
  }
  if (name == "iswap") {
    CMat m = CMat::Zero(4, 4);
    m(0, 0) = m(3, 3) = 1.0;
    m(1, 2) = m(2, 1) = i;
    return m;
  }
  throw UnknownGate(std::string(name));
}

GateIR make_gate(const std::string& name, std::vector<int> qubits,
                 std::vector<double> params) {
  const GateSpec* spec = find_gate(name);
  if (spec == nullptr) throw UnknownGate(name);
  if (spec->kind == GateKind::Directive) return make_barrier(std::move(qubits));
  if (static_cast<int>(qubits.size()) != spec->num_qubits) {
    throw ArityMismatch("gate " + name + " acts on " +
                        std::to_string(spec->num_qubits) + " qubits, got " +
                        std::to_string(qubits.size()));
  }
  if (static_cast<int>(params.size()) != spec->num_params) {
    throw ArityMismatch("gate " + name + " expects " +
                        std::to_string(spec->num_params) + " parameters, got " +
                        std::to_string(params.size()));
  }
  std::set<int> distinct(qubits.begin(), qubits.end());
  if (distinct.size() != qubits.size()) {
    throw ArityMismatch("gate " + name + " repeats a qubit argument");
  }
  GateIR g;
  g.name = name;
  g.qubits = std::move(qubits);
  g.params = std::move(params);
  g.matrix = GateMatrix::from(gate_matrix(name, g.params));
  return g;
}

GateIR make_barrier(std::vector<int> qubits) {
  GateIR g;
  g.name = "barrier";
  std::vector<int> unique;
  for (int q : qubits) {
    if (std::find(unique.begin(), unique.end(), q) == unique.end()) {
      unique.push_back(q);
    }
  }
  g.qubits = std::move(unique);
  return g;
}

}  // namespace qasmtrans
