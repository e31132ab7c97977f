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

#include "qasmtrans/lower.hpp"

#include <algorithm>
#include <cmath>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/frontend.hpp"
#include "qasmtrans/gates.hpp"

namespace qasmtrans {

bool BasisSet::contains(const std::string& gate) const {
  return gate == two_qubit_gate ||
         std::find(one_qubit_gates.begin(), one_qubit_gates.end(), gate) != one_qubit_gates.end();
}

BasisSet vendor_basis(const std::string& name) {
  if (name == "ibmq") return {"ibmq", {"id", "rz", "sx", "x"}, "cx", false};
  if (name == "rigetti") return {"rigetti", {"rx", "rz"}, "cz", true};
  if (name == "ionq") return {"ionq", {"gpi", "gpi2", "gz"}, "ms", false};
  if (name == "quantinuum") return {"quantinuum", {"rx", "rz"}, "zz", false};
  throw NoRuleFor("*", name);
}

BasisSet device_basis(const DeviceModel& device) {
  if (device.basis != "custom") {
    BasisSet b = vendor_basis(device.basis);
    b.quantized_rx = device.quantized_rx;
    return b;
  }
  BasisSet b;
  b.name = "custom";
  b.quantized_rx = device.quantized_rx;
  for (const auto& g : device.basis_gates) {
    const GateSpec* spec = find_gate(g);
    if (spec != nullptr && spec->num_qubits == 2) {
      b.two_qubit_gate = g;
    } else {
      b.one_qubit_gates.push_back(g);
    }
  }
  return b;
}

ZxzAngles lower_1q_zxz(const Mat2& u) {
  constexpr double kTiny = 1e-12;
  ZxzAngles a;
  const double c = std::abs(u(0, 0)), s = std::abs(u(1, 0));
  a.beta = 2.0 * std::atan2(s, c);
  if (s < kTiny) {
    a.alpha = std::arg(u(1, 1)) - std::arg(u(0, 0));
  } else if (c < kTiny) {
    a.alpha = std::arg(u(1, 0)) - std::arg(u(0, 1));
  } else {
    // Halving arg differences loses a sign of beta; these products fix both
    // angles outright: U10 conj(U00) ~ -i e^{i alpha}, U00 conj(U01) ~ i e^{-i gamma}.
    a.alpha = std::arg(u(1, 0) * std::conj(u(0, 0))) + kPi / 2.0;
    a.gamma = kPi / 2.0 - std::arg(u(0, 0) * std::conj(u(0, 1)));
  }
  a.alpha = wrap_angle(a.alpha);
  a.gamma = wrap_angle(a.gamma);
  return a;
}

namespace {

constexpr double kAngleTol = 1e-12;

bool near(double x, double y) { return std::abs(x - y) < kAngleTol; }

enum class Style { ZSx, RxRz, Ion };

// Merges consecutive Z rotations per qubit. A pending angle is flushed just
// before the next non-Z operation on its qubit, or at the end.
class ZMerger {
 public:
  ZMerger(std::string zname, int num_qubits, std::vector<GateIR>& out)
      : zname_(std::move(zname)), pending_(static_cast<std::size_t>(num_qubits), 0.0), out_(out) {}

  void push(GateIR g) {
    if (g.name == zname_) {
      pending_[static_cast<std::size_t>(g.qubits[0])] += g.params[0];
      return;
    }
    for (int q : g.qubits) flush(q);
    out_.push_back(std::move(g));
  }

  void flush(int q) {
    double& a = pending_[static_cast<std::size_t>(q)];
    const double w = wrap_angle(a);
    a = 0.0;
    if (std::abs(w) > kAngleTol) out_.push_back(make_gate(zname_, {q}, {w}));
  }

 private:
  std::string zname_;
  std::vector<double> pending_;
  std::vector<GateIR>& out_;
};

class Lowerer {
 public:
  Lowerer(const BasisSet& basis, ZMerger& sink) : basis_(basis), sink_(sink) {
    auto has = [&](const char* g) { return basis_.contains(g); };
    if (has("gpi") && has("gpi2") && has("gz")) {
      style_ = Style::Ion;
      z_ = "gz";
    } else if (has("rz") && has("sx")) {
      style_ = Style::ZSx;
    } else if (has("rz") && has("rx")) {
      style_ = Style::RxRz;
    } else {
      throw NoRuleFor("1q", basis_.name);
    }
  }

  void lower(const GateIR& g) {
    if (g.is_barrier()) {
      sink_.push(g);
      return;
    }
    if (native(g)) {
      sink_.push(g);
      return;
    }
    if (g.arity() == 1) {
      lower_1q(g.qubits[0], g.matrix.empty() ? gate_matrix(g.name, g.params) : g.matrix.to_eigen());
      return;
    }
    if (g.arity() == 2 && g.name == "cx") {
      lower_cx(g.qubits[0], g.qubits[1]);
      return;
    }
    const GateSpec* spec = find_gate(g.name);
    if (spec != nullptr && spec->kind == GateKind::Composite) {
      for (const GateIR& e : expand_composite_fully(g)) lower(e);
      return;
    }
    throw NoRuleFor(g.name, basis_.name);
  }

 private:
  bool native(const GateIR& g) const {
    if (!basis_.contains(g.name)) return false;
    if (g.name == "rx" && basis_.quantized_rx) {
      const double t = std::abs(g.params[0]);
      return near(t, kPi / 2) || near(t, kPi);
    }
    return true;
  }

  void emit(const std::string& name, int q, std::vector<double> params = {}) {
    sink_.push(make_gate(name, {q}, std::move(params)));
  }
  void z(int q, double theta) { emit(z_, q, {theta}); }

  void lower_1q(int q, const Mat2& u) {
    const ZxzAngles a = lower_1q_zxz(u);
    z(q, a.gamma);
    rx(q, a.beta);
    z(q, a.alpha);
  }

  // RX(beta), beta in [0, pi], up to global phase.
  void rx(int q, double beta) {
    if (near(beta, 0.0)) return;
    switch (style_) {
      case Style::ZSx:
        if (near(beta, kPi / 2)) {
          emit("sx", q);
        } else if (near(beta, kPi) && basis_.contains("x")) {
          emit("x", q);
        } else {
          z(q, kPi / 2);
          emit("sx", q);
          z(q, beta + kPi);
          emit("sx", q);
          z(q, kPi / 2);
        }
        return;
      case Style::RxRz:
        if (!basis_.quantized_rx || near(beta, kPi / 2) || near(beta, kPi)) {
          emit("rx", q, {near(beta, kPi / 2) ? kPi / 2 : (near(beta, kPi) ? kPi : beta)});
        } else {
          z(q, kPi / 2);
          emit("rx", q, {kPi / 2});
          z(q, beta);
          emit("rx", q, {-kPi / 2});
          z(q, -kPi / 2);
        }
        return;
      case Style::Ion:
        if (near(beta, kPi / 2)) {
          emit("gpi2", q, {0.0});
        } else if (near(beta, kPi)) {
          emit("gpi", q, {0.0});
        } else {
          emit("gpi2", q, {-kPi / 2});
          z(q, beta);
          emit("gpi2", q, {kPi / 2});
        }
        return;
    }
  }

  void lower_1q_named(const std::string& name, int q, std::vector<double> params = {}) {
    lower(make_gate(name, {q}, std::move(params)));
  }

  void lower_cx(int c, int t) {
    const std::string& two = basis_.two_qubit_gate;
    if (two == "cz") {
      lower_1q_named("h", t);
      sink_.push(make_gate("cz", {c, t}));
      lower_1q_named("h", t);
    } else if (two == "ms") {
      lower_1q_named("ry", c, {kPi / 2});
      sink_.push(make_gate("ms", {c, t}, {0.0, 0.0}));
      lower_1q_named("rx", c, {-kPi / 2});
      lower_1q_named("rx", t, {-kPi / 2});
      lower_1q_named("ry", c, {-kPi / 2});
    } else if (two == "zz") {
      lower_1q_named("h", t);
      sink_.push(make_gate("zz", {c, t}));
      lower_1q_named("rz", c, {-kPi / 2});
      lower_1q_named("rz", t, {-kPi / 2});
      lower_1q_named("h", t);
    } else if (two == "iswap") {
      lower_1q_named("rz", t, {kPi / 2});
      sink_.push(make_gate("iswap", {c, t}));
      lower_1q_named("rx", c, {kPi / 2});
      sink_.push(make_gate("iswap", {c, t}));
      lower_1q_named("rz", t, {kPi / 2});
      lower_1q_named("rx", t, {kPi / 2});
      lower_1q_named("rz", c, {-kPi / 2});
    } else {
      throw NoRuleFor("cx", basis_.name);
    }
  }

  const BasisSet& basis_;
  ZMerger& sink_;
  Style style_ = Style::ZSx;
  std::string z_ = "rz";
};

std::string z_name_for(const BasisSet& basis) {
  return basis.contains("gz") && !basis.contains("rz") ? "gz" : "rz";
}

}  // namespace

Circuit lower(const Circuit& c, const BasisSet& basis) {
  Circuit out = c;
  out.gates.clear();
  out.measurements.clear();
  out.gates.reserve(c.gates.size() * 2);
  ZMerger merger(z_name_for(basis), c.num_qubits, out.gates);
  Lowerer lowerer(basis, merger);

  std::vector<Measurement> meas = c.measurements;
  std::stable_sort(meas.begin(), meas.end(),
                   [](const auto& x, const auto& y) { return x.position < y.position; });
  std::size_t mi = 0;
  auto measure_upto = [&](std::size_t pos) {
    while (mi < meas.size() && static_cast<std::size_t>(meas[mi].position) <= pos) {
      merger.flush(meas[mi].qubit);
      Measurement m = meas[mi++];
      m.position = static_cast<int>(out.gates.size());
      out.measurements.push_back(m);
    }
  };
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    measure_upto(i);
    lowerer.lower(c.gates[i]);
  }
  // Measured qubits flush before their measurement; everything else now.
  std::vector<char> measured(static_cast<std::size_t>(c.num_qubits), 0);
  for (std::size_t k = mi; k < meas.size(); ++k) measured[static_cast<std::size_t>(meas[k].qubit)] = 1;
  for (int q = 0; q < c.num_qubits; ++q) {
    if (!measured[static_cast<std::size_t>(q)]) merger.flush(q);
  }
  measure_upto(c.gates.size());
  return out;
}

}  // namespace qasmtrans
