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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/frontend.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/lower.hpp"
#include "qasmtrans/oracle.hpp"
#include "qasmtrans/pipeline.hpp"
#include "qasmtrans/pulsesim.hpp"
#include "support.hpp"

namespace qasmtrans {
namespace {

const std::vector<std::string> kVendors{"ibmq", "rigetti", "ionq", "quantinuum"};

Mat2 zxz_matrix(const ZxzAngles& a) {
  return rz_matrix(a.alpha) * rx_matrix(a.beta) * rz_matrix(a.gamma);
}

void expect_in_basis(const Circuit& c, const BasisSet& b) {
  for (const auto& g : c.gates) {
    if (g.is_barrier()) continue;
    EXPECT_TRUE(b.contains(g.name)) << g.name << " not in " << b.name;
    if (b.quantized_rx && g.name == "rx") {
      const double t = std::abs(g.params[0]);
      EXPECT_TRUE(std::abs(t - kPi / 2) < 1e-12 || std::abs(t - kPi) < 1e-12) << t;
    }
  }
}

TEST(Basis, Table) {
  const BasisSet ibm = vendor_basis("ibmq");
  EXPECT_EQ(ibm.one_qubit_gates, (std::vector<std::string>{"id", "rz", "sx", "x"}));
  EXPECT_EQ(ibm.two_qubit_gate, "cx");
  EXPECT_EQ(vendor_basis("rigetti").two_qubit_gate, "cz");
  EXPECT_TRUE(vendor_basis("rigetti").quantized_rx);
  EXPECT_EQ(vendor_basis("ionq").one_qubit_gates, (std::vector<std::string>{"gpi", "gpi2", "gz"}));
  EXPECT_EQ(vendor_basis("ionq").two_qubit_gate, "ms");
  EXPECT_EQ(vendor_basis("quantinuum").two_qubit_gate, "zz");
  EXPECT_THROW(vendor_basis("dwave"), NoRuleFor);
}

TEST(Zxz, Examples) {
  const ZxzAngles i = lower_1q_zxz(Mat2::Identity());
  EXPECT_NEAR(i.beta, 0.0, 1e-15);
  EXPECT_NEAR(std::remainder(i.alpha + i.gamma, 2 * kPi), 0.0, 1e-12);
  const ZxzAngles x = lower_1q_zxz(rx_matrix(0.7));
  EXPECT_NEAR(x.alpha, 0.0, 1e-12);
  EXPECT_NEAR(x.beta, 0.7, 1e-12);
  EXPECT_NEAR(x.gamma, 0.0, 1e-12);
  const Mat2 h = gate_matrix("h", {});
  EXPECT_LT(phase_distance(h, zxz_matrix(lower_1q_zxz(h))), 1e-9);
}

TEST(Zxz, RandomReconstruction) {
  std::mt19937_64 rng(1);
  for (int t = 0; t < 1000; ++t) {
    const Mat2 u = random_unitary(2, rng);
    const ZxzAngles a = lower_1q_zxz(u);
    EXPECT_GE(a.beta, 0.0);
    EXPECT_LE(a.beta, kPi);
    EXPECT_GE(avg_gate_fidelity(zxz_matrix(a), u), 1.0 - 1e-12);
  }
  // Axis-aligned inputs exercise the degenerate branches.
  for (double th : {0.0, kPi, -kPi / 2, 1.3}) {
    for (const Mat2& u : {Mat2(ry_matrix(th)), Mat2(rz_matrix(th)), Mat2(rx_matrix(th)),
                          Mat2(rx_matrix(kPi) * rz_matrix(th))}) {
      EXPECT_LT(phase_distance(u, zxz_matrix(lower_1q_zxz(u))), 1e-9);
    }
  }
}

TEST(Lower, RzUnchangedUnderIbmq) {
  Circuit c = Circuit::with_qubits(1);
  c.add("rz", {0}, {0.3});
  const Circuit l = lower(c, vendor_basis("ibmq"));
  ASSERT_EQ(l.gates.size(), 1u);
  EXPECT_EQ(l.gates[0].name, "rz");
  EXPECT_DOUBLE_EQ(l.gates[0].params[0], 0.3);
}

TEST(Lower, HadamardIbmq) {
  Circuit c = Circuit::with_qubits(1);
  c.add("h", {0});
  const Circuit l = lower(c, vendor_basis("ibmq"));
  ASSERT_EQ(l.gates.size(), 3u);
  EXPECT_EQ(l.gates[0].name, "rz");
  EXPECT_EQ(l.gates[1].name, "sx");
  EXPECT_EQ(l.gates[2].name, "rz");
  Mat2 m = Mat2::Identity();
  for (const auto& g : l.gates) m = Mat2(gate_matrix(g.name, g.params)) * m;
  EXPECT_LT(phase_distance(gate_matrix("h", {}), m), 1e-12);
}

// Defining identity of each two-qubit rule, by direct matrix product.
TEST(Lower, CxRulePerVendor) {
  for (const auto& v : kVendors) {
    Circuit c = Circuit::with_qubits(2);
    c.add("cx", {0, 1});
    const Circuit l = lower(c, vendor_basis(v));
    expect_in_basis(l, vendor_basis(v));
    Mat4 m = Mat4::Identity();
    for (const auto& g : l.gates) {
      Mat4 step;
      if (g.arity() == 2) {
        step = gate_matrix(g.name, g.params);
        if (g.qubits[0] == 1) {
          Mat4 swap = gate_matrix("swap", {});
          step = swap * step * swap;
        }
      } else {
        const Mat2 u = gate_matrix(g.name, g.params);
        step = g.qubits[0] == 0 ? Mat4(kron(u, Mat2::Identity())) : Mat4(kron(Mat2::Identity(), u));
      }
      m = step * m;
    }
    EXPECT_LT(phase_distance(gate_matrix("cx", {}), m), 1e-12) << v;
  }
}

TEST(Lower, RandomCircuitsAllVendors) {
  std::mt19937_64 rng(12);
  for (int t = 0; t < 25; ++t) {
    const Circuit c = decompose_3q(testing::random_circuit(3, 20, rng, 3));
    for (const auto& v : kVendors) {
      const BasisSet b = vendor_basis(v);
      const Circuit l = lower(c, b);
      expect_in_basis(l, b);
      const auto e = equivalent(c, l);
      EXPECT_TRUE(e.equivalent) << v << " deviation " << e.max_deviation;
    }
  }
}

TEST(Lower, KeepsInteractingPairs) {
  std::mt19937_64 rng(14);
  const Circuit c = decompose_3q(testing::random_cx_circuit(5, 80, 3));
  for (const auto& v : kVendors) {
    const Circuit l = lower(c, vendor_basis(v));
    std::vector<std::vector<int>> a, b;
    for (const auto& g : c.gates) {
      if (g.arity() == 2) a.push_back(g.qubits);
    }
    for (const auto& g : l.gates) {
      if (g.arity() == 2) b.push_back(g.qubits);
    }
    ASSERT_EQ(a.size(), b.size()) << v;
    for (std::size_t i = 0; i < a.size(); ++i) {
      auto x = a[i], y = b[i];
      std::sort(x.begin(), x.end());
      std::sort(y.begin(), y.end());
      EXPECT_EQ(x, y) << v;
    }
  }
}

TEST(Lower, Idempotent) {
  std::mt19937_64 rng(15);
  for (int t = 0; t < 10; ++t) {
    const Circuit c = decompose_3q(testing::random_circuit(4, 30, rng, 3));
    for (const auto& v : kVendors) {
      const Circuit once = lower(c, vendor_basis(v));
      EXPECT_EQ(emit_qasm(lower(once, vendor_basis(v))), emit_qasm(once)) << v;
    }
  }
}

TEST(Lower, MergesAdjacentRz) {
  Circuit c = Circuit::with_qubits(2);
  c.add("rz", {0}, {0.25}).add("rz", {1}, {1.0}).add("rz", {0}, {0.5}).add("t", {0});
  const Circuit l = lower(c, vendor_basis("ibmq"));
  int rz = 0;
  for (const auto& g : l.gates) rz += g.name == "rz";
  EXPECT_EQ(rz, 2);
  EXPECT_TRUE(equivalent(c, l).equivalent);
}

TEST(Lower, CustomBasisRxRzIswap) {
  const DeviceModel d = testing::device("pulse_chain7");
  const BasisSet b = device_basis(d);
  EXPECT_EQ(b.two_qubit_gate, "iswap");
  std::mt19937_64 rng(16);
  for (int t = 0; t < 10; ++t) {
    const Circuit c = decompose_3q(testing::random_circuit(3, 15, rng, 3));
    const Circuit l = lower(c, b);
    expect_in_basis(l, b);
    EXPECT_TRUE(equivalent(c, l).equivalent);
  }
}

TEST(Lower, NoRuleForMissingTwoQubitGate) {
  BasisSet b = vendor_basis("ibmq");
  b.two_qubit_gate = "ecr";
  Circuit c = Circuit::with_qubits(2);
  c.add("cx", {0, 1});
  EXPECT_THROW(lower(c, b), NoRuleFor);
}

// Wide routed outputs are checked with random states instead of basis
// columns; both paths must still reject a perturbed output.
TEST(VerifyTranspile, CatchesPerturbedOutputOnBothPaths) {
  const DeviceModel d = testing::device("grid2x7");
  std::mt19937_64 rng(1001);
  for (int t = 0; t < 8; ++t) {
    const int n = 3 + t % 6;
    TranspileOptions o;
    o.seed = static_cast<std::uint64_t>(t);
    TranspileResult r = transpile(testing::random_circuit(n, 40, rng, 3), d, o);
    const VerifyReport good = verify_transpile(r);
    EXPECT_TRUE(good.equivalent) << t << " deviation " << good.max_deviation;
    const int w = r.final_layout[0];
    r.output.gates.push_back(make_gate("h", {w}));
    r.output.gates.push_back(make_gate("rz", {w}, {0.3}));
    r.output.gates.push_back(make_gate("h", {w}));
    const VerifyReport bad = verify_transpile(r);
    EXPECT_FALSE(bad.equivalent) << t;
    EXPECT_GT(bad.max_deviation, 1e-3) << t;
  }
}

}  // namespace
}  // namespace qasmtrans
