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
#include "qasmtrans/gates.hpp"
#include "qasmtrans/lower.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/oracle.hpp"
#include "support.hpp"

namespace qasmtrans {
namespace {

const double kR = 1.0 / std::sqrt(2.0);

// Dense reference: the gate matrix lifted with explicit Kronecker products
// and wire permutations, independent of apply_gate's index arithmetic.
CMat lift(const CMat& g, const std::vector<int>& qubits, int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  CMat full = CMat::Zero(dim, dim);
  const int k = static_cast<int>(qubits.size());
  for (Eigen::Index col = 0; col < dim; ++col) {
    Eigen::Index sub = 0;
    for (int i = 0; i < k; ++i) sub |= ((col >> qubits[static_cast<std::size_t>(i)]) & 1) << (k - 1 - i);
    for (Eigen::Index r = 0; r < (Eigen::Index{1} << k); ++r) {
      Eigen::Index row = col;
      for (int i = 0; i < k; ++i) {
        const Eigen::Index bit = (r >> (k - 1 - i)) & 1;
        row = (row & ~(Eigen::Index{1} << qubits[static_cast<std::size_t>(i)])) | (bit << qubits[static_cast<std::size_t>(i)]);
      }
      full(row, col) += g(r, sub);
    }
  }
  return full;
}

TEST(Simulate, Hadamard) {
  Circuit c = Circuit::with_qubits(1);
  c.add("h", {0});
  const CVec s = simulate(c);
  EXPECT_NEAR(std::abs(s[0] - kR), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1] - kR), 0.0, 1e-15);
}

TEST(Simulate, Bell) {
  const CVec s = simulate(testing::fixture("bell"));
  EXPECT_NEAR(std::abs(s[0] - kR), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[2]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(s[3] - kR), 0.0, 1e-15);
}

TEST(Simulate, Ghz5) {
  const CVec s = simulate(testing::fixture("ghz5"));
  for (Eigen::Index i = 0; i < 32; ++i) {
    const double expect = (i == 0 || i == 31) ? kR : 0.0;
    EXPECT_NEAR(std::abs(s[i]), expect, 1e-14);
  }
}

TEST(Simulate, Errors) {
  EXPECT_THROW(simulate(Circuit::with_qubits(kMaxSimulatedQubits + 1)), TooManyQubits);
  EXPECT_THROW(circuit_unitary(Circuit::with_qubits(kMaxUnitaryQubits + 1)), TooManyQubits);
  Circuit c = Circuit::with_qubits(1, 1);
  c.add("h", {0}).measure(0, 0).add("x", {0});
  EXPECT_THROW(simulate(c), MidCircuitMeasurement);
}

TEST(Simulate, MatchesDenseReference) {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 20; ++t) {
    const int n = 1 + static_cast<int>(rng() % 5);
    const Circuit c = testing::random_circuit(n, 25, rng, 3);
    CMat u = CMat::Identity(Eigen::Index{1} << n, Eigen::Index{1} << n);
    for (const GateIR& g : c.gates) u = lift(gate_matrix(g.name, g.params), g.qubits, n) * u;
    const CMat got = circuit_unitary(c);
    EXPECT_LT((got - u).cwiseAbs().maxCoeff(), 1e-12);
    EXPECT_LT(unitarity_error(got), 1e-9);
    // Columns assemble to the unitary.
    for (Eigen::Index k = 0; k < got.cols(); ++k) {
      CVec e = CVec::Zero(got.rows());
      e[k] = 1.0;
      EXPECT_LT((simulate(c, e) - got.col(k)).cwiseAbs().maxCoeff(), 1e-14);
    }
    EXPECT_NEAR(simulate(c).norm(), 1.0, 1e-9);
  }
}

TEST(CircuitUnitary, EmptyIsIdentity) {
  const CMat u = circuit_unitary(Circuit::with_qubits(3));
  EXPECT_TRUE(u.isApprox(CMat::Identity(8, 8)));
}

TEST(CircuitUnitary, LoweredHadamard) {
  Circuit c = Circuit::with_qubits(1);
  c.add("h", {0});
  const Circuit l = lower(c, vendor_basis("ibmq"));
  EXPECT_LT(phase_distance(gate_matrix("h", {}), circuit_unitary(l)), 1e-12);
}

TEST(Equivalent, Reflexive) {
  const Circuit c = testing::fixture("adder_n4");
  const auto r = equivalent(c, c);
  EXPECT_TRUE(r.equivalent);
  EXPECT_EQ(r.max_deviation, 0.0);
}

TEST(Equivalent, XVersusZ) {
  Circuit x = Circuit::with_qubits(1), z = Circuit::with_qubits(1);
  x.add("x", {0});
  z.add("z", {0});
  EXPECT_FALSE(equivalent(x, z).equivalent);
}

TEST(Equivalent, GlobalPhaseIgnored) {
  Circuit a = Circuit::with_qubits(1), b = Circuit::with_qubits(1);
  a.add("rz", {0}, {0.3});
  b.add("u1", {0}, {0.3});
  EXPECT_TRUE(equivalent(a, b).equivalent);
}

TEST(Equivalent, SymmetricAndPermutationAware) {
  std::mt19937_64 rng(41);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + static_cast<int>(rng() % 4);
    const Circuit a = testing::random_circuit(n, 15, rng);
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    const Circuit b = relabel_qubits(a, perm);
    EXPECT_TRUE(equivalent(a, b, perm).equivalent);
    std::vector<int> inv(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) inv[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    EXPECT_TRUE(equivalent(b, a, inv).equivalent);
    Circuit c = a;
    c.add("rx", {0}, {0.4});
    EXPECT_FALSE(equivalent(a, c).equivalent);
    EXPECT_FALSE(equivalent(c, a).equivalent);
  }
}

// A swap network moves qubits; the final layout accounts for it.
TEST(Equivalent, InitialAndFinalLayouts) {
  Circuit ref = Circuit::with_qubits(2);
  ref.add("h", {0}).add("cx", {0, 1});
  Circuit cand = Circuit::with_qubits(3);
  cand.add("h", {2}).add("swap", {2, 1}).add("cx", {1, 0});
  EquivalenceOptions o;
  o.initial_layout = {2, 0};
  o.final_layout = {1, 0};
  EXPECT_TRUE(equivalent(ref, cand, o).equivalent);
  o.final_layout = {2, 0};
  EXPECT_FALSE(equivalent(ref, cand, o).equivalent);
  o.final_layout = {1, 0};
  o.random_states = 4;
  EXPECT_TRUE(equivalent(ref, cand, o).equivalent);
  o.final_layout = {1, 1};
  EXPECT_THROW(equivalent(ref, cand, o), NotAPermutation);
}

}  // namespace
}  // namespace qasmtrans
