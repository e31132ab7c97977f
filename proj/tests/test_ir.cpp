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

#include <algorithm>
#include <map>
#include <queue>
#include <random>
#include <set>

#include "json.hpp"
#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/oracle.hpp"
#include "support.hpp"

namespace qasmtrans {
namespace {

// Independent reference: Kahn's algorithm over edges rebuilt from scratch,
// returning the set of gates whose predecessors are all in `done`.
std::set<int> reference_front(const Circuit& c, const std::set<int>& done) {
  std::set<int> front;
  std::map<int, int> last;
  std::vector<std::set<int>> preds(c.gates.size());
  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    for (int q : c.gates[static_cast<std::size_t>(i)].qubits) {
      if (auto it = last.find(q); it != last.end()) preds[static_cast<std::size_t>(i)].insert(it->second);
      last[q] = i;
    }
  }
  for (int i = 0; i < static_cast<int>(c.gates.size()); ++i) {
    if (done.count(i)) continue;
    bool ready = true;
    for (int p : preds[static_cast<std::size_t>(i)]) ready = ready && done.count(p) > 0;
    if (ready) front.insert(i);
  }
  return front;
}

std::set<int> as_set(const std::vector<int>& v) { return {v.begin(), v.end()}; }

TEST(Dag, Empty) {
  CircuitDag d = build_dag(Circuit::with_qubits(2));
  EXPECT_TRUE(d.front().empty());
  EXPECT_EQ(d.future_count(), 0);
  EXPECT_TRUE(d.finished());
}

TEST(Dag, ParallelGates) {
  Circuit c = Circuit::with_qubits(2);
  c.add("h", {0}).add("h", {1});
  CircuitDag d = build_dag(c);
  EXPECT_EQ(d.front(), (std::vector<int>{0, 1}));
  EXPECT_TRUE(d.successors(0).empty());
  EXPECT_TRUE(d.successors(1).empty());
}

TEST(Dag, ThreeNodeChain) {
  Circuit c = Circuit::with_qubits(2);
  c.add("h", {0}).add("cx", {0, 1}).add("h", {1});
  CircuitDag d = build_dag(c);
  EXPECT_EQ(d.front(), std::vector<int>{0});
  EXPECT_EQ(d.successors(0), std::vector<int>{1});
  EXPECT_EQ(d.successors(1), std::vector<int>{2});
  EXPECT_EQ(d.predecessors(2), std::vector<int>{1});
  advance_front(d, {0});
  EXPECT_EQ(d.front(), std::vector<int>{1});
  EXPECT_THROW(advance_front(d, {2}), NotInFront);
}

TEST(Dag, ParallelThenJoin) {
  Circuit c = Circuit::with_qubits(2);
  c.add("h", {0}).add("h", {1}).add("cx", {0, 1});
  CircuitDag d = build_dag(c);
  advance_front(d, {0, 1});
  EXPECT_EQ(d.front(), std::vector<int>{2});
  EXPECT_EQ(d.executed_count(), 2);
}

TEST(Dag, TraversalMatchesReference) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 7);
    const int gates = trial < 28 ? 200 : 10000;
    const Circuit c = testing::random_cx_circuit(n, gates, rng());
    CircuitDag d = build_dag(c);
    std::set<int> done;
    std::vector<int> order;
    int steps = 0;
    while (!d.finished()) {
      if (steps++ % 8 == 0 || gates <= 200) {
        ASSERT_EQ(as_set(d.front()), reference_front(c, done));
      }
      // Execute a random non-empty subset of the front.
      std::vector<int> pick;
      for (int v : d.front()) {
        if (pick.empty() || rng() % 2) pick.push_back(v);
      }
      for (int v : pick) {
        done.insert(v);
        order.push_back(v);
      }
      advance_front(d, pick);
      ASSERT_EQ(d.executed_count() + static_cast<int>(d.front().size()) + d.future_count(), d.size());
      if (gates > 200 && steps > 400) break;
    }
    if (gates <= 200) {
      ASSERT_EQ(order.size(), c.gates.size());
      std::vector<int> pos(c.gates.size());
      for (std::size_t i = 0; i < order.size(); ++i) pos[static_cast<std::size_t>(order[i])] = static_cast<int>(i);
      for (int v = 0; v < d.size(); ++v) {
        for (int s : d.successors(v)) EXPECT_LT(pos[static_cast<std::size_t>(v)], pos[static_cast<std::size_t>(s)]);
      }
    }
  }
}

TEST(Decompose, CcxShape) {
  Circuit c = Circuit::with_qubits(3);
  c.add("ccx", {0, 1, 2});
  const Circuit d = decompose_3q(c);
  int cx = 0, one = 0;
  for (const auto& g : d.gates) {
    if (g.name == "cx") ++cx;
    if (g.arity() == 1) ++one;
  }
  EXPECT_EQ(cx, 6);
  EXPECT_EQ(one, 9);
  EXPECT_EQ(d.gates.size(), 15u);
  EXPECT_LT(phase_distance(circuit_unitary(c), circuit_unitary(d)), 1e-9);
}

TEST(Decompose, WideGatesMatchDefinitions) {
  for (const char* name : {"cswap", "rccx", "rc3x", "c3x", "c3sqrtx"}) {
    const GateSpec* s = find_gate(name);
    Circuit c = Circuit::with_qubits(s->num_qubits);
    std::vector<int> q;
    for (int i = 0; i < s->num_qubits; ++i) q.push_back(s->num_qubits - 1 - i);
    c.add(name, q);
    const Circuit d = decompose_3q(c);
    for (const auto& g : d.gates) EXPECT_LE(g.arity(), 2) << name;
    EXPECT_EQ(d.num_qubits, c.num_qubits);
    EXPECT_LT(phase_distance(circuit_unitary(c), circuit_unitary(d)), 1e-9) << name;
  }
}

TEST(Decompose, UnchangedWithoutWideGates) {
  std::mt19937_64 rng(2);
  const Circuit c = testing::random_circuit(4, 40, rng);
  const Circuit d = decompose_3q(c);
  ASSERT_EQ(d.gates.size(), c.gates.size());
  for (std::size_t i = 0; i < c.gates.size(); ++i) EXPECT_EQ(d.gates[i].name, c.gates[i].name);
}

TEST(Decompose, RandomCircuitsAndMeasurements) {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 10; ++t) {
    Circuit c = testing::random_circuit(5, 25, rng, 3);
    c.measure(0, 3).measure(4, 1);
    const Circuit d = decompose_3q(c);
    EXPECT_EQ(d.num_qubits, c.num_qubits);
    ASSERT_EQ(d.measurements.size(), 2u);
    EXPECT_EQ(d.measurements[0].qubit, 0);
    EXPECT_EQ(d.measurements[0].clbit, 3);
    EXPECT_EQ(d.measurements[1].clbit, 1);
    EXPECT_TRUE(equivalent(c, d).equivalent);
  }
}

TEST(Decompose, C4xUnsupported) {
  Circuit c = Circuit::with_qubits(5);
  GateIR g;
  g.name = "c4x";
  g.qubits = {0, 1, 2, 3, 4};
  c.gates.push_back(g);
  EXPECT_THROW(decompose_3q(c), UnsupportedGate);
}

TEST(Stats, Table3Fixtures) {
  const CircuitStats a = stats(testing::fixture("adder_n4"));
  EXPECT_EQ(a.depth, 12);
  EXPECT_EQ(a.total_gates, 27);
  EXPECT_EQ(a.one_qubit_gates, 17);
  const CircuitStats b = stats(testing::fixture("bv_n14"));
  EXPECT_EQ(b.depth, 17);
  EXPECT_EQ(b.total_gates, 41);
  EXPECT_EQ(b.one_qubit_gates, 28);
}

TEST(Stats, SingleHadamard) {
  Circuit c = Circuit::with_qubits(1);
  c.add("h", {0});
  const CircuitStats s = stats(c);
  EXPECT_EQ(s.depth, 1);
  EXPECT_DOUBLE_EQ(s.gate_density, 1.0);
  EXPECT_EQ(s.retention_lifespan, 1);
  EXPECT_DOUBLE_EQ(s.measurement_density, 0.0);
}

// Hand-computed metrics for a small circuit:
//   layer 1: h q0, x q2   layer 2: cx q0,q1   layer 3: cx q1,q2
TEST(Stats, HandComputedDefinitions) {
  Circuit c = Circuit::with_qubits(3, 3);
  c.add("h", {0}).add("x", {2}).add("cx", {0, 1}).add("cx", {1, 2});
  c.measure(0, 0).measure(2, 2);
  const CircuitStats s = stats(c);
  EXPECT_EQ(s.depth, 3);
  EXPECT_EQ(s.total_gates, 4);
  EXPECT_EQ(s.two_qubit_gates, 2);
  EXPECT_DOUBLE_EQ(s.gate_density, 4.0 / 9.0);
  EXPECT_EQ(s.retention_lifespan, 3);  // q2: layers 1..3
  // Measured qubits' last layers: q0 -> 2, q2 -> 3.
  EXPECT_DOUBLE_EQ(s.measurement_density, (2.0 + 3.0) / (3.0 * 2.0));
  // Participation counts 1, 2, 1: mean 4/3.
  EXPECT_NEAR(s.entanglement_variance, ((1 - 4.0 / 3) * (1 - 4.0 / 3) * 2 + (2 - 4.0 / 3) * (2 - 4.0 / 3)) / 3.0,
              1e-15);
}

TEST(Stats, BarrierIsLayerNotGate) {
  Circuit c = Circuit::with_qubits(2);
  c.add("h", {0}).add(make_barrier({0, 1})).add("h", {1});
  const CircuitStats s = stats(c);
  EXPECT_EQ(s.total_gates, 2);
  EXPECT_EQ(s.depth, 3);
}

TEST(Stats, Latency) {
  Circuit c = Circuit::with_qubits(2);
  c.add("h", {0}).add("h", {1}).add("cx", {0, 1});
  const CircuitStats s = stats(c, [](const GateIR& g) { return g.arity() == 2 ? 40.0 : 10.0; });
  ASSERT_TRUE(s.latency_ns.has_value());
  EXPECT_DOUBLE_EQ(*s.latency_ns, 50.0);
}

TEST(Stats, DepthInvariantUnderDisjointSwaps) {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 50; ++t) {
    Circuit c = testing::random_circuit(5, 40, rng);
    const int depth = stats(c).depth;
    for (int k = 0; k < 100; ++k) {
      const std::size_t i = rng() % (c.gates.size() - 1);
      const auto& a = c.gates[i].qubits;
      const auto& b = c.gates[i + 1].qubits;
      bool disjoint = true;
      for (int q : a) disjoint = disjoint && std::find(b.begin(), b.end(), q) == b.end();
      if (disjoint) std::swap(c.gates[i], c.gates[i + 1]);
    }
    EXPECT_EQ(stats(c).depth, depth);
  }
}

TEST(Stats, Invariants) {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 30; ++t) {
    const Circuit c = testing::random_circuit(4, 30, rng);
    const CircuitStats s = stats(c);
    EXPECT_LE(s.depth, s.total_gates);
    EXPECT_EQ(s.one_qubit_gates + s.two_qubit_gates, s.total_gates);
    EXPECT_DOUBLE_EQ(s.gate_density, static_cast<double>(s.total_gates) / (s.depth * c.num_qubits));
    EXPECT_GT(s.gate_density, 0.0);
    EXPECT_LE(s.gate_density, 1.0);
    EXPECT_GE(s.entanglement_variance, 0.0);
  }
}

TEST(Stats, JsonKeysAndText) {
  const CircuitStats s = stats(testing::fixture("bell"));
  const auto j = nlohmann::json::parse(stats_json(s));
  for (const char* k : {"depth", "gate_density", "retention_lifespan", "measurement_density",
                        "entanglement_variance", "gates_1q", "gates_2q", "gates_total"}) {
    EXPECT_TRUE(j.contains(k)) << k;
  }
  EXPECT_EQ(j.size(), 8u);
  EXPECT_NE(stats_text(s).find("depth: 2"), std::string::npos);
}

TEST(Relabel, MovesGatesAndMeasurements) {
  Circuit c = Circuit::with_qubits(3, 1);
  c.add("cx", {0, 2}).measure(2, 0);
  const Circuit r = relabel_qubits(c, {4, 0, 1}, 5);
  EXPECT_EQ(r.num_qubits, 5);
  EXPECT_EQ(r.gates[0].qubits, (std::vector<int>{4, 1}));
  EXPECT_EQ(r.measurements[0].qubit, 1);
}

}  // namespace
}  // namespace qasmtrans
