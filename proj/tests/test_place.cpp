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
#include <cmath>
#include <functional>
#include <random>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/ir.hpp"
#include "qasmtrans/place.hpp"
#include "place_oracles.hpp"
#include "support.hpp"

namespace qasmtrans {
namespace {

using testing::brute_embeddings;
using testing::rewalk_score;

// Longest path by enumerating every source-to-sink path of the dependency DAG.
double brute_longest_path(const Circuit& c, const DurationFn& dur) {
  const std::size_t n = c.gates.size();
  std::vector<std::vector<std::size_t>> succ(n);
  std::vector<char> has_pred(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (int q : c.gates[i].qubits) {
      for (std::size_t j = i + 1; j < n; ++j) {
        const auto& qs = c.gates[j].qubits;
        if (std::find(qs.begin(), qs.end(), q) != qs.end()) {
          if (std::find(succ[i].begin(), succ[i].end(), j) == succ[i].end()) succ[i].push_back(j);
          has_pred[j] = 1;
          break;
        }
      }
    }
  }
  double best = 0.0;
  std::function<void(std::size_t, double)> walk = [&](std::size_t i, double acc) {
    acc += c.gates[i].is_barrier() ? 0.0 : dur(c.gates[i]);
    best = std::max(best, acc);
    for (std::size_t j : succ[i]) walk(j, acc);
  };
  for (std::size_t i = 0; i < n; ++i) {
    if (!has_pred[i]) walk(i, 0.0);
  }
  return best;
}

DurationFn table_durations(double one, double two) {
  return [one, two](const GateIR& g) { return g.arity() == 1 ? one : two; };
}

TEST(Interaction, Examples) {
  Circuit c = Circuit::with_qubits(3);
  c.add("cx", {0, 1}).add("cx", {1, 0});
  InteractionGraph ig = interaction_graph(c);
  ASSERT_EQ(ig.edges.size(), 1u);
  EXPECT_EQ(ig.edges[0].a, 0);
  EXPECT_EQ(ig.edges[0].b, 1);
  EXPECT_EQ(ig.edges[0].weight, 2);
  EXPECT_EQ(ig.vertices, (std::vector<int>{0, 1}));

  Circuit ones = Circuit::with_qubits(3);
  ones.add("h", {0}).add("x", {2});
  ig = interaction_graph(ones);
  EXPECT_EQ(ig.vertices, (std::vector<int>{0, 2}));
  EXPECT_TRUE(ig.edges.empty());

  Circuit ghz = Circuit::with_qubits(3);
  ghz.add("h", {0}).add("cx", {0, 1}).add("cx", {1, 2});
  ig = interaction_graph(ghz);
  ASSERT_EQ(ig.edges.size(), 2u);
  EXPECT_EQ(ig.neighbors(1), (std::vector<int>{0, 2}));
}

TEST(Embeddings, Examples) {
  Circuit path = Circuit::with_qubits(3);
  path.add("cx", {0, 1}).add("cx", {1, 2});
  const CouplingGraph chain(3, line_edges(3));
  const auto e = enumerate_embeddings(interaction_graph(path), chain);
  EXPECT_EQ(e, brute_embeddings(path, chain));
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e[0], (Embedding{0, 1, 2}));
  EXPECT_EQ(e[1], (Embedding{2, 1, 0}));

  Circuit single = Circuit::with_qubits(1);
  single.add("h", {0});
  EXPECT_EQ(enumerate_embeddings(interaction_graph(single), CouplingGraph(7, line_edges(7))).size(), 7u);

  Circuit tri = Circuit::with_qubits(3);
  tri.add("cx", {0, 1}).add("cx", {1, 2}).add("cx", {0, 2});
  const CouplingGraph tree(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}});
  EXPECT_THROW(enumerate_embeddings(interaction_graph(tri), tree), NoEmbedding);
}

TEST(Embeddings, MatchBruteForce) {
  std::mt19937_64 rng(31);
  int compared = 0;
  for (int t = 0; t < 60; ++t) {
    const int n = 6 + static_cast<int>(rng() % 7);  // 6..12
    const int k = 2 + static_cast<int>(rng() % 5);  // 2..6
    const CouplingGraph g(n, testing::random_connected_edges(n, static_cast<int>(rng() % 5), rng));
    const Circuit c = testing::random_cx_circuit(k, 3 * k, rng(), 0.6);
    const auto brute = brute_embeddings(c, g);
    if (brute.empty()) {
      EXPECT_THROW(enumerate_embeddings(interaction_graph(c), g, 0), NoEmbedding);
      continue;
    }
    EXPECT_EQ(enumerate_embeddings(interaction_graph(c), g, 0), brute);
    ++compared;
  }
  EXPECT_GT(compared, 20);
  // One instance at the upper bound: 8 circuit qubits on a 12-qubit grid.
  Circuit c = Circuit::with_qubits(8);
  for (int q = 0; q + 1 < 8; ++q) c.add("cx", {q, q + 1});
  const CouplingGraph grid(12, grid_edges(3, 4));
  EXPECT_EQ(enumerate_embeddings(interaction_graph(c), grid, 0), brute_embeddings(c, grid));
}

TEST(Embeddings, LimitTruncates) {
  Circuit single = Circuit::with_qubits(1);
  single.add("h", {0});
  EXPECT_EQ(enumerate_embeddings(interaction_graph(single), CouplingGraph(9, line_edges(9)), 4).size(), 4u);
}

TEST(CriticalPath, Examples) {
  Circuit serial = Circuit::with_qubits(2);
  serial.add("h", {0}).add("cx", {0, 1}).add("x", {1});
  CriticalPath cp = critical_path(serial, table_durations(10, 40));
  EXPECT_DOUBLE_EQ(cp.latency_ns, 60.0);
  EXPECT_EQ(cp.gates, (std::vector<int>{0, 1, 2}));

  Circuit fork = Circuit::with_qubits(2);
  fork.add("h", {0}).add("h", {1}).add("cx", {0, 1});
  cp = critical_path(fork, table_durations(10, 40));
  EXPECT_DOUBLE_EQ(cp.latency_ns, 50.0);
  // Equal-latency branches resolve to the earlier gate.
  EXPECT_EQ(cp.gates, (std::vector<int>{0, 2}));
  EXPECT_TRUE(critical_path(Circuit::with_qubits(2), table_durations(1, 1)).gates.empty());
}

TEST(CriticalPath, MatchesPathEnumeration) {
  const DeviceModel dev = testing::device("toronto27");
  const DurationFn dur = placement_durations(dev);
  const Circuit qec = decompose_3q(testing::fixture("qec_n5"));
  const CriticalPath cp = critical_path(qec, dur);
  EXPECT_NEAR(cp.latency_ns, brute_longest_path(qec, dur), 1e-9);
  // The reported path is itself a chain of that latency.
  double sum = 0.0;
  for (int i : cp.gates) sum += dur(qec.gates[static_cast<std::size_t>(i)]);
  EXPECT_NEAR(sum, cp.latency_ns, 1e-9);

  std::mt19937_64 rng(32);
  for (int t = 0; t < 40; ++t) {
    const Circuit c = testing::random_cx_circuit(4, 14, rng());
    const auto d = table_durations(1.0 + static_cast<double>(rng() % 30), 1.0 + static_cast<double>(rng() % 300));
    EXPECT_NEAR(critical_path(c, d).latency_ns, brute_longest_path(c, d), 1e-9);
  }
}

TEST(CriticalPath, MissingDuration) {
  Circuit c = Circuit::with_qubits(3);
  c.add("ccx", {0, 1, 2});
  EXPECT_THROW(critical_path(c, placement_durations(testing::device("line6"))), MissingDuration);
}

TEST(Placement, MatchesBruteForceArgmin) {
  std::mt19937_64 rng(33);
  int compared = 0;
  for (int t = 0; t < 40; ++t) {
    const int n = 5 + static_cast<int>(rng() % 8);  // 5..12
    const int k = 2 + static_cast<int>(rng() % 4);  // 2..5
    DeviceModel d = make_device("rand", n, testing::random_connected_edges(n, static_cast<int>(rng() % 4), rng), "ibmq");
    testing::randomize_errors(d, rng);
    const Circuit c = testing::random_cx_circuit(k, 10, rng(), 0.4);
    const auto brute = brute_embeddings(c, d.coupling);
    if (brute.empty()) {
      EXPECT_THROW(select_placement(c, d, 0), NoEmbedding);
      continue;
    }
    const PlacementResult r = select_placement(c, d, 0);
    ASSERT_EQ(r.all.size(), brute.size());
    const std::vector<int> cp = critical_path(c, placement_durations(d)).gates;
    const auto [best, best_score] = testing::brute_argmin(c, cp, d);
    EXPECT_EQ(r.best.mapping, best);
    EXPECT_NEAR(r.best.score, best_score, 1e-15);
    for (const auto& s : r.all) {
      EXPECT_NEAR(s.score, rewalk_score(c, cp, s.mapping, d), 1e-15);
      EXPECT_EQ(s.cp_length, static_cast<int>(s.cp_gates.size()));
      EXPECT_GE(s.score, 0.0);
      EXPECT_LE(s.score, 1.0);
    }
    ++compared;
  }
  EXPECT_GT(compared, 15);
}

TEST(Placement, ScalingInvariance) {
  std::mt19937_64 rng(34);
  for (int t = 0; t < 20; ++t) {
    DeviceModel d = make_device("rand", 9, testing::random_connected_edges(9, 3, rng), "ibmq");
    testing::randomize_errors(d, rng);
    const Circuit c = testing::random_cx_circuit(4, 12, rng(), 0.4);
    PlacementResult a;
    try {
      a = select_placement(c, d, 0);
    } catch (const NoEmbedding&) {
      continue;
    }
    const double scale = 3.7;
    DeviceModel s = d;
    for (auto& q : s.calibration.qubits) q.e1 *= scale;
    for (auto& e : s.calibration.edges) e.e2 *= scale;
    const PlacementResult b = select_placement(c, s, 0);
    EXPECT_EQ(a.best.mapping, b.best.mapping);
    EXPECT_NEAR(b.best.score, scale * a.best.score, 1e-15 * scale);
  }
}

TEST(Placement, AvoidsBadEdge) {
  UniformCalibration cal;
  cal.e1 = 0.01;
  cal.e2 = 0.01;
  DeviceModel d = make_device("chain5", 5, line_edges(5), "ibmq", cal);
  d.calibration.edges[static_cast<std::size_t>(d.coupling.edge_index(1, 2))].e2 = 0.1;
  Circuit ghz = Circuit::with_qubits(3);
  ghz.add("h", {0}).add("cx", {0, 1}).add("cx", {1, 2});
  const PlacementResult r = select_placement(ghz, d);
  for (int i : r.best.cp_gates) {
    const GateIR& g = ghz.gates[static_cast<std::size_t>(i)];
    if (g.arity() != 2) continue;
    const int a = r.best.mapping[static_cast<std::size_t>(g.qubits[0])];
    const int b = r.best.mapping[static_cast<std::size_t>(g.qubits[1])];
    EXPECT_FALSE(std::min(a, b) == 1 && std::max(a, b) == 2);
  }
  EXPECT_NEAR(r.best.score, 0.01, 1e-15);
}

TEST(Placement, SingleQubitPicksBestQubit) {
  std::mt19937_64 rng(35);
  DeviceModel d = testing::device("toronto27");
  Circuit c = Circuit::with_qubits(1);
  c.add("h", {0}).add("x", {0});
  int argmin = 0;
  for (int q = 1; q < d.num_qubits(); ++q) {
    if (d.calibration.qubits[static_cast<std::size_t>(q)].e1 <
        d.calibration.qubits[static_cast<std::size_t>(argmin)].e1) {
      argmin = q;
    }
  }
  EXPECT_EQ(select_placement(c, d).best.mapping, (Embedding{argmin}));
}

TEST(Placement, UniformErrorsPickSmallestMapping) {
  UniformCalibration cal;
  cal.e1 = 0.01;
  cal.e2 = 0.01;
  const DeviceModel d = make_device("grid", 6, grid_edges(2, 3), "ibmq", cal);
  Circuit ghz = Circuit::with_qubits(3);
  ghz.add("h", {0}).add("cx", {0, 1}).add("cx", {1, 2});
  const PlacementResult r = select_placement(ghz, d);
  for (const auto& s : r.all) EXPECT_NEAR(s.score, 0.01, 1e-15);
  const auto all = enumerate_embeddings(interaction_graph(ghz), d.coupling);
  EXPECT_EQ(r.best.mapping, *std::min_element(all.begin(), all.end()));
}

TEST(Placement, CompleteEmbeddingIsPermutation) {
  const auto p = complete_embedding({3, -1, 0}, 5);
  EXPECT_EQ(p, (std::vector<int>{3, 1, 0, 2, 4}));
}

}  // namespace
}  // namespace qasmtrans
