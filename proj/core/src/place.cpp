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

#include "qasmtrans/place.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"

namespace qasmtrans {

std::vector<int> InteractionGraph::neighbors(int v) const {
  std::vector<int> out;
  for (const auto& e : edges) {
    if (e.a == v) out.push_back(e.b);
    if (e.b == v) out.push_back(e.a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

InteractionGraph interaction_graph(const Circuit& c) {
  InteractionGraph ig;
  ig.num_qubits = c.num_qubits;
  std::vector<char> used(static_cast<std::size_t>(c.num_qubits), 0);
  std::map<std::pair<int, int>, int> weight;
  for (const GateIR& g : c.gates) {
    if (g.is_barrier()) continue;
    for (int q : g.qubits) used[static_cast<std::size_t>(q)] = 1;
    if (g.arity() == 2) {
      ++weight[{std::min(g.qubits[0], g.qubits[1]), std::max(g.qubits[0], g.qubits[1])}];
    }
  }
  for (int q = 0; q < c.num_qubits; ++q) {
    if (used[static_cast<std::size_t>(q)]) ig.vertices.push_back(q);
  }
  for (const auto& [pair, w] : weight) ig.edges.push_back({pair.first, pair.second, w});
  return ig;
}

namespace {

class EmbeddingSearch {
 public:
  EmbeddingSearch(const InteractionGraph& ig, const CouplingGraph& cg, std::size_t limit)
      : ig_(ig), cg_(cg), limit_(limit),
        mapping_(static_cast<std::size_t>(ig.num_qubits), -1),
        taken_(static_cast<std::size_t>(cg.num_qubits()), 0) {
    adj_.resize(static_cast<std::size_t>(ig.num_qubits));
    for (const auto& e : ig.edges) {
      adj_[static_cast<std::size_t>(e.a)].push_back(e.b);
      adj_[static_cast<std::size_t>(e.b)].push_back(e.a);
    }
    order_vertices();
  }

  std::vector<Embedding> run() {
    if (static_cast<int>(ig_.vertices.size()) <= cg_.num_qubits()) extend(0);
    std::sort(found_.begin(), found_.end());
    return std::move(found_);
  }

 private:
  int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

  // Next vertex: most neighbours already ordered, then highest degree, then
  // lowest index. Keeps each component contiguous so forward checks bite.
  void order_vertices() {
    std::vector<char> placed(static_cast<std::size_t>(ig_.num_qubits), 0);
    std::vector<int> links(static_cast<std::size_t>(ig_.num_qubits), 0);
    for (std::size_t k = 0; k < ig_.vertices.size(); ++k) {
      int pick = -1;
      for (int v : ig_.vertices) {
        if (placed[static_cast<std::size_t>(v)]) continue;
        if (pick < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(pick)] ||
            (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(pick)] &&
             degree(v) > degree(pick))) {
          pick = v;
        }
      }
      placed[static_cast<std::size_t>(pick)] = 1;
      order_.push_back(pick);
      for (int u : adj_[static_cast<std::size_t>(pick)]) ++links[static_cast<std::size_t>(u)];
    }
  }

  bool feasible(int v, int p) const {
    if (taken_[static_cast<std::size_t>(p)]) return false;
    if (static_cast<int>(cg_.neighbors(p).size()) < degree(v)) return false;
    for (int u : adj_[static_cast<std::size_t>(v)]) {
      const int pu = mapping_[static_cast<std::size_t>(u)];
      if (pu >= 0 && !cg_.has_edge(pu, p)) return false;
    }
    return true;
  }

  void extend(std::size_t depth) {
    if (limit_ != 0 && found_.size() >= limit_) return;
    if (depth == order_.size()) {
      found_.push_back(mapping_);
      return;
    }
    const int v = order_[depth];
    for (int p = 0; p < cg_.num_qubits(); ++p) {
      if (!feasible(v, p)) continue;
      mapping_[static_cast<std::size_t>(v)] = p;
      taken_[static_cast<std::size_t>(p)] = 1;
      extend(depth + 1);
      taken_[static_cast<std::size_t>(p)] = 0;
      mapping_[static_cast<std::size_t>(v)] = -1;
      if (limit_ != 0 && found_.size() >= limit_) return;
    }
  }

  const InteractionGraph& ig_;
  const CouplingGraph& cg_;
  std::size_t limit_;
  std::vector<std::vector<int>> adj_;
  std::vector<int> order_;
  Embedding mapping_;
  std::vector<char> taken_;
  std::vector<Embedding> found_;
};

}  // namespace

std::vector<Embedding> enumerate_embeddings(const InteractionGraph& ig,
                                            const CouplingGraph& coupling,
                                            std::size_t limit) {
  auto found = EmbeddingSearch(ig, coupling, limit).run();
  if (found.empty()) {
    throw NoEmbedding("interaction graph with " + std::to_string(ig.vertices.size()) +
                      " qubits does not embed into the coupling graph");
  }
  return found;
}

CriticalPath critical_path(const Circuit& c, const DurationFn& durations) {
  const auto n = c.gates.size();
  std::vector<double> finish(n, 0.0);
  std::vector<std::vector<int>> preds(n);
  std::vector<int> last(static_cast<std::size_t>(c.num_qubits), -1);
  for (std::size_t i = 0; i < n; ++i) {
    const GateIR& g = c.gates[i];
    double start = 0.0;
    for (int q : g.qubits) {
      const int p = last[static_cast<std::size_t>(q)];
      if (p >= 0) {
        if (std::find(preds[i].begin(), preds[i].end(), p) == preds[i].end()) preds[i].push_back(p);
        start = std::max(start, finish[static_cast<std::size_t>(p)]);
      }
      last[static_cast<std::size_t>(q)] = static_cast<int>(i);
    }
    std::sort(preds[i].begin(), preds[i].end());
    finish[i] = start + (g.is_barrier() ? 0.0 : durations(g));
  }
  CriticalPath cp;
  if (n == 0) return cp;
  auto same = [](double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); };
  std::size_t end = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (finish[i] > finish[end] && !same(finish[i], finish[end])) end = i;
  }
  cp.latency_ns = finish[end];
  std::vector<int> path;
  int cur = static_cast<int>(end);
  while (cur >= 0) {
    path.push_back(cur);
    const GateIR& g = c.gates[static_cast<std::size_t>(cur)];
    const double start = finish[static_cast<std::size_t>(cur)] - (g.is_barrier() ? 0.0 : durations(g));
    int next = -1;
    for (int p : preds[static_cast<std::size_t>(cur)]) {
      if (same(finish[static_cast<std::size_t>(p)], start)) {
        next = p;
        break;
      }
    }
    cur = next;
  }
  for (auto it = path.rbegin(); it != path.rend(); ++it) {
    if (!c.gates[static_cast<std::size_t>(*it)].is_barrier()) cp.gates.push_back(*it);
  }
  return cp;
}

DurationFn placement_durations(const DeviceModel& device) {
  double slowest_1q = 0.0;
  for (const auto& [name, d] : device.calibration.gate_durations_ns) {
    const GateSpec* spec = find_gate(name);
    if (spec != nullptr && spec->num_qubits == 1) slowest_1q = std::max(slowest_1q, d);
  }
  double mean_2q = 0.0;
  for (const auto& e : device.calibration.edges) mean_2q += e.duration_ns;
  if (!device.calibration.edges.empty()) {
    mean_2q /= static_cast<double>(device.calibration.edges.size());
  }
  auto table = device.calibration.gate_durations_ns;
  return [table, slowest_1q, mean_2q](const GateIR& g) {
    if (g.arity() == 2) return mean_2q;
    if (g.arity() != 1) throw MissingDuration(g.name);
    auto it = table.find(g.name);
    return it != table.end() ? it->second : slowest_1q;
  };
}

double critical_path_error(const Circuit& c, const std::vector<int>& cp_gates,
                           const Embedding& mapping, const DeviceModel& device) {
  if (cp_gates.empty()) return 0.0;
  std::vector<double> terms;
  terms.reserve(cp_gates.size());
  for (int idx : cp_gates) {
    const GateIR& g = c.gates[static_cast<std::size_t>(idx)];
    if (g.arity() == 1) {
      terms.push_back(device.calibration.qubits[static_cast<std::size_t>(mapping[static_cast<std::size_t>(g.qubits[0])])].e1);
    } else {
      terms.push_back(device.e2(mapping[static_cast<std::size_t>(g.qubits[0])],
                                mapping[static_cast<std::size_t>(g.qubits[1])]));
    }
  }
  // Summing in sorted order makes mappings with the same error multiset tie
  // exactly, so the mapping tie-break survives rescaling.
  std::sort(terms.begin(), terms.end());
  double sum = 0.0;
  for (double t : terms) sum += t;
  return sum / static_cast<double>(cp_gates.size());
}

PlacementResult select_placement(const Circuit& c, const DeviceModel& device,
                                 std::size_t limit, const DurationFn& durations) {
  const InteractionGraph ig = interaction_graph(c);
  const auto embeddings = enumerate_embeddings(ig, device.coupling, limit);
  const CriticalPath cp = critical_path(c, durations ? durations : placement_durations(device));
  PlacementResult r;
  r.all.reserve(embeddings.size());
  for (const auto& m : embeddings) {
    PlacementScore s;
    s.mapping = m;
    s.cp_gates = cp.gates;
    s.cp_length = static_cast<int>(cp.gates.size());
    s.score = critical_path_error(c, cp.gates, m, device);
    r.all.push_back(std::move(s));
  }
  std::stable_sort(r.all.begin(), r.all.end(), [](const auto& a, const auto& b) {
    if (a.score != b.score) return a.score < b.score;
    return a.mapping < b.mapping;
  });
  r.best = r.all.front();
  return r;
}

std::vector<int> complete_embedding(const Embedding& mapping, int num_physical) {
  std::vector<int> perm = mapping;
  perm.resize(static_cast<std::size_t>(num_physical), -1);
  std::vector<char> taken(static_cast<std::size_t>(num_physical), 0);
  for (int p : perm) {
    if (p >= 0) taken[static_cast<std::size_t>(p)] = 1;
  }
  int next = 0;
  for (int& p : perm) {
    if (p >= 0) continue;
    while (taken[static_cast<std::size_t>(next)]) ++next;
    p = next;
    taken[static_cast<std::size_t>(next)] = 1;
  }
  return perm;
}

}  // namespace qasmtrans
