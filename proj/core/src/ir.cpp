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

#include "qasmtrans/ir.hpp"

#include <algorithm>
#include <cstdio>

#include "json.hpp"

#include "qasmtrans/errors.hpp"
#include "qasmtrans/frontend.hpp"
#include "qasmtrans/gates.hpp"

namespace qasmtrans {

CircuitDag build_dag(const Circuit& c) {
  CircuitDag dag;
  const auto n = c.gates.size();
  dag.succ_.assign(n, {});
  dag.pred_.assign(n, {});
  dag.remaining_.assign(n, 0);
  dag.state_.assign(n, CircuitDag::State::Future);
  std::vector<int> last(static_cast<std::size_t>(c.num_qubits), -1);
  for (std::size_t i = 0; i < n; ++i) {
    const int node = static_cast<int>(i);
    for (int q : c.gates[i].qubits) {
      const int p = last[q];
      if (p >= 0 && std::find(dag.pred_[i].begin(), dag.pred_[i].end(), p) ==
                        dag.pred_[i].end()) {
        dag.pred_[i].push_back(p);
        dag.succ_[p].push_back(node);
      }
      last[q] = node;
    }
    dag.remaining_[i] = static_cast<int>(dag.pred_[i].size());
    if (dag.remaining_[i] == 0) {
      dag.state_[i] = CircuitDag::State::Front;
      dag.front_.push_back(node);
    }
  }
  return dag;
}

void advance_front(CircuitDag& dag, const std::vector<int>& executed) {
  for (int node : executed) {
    if (node < 0 || node >= dag.size() || !dag.in_front(node)) {
      throw NotInFront(node);
    }
  }
  std::vector<int> enabled;
  for (int node : executed) {
    dag.state_[node] = CircuitDag::State::Executed;
    ++dag.executed_;
    for (int s : dag.succ_[node]) {
      if (--dag.remaining_[s] == 0) {
        dag.state_[s] = CircuitDag::State::Front;
        enabled.push_back(s);
      }
    }
  }
  auto& f = dag.front_;
  f.erase(std::remove_if(f.begin(), f.end(),
                         [&](int x) {
                           return dag.state_[x] == CircuitDag::State::Executed;
                         }),
          f.end());
  std::sort(enabled.begin(), enabled.end());
  const auto mid = static_cast<std::ptrdiff_t>(f.size());
  f.insert(f.end(), enabled.begin(), enabled.end());
  std::inplace_merge(f.begin(), f.begin() + mid, f.end());
}

namespace {

bool decomposable_wide_gate(const std::string& name) {
  return name == "ccx" || name == "cswap" || name == "rccx" || name == "rc3x" ||
         name == "c3x" || name == "c3sqrtx";
}

}  // namespace

Circuit decompose_3q(const Circuit& c) {
  Circuit out = c;
  out.gates.clear();
  out.gates.reserve(c.gates.size());
  std::vector<int> new_pos(c.gates.size() + 1, 0);
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    new_pos[i] = static_cast<int>(out.gates.size());
    const GateIR& g = c.gates[i];
    if (g.is_barrier() || g.arity() <= 2) {
      out.gates.push_back(g);
      continue;
    }
    if (!decomposable_wide_gate(g.name)) throw UnsupportedGate(g.name);
    for (auto& e : expand_composite_fully(g)) out.gates.push_back(std::move(e));
  }
  new_pos[c.gates.size()] = static_cast<int>(out.gates.size());
  for (auto& m : out.measurements) m.position = new_pos[m.position];
  return out;
}

CircuitStats stats(const Circuit& c, const DurationFn& durations) {
  CircuitStats s;
  const auto n = static_cast<std::size_t>(c.num_qubits);
  std::vector<int> layer(n, 0), first(n, 0), last_gate_layer(n, 0);
  std::vector<double> finish(n, 0.0);
  std::vector<int> two_q(n, 0);
  // Layer of each qubit's most recent gate, indexed by program position, for
  // measurement placement.
  std::vector<std::pair<int, int>> meas_layers;
  std::size_t mi = 0;
  std::vector<Measurement> meas = c.measurements;
  std::stable_sort(meas.begin(), meas.end(), [](const auto& a, const auto& b) {
    return a.position < b.position;
  });
  auto flush_measurements = [&](std::size_t upto) {
    while (mi < meas.size() && static_cast<std::size_t>(meas[mi].position) <= upto) {
      meas_layers.push_back({meas[mi].qubit, last_gate_layer[meas[mi].qubit]});
      ++mi;
    }
  };
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    flush_measurements(i);
    const GateIR& g = c.gates[i];
    int l = 0;
    double t0 = 0.0;
    for (int q : g.qubits) {
      l = std::max(l, layer[q]);
      t0 = std::max(t0, finish[q]);
    }
    ++l;
    const double t1 = g.is_barrier() || !durations ? t0 : t0 + durations(g);
    for (int q : g.qubits) {
      layer[q] = l;
      finish[q] = t1;
    }
    s.depth = std::max(s.depth, l);
    if (g.is_barrier()) continue;
    for (int q : g.qubits) {
      if (first[q] == 0) first[q] = l;
      last_gate_layer[q] = l;
    }
    ++s.total_gates;
    if (g.arity() == 1) ++s.one_qubit_gates;
    if (g.arity() == 2) {
      ++s.two_qubit_gates;
      for (int q : g.qubits) ++two_q[q];
    }
  }
  flush_measurements(c.gates.size());
  for (std::size_t q = 0; q < n; ++q) {
    if (first[q] > 0) {
      s.retention_lifespan =
          std::max(s.retention_lifespan, last_gate_layer[q] - first[q] + 1);
    }
  }
  if (s.depth > 0 && n > 0) {
    s.gate_density = static_cast<double>(s.total_gates) /
                     (static_cast<double>(s.depth) * static_cast<double>(n));
  }
  if (!meas_layers.empty() && s.depth > 0) {
    double sum = 0.0;
    for (const auto& [q, l] : meas_layers) sum += l;
    s.measurement_density =
        sum / (static_cast<double>(s.depth) * static_cast<double>(meas_layers.size()));
  }
  if (n > 0) {
    double mean = 0.0;
    for (int v : two_q) mean += v;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (int v : two_q) var += (v - mean) * (v - mean);
    s.entanglement_variance = var / static_cast<double>(n);
  }
  if (durations) {
    double t = 0.0;
    for (double f : finish) t = std::max(t, f);
    s.latency_ns = t;
  }
  return s;
}

std::string stats_text(const CircuitStats& s) {
  char buf[512];
  std::snprintf(buf, sizeof buf,
                "depth: %d\ngate_density: %.17g\nretention_lifespan: %d\n"
                "measurement_density: %.17g\nentanglement_variance: %.17g\n"
                "gates_1q: %d\ngates_2q: %d\ngates_total: %d\n",
                s.depth, s.gate_density, s.retention_lifespan,
                s.measurement_density, s.entanglement_variance,
                s.one_qubit_gates, s.two_qubit_gates, s.total_gates);
  return buf;
}

std::string stats_json(const CircuitStats& s) {
  nlohmann::ordered_json j;
  j["depth"] = s.depth;
  j["gate_density"] = s.gate_density;
  j["retention_lifespan"] = s.retention_lifespan;
  j["measurement_density"] = s.measurement_density;
  j["entanglement_variance"] = s.entanglement_variance;
  j["gates_1q"] = s.one_qubit_gates;
  j["gates_2q"] = s.two_qubit_gates;
  j["gates_total"] = s.total_gates;
  return j.dump();
}

Circuit strip_measurements(const Circuit& c) {
  Circuit out = c;
  out.measurements.clear();
  return out;
}

Circuit relabel_qubits(const Circuit& c, const std::vector<int>& perm,
                       int new_size) {
  Circuit out = c;
  out.num_qubits = new_size < 0 ? c.num_qubits : new_size;
  out.register_map = RegisterMap::flat(out.num_qubits, out.num_clbits);
  for (auto& g : out.gates) {
    for (int& q : g.qubits) q = perm.at(static_cast<std::size_t>(q));
  }
  for (auto& m : out.measurements) m.qubit = perm.at(static_cast<std::size_t>(m.qubit));
  return out;
}

}  // namespace qasmtrans
