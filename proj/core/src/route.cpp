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

#include "qasmtrans/route.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/ir.hpp"

namespace qasmtrans {

Layout Layout::identity(int num_virtual, int num_physical) {
  Layout l;
  l.virt_to_phys.resize(static_cast<std::size_t>(num_virtual));
  std::iota(l.virt_to_phys.begin(), l.virt_to_phys.end(), 0);
  l.phys_to_virt.assign(static_cast<std::size_t>(num_physical), -1);
  for (int v = 0; v < num_virtual; ++v) l.phys_to_virt[static_cast<std::size_t>(v)] = v;
  return l;
}

void Layout::validate() const {
  const int np = static_cast<int>(phys_to_virt.size());
  std::vector<char> seen(phys_to_virt.size(), 0);
  for (std::size_t v = 0; v < virt_to_phys.size(); ++v) {
    const int p = virt_to_phys[v];
    if (p < 0 || p >= np || seen[static_cast<std::size_t>(p)] ||
        phys_to_virt[static_cast<std::size_t>(p)] != static_cast<int>(v)) {
      throw NotAPermutation("layout is not injective or not self-consistent");
    }
    seen[static_cast<std::size_t>(p)] = 1;
  }
  for (std::size_t p = 0; p < phys_to_virt.size(); ++p) {
    if (!seen[p] && phys_to_virt[p] != -1) {
      throw NotAPermutation("physical slot " + std::to_string(p) + " names a stray qubit");
    }
  }
}

void Layout::swap_physical(int a, int b) {
  const int va = phys_to_virt[static_cast<std::size_t>(a)];
  const int vb = phys_to_virt[static_cast<std::size_t>(b)];
  phys_to_virt[static_cast<std::size_t>(a)] = vb;
  phys_to_virt[static_cast<std::size_t>(b)] = va;
  if (va >= 0) virt_to_phys[static_cast<std::size_t>(va)] = b;
  if (vb >= 0) virt_to_phys[static_cast<std::size_t>(vb)] = a;
}

namespace {

// Front layer bookkeeping. The incremental tracker touches only the nodes
// that change; the rescan tracker rebuilds the front from scratch by walking
// every node, which is the behaviour the incremental form replaces.
class FrontTracker {
 public:
  FrontTracker(const CircuitDag& dag, bool rescan)
      : dag_(dag), rescan_(rescan), executed_(static_cast<std::size_t>(dag.size()), 0) {
    if (rescan_) rebuild();
  }

  const std::vector<int>& front() const { return rescan_ ? front_ : dag_.front(); }
  bool finished() const { return done_ == dag_.size(); }

  void execute(const std::vector<int>& nodes) {
    done_ += static_cast<int>(nodes.size());
    if (!rescan_) {
      advance_front(dag_, nodes);
      return;
    }
    for (int n : nodes) executed_[static_cast<std::size_t>(n)] = 1;
    rebuild();
  }

 private:
  void rebuild() {
    front_.clear();
    for (int n = 0; n < dag_.size(); ++n) {
      if (executed_[static_cast<std::size_t>(n)]) continue;
      bool ready = true;
      for (int p : dag_.predecessors(n)) {
        if (!executed_[static_cast<std::size_t>(p)]) {
          ready = false;
          break;
        }
      }
      if (ready) front_.push_back(n);
    }
  }

  CircuitDag dag_;
  bool rescan_;
  std::vector<char> executed_;
  std::vector<int> front_;
  int done_ = 0;
};

struct Router {
  const Circuit& circuit;
  const DeviceModel& device;
  const RouteOptions& opts;
  XorShift64 rng;
  std::uint64_t seed;

  Router(const Circuit& c, const DeviceModel& d, const RouteOptions& o, std::uint64_t s)
      : circuit(c), device(d), opts(o), rng(s), seed(s) {}

  const CouplingGraph& graph() const { return device.coupling; }

  // Routes the circuit from `layout`; `emit` receives executed and inserted
  // gates in order, already on physical qubits.
  template <typename Emit>
  int run(Layout& layout, const CircuitDag& dag, Emit&& emit) {
    FrontTracker tracker(dag, opts.rescan_front);
    const int nphys = graph().num_qubits();
    std::vector<double> decay(static_cast<std::size_t>(nphys), 1.0);
    std::vector<int> stamp(static_cast<std::size_t>(dag.size()), -1);
    int stamp_id = 0;
    int swaps = 0, swaps_since_reset = 0, swaps_since_progress = 0;
    const int valve = 10 * nphys;
    std::vector<int> exec, ext, bfs;
    std::vector<std::pair<int, int>> candidates;
    std::uint64_t iter = 0;

    auto apply_swap = [&](int a, int b) {
      layout.swap_physical(a, b);
      emit_swap(a, b, emit);
      ++swaps;
      ++swaps_since_progress;
      decay[static_cast<std::size_t>(a)] += opts.decay_delta;
      decay[static_cast<std::size_t>(b)] += opts.decay_delta;
      if (++swaps_since_reset >= opts.decay_reset_interval) {
        std::fill(decay.begin(), decay.end(), 1.0);
        swaps_since_reset = 0;
      }
    };

    while (true) {
      if (opts.deadline && (++iter & 63U) == 0 &&
          std::chrono::steady_clock::now() > *opts.deadline) {
        throw Timeout("routing exceeded its deadline");
      }
      // Drain everything executable under the current layout.
      while (true) {
        exec.clear();
        for (int node : tracker.front()) {
          const GateIR& g = circuit.gates[static_cast<std::size_t>(node)];
          if (g.arity() == 2 && !g.is_barrier() &&
              !graph().has_edge(layout.virt_to_phys[g.qubits[0]],
                                layout.virt_to_phys[g.qubits[1]])) {
            continue;
          }
          exec.push_back(node);
        }
        if (exec.empty()) break;
        for (int node : exec) {
          GateIR g = circuit.gates[static_cast<std::size_t>(node)];
          for (int& q : g.qubits) q = layout.virt_to_phys[static_cast<std::size_t>(q)];
          emit(std::move(g));
        }
        tracker.execute(exec);
        swaps_since_progress = 0;
      }
      if (tracker.finished()) break;

      const auto& front = tracker.front();
      if (swaps_since_progress > valve) {
        // Release valve: walk the first blocked gate's qubits together along
        // a shortest path.
        const GateIR& g = circuit.gates[static_cast<std::size_t>(front.front())];
        int a = layout.virt_to_phys[g.qubits[0]];
        const int b = layout.virt_to_phys[g.qubits[1]];
        while (graph().distance(a, b) > 1) {
          int step = -1;
          for (int r : graph().neighbors(a)) {
            if (graph().distance(r, b) == graph().distance(a, b) - 1) {
              step = r;
              break;
            }
          }
          apply_swap(a, step);
          a = step;
        }
        std::fill(decay.begin(), decay.end(), 1.0);
        swaps_since_reset = 0;
        continue;
      }

      // Extended set: breadth-first successors of the front, 2q gates only.
      ++stamp_id;
      ext.clear();
      bfs.assign(front.begin(), front.end());
      for (std::size_t head = 0;
           head < bfs.size() && static_cast<int>(ext.size()) < opts.extended_set_size; ++head) {
        for (int s : dag.successors(bfs[head])) {
          if (stamp[static_cast<std::size_t>(s)] == stamp_id) continue;
          stamp[static_cast<std::size_t>(s)] = stamp_id;
          bfs.push_back(s);
          const GateIR& g = circuit.gates[static_cast<std::size_t>(s)];
          if (g.arity() == 2 && !g.is_barrier()) {
            ext.push_back(s);
            if (static_cast<int>(ext.size()) >= opts.extended_set_size) break;
          }
        }
      }

      // Candidate swaps on couplers touching a blocked front gate.
      candidates.clear();
      for (int node : front) {
        const GateIR& g = circuit.gates[static_cast<std::size_t>(node)];
        for (int v : g.qubits) {
          const int p = layout.virt_to_phys[static_cast<std::size_t>(v)];
          for (int r : graph().neighbors(p)) candidates.push_back({std::min(p, r), std::max(p, r)});
        }
      }
      std::sort(candidates.begin(), candidates.end());
      candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

      double best = 0.0;
      std::vector<std::pair<int, int>> ties;
      for (auto [a, b] : candidates) {
        auto pos = [&](int v) {
          const int p = layout.virt_to_phys[static_cast<std::size_t>(v)];
          return p == a ? b : (p == b ? a : p);
        };
        auto cost = [&](int node) {
          const GateIR& g = circuit.gates[static_cast<std::size_t>(node)];
          return static_cast<double>(graph().distance(pos(g.qubits[0]), pos(g.qubits[1])));
        };
        double h = 0.0;
        for (int node : front) h += cost(node);
        if (!ext.empty()) {
          double e = 0.0;
          for (int node : ext) e += cost(node);
          h += opts.extended_set_weight * e / static_cast<double>(ext.size());
        }
        h *= std::max(decay[static_cast<std::size_t>(a)], decay[static_cast<std::size_t>(b)]);
        if (ties.empty() || h < best - 1e-12) {
          best = h;
          ties.assign(1, {a, b});
        } else if (std::abs(h - best) <= 1e-12) {
          ties.push_back({a, b});
        }
      }
      const auto pick = seed == 0 ? ties.front() : ties[rng.below(ties.size())];
      apply_swap(pick.first, pick.second);
    }
    return swaps;
  }

  template <typename Emit>
  void emit_swap(int a, int b, Emit& emit) const {
    if (opts.expand_swaps) {
      emit(make_gate("cx", {a, b}));
      emit(make_gate("cx", {b, a}));
      emit(make_gate("cx", {a, b}));
    } else {
      emit(make_gate("swap", {a, b}));
    }
  }
};

void check_routable(const Circuit& c, const DeviceModel& d, const Layout& layout) {
  for (const GateIR& g : c.gates) {
    if (g.is_barrier()) continue;
    if (g.arity() > 2) {
      throw InternalError("routing expects 1- and 2-qubit gates; found " + g.name);
    }
    if (g.arity() == 2 &&
        d.coupling.distance(layout.virt_to_phys[g.qubits[0]], layout.virt_to_phys[g.qubits[1]]) ==
            CouplingGraph::kUnreachable) {
      throw Disconnected("qubits " + std::to_string(g.qubits[0]) + " and " +
                         std::to_string(g.qubits[1]) + " lie in different components");
    }
  }
}

Circuit reversed(const Circuit& c) {
  Circuit r = c;
  std::reverse(r.gates.begin(), r.gates.end());
  r.measurements.clear();
  return r;
}

}  // namespace

RoutingResult sabre_route(const Circuit& circuit, const DeviceModel& device,
                          std::uint64_t seed, const RouteOptions& opts) {
  const int n = circuit.num_qubits;
  const int nphys = device.num_qubits();
  if (n > nphys) {
    throw TooManyQubits("circuit needs " + std::to_string(n) + " qubits, device has " +
                        std::to_string(nphys));
  }
  Layout layout = opts.initial_layout ? *opts.initial_layout : Layout::identity(n, nphys);
  layout.validate();
  if (static_cast<int>(layout.virt_to_phys.size()) != n ||
      static_cast<int>(layout.phys_to_virt.size()) != nphys) {
    throw NotAPermutation("initial layout does not match circuit and device sizes");
  }
  check_routable(circuit, device, layout);

  auto discard = [](GateIR&&) {};
  if (opts.refinement_rounds > 0) {
    const Circuit back = reversed(circuit);
    const CircuitDag fwd_dag = build_dag(circuit);
    const CircuitDag back_dag = build_dag(back);
    for (int r = 0; r < opts.refinement_rounds; ++r) {
      Router fwd(circuit, device, opts, seed);
      fwd.run(layout, fwd_dag, discard);
      Router bwd(back, device, opts, seed);
      bwd.run(layout, back_dag, discard);
    }
  }

  RoutingResult result;
  result.initial_layout = layout;
  result.circuit = Circuit::with_qubits(nphys, circuit.num_clbits);
  result.circuit.source_name = circuit.source_name;
  result.circuit.gates.reserve(circuit.gates.size() + circuit.gates.size() / 2);
  Router router(circuit, device, opts, seed);
  auto& out = result.circuit.gates;
  result.swaps_inserted =
      router.run(layout, build_dag(circuit), [&](GateIR&& g) { out.push_back(std::move(g)); });
  result.final_layout = layout;
  for (const Measurement& m : circuit.measurements) {
    result.circuit.measurements.push_back(
        {layout.virt_to_phys[static_cast<std::size_t>(m.qubit)], m.clbit,
         static_cast<int>(out.size())});
  }
  return result;
}

RoutingResult constrained_route(const Circuit& circuit, const DeviceModel& device, int k,
                                std::uint64_t seed, const RouteOptions& opts) {
  if (k < circuit.num_qubits) {
    throw TooManyQubits("constraint k=" + std::to_string(k) + " is below the circuit width " +
                        std::to_string(circuit.num_qubits));
  }
  const PartialDevice part = partial_graph(device, k);
  RouteOptions sub_opts = opts;
  sub_opts.initial_layout.reset();
  RoutingResult r = sabre_route(circuit, part.device, seed, sub_opts);
  const int nphys = device.num_qubits();
  r.circuit = relabel_qubits(r.circuit, part.to_parent, nphys);
  auto lift = [&](const Layout& l) {
    Layout out;
    out.phys_to_virt.assign(static_cast<std::size_t>(nphys), -1);
    for (int p : l.virt_to_phys) out.virt_to_phys.push_back(part.to_parent[static_cast<std::size_t>(p)]);
    for (std::size_t v = 0; v < out.virt_to_phys.size(); ++v) {
      out.phys_to_virt[static_cast<std::size_t>(out.virt_to_phys[v])] = static_cast<int>(v);
    }
    return out;
  };
  r.initial_layout = lift(r.initial_layout);
  r.final_layout = lift(r.final_layout);
  return r;
}

std::vector<int> priority_relabeling(const Circuit& circuit,
                                     const std::vector<int>& priority_order) {
  const int n = circuit.num_qubits;
  if (static_cast<int>(priority_order.size()) != n) {
    throw NotAPermutation("priority order has " + std::to_string(priority_order.size()) +
                          " entries for " + std::to_string(n) + " qubits");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int q : priority_order) {
    if (q < 0 || q >= n || seen[static_cast<std::size_t>(q)]) {
      throw NotAPermutation("priority order is not a permutation of 0.." + std::to_string(n - 1));
    }
    seen[static_cast<std::size_t>(q)] = 1;
  }
  std::vector<int> count(static_cast<std::size_t>(n), 0);
  for (const GateIR& g : circuit.gates) {
    if (g.is_barrier()) continue;
    for (int q : g.qubits) ++count[static_cast<std::size_t>(q)];
  }
  std::vector<int> rank(static_cast<std::size_t>(n));
  std::iota(rank.begin(), rank.end(), 0);
  std::stable_sort(rank.begin(), rank.end(), [&](int a, int b) {
    return count[static_cast<std::size_t>(a)] > count[static_cast<std::size_t>(b)];
  });
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    perm[static_cast<std::size_t>(rank[static_cast<std::size_t>(i)])] =
        priority_order[static_cast<std::size_t>(i)];
  }
  return perm;
}

Circuit prioritize_qubits(const Circuit& circuit, const std::vector<int>& priority_order) {
  return relabel_qubits(circuit, priority_relabeling(circuit, priority_order));
}

}  // namespace qasmtrans
