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

#include "qasmtrans/partition.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <optional>

#include "json.hpp"
#include "qasmtrans/errors.hpp"
#include "qasmtrans/ir.hpp"

namespace qasmtrans {

namespace {

std::vector<double> penalties(const DeviceModel& device) {
  std::vector<double> p(static_cast<std::size_t>(device.num_qubits()),
                        std::numeric_limits<double>::infinity());
  for (int q = 0; q < device.num_qubits(); ++q) {
    if (!device.coupling.neighbors(q).empty()) p[static_cast<std::size_t>(q)] = penalty(q, device);
  }
  return p;
}

// Largest request first; equal sizes keep input order.
std::vector<int> size_order(const std::vector<int>& sizes) {
  std::vector<int> order(sizes.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return sizes[static_cast<std::size_t>(a)] > sizes[static_cast<std::size_t>(b)];
  });
  return order;
}

// True if `members` minus `removed` (-1 for none) is connected.
bool connected_without(const CouplingGraph& g, const std::vector<int>& owner, int id, int removed) {
  std::vector<int> members;
  for (int q = 0; q < g.num_qubits(); ++q) {
    if (owner[static_cast<std::size_t>(q)] == id && q != removed) members.push_back(q);
  }
  if (members.empty()) return true;
  std::vector<char> seen(static_cast<std::size_t>(g.num_qubits()), 0);
  std::vector<int> stack{members.front()};
  seen[static_cast<std::size_t>(members.front())] = 1;
  std::size_t count = 0;
  while (!stack.empty()) {
    const int q = stack.back();
    stack.pop_back();
    ++count;
    for (int r : g.neighbors(q)) {
      if (r == removed || seen[static_cast<std::size_t>(r)] || owner[static_cast<std::size_t>(r)] != id) continue;
      seen[static_cast<std::size_t>(r)] = 1;
      stack.push_back(r);
    }
  }
  return count == members.size();
}

}  // namespace

std::vector<int> seed_regions(const std::vector<int>& sizes, const DeviceModel& device) {
  const int n = device.num_qubits();
  long long total = 0;
  for (int s : sizes) {
    if (s <= 0) throw TooManyQubitsRequested("region sizes must be positive");
    total += s;
  }
  if (total > n) {
    throw TooManyQubitsRequested("requested " + std::to_string(total) + " qubits on a " +
                                 std::to_string(n) + "-qubit device");
  }
  const auto pen = penalties(device);
  std::vector<int> seeds(sizes.size(), -1);
  std::vector<int> placed;
  for (int r : size_order(sizes)) {
    int best = -1;
    long long best_dist = -1;
    for (int q = 0; q < n; ++q) {
      if (std::isinf(pen[static_cast<std::size_t>(q)])) continue;
      if (std::find(placed.begin(), placed.end(), q) != placed.end()) continue;
      long long d = std::numeric_limits<long long>::max();
      for (int s : placed) d = std::min<long long>(d, device.coupling.distance(q, s));
      const bool better =
          best < 0 || d > best_dist ||
          (d == best_dist && pen[static_cast<std::size_t>(q)] < pen[static_cast<std::size_t>(best)]);
      if (better) {
        best = q;
        best_dist = d;
      }
    }
    if (best < 0) throw TooManyQubitsRequested("not enough connected qubits to seed every region");
    seeds[static_cast<std::size_t>(r)] = best;
    placed.push_back(best);
  }
  return seeds;
}

std::vector<Region> grow_regions(const std::vector<int>& seeds, const std::vector<int>& sizes,
                                 const DeviceModel& device) {
  if (seeds.size() != sizes.size()) throw GrowthStuck("one seed per region is required");
  const CouplingGraph& g = device.coupling;
  const int n = g.num_qubits();
  const auto pen = penalties(device);
  const int regions = static_cast<int>(sizes.size());
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  std::vector<int> count(sizes.size(), 1);
  for (int r = 0; r < regions; ++r) {
    const int s = seeds[static_cast<std::size_t>(r)];
    if (s < 0 || s >= n || owner[static_cast<std::size_t>(s)] >= 0) throw GrowthStuck("invalid seed");
    owner[static_cast<std::size_t>(s)] = r;
  }
  const std::vector<int> order = size_order(sizes);
  const int max_size = sizes.empty() ? 1 : *std::max_element(sizes.begin(), sizes.end());
  const int max_rounds = std::max(1, max_size - 1);

  auto links = [&](int q, int r) {
    int k = 0;
    for (int x : g.neighbors(q)) k += owner[static_cast<std::size_t>(x)] == r ? 1 : 0;
    return k;
  };
  // Priority: more links, lower penalty, lower index.
  auto better = [&](int q, int lq, int best, int lbest) {
    if (best < 0) return true;
    if (lq != lbest) return lq > lbest;
    if (pen[static_cast<std::size_t>(q)] != pen[static_cast<std::size_t>(best)]) {
      return pen[static_cast<std::size_t>(q)] < pen[static_cast<std::size_t>(best)];
    }
    return q < best;
  };

  auto claim = [&](int r) {
    int best = -1;
    int lbest = 0;
    for (int q = 0; q < n; ++q) {
      if (owner[static_cast<std::size_t>(q)] >= 0) continue;
      const int l = links(q, r);
      if (l > 0 && better(q, l, best, lbest)) {
        best = q;
        lbest = l;
      }
    }
    if (best < 0) return false;
    owner[static_cast<std::size_t>(best)] = r;
    ++count[static_cast<std::size_t>(r)];
    return true;
  };

  auto steal = [&](int r, int round) {
    int best = -1;
    int lbest = 0;
    for (int q = 0; q < n; ++q) {
      const int d = owner[static_cast<std::size_t>(q)];
      if (d < 0 || d == r || q == seeds[static_cast<std::size_t>(d)]) continue;
      const auto du = static_cast<std::size_t>(d);
      const long long schedule =
          (static_cast<long long>(sizes[du]) * round + max_rounds - 1) / max_rounds;
      if (count[du] <= schedule) continue;
      if (links(q, d) != 1) continue;  // leaves only
      const int l = links(q, r);
      if (l == 0 || !better(q, l, best, lbest)) continue;
      if (!connected_without(g, owner, d, q)) continue;
      best = q;
      lbest = l;
    }
    if (best < 0) return false;
    --count[static_cast<std::size_t>(owner[static_cast<std::size_t>(best)])];
    owner[static_cast<std::size_t>(best)] = r;
    ++count[static_cast<std::size_t>(r)];
    return true;
  };

  const int round_cap = max_rounds + 4 * n + 4;
  for (int round = 1;; ++round) {
    bool done = true;
    bool progress = false;
    for (int r : order) {
      const auto ru = static_cast<std::size_t>(r);
      if (count[ru] >= sizes[ru]) continue;
      if (claim(r) || steal(r, round)) progress = true;
      if (count[ru] < sizes[ru]) done = false;
    }
    if (done) break;
    if (!progress || round >= round_cap) {
      throw GrowthStuck("regions stopped growing in round " + std::to_string(round));
    }
  }

  std::vector<Region> out(sizes.size());
  for (int r = 0; r < regions; ++r) {
    auto& reg = out[static_cast<std::size_t>(r)];
    reg.id = r;
    reg.seed = seeds[static_cast<std::size_t>(r)];
    reg.requested_size = sizes[static_cast<std::size_t>(r)];
  }
  for (int q = 0; q < n; ++q) {
    const int r = owner[static_cast<std::size_t>(q)];
    if (r >= 0) out[static_cast<std::size_t>(r)].qubits.push_back(q);
  }
  return out;
}

void validate_regions(const std::vector<Region>& regions, const DeviceModel& device) {
  const int n = device.num_qubits();
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    const Region& reg = regions[r];
    if (static_cast<int>(reg.qubits.size()) != reg.requested_size) {
      throw GrowthStuck("region " + std::to_string(reg.id) + " has " +
                        std::to_string(reg.qubits.size()) + " qubits, wanted " +
                        std::to_string(reg.requested_size));
    }
    for (int q : reg.qubits) {
      if (q < 0 || q >= n || owner[static_cast<std::size_t>(q)] >= 0) {
        throw GrowthStuck("regions overlap at qubit " + std::to_string(q));
      }
      owner[static_cast<std::size_t>(q)] = static_cast<int>(r);
    }
  }
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (!connected_without(device.coupling, owner, static_cast<int>(r), -1)) {
      throw GrowthStuck("region " + std::to_string(regions[r].id) + " is not connected");
    }
  }
}

namespace {

// Farthest-point seeding that starts from `start` and places regions in
// `order`; ties go to the lower penalty, then the lower index.
std::vector<int> seeds_from(int start, const std::vector<int>& order, const std::vector<double>& pen,
                            const DeviceModel& device) {
  std::vector<int> seeds(order.size(), -1);
  std::vector<int> placed{start};
  seeds[static_cast<std::size_t>(order.front())] = start;
  for (std::size_t j = 1; j < order.size(); ++j) {
    int best = -1;
    int best_dist = -1;
    for (int q = 0; q < device.num_qubits(); ++q) {
      if (std::isinf(pen[static_cast<std::size_t>(q)])) continue;
      if (std::find(placed.begin(), placed.end(), q) != placed.end()) continue;
      int d = CouplingGraph::kUnreachable;
      for (int s : placed) d = std::min(d, device.coupling.distance(q, s));
      if (best < 0 || d > best_dist ||
          (d == best_dist && pen[static_cast<std::size_t>(q)] < pen[static_cast<std::size_t>(best)])) {
        best = q;
        best_dist = d;
      }
    }
    if (best < 0) return {};
    seeds[static_cast<std::size_t>(order[j])] = best;
    placed.push_back(best);
  }
  return seeds;
}

// Depth-first carving of connected regions, largest first, each region
// enumerated from its lowest qubit. Complete but exponential, so capped.
// Exhaustive search for a partition. Regions are carved largest first; each
// region is enumerated from its lowest qubit by include/exclude branching, so
// every connected set is visited once. After each region the free qubits must
// still split into components that can host the remaining sizes.
class ExactCarver {
 public:
  ExactCarver(const std::vector<int>& sizes, const DeviceModel& device)
      : sizes_(sizes), g_(device.coupling), order_(size_order(sizes)),
        owner_(static_cast<std::size_t>(device.num_qubits()), -1) {}

  std::optional<std::vector<int>> run() {
    if (place(0)) return owner_;
    return std::nullopt;
  }

 private:
  static constexpr long kBudget = 2'000'000;

  bool place(std::size_t k) {
    if (k == order_.size()) return true;
    if (!components_fit(k)) return false;
    const int r = order_[k];
    for (int root = 0; root < g_.num_qubits(); ++root) {
      if (owner_[static_cast<std::size_t>(root)] >= 0) continue;
      owner_[static_cast<std::size_t>(root)] = r;
      std::vector<int> frontier;
      std::vector<char> listed(owner_.size(), 0);
      listed[static_cast<std::size_t>(root)] = 1;
      extend(frontier, listed, root, root);
      if (grow(k, root, 1, frontier, 0, listed)) return true;
      owner_[static_cast<std::size_t>(root)] = -1;
      if (steps_ > kBudget) return false;
    }
    return false;
  }

  // Adds free neighbors of v above root to the candidate list.
  void extend(std::vector<int>& frontier, std::vector<char>& listed, int v, int root) const {
    for (int x : g_.neighbors(v)) {
      const auto xs = static_cast<std::size_t>(x);
      if (x > root && owner_[xs] < 0 && !listed[xs]) {
        listed[xs] = 1;
        frontier.push_back(x);
      }
    }
  }

  // frontier[next..] are undecided candidates; earlier ones were included or
  // excluded higher up the recursion.
  bool grow(std::size_t k, int root, int size, std::vector<int> frontier, std::size_t next,
            std::vector<char> listed) {
    if (++steps_ > kBudget) return false;
    const int r = order_[k];
    const int target = sizes_[static_cast<std::size_t>(r)];
    if (size == target) return place(k + 1);
    if (next == frontier.size()) return false;
    if (size + reachable(r, root, frontier, next) < target) return false;
    const int v = frontier[next];
    // Include v.
    {
      owner_[static_cast<std::size_t>(v)] = r;
      std::vector<int> f = frontier;
      std::vector<char> l = listed;
      extend(f, l, v, root);
      if (grow(k, root, size + 1, std::move(f), next + 1, std::move(l))) return true;
      owner_[static_cast<std::size_t>(v)] = -1;
      if (steps_ > kBudget) return false;
    }
    // Exclude v: it stays listed, so no later branch adds it back.
    return grow(k, root, size, std::move(frontier), next + 1, std::move(listed));
  }

  // Free qubits above root that the region could still absorb: undecided
  // candidates and anything unlisted reachable through them.
  int reachable(int r, int root, const std::vector<int>& frontier, std::size_t next) const {
    std::vector<char> blocked(owner_.size(), 0);
    for (std::size_t i = 0; i < next; ++i) {
      const auto v = static_cast<std::size_t>(frontier[i]);
      if (owner_[v] != r) blocked[v] = 1;  // excluded earlier
    }
    std::vector<char> seen(owner_.size(), 0);
    std::vector<int> stack(frontier.begin() + static_cast<std::ptrdiff_t>(next), frontier.end());
    for (int v : stack) seen[static_cast<std::size_t>(v)] = 1;
    int n = 0;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      ++n;
      for (int x : g_.neighbors(v)) {
        const auto xs = static_cast<std::size_t>(x);
        if (x > root && !seen[xs] && !blocked[xs] && owner_[xs] < 0) {
          seen[xs] = 1;
          stack.push_back(x);
        }
      }
    }
    return n;
  }

  // Necessary condition: the remaining sizes pack into the free components.
  bool components_fit(std::size_t k) const {
    std::vector<int> caps;
    std::vector<char> seen(owner_.size(), 0);
    for (int s = 0; s < g_.num_qubits(); ++s) {
      if (seen[static_cast<std::size_t>(s)] || owner_[static_cast<std::size_t>(s)] >= 0) continue;
      int n = 0;
      std::vector<int> stack{s};
      seen[static_cast<std::size_t>(s)] = 1;
      while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        ++n;
        for (int x : g_.neighbors(v)) {
          const auto xs = static_cast<std::size_t>(x);
          if (!seen[xs] && owner_[xs] < 0) {
            seen[xs] = 1;
            stack.push_back(x);
          }
        }
      }
      caps.push_back(n);
    }
    return pack(k, caps);
  }

  bool pack(std::size_t k, std::vector<int>& caps) const {
    if (k == order_.size()) return true;
    const int need = sizes_[static_cast<std::size_t>(order_[k])];
    for (std::size_t c = 0; c < caps.size(); ++c) {
      if (caps[c] < need) continue;
      caps[c] -= need;
      const bool ok = pack(k + 1, caps);
      caps[c] += need;
      if (ok) return true;
    }
    return false;
  }

  const std::vector<int>& sizes_;
  const CouplingGraph& g_;
  std::vector<int> order_;
  std::vector<int> owner_;
  long steps_ = 0;
};

std::optional<std::vector<Region>> try_grow(const std::vector<int>& seeds, const std::vector<int>& sizes,
                                            const DeviceModel& device) {
  if (seeds.empty()) return std::nullopt;
  try {
    auto regions = grow_regions(seeds, sizes, device);
    validate_regions(regions, device);
    return regions;
  } catch (const GrowthStuck&) {
    return std::nullopt;
  }
}

}  // namespace

std::vector<Region> partition_device(const std::vector<int>& sizes, const DeviceModel& device) {
  const std::vector<int> seeds = seed_regions(sizes, device);
  if (auto r = try_grow(seeds, sizes, device)) return *r;

  // Lockstep growth stalled, usually because a seed sits on a cut vertex.
  // Retry from every start qubit, largest region seeded first and then
  // smallest first, before falling back to exhaustive carving.
  const auto pen = penalties(device);
  std::vector<int> order = size_order(sizes);
  for (int pass = 0; pass < 2; ++pass) {
    if (pass == 1) std::reverse(order.begin(), order.end());
    for (int start = 0; start < device.num_qubits(); ++start) {
      if (std::isinf(pen[static_cast<std::size_t>(start)])) continue;
      if (auto r = try_grow(seeds_from(start, order, pen, device), sizes, device)) return *r;
    }
  }
  const auto owner = ExactCarver(sizes, device).run();
  if (!owner) {
    throw GrowthStuck("no partition into connected regions of the requested sizes was found");
  }
  std::vector<Region> out(sizes.size());
  for (std::size_t r = 0; r < sizes.size(); ++r) {
    out[r].id = static_cast<int>(r);
    out[r].requested_size = sizes[r];
  }
  for (int q = 0; q < device.num_qubits(); ++q) {
    const int r = (*owner)[static_cast<std::size_t>(q)];
    if (r < 0) continue;
    auto& reg = out[static_cast<std::size_t>(r)];
    if (reg.qubits.empty()) reg.seed = q;
    reg.qubits.push_back(q);
  }
  validate_regions(out, device);
  return out;
}

SpaceShareResult space_share(const std::vector<Circuit>& circuits, const DeviceModel& device,
                             const TranspileOptions& opts) {
  std::vector<int> sizes;
  sizes.reserve(circuits.size());
  for (const Circuit& c : circuits) sizes.push_back(std::max(1, c.num_qubits));
  SpaceShareResult out;
  out.regions = partition_device(sizes, device);

  int clbits = 0;
  for (const Circuit& c : circuits) {
    out.clbit_offsets.push_back(clbits);
    clbits += c.num_clbits;
  }
  out.merged = Circuit::with_qubits(device.num_qubits(), clbits);
  std::vector<Measurement> measurements;
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    const PartialDevice pd = restrict_device(device, out.regions[i].qubits);
    TranspileResult r = transpile(circuits[i], pd.device, opts);
    // Lift region-local indices to the full device.
    r.output = relabel_qubits(r.output, pd.to_parent, device.num_qubits());
    r.routed = relabel_qubits(r.routed, pd.to_parent, device.num_qubits());
    for (int& p : r.initial_layout) p = pd.to_parent[static_cast<std::size_t>(p)];
    for (int& p : r.final_layout) p = pd.to_parent[static_cast<std::size_t>(p)];
    for (const GateIR& g : r.output.gates) out.merged.gates.push_back(g);
    for (Measurement m : r.output.measurements) {
      m.clbit += out.clbit_offsets[i];
      measurements.push_back(m);
    }
    out.parts.push_back(std::move(r));
  }
  for (Measurement& m : measurements) m.position = static_cast<int>(out.merged.gates.size());
  out.merged.measurements = std::move(measurements);
  return out;
}

std::string region_report_json(const SpaceShareResult& result) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < result.regions.size(); ++i) {
    const Region& r = result.regions[i];
    nlohmann::ordered_json j;
    j["region_id"] = r.id;
    j["qubits"] = r.qubits;
    j["seed"] = r.seed;
    j["circuit_file"] = i < result.parts.size() ? result.parts[i].input.source_name : "";
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

}  // namespace qasmtrans
