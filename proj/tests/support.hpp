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

// Shared helpers for the unit and acceptance tests.

#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "qasmtrans/circuit.hpp"
#include "qasmtrans/device.hpp"
#include "qasmtrans/frontend.hpp"
#include "qasmtrans/linalg.hpp"

namespace qasmtrans::testing {

inline std::string data_path(const std::string& rel) {
  return std::string(QASMTRANS_TEST_DATA) + "/" + rel;
}

inline std::string circuit_path(const std::string& name) {
  return data_path("circuits/" + name + ".qasm");
}

inline std::string device_path(const std::string& name) {
  return data_path("devices/" + name + ".json");
}

inline Circuit fixture(const std::string& name) { return load_qasm_file(circuit_path(name)); }

inline DeviceModel device(const std::string& name) { return load_device(device_path(name)); }

inline const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{"bell",   "ghz5",   "adder_n4",
                                              "qec_n5", "bv_n14", "qaoa_n6"};
  return names;
}

inline std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

/// Random circuit over a broad slice of the gate table. `max_arity` 3 adds
/// ccx/cswap.
inline Circuit random_circuit(int n, int gates, std::mt19937_64& rng, int max_arity = 2) {
  static const std::vector<std::string> one{"x", "y", "z", "h", "s", "sdg", "t", "tdg",
                                            "rx", "ry", "rz", "u3", "u2", "u1", "sx"};
  static const std::vector<std::string> two{"cx", "cz", "swap", "cy", "ch", "crz", "cu1", "rzz"};
  static const std::vector<std::string> three{"ccx", "cswap"};
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  Circuit c = Circuit::with_qubits(n, n);
  const int top = std::min(max_arity, n);
  for (int i = 0; i < gates; ++i) {
    const int arity = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(top));
    std::vector<int> qs(static_cast<std::size_t>(n));
    for (int q = 0; q < n; ++q) qs[static_cast<std::size_t>(q)] = q;
    std::shuffle(qs.begin(), qs.end(), rng);
    qs.resize(static_cast<std::size_t>(arity));
    const auto& pool = arity == 1 ? one : (arity == 2 ? two : three);
    const std::string& name = pool[rng() % pool.size()];
    std::vector<double> params;
    if (name == "rx" || name == "ry" || name == "rz" || name == "u1" || name == "crz" ||
        name == "cu1" || name == "rzz") {
      params = {angle(rng)};
    } else if (name == "u2") {
      params = {angle(rng), angle(rng)};
    } else if (name == "u3") {
      params = {angle(rng), angle(rng), angle(rng)};
    }
    c.add(name, qs, params);
  }
  return c;
}

/// Random circuit of cx and single-qubit gates only, cheap to build at scale.
inline Circuit random_cx_circuit(int n, int gates, std::uint64_t seed, double two_qubit_share = 0.5) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Circuit c = Circuit::with_qubits(n);
  c.gates.reserve(static_cast<std::size_t>(gates));
  for (int i = 0; i < gates; ++i) {
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (u(rng) < two_qubit_share) {
      int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n - 1));
      if (b >= a) ++b;
      c.add("cx", {a, b});
    } else {
      c.add(u(rng) < 0.5 ? "h" : "t", {a});
    }
  }
  return c;
}

/// Random connected graph: a random spanning tree plus `extra` chords.
inline std::vector<std::pair<int, int>> random_connected_edges(int n, int extra, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> e;
  for (int v = 1; v < n; ++v) {
    const int u = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    e.push_back({u, v});
  }
  for (int k = 0; k < extra; ++k) {
    const int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    const int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    if (a == b) continue;
    const std::pair<int, int> p{std::min(a, b), std::max(a, b)};
    if (std::find(e.begin(), e.end(), p) == e.end() &&
        std::find(e.begin(), e.end(), std::pair<int, int>{p.second, p.first}) == e.end()) {
      e.push_back(p);
    }
  }
  return e;
}

/// Calibration with per-qubit and per-edge errors drawn from `rng`.
inline void randomize_errors(DeviceModel& d, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> e1(1e-4, 2e-3);
  std::uniform_real_distribution<double> e2(2e-3, 5e-2);
  for (auto& q : d.calibration.qubits) q.e1 = e1(rng);
  for (auto& e : d.calibration.edges) e.e2 = e2(rng);
}

}  // namespace qasmtrans::testing
