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

#include "qasmtrans/device.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"

namespace qasmtrans {

using nlohmann::json;

CouplingGraph::CouplingGraph(int num_qubits, std::vector<std::pair<int, int>> edges)
    : n_(num_qubits) {
  std::set<std::pair<int, int>> unique;
  for (auto [a, b] : edges) {
    if (a > b) std::swap(a, b);
    unique.insert({a, b});
  }
  edges_.assign(unique.begin(), unique.end());
  adj_.assign(static_cast<std::size_t>(n_), {});
  for (auto [a, b] : edges_) {
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (auto& l : adj_) std::sort(l.begin(), l.end());
  dist_.assign(static_cast<std::size_t>(n_) * static_cast<std::size_t>(n_), kUnreachable);
  std::vector<int> comp(static_cast<std::size_t>(n_), -1);
  for (int s = 0; s < n_; ++s) {
    int* row = &dist_[static_cast<std::size_t>(s * n_)];
    row[s] = 0;
    std::deque<int> queue{s};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : adj_[u]) {
        if (row[v] == kUnreachable) {
          row[v] = row[u] + 1;
          queue.push_back(v);
        }
      }
    }
    if (comp[s] < 0) {
      for (int v = 0; v < n_; ++v) {
        if (row[v] != kUnreachable) comp[v] = components_;
      }
      ++components_;
    }
  }
}

int CouplingGraph::edge_index(int a, int b) const {
  if (a > b) std::swap(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(a, b));
  if (it == edges_.end() || *it != std::make_pair(a, b)) return -1;
  return static_cast<int>(it - edges_.begin());
}

std::string CouplingGraph::distances_csv() const {
  std::string out;
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (b) out += ',';
      const int d = distance(a, b);
      out += d == kUnreachable ? std::string("inf") : std::to_string(d);
    }
    out += '\n';
  }
  return out;
}

double DeviceModel::e2(int a, int b) const {
  const int k = coupling.edge_index(a, b);
  if (k < 0) {
    throw InternalError("no coupler between " + std::to_string(a) + " and " +
                        std::to_string(b));
  }
  return calibration.edges[static_cast<std::size_t>(k)].e2;
}

double DeviceModel::gate_duration(const GateIR& g) const {
  if (g.is_barrier()) return 0.0;
  if (g.arity() == 2) {
    const int k = coupling.edge_index(g.qubits[0], g.qubits[1]);
    if (k >= 0) return calibration.edges[static_cast<std::size_t>(k)].duration_ns;
    throw MissingDuration(g.name + " on uncoupled pair");
  }
  if (g.arity() == 1) {
    const auto& qc = calibration.qubits.at(static_cast<std::size_t>(g.qubits[0]));
    if (auto it = qc.gate_durations_ns.find(g.name); it != qc.gate_durations_ns.end()) {
      return it->second;
    }
    if (auto it = calibration.gate_durations_ns.find(g.name);
        it != calibration.gate_durations_ns.end()) {
      return it->second;
    }
  }
  throw MissingDuration(g.name);
}

std::map<std::string, double> default_gate_durations(const std::string& basis) {
  if (basis == "ibmq") return {{"id", 35.5}, {"rz", 0.0}, {"sx", 35.5}, {"x", 35.5}};
  if (basis == "rigetti") return {{"rx", 40.0}, {"rz", 0.0}};
  if (basis == "ionq") return {{"gpi", 135000.0}, {"gpi2", 135000.0}, {"gz", 0.0}};
  if (basis == "quantinuum") return {{"rx", 10000.0}, {"rz", 0.0}};
  return {{"rx", 10.0}, {"rz", 0.0}};
}

namespace {

bool is_named_basis(const std::string& b) {
  return b == "ibmq" || b == "rigetti" || b == "ionq" || b == "quantinuum";
}

template <typename T>
T get_field(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key)) throw SchemaError(path + key);
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw SchemaError(path + key);
  }
}

double get_number(const json& obj, const char* key, const std::string& path) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number()) {
    throw SchemaError(path + key);
  }
  return obj.at(key).get<double>();
}

std::map<std::string, double> get_durations(const json& obj, const std::string& path) {
  std::map<std::string, double> out;
  if (!obj.is_object()) throw SchemaError(path);
  for (const auto& [k, v] : obj.items()) {
    if (!v.is_number() || v.get<double>() < 0.0) throw SchemaError(path + "." + k);
    out[k] = v.get<double>();
  }
  return out;
}

void check_probability(double v, const std::string& field) {
  if (!(v >= 0.0 && v <= 1.0)) throw SchemaError(field);
}

}  // namespace

DeviceModel parse_device_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw SchemaError(std::string("<document>: ") + e.what());
  }
  if (!j.is_object()) throw SchemaError("<document>");
  if (get_field<std::string>(j, "version", "") != "qasmtrans-device/1") {
    throw SchemaError("version");
  }
  DeviceModel d;
  d.name = get_field<std::string>(j, "name", "");
  const int n = get_field<int>(j, "num_qubits", "");
  if (n <= 0) throw SchemaError("num_qubits");

  std::vector<std::pair<int, int>> edges;
  const json& je = j.contains("edges") ? j.at("edges") : json();
  if (!je.is_array()) throw SchemaError("edges");
  for (std::size_t k = 0; k < je.size(); ++k) {
    const std::string path = "edges[" + std::to_string(k) + "]";
    const json& e = je[k];
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer()) {
      throw SchemaError(path);
    }
    const int a = e[0].get<int>(), b = e[1].get<int>();
    if (a < 0 || b < 0 || a >= n || b >= n || a == b) throw SchemaError(path);
    edges.push_back({a, b});
  }
  d.coupling = CouplingGraph(n, edges);
  if (d.coupling.component_count() > 1) {
    d.warnings.push_back("DisconnectedWarning: coupling graph has " +
                         std::to_string(d.coupling.component_count()) +
                         " components");
  }

  if (!j.contains("basis")) throw SchemaError("basis");
  const json& jb = j.at("basis");
  if (jb.is_string()) {
    d.basis = jb.get<std::string>();
    if (!is_named_basis(d.basis)) throw SchemaError("basis");
  } else if (jb.is_array()) {
    d.basis = "custom";
    for (std::size_t k = 0; k < jb.size(); ++k) {
      if (!jb[k].is_string()) throw SchemaError("basis[" + std::to_string(k) + "]");
      const std::string g = jb[k].get<std::string>();
      const GateSpec* spec = find_gate(g);
      if (spec == nullptr || spec->kind == GateKind::Directive ||
          spec->kind == GateKind::Unsupported) {
        throw SchemaError("basis[" + std::to_string(k) + "]");
      }
      d.basis_gates.push_back(g);
    }
  } else {
    throw SchemaError("basis");
  }
  d.quantized_rx = d.basis == "rigetti";
  if (j.contains("quantized_rx")) {
    if (!j.at("quantized_rx").is_boolean()) throw SchemaError("quantized_rx");
    d.quantized_rx = j.at("quantized_rx").get<bool>();
  }

  d.calibration.gate_durations_ns = default_gate_durations(d.basis);
  if (j.contains("gate_durations_ns")) {
    for (const auto& [k, v] : get_durations(j.at("gate_durations_ns"), "gate_durations_ns")) {
      d.calibration.gate_durations_ns[k] = v;
    }
  }

  if (!j.contains("qubits") || !j.at("qubits").is_array()) throw SchemaError("qubits");
  const json& jq = j.at("qubits");
  if (static_cast<int>(jq.size()) != n) throw SchemaError("qubits");
  for (int q = 0; q < n; ++q) {
    const std::string path = "qubits[" + std::to_string(q) + "].";
    const json& o = jq[static_cast<std::size_t>(q)];
    QubitCalibration qc;
    qc.t1_us = get_number(o, "t1_us", path);
    qc.t2_us = get_number(o, "t2_us", path);
    qc.readout_error = get_number(o, "readout_error", path);
    qc.e1 = get_number(o, "e1", path);
    if (!(qc.t1_us > 0.0)) throw SchemaError(path + "t1_us");
    if (!(qc.t2_us > 0.0) || qc.t2_us > 2.0 * qc.t1_us) throw SchemaError(path + "t2_us");
    check_probability(qc.readout_error, path + "readout_error");
    check_probability(qc.e1, path + "e1");
    if (o.contains("gate_durations")) {
      qc.gate_durations_ns = get_durations(o.at("gate_durations"), path + "gate_durations");
    }
    d.calibration.qubits.push_back(std::move(qc));
  }

  d.calibration.edges.assign(d.coupling.edges().size(), EdgeCalibration{-1.0, -1.0});
  if (!j.contains("edges_cal") || !j.at("edges_cal").is_array()) throw SchemaError("edges_cal");
  const json& jc = j.at("edges_cal");
  for (std::size_t k = 0; k < jc.size(); ++k) {
    const std::string path = "edges_cal[" + std::to_string(k) + "].";
    const json& o = jc[k];
    if (!o.is_object() || !o.contains("pair") || !o.at("pair").is_array() ||
        o.at("pair").size() != 2) {
      throw SchemaError(path + "pair");
    }
    const int a = o.at("pair")[0].get<int>(), b = o.at("pair")[1].get<int>();
    const int idx = (a >= 0 && b >= 0 && a < n && b < n) ? d.coupling.edge_index(a, b) : -1;
    if (idx < 0) throw SchemaError(path + "pair");
    EdgeCalibration ec;
    ec.e2 = get_number(o, "e2", path);
    ec.duration_ns = get_number(o, "duration_ns", path);
    check_probability(ec.e2, path + "e2");
    if (!(ec.duration_ns > 0.0)) throw SchemaError(path + "duration_ns");
    d.calibration.edges[static_cast<std::size_t>(idx)] = ec;
  }
  for (std::size_t k = 0; k < d.calibration.edges.size(); ++k) {
    if (d.calibration.edges[k].e2 < 0.0) {
      const auto [a, b] = d.coupling.edges()[k];
      throw SchemaError("edges_cal[" + std::to_string(a) + "-" + std::to_string(b) + "]");
    }
  }

  if (j.contains("pulse")) {
    const json& p = j.at("pulse");
    if (!p.is_object()) throw SchemaError("pulse");
    PulseParams pp;
    auto opt = [&](const char* key, double& dst) {
      if (p.contains(key)) {
        if (!p.at(key).is_number() || !(p.at(key).get<double>() > 0.0)) {
          throw SchemaError(std::string("pulse.") + key);
        }
        dst = p.at(key).get<double>();
      }
    };
    opt("dt_ns", pp.dt_ns);
    opt("drive_duration_ns", pp.drive_duration_ns);
    opt("coupler_duration_ns", pp.coupler_duration_ns);
    opt("ramp_ns", pp.ramp_ns);
    opt("max_drive_hz", pp.max_drive_hz);
    pp.coupling_hz = get_number(p, "coupling_hz", "pulse.");
    if (!(pp.coupling_hz > 0.0)) throw SchemaError("pulse.coupling_hz");
    if (2.0 * pp.ramp_ns >= pp.coupler_duration_ns) throw SchemaError("pulse.ramp_ns");
    d.pulse = pp;
  }
  return d;
}

DeviceModel load_device(const std::string& path_or_text) {
  const auto first = path_or_text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && path_or_text[first] == '{') {
    return parse_device_json(path_or_text);
  }
  std::ifstream in(path_or_text, std::ios::binary);
  if (!in) throw DeviceError("cannot read device file " + path_or_text);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_device_json(ss.str());
}

std::string device_to_json(const DeviceModel& d) {
  nlohmann::ordered_json j;
  j["version"] = "qasmtrans-device/1";
  j["name"] = d.name;
  j["num_qubits"] = d.num_qubits();
  j["edges"] = nlohmann::ordered_json::array();
  for (auto [a, b] : d.coupling.edges()) j["edges"].push_back({a, b});
  if (d.basis == "custom") {
    j["basis"] = d.basis_gates;
  } else {
    j["basis"] = d.basis;
  }
  j["quantized_rx"] = d.quantized_rx;
  j["gate_durations_ns"] = d.calibration.gate_durations_ns;
  j["qubits"] = nlohmann::ordered_json::array();
  for (const auto& q : d.calibration.qubits) {
    nlohmann::ordered_json o;
    o["t1_us"] = q.t1_us;
    o["t2_us"] = q.t2_us;
    o["readout_error"] = q.readout_error;
    o["e1"] = q.e1;
    if (!q.gate_durations_ns.empty()) o["gate_durations"] = q.gate_durations_ns;
    j["qubits"].push_back(o);
  }
  j["edges_cal"] = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < d.coupling.edges().size(); ++k) {
    const auto [a, b] = d.coupling.edges()[k];
    nlohmann::ordered_json o;
    o["pair"] = {a, b};
    o["e2"] = d.calibration.edges[k].e2;
    o["duration_ns"] = d.calibration.edges[k].duration_ns;
    j["edges_cal"].push_back(o);
  }
  if (d.pulse) {
    nlohmann::ordered_json p;
    p["dt_ns"] = d.pulse->dt_ns;
    p["drive_duration_ns"] = d.pulse->drive_duration_ns;
    p["coupler_duration_ns"] = d.pulse->coupler_duration_ns;
    p["ramp_ns"] = d.pulse->ramp_ns;
    p["coupling_hz"] = d.pulse->coupling_hz;
    p["max_drive_hz"] = d.pulse->max_drive_hz;
    j["pulse"] = p;
  }
  return j.dump(2) + "\n";
}

double penalty(int q, const DeviceModel& d) {
  const auto& nb = d.coupling.neighbors(q);
  if (nb.empty()) throw IsolatedQubit(q);
  double sum = 0.0;
  for (int r : nb) sum += d.e2(q, r);
  return d.calibration.qubits.at(static_cast<std::size_t>(q)).e1 +
         sum / static_cast<double>(nb.size());
}

PartialDevice restrict_device(const DeviceModel& d, std::vector<int> qubits) {
  std::sort(qubits.begin(), qubits.end());
  std::vector<int> to_child(static_cast<std::size_t>(d.num_qubits()), -1);
  for (std::size_t k = 0; k < qubits.size(); ++k) to_child[qubits[k]] = static_cast<int>(k);
  std::vector<std::pair<int, int>> edges;
  for (std::size_t k = 0; k < d.coupling.edges().size(); ++k) {
    const auto [a, b] = d.coupling.edges()[k];
    if (to_child[a] >= 0 && to_child[b] >= 0) edges.push_back({to_child[a], to_child[b]});
  }
  PartialDevice out;
  out.device.name = d.name;
  out.device.basis = d.basis;
  out.device.basis_gates = d.basis_gates;
  out.device.quantized_rx = d.quantized_rx;
  out.device.pulse = d.pulse;
  out.device.coupling = CouplingGraph(static_cast<int>(qubits.size()), edges);
  out.device.calibration.gate_durations_ns = d.calibration.gate_durations_ns;
  for (int q : qubits) out.device.calibration.qubits.push_back(d.calibration.qubits[q]);
  for (auto [a, b] : out.device.coupling.edges()) {
    const int k = d.coupling.edge_index(qubits[a], qubits[b]);
    out.device.calibration.edges.push_back(d.calibration.edges[static_cast<std::size_t>(k)]);
  }
  out.to_parent = std::move(qubits);
  return out;
}

PartialDevice partial_graph(const DeviceModel& d, int k, std::optional<int> anchor) {
  const int n = d.num_qubits();
  if (k < 1 || k > n) {
    throw Infeasible("partial graph size " + std::to_string(k) + " outside 1.." +
                     std::to_string(n));
  }
  int start = -1;
  if (anchor) {
    start = *anchor;
    if (start < 0 || start >= n) throw Infeasible("anchor outside the device");
  } else {
    double best = 0.0;
    for (int q = 0; q < n; ++q) {
      if (d.coupling.neighbors(q).empty()) continue;
      const double p = penalty(q, d);
      if (start < 0 || p < best) {
        best = p;
        start = q;
      }
    }
    if (start < 0) start = 0;
  }
  std::vector<char> selected(static_cast<std::size_t>(n), 0);
  std::vector<int> links(static_cast<std::size_t>(n), 0);  // edges into selection
  std::vector<int> chosen{start};
  selected[start] = 1;
  for (int r : d.coupling.neighbors(start)) ++links[r];
  while (static_cast<int>(chosen.size()) < k) {
    int pick = -1;
    for (int v = 0; v < n; ++v) {
      if (selected[v] || links[v] == 0) continue;
      if (pick < 0 || links[v] > links[pick]) pick = v;
    }
    if (pick < 0) {
      throw Infeasible("no connected subgraph of size " + std::to_string(k) +
                       " contains qubit " + std::to_string(start));
    }
    selected[pick] = 1;
    chosen.push_back(pick);
    for (int r : d.coupling.neighbors(pick)) ++links[r];
  }
  return restrict_device(d, chosen);
}

DeviceModel make_device(const std::string& name, int num_qubits,
                        std::vector<std::pair<int, int>> edges,
                        const std::string& basis, const UniformCalibration& cal) {
  DeviceModel d;
  d.name = name;
  d.basis = basis;
  d.quantized_rx = basis == "rigetti";
  d.coupling = CouplingGraph(num_qubits, std::move(edges));
  d.calibration.gate_durations_ns = default_gate_durations(basis);
  for (int q = 0; q < num_qubits; ++q) {
    QubitCalibration qc;
    qc.t1_us = cal.t1_us;
    qc.t2_us = cal.t2_us;
    qc.readout_error = cal.readout_error;
    qc.e1 = cal.e1;
    d.calibration.qubits.push_back(qc);
  }
  d.calibration.edges.assign(d.coupling.edges().size(),
                             EdgeCalibration{cal.e2, cal.two_qubit_duration_ns});
  if (d.coupling.component_count() > 1) {
    d.warnings.push_back("DisconnectedWarning: coupling graph has " +
                         std::to_string(d.coupling.component_count()) +
                         " components");
  }
  return d;
}

std::vector<std::pair<int, int>> line_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return e;
}

std::vector<std::pair<int, int>> grid_edges(int rows, int cols) {
  std::vector<std::pair<int, int>> e;
  for (int r = 0; r < rows; ++r) {
    for (int c = 0; c < cols; ++c) {
      const int q = r * cols + c;
      if (c + 1 < cols) e.push_back({q, q + 1});
      if (r + 1 < rows) e.push_back({q, q + cols});
    }
  }
  return e;
}

std::vector<std::pair<int, int>> complete_edges(int n) {
  std::vector<std::pair<int, int>> e;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) e.push_back({a, b});
  }
  return e;
}

std::vector<std::pair<int, int>> falcon27_edges() {
  return {{0, 1},   {1, 2},   {1, 4},   {2, 3},   {3, 5},   {4, 7},   {5, 8},
          {6, 7},   {7, 10},  {8, 9},   {8, 11},  {10, 12}, {11, 14}, {12, 13},
          {12, 15}, {13, 14}, {14, 16}, {15, 18}, {16, 19}, {17, 18}, {18, 21},
          {19, 20}, {19, 22}, {21, 23}, {22, 25}, {23, 24}, {24, 25}, {25, 26}};
}

std::vector<std::pair<int, int>> heavy_hex127_edges() {
  // Seven long rows joined by four bridge qubits between consecutive rows.
  // The first row spans columns 0..13, the last 1..14, the rest 0..14.
  // Bridges alternate between columns {0,4,8,12} and {2,6,10,14} and are
  // numbered right after the row above them.
  std::vector<std::pair<int, int>> e;
  std::vector<int> pending_bridge(15, -1);
  int next = 0;
  for (int r = 0; r < 7; ++r) {
    const int c0 = r == 6 ? 1 : 0;
    const int c1 = r == 0 ? 13 : 14;
    std::vector<int> row(15, -1);
    for (int c = c0; c <= c1; ++c) {
      row[c] = next++;
      if (c > c0) e.push_back({row[c - 1], row[c]});
      if (pending_bridge[c] >= 0) e.push_back({pending_bridge[c], row[c]});
    }
    if (r == 6) break;
    std::fill(pending_bridge.begin(), pending_bridge.end(), -1);
    for (int b = 0; b < 4; ++b) {
      const int col = (r % 2 == 0 ? 0 : 2) + 4 * b;
      pending_bridge[col] = next++;
      e.push_back({row[col], pending_bridge[col]});
    }
  }
  return e;
}

}  // namespace qasmtrans
