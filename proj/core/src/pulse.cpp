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

#include "qasmtrans/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <tuple>
#include <unordered_map>

#include "json.hpp"
#include "qasmtrans/errors.hpp"
#include "qasmtrans/gates.hpp"
#include "qasmtrans/lower.hpp"
#include "qasmtrans/oracle.hpp"
#include "qasmtrans/place.hpp"

namespace qasmtrans {

namespace {

constexpr double kRadPerNsToHz = 1e9 / (2.0 * kPi);

bool is_virtual_z(const std::string& name) { return name == "rz" || name == "gz"; }

// Rotation angle and base phase of a single equatorial drive pulse.
bool drive_rotation(const GateIR& g, double& theta, double& phase) {
  const std::string& n = g.name;
  phase = 0.0;
  if (n == "rx" || n == "ry") {
    theta = g.params[0];
    phase = n == "ry" ? kPi / 2.0 : 0.0;
  } else if (n == "sx") {
    theta = kPi / 2.0;
  } else if (n == "x") {
    theta = kPi;
  } else if (n == "id") {
    theta = 0.0;
  } else if (n == "gpi") {
    theta = kPi;
    phase = g.params[0];
  } else if (n == "gpi2") {
    theta = kPi / 2.0;
    phase = g.params[0];
  } else {
    return false;
  }
  if (theta < 0) {
    theta = -theta;
    phase += kPi;
  }
  return true;
}

Waveform waveform_for(const PulseTemplate& t) {
  Waveform w;
  w.name = t.waveform;
  if (t.waveform == "gaussian") {
    w.params["sigma_ns"] = t.duration_ns / 4.0;
  } else if (t.waveform == "flat_top") {
    w.params["ramp_ns"] = t.ramp_ns;
  }
  return w;
}

Waveform waveform_for(const Envelope& e) {
  Waveform w;
  switch (e.shape) {
    case Envelope::Shape::Gaussian:
      w.name = "gaussian";
      w.params["sigma_ns"] = e.duration / 4.0;
      break;
    case Envelope::Shape::FlatTop:
      w.name = "flat_top";
      w.params["ramp_ns"] = e.ramp;
      break;
    case Envelope::Shape::Constant:
      w.name = "constant";
      break;
  }
  return w;
}

std::string format_angle(double v) {
  double r = std::round(v * 1e9) / 1e9;
  if (r == 0.0) r = 0.0;  // no "-0"
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.9f", r);
  return buf;
}

Mat2 rz2(double t) { return rz_matrix(t); }

}  // namespace

const char* channel_kind_name(Channel::Kind kind) {
  switch (kind) {
    case Channel::Kind::Drive:
      return "drive";
    case Channel::Kind::Flux:
      return "flux";
    case Channel::Kind::Coupler:
      return "coupler";
  }
  return "drive";
}

const PulseTemplate* PulseLibrary::find(const std::string& gate, int index) const {
  auto it = templates.find({gate, index});
  return it == templates.end() ? nullptr : &it->second;
}

const AgsEntry* PulseLibrary::find_ags(const std::string& signature,
                                       const std::vector<int>& qubits) const {
  for (const AgsEntry& e : ags) {
    if (e.signature == signature && e.qubits == qubits) return &e;
  }
  return nullptr;
}

Envelope envelope_of(const PulseEvent& event) {
  Envelope e;
  e.t0 = event.t_start_ns;
  e.duration = event.duration_ns;
  if (event.waveform.name == "gaussian") {
    e.shape = Envelope::Shape::Gaussian;
  } else if (event.waveform.name == "flat_top") {
    e.shape = Envelope::Shape::FlatTop;
    auto it = event.waveform.params.find("ramp_ns");
    e.ramp = it == event.waveform.params.end() ? 0.0 : it->second;
  } else {
    e.shape = Envelope::Shape::Constant;
  }
  return e;
}

PulseLibrary default_library(const DeviceModel& device) {
  PulseLibrary lib;
  lib.params = device.pulse;
  const PulseParams pp = device.pulse.value_or(PulseParams{});
  lib.dt_ns = pp.dt_ns;
  const BasisSet basis = device_basis(device);
  for (int q = 0; q < device.num_qubits(); ++q) {
    for (const std::string& name : basis.one_qubit_gates) {
      if (is_virtual_z(name)) continue;
      const GateSpec* spec = find_gate(name);
      std::vector<double> params(spec != nullptr ? static_cast<std::size_t>(spec->num_params) : 0, 0.0);
      PulseTemplate t;
      t.kind = Channel::Kind::Drive;
      t.duration_ns = device.gate_duration(make_gate(name, {q}, params));
      t.waveform = "gaussian";
      lib.templates[{name, q}] = t;
    }
  }
  const std::string& two = basis.two_qubit_gate;
  const auto& edges = device.coupling.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    PulseTemplate t;
    t.kind = two == "cz" ? Channel::Kind::Flux : Channel::Kind::Coupler;
    t.duration_ns = device.calibration.edges[e].duration_ns;
    t.waveform = "flat_top";
    t.ramp_ns = std::min(pp.ramp_ns, t.duration_ns / 2.0);
    if (two == "iswap") {
      Envelope env;
      env.shape = Envelope::Shape::FlatTop;
      env.duration = t.duration_ns;
      env.ramp = t.ramp_ns;
      // exp(-i (J A / 2)(XX + YY)) is iSWAP (+i off-diagonals) for J A = -pi/2.
      t.amplitude = -(kPi / 2.0) / env.area(lib.dt_ns);
    }
    lib.templates[{two, static_cast<int>(e)}] = t;
  }
  return lib;
}

DurationFn library_durations(const PulseLibrary& lib, const DeviceModel& device) {
  return [&lib, &device](const GateIR& g) -> double {
    if (g.is_barrier()) return 0.0;
    if (g.arity() == 1) {
      if (is_virtual_z(g.name)) return 0.0;
      const PulseTemplate* t = lib.find(g.name, g.qubits[0]);
      if (t == nullptr) throw MissingTemplate(g.name + " on qubit " + std::to_string(g.qubits[0]));
      return t->duration_ns;
    }
    if (g.arity() == 2) {
      const int e = device.coupling.edge_index(g.qubits[0], g.qubits[1]);
      const PulseTemplate* t = e < 0 ? nullptr : lib.find(g.name, e);
      if (t == nullptr) {
        throw MissingTemplate(g.name + " on edge (" + std::to_string(g.qubits[0]) + "," +
                              std::to_string(g.qubits[1]) + ")");
      }
      return t->duration_ns;
    }
    throw MissingTemplate(g.name + " acting on " + std::to_string(g.arity()) + " qubits");
  };
}

GateBlocks collect_blocks(const Circuit& c) {
  GateBlocks out;
  std::vector<GateBlocks::Block> blocks;
  std::vector<char> dead;
  std::vector<int> open(static_cast<std::size_t>(c.num_qubits), -1);
  std::vector<int> block_of(c.gates.size(), -1);
  auto close = [&](int id) {
    if (id < 0) return;
    for (int q : blocks[static_cast<std::size_t>(id)].qubits) {
      if (open[static_cast<std::size_t>(q)] == id) open[static_cast<std::size_t>(q)] = -1;
    }
  };
  for (std::size_t i = 0; i < c.gates.size(); ++i) {
    const GateIR& g = c.gates[i];
    const int gi = static_cast<int>(i);
    if (g.is_barrier() || g.arity() > 2 || g.arity() == 0) {
      for (int q : g.qubits) close(open[static_cast<std::size_t>(q)]);
      continue;
    }
    if (g.arity() == 1) {
      int& o = open[static_cast<std::size_t>(g.qubits[0])];
      if (o < 0) {
        o = static_cast<int>(blocks.size());
        blocks.push_back({{g.qubits[0]}, {}});
        dead.push_back(0);
      }
      blocks[static_cast<std::size_t>(o)].gates.push_back(gi);
      block_of[i] = o;
      continue;
    }
    const int a = std::min(g.qubits[0], g.qubits[1]);
    const int b = std::max(g.qubits[0], g.qubits[1]);
    const int oa = open[static_cast<std::size_t>(a)];
    const int ob = open[static_cast<std::size_t>(b)];
    if (oa >= 0 && oa == ob) {
      blocks[static_cast<std::size_t>(oa)].gates.push_back(gi);
      block_of[i] = oa;
      continue;
    }
    const int id = static_cast<int>(blocks.size());
    blocks.push_back({{a, b}, {}});
    dead.push_back(0);
    auto& nb = blocks.back().gates;
    for (int o : {oa, ob}) {
      if (o < 0) continue;
      auto& old = blocks[static_cast<std::size_t>(o)];
      if (old.qubits.size() == 1) {
        // A pending single-qubit run joins the new pair block.
        nb.insert(nb.end(), old.gates.begin(), old.gates.end());
        for (int k : old.gates) block_of[static_cast<std::size_t>(k)] = id;
        old.gates.clear();
        dead[static_cast<std::size_t>(o)] = 1;
      }
      close(o);
    }
    std::sort(nb.begin(), nb.end());
    nb.push_back(gi);
    block_of[i] = id;
    open[static_cast<std::size_t>(a)] = id;
    open[static_cast<std::size_t>(b)] = id;
  }
  std::vector<int> renumber(blocks.size(), -1);
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    if (dead[k]) continue;
    renumber[k] = static_cast<int>(out.blocks.size());
    out.blocks.push_back(std::move(blocks[k]));
  }
  for (int& b : block_of) {
    if (b >= 0) b = renumber[static_cast<std::size_t>(b)];
  }
  out.block_of = std::move(block_of);
  return out;
}

std::string block_signature(const Circuit& c, const GateBlocks::Block& block) {
  auto render = [&](const std::vector<int>& roles_of) {
    std::string s;
    for (int gi : block.gates) {
      const GateIR& g = c.gates[static_cast<std::size_t>(gi)];
      if (!s.empty()) s += ';';
      s += g.name;
      if (!g.params.empty()) {
        s += '(';
        for (std::size_t k = 0; k < g.params.size(); ++k) {
          if (k) s += ',';
          s += format_angle(g.params[k]);
        }
        s += ')';
      }
      s += '@';
      for (std::size_t k = 0; k < g.qubits.size(); ++k) {
        if (k) s += ',';
        const int q = g.qubits[k];
        s += std::to_string(q == block.qubits[0] ? roles_of[0] : roles_of[1]);
      }
    }
    return s;
  };
  if (block.qubits.size() == 1) return render({0, 1});
  return std::min(render({0, 1}), render({1, 0}));
}

CMat block_unitary(const Circuit& c, const GateBlocks::Block& block) {
  Circuit sub = Circuit::with_qubits(static_cast<int>(block.qubits.size()));
  for (int gi : block.gates) {
    GateIR g = c.gates[static_cast<std::size_t>(gi)];
    for (int& q : g.qubits) q = q == block.qubits[0] ? 0 : 1;
    sub.add(std::move(g));
  }
  return circuit_unitary(sub);
}

std::vector<AgsCandidate> ags_candidates(const Circuit& c, const GateBlocks& blocks,
                                         const std::vector<int>& cp_gates,
                                         const DurationFn& durations) {
  struct Key {
    std::string signature;
    std::vector<int> qubits;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<std::string>{}(k.signature);
      for (int q : k.qubits) h = h * 1000003u ^ static_cast<std::size_t>(q);
      return h;
    }
  };
  std::unordered_map<Key, std::size_t, KeyHash> index;
  std::vector<AgsCandidate> out;
  int current = -1;
  std::size_t slot = 0;
  for (int gi : cp_gates) {
    const int b = blocks.block_of[static_cast<std::size_t>(gi)];
    if (b < 0) {
      current = -1;
      continue;
    }
    if (b != current) {
      current = b;
      const auto& blk = blocks.blocks[static_cast<std::size_t>(b)];
      Key key{block_signature(c, blk), blk.qubits};
      auto [it, inserted] = index.try_emplace(key, out.size());
      if (inserted) {
        AgsCandidate cand;
        cand.signature = key.signature;
        cand.qubits = key.qubits;
        cand.example_block = b;
        out.push_back(std::move(cand));
      }
      slot = it->second;
      ++out[slot].occurrences;
    }
    out[slot].cumulative_ns += durations(c.gates[static_cast<std::size_t>(gi)]);
  }
  std::stable_sort(out.begin(), out.end(), [](const AgsCandidate& x, const AgsCandidate& y) {
    if (x.cumulative_ns != y.cumulative_ns) return x.cumulative_ns > y.cumulative_ns;
    if (x.occurrences != y.occurrences) return x.occurrences > y.occurrences;
    return std::tie(x.signature, x.qubits) < std::tie(y.signature, y.qubits);
  });
  return out;
}

std::vector<AgsCandidate> ags_candidates(const Circuit& c, const DurationFn& durations) {
  const GateBlocks blocks = collect_blocks(c);
  const CriticalPath cp = critical_path(c, durations);
  return ags_candidates(c, blocks, cp.gates, durations);
}

namespace {

class Scheduler {
 public:
  Scheduler(const Circuit& c, const PulseLibrary& lib, const DeviceModel& device)
      : c_(c), lib_(lib), device_(device),
        avail_(static_cast<std::size_t>(c.num_qubits), 0.0),
        frame_(static_cast<std::size_t>(c.num_qubits), 0.0) {}

  Schedule run() {
    std::vector<const AgsEntry*> macro;
    GateBlocks blocks;
    if (!lib_.ags.empty()) {
      blocks = collect_blocks(c_);
      macro.resize(blocks.blocks.size(), nullptr);
      for (std::size_t b = 0; b < blocks.blocks.size(); ++b) {
        const auto& blk = blocks.blocks[b];
        if (blk.qubits.size() != 2) continue;
        macro[b] = lib_.find_ags(block_signature(c_, blk), blk.qubits);
      }
    }
    for (std::size_t i = 0; i < c_.gates.size(); ++i) {
      const int b = blocks.block_of.empty() ? -1 : blocks.block_of[i];
      if (b >= 0 && macro[static_cast<std::size_t>(b)] != nullptr) {
        // Emitted at the block's last gate: by then every earlier gate on
        // both qubits has been scheduled.
        const auto& blk = blocks.blocks[static_cast<std::size_t>(b)];
        if (blk.gates.back() == static_cast<int>(i)) {
          emit_macro(blk, *macro[static_cast<std::size_t>(b)], static_cast<int>(i));
        }
        continue;
      }
      emit_gate(c_.gates[i], static_cast<int>(i));
    }
    Schedule s;
    s.num_qubits = c_.num_qubits;
    s.dt_ns = lib_.dt_ns;
    std::stable_sort(events_.begin(), events_.end(), [](const PulseEvent& x, const PulseEvent& y) {
      if (x.t_start_ns != y.t_start_ns) return x.t_start_ns < y.t_start_ns;
      if (x.channel.kind != y.channel.kind) return x.channel.kind < y.channel.kind;
      return x.channel.index < y.channel.index;
    });
    s.events = std::move(events_);
    s.frames.phase = frame_;
    for (double t : avail_) s.makespan_ns = std::max(s.makespan_ns, t);
    return s;
  }

 private:
  double& avail(int q) { return avail_[static_cast<std::size_t>(q)]; }
  double& frame(int q) { return frame_[static_cast<std::size_t>(q)]; }

  void emit_gate(const GateIR& g, int index) {
    if (g.is_barrier()) {
      double t = 0.0;
      for (int q : g.qubits) t = std::max(t, avail(q));
      for (int q : g.qubits) avail(q) = t;
      return;
    }
    if (g.arity() == 1) {
      const int q = g.qubits[0];
      if (is_virtual_z(g.name)) {
        frame(q) += g.params[0];
        return;
      }
      const PulseTemplate* t = lib_.find(g.name, q);
      if (t == nullptr) throw MissingTemplate(g.name + " on qubit " + std::to_string(q));
      double theta = 0.0;
      double base = 0.0;
      if (!drive_rotation(g, theta, base)) throw MissingTemplate(g.name + " drive shape");
      PulseEvent ev;
      ev.channel = {Channel::Kind::Drive, q};
      ev.t_start_ns = avail(q);
      ev.duration_ns = t->duration_ns;
      ev.waveform = waveform_for(*t);
      ev.amplitude = theta == 0.0 ? 0.0 : theta / envelope_of(ev).area(lib_.dt_ns);
      ev.phase_rad = wrap_angle(base - frame(q));
      ev.gate = index;
      avail(q) = ev.end_ns();
      events_.push_back(std::move(ev));
      return;
    }
    if (g.arity() != 2) throw MissingTemplate(g.name + " acting on " + std::to_string(g.arity()) + " qubits");
    const int a = g.qubits[0];
    const int b = g.qubits[1];
    const int e = device_.coupling.edge_index(a, b);
    const PulseTemplate* t = e < 0 ? nullptr : lib_.find(g.name, e);
    if (t == nullptr) {
      throw MissingTemplate(g.name + " on edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }
    PulseEvent ev;
    ev.channel = {t->kind, e};
    ev.t_start_ns = std::max(avail(a), avail(b));
    ev.duration_ns = t->duration_ns;
    ev.waveform = waveform_for(*t);
    ev.amplitude = t->amplitude;
    ev.gate = index;
    if (g.name == "ms") {
      // Conjugating by the frames shifts each MS phase by its qubit's frame.
      ev.phase_rad = wrap_angle(g.params[0] - frame(a));
      ev.waveform.params["phase_b_rad"] = wrap_angle(g.params[1] - frame(b));
    }
    if (g.name == "iswap") std::swap(frame(a), frame(b));
    avail(a) = avail(b) = ev.end_ns();
    events_.push_back(std::move(ev));
  }

  void emit_macro(const GateBlocks::Block& blk, const AgsEntry& entry, int index) {
    const int q0 = blk.qubits[0];
    const int q1 = blk.qubits[1];
    const double start = std::max(avail(q0), avail(q1));
    const int e = device_.coupling.edge_index(q0, q1);
    if (e < 0) throw MissingTemplate("AGS block on uncoupled pair");
    if (entry.ashn) {
      // Physical target RZ(-F) G RZ(F); frames are left unchanged.
      const Mat4 g = block_unitary(c_, blk);
      Mat4 rz_f;
      rz_f.setZero();
      Mat4 rz_mf;
      rz_mf.setZero();
      const Mat2 f1 = rz2(frame(q1));
      const Mat2 f0 = rz2(frame(q0));
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
          rz_f.block<2, 2>(2 * i, 2 * j) = f1(i, j) * f0;
          rz_mf.block<2, 2>(2 * i, 2 * j) = std::conj(f1(i, j)) * f0.conjugate();
        }
      }
      const PulseModel m = ashn_block_model(*entry.ashn, rz_mf * g * rz_f, start);
      for (const DriveControl& d : m.drives) {
        PulseEvent ev;
        ev.channel = {Channel::Kind::Drive, blk.qubits[static_cast<std::size_t>(d.qubit)]};
        ev.t_start_ns = d.envelope.t0;
        ev.duration_ns = d.envelope.duration;
        ev.waveform = waveform_for(d.envelope);
        ev.amplitude = d.amplitude;
        ev.phase_rad = wrap_angle(d.phase);
        ev.detuning = d.detuning;
        ev.gate = index;
        events_.push_back(std::move(ev));
      }
      for (const CouplerControl& cc : m.couplers) {
        PulseEvent ev;
        ev.channel = {Channel::Kind::Coupler, e};
        ev.t_start_ns = cc.envelope.t0;
        ev.duration_ns = cc.envelope.duration;
        ev.waveform = waveform_for(cc.envelope);
        ev.amplitude = cc.amplitude;
        ev.gate = index;
        events_.push_back(std::move(ev));
      }
    } else {
      PulseEvent ev;
      ev.channel = {Channel::Kind::Coupler, e};
      ev.t_start_ns = start;
      ev.duration_ns = entry.duration_ns;
      ev.waveform.name = "constant";
      ev.gate = index;
      events_.push_back(std::move(ev));
    }
    avail(q0) = avail(q1) = start + entry.duration_ns;
  }

  const Circuit& c_;
  const PulseLibrary& lib_;
  const DeviceModel& device_;
  std::vector<double> avail_;
  std::vector<double> frame_;
  std::vector<PulseEvent> events_;
};

}  // namespace

Schedule build_schedule(const Circuit& circuit, const PulseLibrary& lib, const DeviceModel& device) {
  return Scheduler(circuit, lib, device).run();
}

std::string schedule_to_json(const Schedule& s) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["version"] = "qasmtrans-pulse/1";
  j["dt_ns"] = s.dt_ns;
  ordered_json events = ordered_json::array();
  for (const PulseEvent& e : s.events) {
    ordered_json ev;
    ev["t_start_ns"] = e.t_start_ns;
    ev["duration_ns"] = e.duration_ns;
    ev["channel"] = {{"kind", channel_kind_name(e.channel.kind)}, {"index", e.channel.index}};
    ordered_json params = ordered_json::object();
    for (const auto& [k, v] : e.waveform.params) params[k] = v;
    ev["waveform"] = {{"name", e.waveform.name}, {"params", params}};
    ev["amplitude"] = e.amplitude * kRadPerNsToHz;
    ev["phase_rad"] = e.phase_rad;
    ev["detuning_hz"] = e.detuning * kRadPerNsToHz;
    events.push_back(std::move(ev));
  }
  j["events"] = std::move(events);
  ordered_json frames = ordered_json::object();
  for (std::size_t q = 0; q < s.frames.phase.size(); ++q) {
    frames[std::to_string(q)] = s.frames.phase[q];
  }
  j["frames"] = std::move(frames);
  return j.dump(2) + "\n";
}

PulseModel model_from_schedule(const Schedule& s, const DeviceModel& device,
                               const std::vector<int>& qubits, bool noise) {
  std::vector<int> slot(static_cast<std::size_t>(std::max(device.num_qubits(), s.num_qubits)), -1);
  for (std::size_t i = 0; i < qubits.size(); ++i) slot[static_cast<std::size_t>(qubits[i])] = static_cast<int>(i);
  auto local = [&](int q) {
    const int m = q >= 0 && q < static_cast<int>(slot.size()) ? slot[static_cast<std::size_t>(q)] : -1;
    if (m < 0) throw DimensionMismatch("pulse on qubit " + std::to_string(q) + " outside the model");
    return m;
  };
  PulseModel m;
  m.num_qubits = static_cast<int>(qubits.size());
  m.dt_ns = s.dt_ns;
  m.kappa.assign(qubits.size(), 0.0);
  m.gamma.assign(qubits.size(), 0.0);
  if (noise) {
    for (std::size_t i = 0; i < qubits.size(); ++i) {
      const auto& cal = device.calibration.qubits[static_cast<std::size_t>(qubits[i])];
      m.kappa[i] = PulseModel::relaxation_rate(cal.t1_us);
      m.gamma[i] = PulseModel::dephasing_rate(cal.t1_us, cal.t2_us);
    }
  }
  for (const PulseEvent& e : s.events) {
    switch (e.channel.kind) {
      case Channel::Kind::Drive: {
        if (e.amplitude == 0.0 && e.detuning == 0.0) break;
        DriveControl d;
        d.qubit = local(e.channel.index);
        d.envelope = envelope_of(e);
        d.amplitude = e.amplitude;
        d.phase = e.phase_rad;
        d.detuning = e.detuning;
        m.drives.push_back(d);
        break;
      }
      case Channel::Kind::Coupler: {
        const auto& [a, b] = device.coupling.edges()[static_cast<std::size_t>(e.channel.index)];
        CouplerControl c;
        c.a = local(a);
        c.b = local(b);
        c.envelope = envelope_of(e);
        c.amplitude = e.amplitude;
        m.couplers.push_back(c);
        break;
      }
      case Channel::Kind::Flux:
        throw DimensionMismatch("flux pulses are outside the XX+YY pulse model");
    }
  }
  return m;
}

CMat frame_unitary(const Schedule& s, const std::vector<int>& qubits) {
  CMat out = CMat::Identity(1, 1);
  for (auto it = qubits.rbegin(); it != qubits.rend(); ++it) {
    out = kron(out, rz_matrix(s.frames.phase[static_cast<std::size_t>(*it)]));
  }
  return out;
}

}  // namespace qasmtrans
