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

#include "qasmtrans/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <ostream>

#include "json.hpp"
#include "qasmtrans/errors.hpp"
#include "qasmtrans/frontend.hpp"
#include "qasmtrans/lower.hpp"
#include "qasmtrans/oracle.hpp"
#include "qasmtrans/partition.hpp"
#include "qasmtrans/pulse.hpp"

namespace qasmtrans {

namespace {

// log2 of the amplitude count (columns times rows) checked exhaustively.
constexpr int kExhaustiveVerifyLog2 = 19;

using Clock = std::chrono::steady_clock;
using nlohmann::ordered_json;

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

ordered_json stats_object(const CircuitStats& s) { return ordered_json::parse(stats_json(s)); }

ordered_json timings_object(const StageTimings& t, double parse_ms) {
  return {{"parse", parse_ms},       {"decompose", t.decompose_ms}, {"route", t.route_ms},
          {"place", t.place_ms},     {"lower", t.lower_ms},         {"total", t.total_ms + parse_ms}};
}

ordered_json placement_object(const TranspileResult& r) {
  ordered_json top = ordered_json::array();
  for (const PlacementScore& p : r.top_placements) {
    top.push_back({{"score", p.score}, {"mapping", p.mapping}});
  }
  return {{"score", r.placement->score},
          {"mapping", r.placement->mapping},
          {"cp_length", r.placement->cp_length},
          {"top", top}};
}

BasisSet select_basis(const DeviceModel& device, const std::string& backend) {
  if (backend.empty() || backend == device.basis) return device_basis(device);
  return vendor_basis(backend);
}

}  // namespace

TranspileResult transpile(const Circuit& circuit, const DeviceModel& device,
                          const TranspileOptions& opts) {
  const auto t_start = Clock::now();
  TranspileResult r;
  r.input = circuit;
  r.before = stats(circuit);
  const BasisSet basis = select_basis(device, opts.backend);

  auto t0 = Clock::now();
  std::vector<int> rename(static_cast<std::size_t>(circuit.num_qubits));
  for (int q = 0; q < circuit.num_qubits; ++q) rename[static_cast<std::size_t>(q)] = q;
  Circuit work = circuit;
  if (opts.priority) {
    rename = priority_relabeling(circuit, *opts.priority);
    work = relabel_qubits(circuit, rename);
  }
  r.decomposed = decompose_3q(work);
  r.timings.decompose_ms = ms_since(t0);

  t0 = Clock::now();
  RoutingResult routed = opts.constrain_k
                             ? constrained_route(r.decomposed, device, *opts.constrain_k, opts.seed, opts.route)
                             : sabre_route(r.decomposed, device, opts.seed, opts.route);
  r.timings.route_ms = ms_since(t0);
  r.swaps_inserted = routed.swaps_inserted;

  std::vector<int> relocate(static_cast<std::size_t>(device.num_qubits()));
  for (int p = 0; p < device.num_qubits(); ++p) relocate[static_cast<std::size_t>(p)] = p;
  r.routed = std::move(routed.circuit);
  if (opts.noise_adaptive) {
    t0 = Clock::now();
    const PlacementResult pr = select_placement(r.routed, device, opts.placement_limit);
    relocate = complete_embedding(pr.best.mapping, device.num_qubits());
    r.routed = relabel_qubits(r.routed, relocate, device.num_qubits());
    r.placement = pr.best;
    const auto keep = std::min<std::size_t>(pr.all.size(), static_cast<std::size_t>(std::max(0, opts.top_placements)));
    r.top_placements.assign(pr.all.begin(), pr.all.begin() + static_cast<std::ptrdiff_t>(keep));
    r.timings.place_ms = ms_since(t0);
  }

  for (int q = 0; q < circuit.num_qubits; ++q) {
    const int v = rename[static_cast<std::size_t>(q)];
    r.initial_layout.push_back(relocate[static_cast<std::size_t>(routed.initial_layout.virt_to_phys[static_cast<std::size_t>(v)])]);
    r.final_layout.push_back(relocate[static_cast<std::size_t>(routed.final_layout.virt_to_phys[static_cast<std::size_t>(v)])]);
  }

  t0 = Clock::now();
  r.output = lower(r.routed, basis);
  r.output.source_name = circuit.source_name;
  r.timings.lower_ms = ms_since(t0);
  r.after = stats(r.output);
  r.timings.total_ms = ms_since(t_start);
  return r;
}

VerifyReport verify_transpile(const TranspileResult& result, double tol) {
  EquivalenceOptions eo;
  eo.initial_layout = result.initial_layout;
  eo.final_layout = result.final_layout;
  eo.tol = tol;
  // Exhaustive columns are exact but cost 2^n simulations of every touched
  // wire; past a fixed budget random states are used instead.
  std::vector<char> touched(static_cast<std::size_t>(result.output.num_qubits), 0);
  for (int w : result.initial_layout) touched[static_cast<std::size_t>(w)] = 1;
  for (int w : result.final_layout) touched[static_cast<std::size_t>(w)] = 1;
  for (const GateIR& g : result.output.gates) {
    for (int w : g.qubits) touched[static_cast<std::size_t>(w)] = 1;
  }
  const int wires = static_cast<int>(std::count(touched.begin(), touched.end(), 1));
  if (result.input.num_qubits + wires > kExhaustiveVerifyLog2) eo.random_states = 16;
  const EquivalenceResult e = equivalent(result.input, result.output, eo);
  return {e.equivalent, e.max_deviation};
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InternalError("cannot write " + tmp);
    f << contents;
    if (!f.flush()) throw InternalError("cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InternalError("cannot move " + tmp + " to " + path + ": " + ec.message());
}

int run(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.inputs.empty()) throw ParseError("no input circuit given");
    if (!cfg.space_share && cfg.inputs.size() != 1) {
      throw ParseError("exactly one input is allowed without --space-share");
    }
    DeviceModel device = load_device(cfg.device_path);
    for (const std::string& w : device.warnings) err << "warning: " << w << "\n";
    if (!cfg.backend.empty()) {
      try {
        (void)vendor_basis(cfg.backend);
      } catch (const Error&) {
        throw SchemaError("backend");
      }
    }

    auto t0 = Clock::now();
    std::vector<Circuit> circuits;
    for (const std::string& path : cfg.inputs) circuits.push_back(load_qasm_file(path));
    const double parse_ms = ms_since(t0);

    TranspileOptions opts;
    opts.backend = cfg.backend;
    opts.seed = cfg.seed;
    opts.noise_adaptive = cfg.noise_adaptive;
    opts.constrain_k = cfg.constrain_k;
    opts.priority = cfg.priority;

    ordered_json summary;
    summary["version"] = "qasmtrans-summary/1";
    summary["inputs"] = cfg.inputs;
    summary["device"] = device.name;
    summary["backend"] = select_basis(device, cfg.backend).name;
    summary["seed"] = cfg.seed;
    summary["mode"] = {{"noise_adaptive", cfg.noise_adaptive},
                       {"space_share", cfg.space_share},
                       {"pulse", !cfg.pulse_path.empty()},
                       {"constrain_k", cfg.constrain_k ? ordered_json(*cfg.constrain_k) : ordered_json()},
                       {"priority", cfg.priority ? ordered_json(*cfg.priority) : ordered_json()}};

    Circuit output;
    std::string regions_json;
    bool verified = true;
    if (cfg.space_share) {
      const SpaceShareResult ss = space_share(circuits, device, opts);
      output = ss.merged;
      regions_json = region_report_json(ss);
      StageTimings sum;
      ordered_json parts = ordered_json::array();
      for (const TranspileResult& p : ss.parts) {
        sum.decompose_ms += p.timings.decompose_ms;
        sum.route_ms += p.timings.route_ms;
        sum.place_ms += p.timings.place_ms;
        sum.lower_ms += p.timings.lower_ms;
        sum.total_ms += p.timings.total_ms;
        ordered_json pj;
        pj["input"] = p.input.source_name;
        pj["swaps_inserted"] = p.swaps_inserted;
        pj["stats_before"] = stats_object(p.before);
        pj["stats_after"] = stats_object(p.after);
        pj["initial_layout"] = p.initial_layout;
        pj["final_layout"] = p.final_layout;
        if (p.placement) pj["placement"] = placement_object(p);
        if (cfg.verify) {
          const VerifyReport v = verify_transpile(p);
          verified = verified && v.equivalent;
          pj["verify"] = {{"equivalent", v.equivalent}, {"max_deviation", v.max_deviation}};
        }
        parts.push_back(std::move(pj));
      }
      summary["timings_ms"] = timings_object(sum, parse_ms);
      summary["stats_after"] = stats_object(stats(output));
      summary["regions"] = ordered_json::parse(regions_json);
      summary["parts"] = std::move(parts);
    } else {
      const TranspileResult r = transpile(circuits.front(), device, opts);
      output = r.output;
      summary["timings_ms"] = timings_object(r.timings, parse_ms);
      summary["stats_before"] = stats_object(r.before);
      summary["stats_after"] = stats_object(r.after);
      summary["swaps_inserted"] = r.swaps_inserted;
      summary["initial_layout"] = r.initial_layout;
      summary["final_layout"] = r.final_layout;
      if (r.placement) summary["placement"] = placement_object(r);
      if (cfg.verify) {
        const VerifyReport v = verify_transpile(r);
        verified = v.equivalent;
        summary["verify"] = {{"equivalent", v.equivalent}, {"max_deviation", v.max_deviation}};
      }
    }

    if (!cfg.pulse_path.empty()) {
      const PulseLibrary lib = default_library(device);
      const Schedule s = build_schedule(strip_measurements(output), lib, device);
      write_file_atomic(cfg.pulse_path, schedule_to_json(s));
      summary["pulse"] = {{"makespan_ns", s.makespan_ns}, {"events", s.events.size()}};
    }

    const std::string qasm = emit_qasm(output);
    if (!cfg.output_path.empty()) {
      write_file_atomic(cfg.output_path, qasm);
    } else if (!cfg.print_stats) {
      out << qasm;
    }
    if (cfg.space_share) {
      std::string rp = cfg.regions_path;
      if (rp.empty() && !cfg.output_path.empty()) rp = cfg.output_path + ".regions.json";
      if (!rp.empty()) write_file_atomic(rp, regions_json);
    }
    const std::string summary_text = summary.dump(2) + "\n";
    std::string sp = cfg.summary_path;
    if (sp.empty() && !cfg.output_path.empty()) sp = cfg.output_path + ".summary.json";
    if (!sp.empty()) write_file_atomic(sp, summary_text);
    if (cfg.print_stats) out << summary_text;

    if (!verified) {
      err << "error: transpiled circuit is not equivalent to the input\n";
      return static_cast<int>(ErrorCategory::Internal);
    }
    return 0;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return static_cast<int>(ErrorCategory::Internal);
  }
}

}  // namespace qasmtrans
