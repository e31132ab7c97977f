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

// qasmtrans: transpile OpenQASM 2.0 circuits for a device description.

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qasmtrans/errors.hpp"
#include "qasmtrans/frontend.hpp"
#include "qasmtrans/oracle.hpp"
#include "qasmtrans/pipeline.hpp"

namespace {

int run_verify(const std::string& a, const std::string& b, const std::vector<int>& perm,
               double tol) {
  using namespace qasmtrans;
  try {
    const Circuit ca = load_qasm_file(a);
    const Circuit cb = load_qasm_file(b);
    const EquivalenceResult r = equivalent(ca, cb, perm, tol);
    std::printf("%s max_deviation=%.3e\n", r.equivalent ? "equivalent" : "not-equivalent",
                r.max_deviation);
    return r.equivalent ? 0 : static_cast<int>(ErrorCategory::Internal);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"qasmtrans: OpenQASM 2.0 transpiler"};
  app.require_subcommand(0, 1);

  qasmtrans::JobConfig cfg;
  std::string input;
  std::vector<std::string> shared;
  std::vector<int> priority;
  int constrain_k = 0;

  app.add_option("-i,--input", input, "Input OpenQASM 2.0 file");
  app.add_option("-d,--device", cfg.device_path, "Device JSON file");
  app.add_option("-b,--backend", cfg.backend, "Basis: ibmq, rigetti, ionq or quantinuum");
  app.add_option("-o,--output", cfg.output_path, "Output QASM file (default: stdout)");
  app.add_option("--seed", cfg.seed, "Routing tie-break seed")->default_val(0);
  app.add_flag("--noise-adaptive", cfg.noise_adaptive, "Rank placements by critical-path error");
  app.add_option("--space-share", shared, "Transpile several circuits on disjoint regions")
      ->expected(1, -1);
  app.add_option("--pulse", cfg.pulse_path, "Write a pulse schedule JSON");
  app.add_option("--constrain-k", constrain_k, "Route inside a k-qubit partial device")
      ->check(CLI::PositiveNumber);
  app.add_option("--priority", priority, "Priority order of virtual qubits, comma separated")
      ->delimiter(',');
  app.add_flag("--stats", cfg.print_stats, "Print the summary JSON to stdout");
  app.add_flag("--verify", cfg.verify, "Check the output against the input with the oracle");
  app.add_option("--summary", cfg.summary_path, "Summary JSON path (default: <output>.summary.json)");
  app.add_option("--regions", cfg.regions_path,
                 "Space-share region report path (default: <output>.regions.json)");

  auto* verify = app.add_subcommand("verify", "Compare two circuits up to a qubit permutation");
  std::string va;
  std::string vb;
  std::vector<int> perm;
  double tol = 1e-8;
  verify->add_option("a", va, "Reference circuit")->required();
  verify->add_option("b", vb, "Candidate circuit")->required();
  verify->add_option("--perm", perm, "Wire of b holding qubit i of a, comma separated")
      ->delimiter(',');
  verify->add_option("--tol", tol, "Tolerance")->default_val(1e-8);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  if (verify->parsed()) return run_verify(va, vb, perm, tol);

  if (!shared.empty()) {
    cfg.space_share = true;
    cfg.inputs = shared;
    if (!input.empty()) cfg.inputs.insert(cfg.inputs.begin(), input);
  } else if (!input.empty()) {
    cfg.inputs.push_back(input);
  }
  if (cfg.device_path.empty()) {
    std::cerr << "error: --device is required\n";
    return static_cast<int>(qasmtrans::ErrorCategory::Device);
  }
  if (constrain_k > 0) cfg.constrain_k = constrain_k;
  if (!priority.empty()) cfg.priority = priority;
  return qasmtrans::run(cfg, std::cout, std::cerr);
}
