// Copyright 2026 The lgt Authors
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


// lgt: run scenarios, print resource tables and emit Trotter-step circuits.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "lgt/circuits.hpp"
#include "lgt/errors.hpp"
#include "lgt/scenario.hpp"

namespace {

constexpr int kConfigError = 2;
constexpr int kResourceError = 3;

void write_or_print(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path);
  f << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lattice gauge theory Hamiltonians, resources and dynamics"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "lgt 0.1.0");

  std::string config;
  std::string out_dir;
  auto* run = app.add_subcommand("run", "Simulate a scenario and write CSV, JSON and QASM artifacts");
  run->add_option("config", config, "Scenario config (JSON)")->required();
  run->add_option("--out", out_dir, "Override output.dir");

  std::string res_out;
  bool qubits = false;
  auto* res = app.add_subcommand("resources", "Print the Pauli and CNOT resource table as CSV");
  res->add_option("config", config, "Scenario config (JSON)")->required();
  res->add_option("-o,--output", res_out, "Write to a file instead of stdout");
  res->add_flag("--qubits", qubits, "Print the qubit register table instead");

  bool step = false;
  double dt = 0;
  std::string qasm_out;
  bool counts = false;
  auto* qasm = app.add_subcommand("qasm", "Print one Trotter step as OpenQASM 2.0");
  qasm->add_option("config", config, "Scenario config (JSON)")->required();
  qasm->add_flag("--step", step, "Synthesize a single Trotter step")->required();
  qasm->add_option("--dt", dt, "Step size (default: first configured dt)");
  qasm->add_option("-o,--output", qasm_out, "Write to a file instead of stdout");
  qasm->add_flag("--counts", counts, "Print the gate-count JSON instead of the circuit");

  CLI11_PARSE(app, argc, argv);

  try {
    lgt::ScenarioConfig cfg = lgt::load_config(config);
    if (*run) {
      if (!out_dir.empty()) cfg.output.dir = out_dir;
      const lgt::RunResult r = lgt::run(cfg);
      for (const auto& f : r.files) std::cout << f << '\n';
    } else if (*res) {
      write_or_print(res_out, qubits ? lgt::qubit_table_csv(cfg) : lgt::resources_csv(cfg));
    } else if (*qasm) {
      const lgt::Circuit c = lgt::step_circuit(cfg, dt);
      write_or_print(qasm_out, counts ? lgt::gate_counts_json(c) : lgt::export_qasm(c));
    }
  } catch (const lgt::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigError;
  } catch (const lgt::ResourceLimitError& e) {
    std::cerr << "resource limit: " << e.what() << '\n';
    return kResourceError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
