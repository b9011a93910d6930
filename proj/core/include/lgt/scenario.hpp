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


#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lgt/circuits.hpp"
#include "lgt/dynamics.hpp"
#include "lgt/hamiltonian.hpp"
#include "lgt/resources.hpp"

namespace lgt {

enum class InitialKind { Vacuum, FluxString, Label, Explicit };

struct InitialState {
  InitialKind kind = InitialKind::Vacuum;
  std::string label;                // Label
  std::vector<std::string> sites;   // Explicit: one site symbol per site
  std::vector<double> link_flux;    // Explicit: E/e per dynamical link
};

struct EvolutionConfig {
  std::vector<double> dts;
  double total_time = 1.0;
  // Output interval; rounded to whole steps for each dt. 0 records every step.
  double sample_every = 0.0;
  Ordering ordering = Ordering::Canonical;
  std::string exact = "auto";  // auto, sector, dense, krylov, none
};

struct OutputConfig {
  std::string dir = ".";
  std::string prefix;
  bool qasm = false;
  std::size_t top_labels = 12;
  double rel_eps = 1e-3;
};

struct QubitTableSpec {
  LatticeSpec lattice;
  std::vector<double> spins;
};

struct ResourceConfig {
  std::vector<double> spins;
  std::vector<Encoding> encodings{Encoding::Logarithmic};
  std::uint64_t max_exact_strings = 300'000;
  bool unit_rows = true;
  std::vector<QubitTableSpec> qubit_tables;
};

struct ScenarioConfig {
  std::string scenario = "custom";
  ModelSpec model;
  EvolutionConfig evolution;
  InitialState initial;
  OutputConfig output;
  ResourceConfig resources;
  std::uint64_t seed = 0;  // recorded only; no code path draws random numbers
};

std::vector<std::string> preset_names();
// Full JSON text of a preset.
std::string preset_json(const std::string& name);

// A config naming a preset starts from that preset; fields given in the
// config override it. Throws ConfigError with the offending field path.
ScenarioConfig parse_config(std::string_view json_text);
ScenarioConfig load_config(const std::string& path);
std::string config_to_json(const ScenarioConfig& cfg);

// Basis index of the configured initial state.
std::uint64_t initial_index(const InitialState& init, const ConfigSpace& space);
StateVector initial_state(const InitialState& init, const ConfigSpace& space);

struct SeriesPoint {
  double t = 0;
  double loschmidt = 0;
  double particle_number = 0;
  std::vector<ConfigProbability> configs;  // all labels, largest first
};

struct Series {
  std::string name;  // "exact" or "trotter"
  double dt = 0;     // 0 for exact
  std::vector<SeriesPoint> points;
};

struct RunResult {
  std::size_t n_qubits = 0;
  std::size_t n_strings = 0;
  std::string exact_method;  // empty when no exact run
  std::size_t sector_dim = 0;
  std::vector<Series> series;
  std::vector<std::string> files;
};

// Simulates the configured scenario and writes its artifacts into
// cfg.output.dir. For resource_report only the resource tables are written.
RunResult run(const ScenarioConfig& cfg);

// Scaling table CSV for cfg.resources on the configured lattice.
std::string resources_csv(const ScenarioConfig& cfg);
// lattice,S,encoding,n_qubits_total,n_qubits_fermionic,n_qubits_gauge
std::string qubit_table_csv(const ScenarioConfig& cfg);

// One Trotter step at `dt` (the first configured dt when dt <= 0).
Circuit step_circuit(const ScenarioConfig& cfg, double dt = 0.0);

}  // namespace lgt
