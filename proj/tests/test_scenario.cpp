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


#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "lgt/errors.hpp"
#include "lgt/scenario.hpp"

namespace {

namespace fs = std::filesystem;

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::string error_path(const std::string& json) {
  try {
    lgt::parse_config(json);
  } catch (const lgt::ConfigError& e) {
    return e.path();
  }
  return "<no error>";
}

fs::path scratch(const std::string& name) {
  const fs::path p = fs::temp_directory_path() / ("lgt_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

TEST(Config, PresetsResolveToFullRuns) {
  const lgt::ScenarioConfig v = lgt::parse_config(R"({"scenario": "vacuum_decay"})");
  EXPECT_EQ(v.model.lattice.extents, std::vector<int>{3});
  EXPECT_EQ(v.model.lattice.boundary, lgt::Boundary::Periodic);
  EXPECT_EQ(v.model.S, 1.0);
  EXPECT_EQ(v.model.padding, lgt::LogPadding::Leading);
  EXPECT_DOUBLE_EQ(v.model.params.e * v.model.params.e, 2.0);
  EXPECT_DOUBLE_EQ(v.model.params.lambda, 10.0);
  EXPECT_EQ(v.evolution.dts.size(), 5u);
  EXPECT_EQ(v.initial.kind, lgt::InitialKind::Vacuum);

  const lgt::ScenarioConfig s = lgt::parse_config(R"({"scenario": "string_breaking_1d"})");
  EXPECT_DOUBLE_EQ(s.model.params.lambda, 20.0);
  EXPECT_EQ(s.model.lattice.static_links.size(), 2u);
  EXPECT_EQ(s.initial.kind, lgt::InitialKind::FluxString);

  const lgt::ScenarioConfig d = lgt::parse_config(R"({"scenario": "double_plaquette_2d"})");
  EXPECT_EQ(d.model.lattice.extents, (std::vector<int>{3, 2}));
  EXPECT_EQ(d.model.params.theta, (std::vector<double>{0.5, 0.5}));
}

TEST(Config, ShippedFilesMatchPresets) {
  for (const std::string& name : lgt::preset_names()) {
    if (name == "custom") continue;  // the shipped file is a worked example
    const fs::path file = fs::path(LGT_CONFIG_DIR) / (name + ".json");
    ASSERT_TRUE(fs::exists(file)) << file;
    EXPECT_EQ(lgt::config_to_json(lgt::load_config(file.string())),
              lgt::config_to_json(lgt::parse_config(lgt::preset_json(name))))
        << name;
  }
}

TEST(Config, FieldsOverrideThePreset) {
  const lgt::ScenarioConfig c =
      lgt::parse_config(R"({"scenario": "vacuum_decay", "params": {"m": 1.5, "lambda_gauss": 3}})");
  EXPECT_DOUBLE_EQ(c.model.params.m, 1.5);
  EXPECT_DOUBLE_EQ(c.model.params.lambda, 3.0);
  EXPECT_DOUBLE_EQ(c.model.params.a, 0.5);
}

TEST(Config, RoundTripsThroughJson) {
  for (const std::string& name : lgt::preset_names()) {
    const std::string once = lgt::config_to_json(lgt::parse_config(lgt::preset_json(name)));
    EXPECT_EQ(lgt::config_to_json(lgt::parse_config(once)), once) << name;
  }
}

TEST(Config, ErrorsNameTheField) {
  EXPECT_EQ(error_path("{"), "");
  EXPECT_EQ(error_path(R"({"scenario": "nope"})"), "scenario");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "params": {"a": -1}})"), "params.a");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "params": {"m": "heavy"}})"), "params.m");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "model": {"encoding": "unary"}})"), "model.encoding");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "model": {"S": 0.7}})"), "model.S");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "evolution": {"dt": [0.3]}})"), "evolution.dt[0]");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "evolution": {"dt": []}})"), "evolution.dt");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "lattice": {"extents": [3, 3]}})"), "lattice.extents");
  EXPECT_EQ(error_path(R"({"scenario": "vacuum_decay", "evolution": {"exact": "magic"}})"), "evolution.exact");
}

TEST(InitialState, PresetStates) {
  {
    const lgt::ScenarioConfig c = lgt::parse_config(R"({"scenario": "vacuum_decay"})");
    const lgt::LatticeModel m(c.model);
    const lgt::ConfigSpace space(m);
    const std::uint64_t i = lgt::initial_index(c.initial, space);
    EXPECT_EQ(space.label(i), "o-o-o-");
    EXPECT_EQ(i & 0x3f, 0b101010u);
  }
  {
    const lgt::ScenarioConfig c = lgt::parse_config(R"({"scenario": "string_breaking_1d"})");
    const lgt::LatticeModel m(c.model);
    const lgt::ConfigSpace space(m);
    const std::uint64_t i = lgt::initial_index(c.initial, space);
    EXPECT_EQ(space.label(i), "o>o>o");
    EXPECT_EQ(i & 0xf, 0b0101u);
  }
  {
    const lgt::ScenarioConfig c = lgt::parse_config(R"({"scenario": "double_plaquette_2d"})");
    const lgt::LatticeModel m(c.model);
    ASSERT_EQ(m.n_qubits(), 19u);
    const lgt::ConfigSpace space(m);
    const std::uint64_t i = lgt::initial_index(c.initial, space);
    const std::vector<int> occ = space.occupations(i);
    std::vector<double> flux;
    double total = 0;
    for (std::size_t l = 0; l < m.lattice().links().size(); ++l) {
      flux.push_back(*space.link_flux(i, l));
      total += flux.back();
    }
    // Path (0,0) -> (1,0) -> (2,0) -> (2,1): three unit links.
    EXPECT_DOUBLE_EQ(total, 3.0);
    for (std::size_t x = 0; x < m.lattice().n_sites(); ++x) EXPECT_DOUBLE_EQ(space.gauss_value(occ, flux, x), 0.0);
    const lgt::Observables o = lgt::observables(lgt::initial_state(c.initial, space), space);
    EXPECT_DOUBLE_EQ(o.particle_number, 0.0);
  }
}

TEST(InitialState, ExplicitAndLabelForms) {
  const lgt::ScenarioConfig c = lgt::load_config(std::string(LGT_CONFIG_DIR) + "/custom.json");
  const lgt::LatticeModel m(c.model);
  const lgt::ConfigSpace space(m);
  EXPECT_EQ(space.label(lgt::initial_index(c.initial, space)), "p>a");
  lgt::InitialState l;
  l.kind = lgt::InitialKind::Label;
  l.label = "b-o";
  EXPECT_EQ(space.label(lgt::initial_index(l, space)), "b-o");
  l.label = "b-o-o";
  EXPECT_THROW(lgt::initial_index(l, space), lgt::ConfigError);
  lgt::InitialState bad;
  bad.kind = lgt::InitialKind::Explicit;
  bad.sites = {"o", "o"};
  bad.link_flux = {2};
  EXPECT_THROW(lgt::initial_index(bad, space), lgt::ConfigError);
}

const char* kSmallRun = R"({"scenario": "string_breaking_1d",
  "evolution": {"dt": [0.05, 0.025], "total_time": 0.2, "sample_every": 0.05},
  "output": {"qasm": true, "prefix": "sb"}})";

TEST(Run, WritesDeterministicArtifacts) {
  std::vector<std::string> contents[2];
  const fs::path dir = scratch("run");
  for (int k = 0; k < 2; ++k) {
    lgt::ScenarioConfig c = lgt::parse_config(kSmallRun);
    c.output.dir = dir.string();
    const lgt::RunResult r = lgt::run(c);
    EXPECT_EQ(r.n_qubits, 10u);
    EXPECT_EQ(r.n_strings, 305u);
    EXPECT_EQ(r.sector_dim, 14u);
    ASSERT_EQ(r.series.size(), 3u);
    for (const auto& f : r.files) contents[k].push_back(slurp(f));
    EXPECT_TRUE(fs::exists(fs::path(c.output.dir) / "sb_exact.csv"));
    EXPECT_TRUE(fs::exists(fs::path(c.output.dir) / "sb_meta.json"));
    const std::string exact = slurp(fs::path(c.output.dir) / "sb_exact.csv");
    EXPECT_EQ(exact.rfind("t,loschmidt,total_particle_number,", 0), 0u);
    EXPECT_NE(exact.find("\n0,1,0,"), std::string::npos);
    for (const auto& f : r.files) fs::remove(f);
  }
  EXPECT_EQ(contents[0], contents[1]);
}

TEST(Run, ResourceReportWritesTables) {
  lgt::ScenarioConfig c = lgt::parse_config(R"({"scenario": "resource_report"})");
  c.resources.spins = {0.5, 1.0};
  c.output.dir = scratch("res").string();
  const lgt::RunResult r = lgt::run(c);
  EXPECT_FALSE(r.files.empty());
  const std::string q = lgt::qubit_table_csv(c);
  EXPECT_EQ(q.substr(0, q.find('\n')), "lattice,S,encoding,n_qubits_total,n_qubits_fermionic,n_qubits_gauge");
  EXPECT_NE(q.find("100x100x100,255.5,log,30730000,4000000,26730000"), std::string::npos);
}

TEST(Run, StepCircuitUsesTheFirstDt) {
  const lgt::ScenarioConfig c = lgt::parse_config(R"({"scenario": "vacuum_decay"})");
  EXPECT_EQ(lgt::step_circuit(c).counts().cnot, 3302u);
  EXPECT_EQ(lgt::step_circuit(c, 0.005).counts().cnot, 3302u);
}

int cli(const std::string& args) {
  const std::string cmd = std::string(LGT_CLI) + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

TEST(Cli, ExitCodes) {
  const fs::path dir = scratch("cli");
  const std::string cfg_dir = LGT_CONFIG_DIR;
  EXPECT_EQ(cli("resources " + cfg_dir + "/vacuum_decay.json"), 0);
  EXPECT_EQ(cli("qasm " + cfg_dir + "/vacuum_decay.json --step --counts"), 0);

  const fs::path bad = dir / "bad.json";
  std::ofstream(bad) << R"({"scenario": "vacuum_decay", "params": {"e": 0}})";
  EXPECT_EQ(cli("run " + bad.string()), 2);
  EXPECT_EQ(cli("run " + (dir / "missing.json").string()), 2);

  const fs::path big = dir / "big.json";
  std::ofstream(big) << R"({"scenario": "custom", "lattice": {"extents": [16]},
    "initial_state": "vacuum", "evolution": {"exact": "none"}})";
  EXPECT_EQ(cli("run " + big.string() + " --out " + dir.string()), 3);

  const fs::path small = dir / "small.json";
  std::ofstream(small) << kSmallRun;
  EXPECT_EQ(cli("run " + small.string() + " --out " + (dir / "out").string()), 0);
  EXPECT_TRUE(fs::exists(dir / "out" / "sb_trotter_dt0.025.csv"));
}

}  // namespace
