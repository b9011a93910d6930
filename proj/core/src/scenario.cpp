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


#include "lgt/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <nlohmann/json.hpp>

#include "lgt/errors.hpp"
#include "lgt/gauge.hpp"

namespace lgt {
namespace {

using json = nlohmann::ordered_json;

const char* kVacuumDecay = R"({
  "scenario": "vacuum_decay",
  "lattice": {"dims": 1, "extents": [3], "boundary": "periodic", "static_links": []},
  "model": {"S": 1, "encoding": "log", "padding": "leading", "mapping": "jw"},
  "params": {"m": 0.5, "r": 1, "a": 0.5, "e": 1.4142135623730951, "theta": [0],
             "lambda_gauss": "auto", "electric_norm": "field", "gauss_charge": "mapped",
             "lattice_prefactor": true},
  "evolution": {"dt": [0.1, 0.05, 0.025, 0.0125, 0.005], "total_time": 2.0, "sample_every": 0.1,
                "ordering": "canonical", "exact": "auto"},
  "initial_state": "vacuum",
  "output": {"dir": "out/vacuum_decay", "qasm": true, "top_labels": 12, "rel_eps": 0.001},
  "seed": 0
})";

const char* kStringBreaking = R"({
  "scenario": "string_breaking_1d",
  "lattice": {"dims": 1, "extents": [3], "boundary": "open",
              "static_links": [{"site": [-1], "dir": 0, "flux": 1}, {"site": [2], "dir": 0, "flux": 1}]},
  "model": {"S": 1, "encoding": "log", "padding": "leading", "mapping": "jw"},
  "params": {"m": 0.4, "r": 1, "a": 0.4, "e": 2, "theta": [0],
             "lambda_gauss": "auto", "electric_norm": "field", "gauss_charge": "mapped",
             "lattice_prefactor": true},
  "evolution": {"dt": [0.05, 0.025, 0.01], "total_time": 2.0, "sample_every": 0.05,
                "ordering": "canonical", "exact": "auto"},
  "initial_state": "flux_string",
  "output": {"dir": "out/string_breaking_1d", "qasm": true, "top_labels": 12, "rel_eps": 0.001},
  "seed": 0
})";

const char* kDoublePlaquette = R"({
  "scenario": "double_plaquette_2d",
  "lattice": {"dims": 2, "extents": [3, 2], "boundary": "open",
              "static_links": [{"site": [-1, 0], "dir": 0, "flux": 1}, {"site": [2, 1], "dir": 0, "flux": 1}]},
  "model": {"S": 0.5, "encoding": "log", "padding": "trailing", "mapping": "jw"},
  "params": {"m": 0.4, "r": 1, "a": 0.4, "e": 2, "theta": [0.5, 0.5],
             "lambda_gauss": "auto", "electric_norm": "field", "gauss_charge": "mapped",
             "lattice_prefactor": true},
  "evolution": {"dt": [0.05, 0.025, 0.012], "total_time": 1.2, "sample_every": 0.1,
                "ordering": "canonical", "exact": "auto"},
  "initial_state": "flux_string",
  "output": {"dir": "out/double_plaquette_2d", "qasm": false, "top_labels": 12, "rel_eps": 0.001},
  "seed": 0
})";

const char* kResourceReport = R"({
  "scenario": "resource_report",
  "lattice": {"dims": 2, "extents": [2, 3], "boundary": "open", "static_links": []},
  "model": {"S": 1, "encoding": "log", "padding": "trailing", "mapping": "jw"},
  "params": {"m": 0.5, "r": 1, "a": 1, "e": 1, "theta": [0, 0], "lambda_gauss": 1},
  "resources": {
    "spins": [0.5, 1, 1.5, 2, 3, 3.5, 7.5, 15.5, 31.5, 63.5, 127.5, 255.5],
    "encodings": ["log"],
    "max_exact_strings": 300000,
    "unit_rows": true,
    "qubit_tables": [
      {"extents": [2, 3], "spins": [0.5, 1, 1.5, 3.5]},
      {"extents": [4, 4], "spins": [0.5, 1, 1.5, 3.5, 7.5]},
      {"extents": [10, 10], "spins": [1, 1.5, 3.5, 7.5]},
      {"extents": [100, 100], "spins": [1, 1.5, 3.5, 7.5, 15.5]},
      {"extents": [2, 2, 2], "spins": [0.5, 1, 1.5, 3.5]},
      {"extents": [4, 4, 4], "spins": [1, 1.5, 3.5, 7.5, 15.5]},
      {"extents": [10, 10, 10], "spins": [1, 1.5, 7.5, 15.5, 31.5]},
      {"extents": [100, 100, 100], "spins": [1, 1.5, 3.5, 7.5, 15.5, 127.5, 255.5]}
    ]
  },
  "output": {"dir": "out/resource_report"},
  "seed": 0
})";

const char* kCustom = R"({
  "scenario": "custom",
  "lattice": {"dims": 1, "extents": [2], "boundary": "open", "static_links": []},
  "model": {"S": 1, "encoding": "log", "padding": "trailing", "mapping": "jw"},
  "params": {"m": 1, "r": 1, "a": 1, "e": 1, "theta": [0], "lambda_gauss": "auto",
             "electric_norm": "field", "gauss_charge": "mapped", "lattice_prefactor": true},
  "evolution": {"dt": [0.05], "total_time": 1.0, "sample_every": 0.1, "ordering": "canonical",
                "exact": "auto"},
  "initial_state": "vacuum",
  "output": {"dir": "out/custom", "qasm": false, "top_labels": 12, "rel_eps": 0.001},
  "seed": 0
})";

const std::map<std::string, const char*>& presets() {
  static const std::map<std::string, const char*> p{{"vacuum_decay", kVacuumDecay},
                                                    {"string_breaking_1d", kStringBreaking},
                                                    {"double_plaquette_2d", kDoublePlaquette},
                                                    {"resource_report", kResourceReport},
                                                    {"custom", kCustom}};
  return p;
}

// Typed access with field paths in errors.
class Reader {
 public:
  Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {}

  bool has(const std::string& key) const { return j_.is_object() && j_.contains(key); }
  Reader at(const std::string& key) const {
    if (!has(key)) throw ConfigError(sub(key), "missing");
    return Reader(j_.at(key), sub(key));
  }
  Reader at(std::size_t i) const { return Reader(j_.at(i), path_ + "[" + std::to_string(i) + "]"); }
  std::size_t size() const { return array().size(); }
  const json& raw() const { return j_; }
  const std::string& path() const { return path_; }

  double num() const {
    if (!j_.is_number()) throw ConfigError(path_, "expected a number");
    const double v = j_.get<double>();
    if (!std::isfinite(v)) throw ConfigError(path_, "not finite");
    return v;
  }
  std::int64_t integer() const {
    if (!j_.is_number_integer()) throw ConfigError(path_, "expected an integer");
    return j_.get<std::int64_t>();
  }
  bool boolean() const {
    if (!j_.is_boolean()) throw ConfigError(path_, "expected true or false");
    return j_.get<bool>();
  }
  std::string str() const {
    if (!j_.is_string()) throw ConfigError(path_, "expected a string");
    return j_.get<std::string>();
  }
  const json& array() const {
    if (!j_.is_array()) throw ConfigError(path_, "expected an array");
    return j_;
  }
  std::vector<double> nums() const {
    std::vector<double> v;
    for (std::size_t i = 0; i < size(); ++i) v.push_back(at(i).num());
    return v;
  }
  std::vector<int> ints() const {
    std::vector<int> v;
    for (std::size_t i = 0; i < size(); ++i) v.push_back(static_cast<int>(at(i).integer()));
    return v;
  }
  template <typename F>
  auto parse(F&& f) const {
    try {
      return f(str());
    } catch (const ConfigError& e) {
      throw ConfigError(path_, std::string(e.what()).substr(e.path().size() + 2));
    } catch (const std::invalid_argument& e) {
      throw ConfigError(path_, e.what());
    }
  }

 private:
  std::string sub(const std::string& key) const { return path_.empty() ? key : path_ + "." + key; }
  const json& j_;
  std::string path_;
};

Boundary boundary_from_string(const std::string& s) {
  if (s == "open") return Boundary::Open;
  if (s == "periodic") return Boundary::Periodic;
  throw std::invalid_argument("expected 'open' or 'periodic'");
}

std::string to_string(Boundary b) { return b == Boundary::Open ? "open" : "periodic"; }

LatticeSpec read_lattice(const Reader& r, bool need_dims) {
  LatticeSpec s;
  s.extents = r.at("extents").ints();
  s.d = need_dims || r.has("dims") ? static_cast<int>(r.at("dims").integer()) : static_cast<int>(s.extents.size());
  if (s.d < 1 || s.d > 3) throw ConfigError(r.path() + ".dims", "must be 1, 2 or 3");
  if (static_cast<int>(s.extents.size()) != s.d) throw ConfigError(r.path() + ".extents", "needs one entry per dimension");
  for (std::size_t i = 0; i < s.extents.size(); ++i) {
    if (s.extents[i] < 1) throw ConfigError(r.path() + ".extents[" + std::to_string(i) + "]", "must be >= 1");
  }
  s.boundary = r.has("boundary") ? r.at("boundary").parse(boundary_from_string) : Boundary::Open;
  if (r.has("static_links")) {
    const Reader sl = r.at("static_links");
    for (std::size_t i = 0; i < sl.size(); ++i) {
      const Reader e = sl.at(i);
      StaticLink l;
      l.site = e.at("site").ints();
      l.dir = static_cast<int>(e.at("dir").integer());
      l.flux = e.at("flux").num();
      if (static_cast<int>(l.site.size()) != s.d) throw ConfigError(e.path() + ".site", "needs one entry per dimension");
      if (l.dir < 0 || l.dir >= s.d) throw ConfigError(e.path() + ".dir", "out of range");
      s.static_links.push_back(l);
    }
  }
  try {
    s.validate();
    if (!s.static_links.empty()) static_cast<void>(Lattice{s});
  } catch (const ConfigError& e) {
    throw ConfigError(r.path(), std::string(e.what()).substr(e.path().size() + 2));
  }
  return s;
}

json lattice_json(const LatticeSpec& s) {
  json links = json::array();
  for (const auto& l : s.static_links) links.push_back({{"site", l.site}, {"dir", l.dir}, {"flux", l.flux}});
  return {{"dims", s.d}, {"extents", s.extents}, {"boundary", to_string(s.boundary)}, {"static_links", links}};
}

Ordering read_ordering(const Reader& r) { return r.parse(ordering_from_string); }

double default_lambda(const ModelParams& p) { return 10.0 * std::max(p.m, p.e * p.e / 2.0); }

ScenarioConfig from_json(const json& j) {
  const Reader root(j, "");
  ScenarioConfig c;
  c.scenario = root.at("scenario").str();
  if (!presets().count(c.scenario)) throw ConfigError("scenario", "unknown scenario '" + c.scenario + "'");

  c.model.lattice = read_lattice(root.at("lattice"), true);
  const Reader m = root.at("model");
  c.model.S = m.at("S").num();
  if (c.model.S <= 0 || std::abs(2 * c.model.S - std::round(2 * c.model.S)) > 1e-12) {
    throw ConfigError("model.S", "must be a positive multiple of 1/2");
  }
  c.model.encoding = m.has("encoding") ? m.at("encoding").parse(encoding_from_string) : Encoding::Logarithmic;
  c.model.padding = m.has("padding") ? m.at("padding").parse(log_padding_from_string) : LogPadding::Trailing;
  c.model.mapping = m.has("mapping") ? m.at("mapping").parse(mapping_from_string) : Mapping::JordanWigner;

  const Reader p = root.at("params");
  ModelParams& mp = c.model.params;
  mp.m = p.at("m").num();
  if (p.has("r")) mp.r = p.at("r").num();
  mp.a = p.at("a").num();
  mp.e = p.at("e").num();
  if (p.has("theta")) {
    mp.theta = p.at("theta").nums();
    if (static_cast<int>(mp.theta.size()) != c.model.lattice.d) {
      throw ConfigError("params.theta", "needs one entry per dimension");
    }
  }
  if (p.has("electric_norm")) {
    const std::string s = p.at("electric_norm").str();
    if (s == "field") {
      mp.electric_norm = ElectricNorm::Field;
    } else if (s == "spin") {
      mp.electric_norm = ElectricNorm::Spin;
    } else {
      throw ConfigError("params.electric_norm", "expected 'field' or 'spin'");
    }
  }
  if (p.has("gauss_charge")) {
    const std::string s = p.at("gauss_charge").str();
    if (s == "mapped") {
      mp.gauss_charge = GaussCharge::Mapped;
    } else if (s == "qubit_z") {
      mp.gauss_charge = GaussCharge::QubitZ;
    } else {
      throw ConfigError("params.gauss_charge", "expected 'mapped' or 'qubit_z'");
    }
  }
  if (p.has("lattice_prefactor")) mp.lattice_prefactor = p.at("lattice_prefactor").boolean();
  if (!p.has("lambda_gauss") || (p.at("lambda_gauss").raw().is_string() && p.at("lambda_gauss").str() == "auto")) {
    mp.lambda = default_lambda(mp);
  } else {
    mp.lambda = p.at("lambda_gauss").num();
  }
  mp.validate();

  if (root.has("evolution")) {
    const Reader e = root.at("evolution");
    c.evolution.dts = e.at("dt").nums();
    if (c.evolution.dts.empty()) throw ConfigError("evolution.dt", "needs at least one step size");
    for (std::size_t i = 0; i < c.evolution.dts.size(); ++i) {
      if (!(c.evolution.dts[i] > 0)) throw ConfigError("evolution.dt[" + std::to_string(i) + "]", "must be positive");
    }
    c.evolution.total_time = e.at("total_time").num();
    if (c.evolution.total_time < 0) throw ConfigError("evolution.total_time", "must be >= 0");
    if (e.has("sample_every")) c.evolution.sample_every = e.at("sample_every").num();
    if (c.evolution.sample_every < 0) throw ConfigError("evolution.sample_every", "must be >= 0");
    if (e.has("ordering")) c.evolution.ordering = read_ordering(e.at("ordering"));
    if (e.has("exact")) {
      c.evolution.exact = e.at("exact").str();
      static const std::vector<std::string> ok{"auto", "sector", "dense", "krylov", "none"};
      if (std::find(ok.begin(), ok.end(), c.evolution.exact) == ok.end()) {
        throw ConfigError("evolution.exact", "expected auto, sector, dense, krylov or none");
      }
    }
    for (std::size_t i = 0; i < c.evolution.dts.size(); ++i) {
      const double steps = c.evolution.total_time / c.evolution.dts[i];
      if (std::abs(steps - std::round(steps)) > 1e-6) {
        throw ConfigError("evolution.dt[" + std::to_string(i) + "]", "total_time is not a multiple of dt");
      }
    }
  } else if (c.scenario != "resource_report") {
    throw ConfigError("evolution", "missing");
  }

  if (root.has("initial_state")) {
    const Reader r = root.at("initial_state");
    if (r.raw().is_string()) {
      const std::string s = r.str();
      if (s == "vacuum") {
        c.initial.kind = InitialKind::Vacuum;
      } else if (s == "flux_string") {
        c.initial.kind = InitialKind::FluxString;
      } else {
        c.initial.kind = InitialKind::Label;
        c.initial.label = s;
      }
    } else {
      c.initial.kind = InitialKind::Explicit;
      const Reader sites = r.at("sites");
      for (std::size_t i = 0; i < sites.size(); ++i) c.initial.sites.push_back(sites.at(i).str());
      c.initial.link_flux = r.at("link_flux").nums();
    }
  }

  if (root.has("output")) {
    const Reader o = root.at("output");
    if (o.has("dir")) c.output.dir = o.at("dir").str();
    if (o.has("prefix")) c.output.prefix = o.at("prefix").str();
    if (o.has("qasm")) c.output.qasm = o.at("qasm").boolean();
    if (o.has("top_labels")) {
      const auto k = o.at("top_labels").integer();
      if (k < 1) throw ConfigError("output.top_labels", "must be >= 1");
      c.output.top_labels = static_cast<std::size_t>(k);
    }
    if (o.has("rel_eps")) {
      c.output.rel_eps = o.at("rel_eps").num();
      if (!(c.output.rel_eps > 0)) throw ConfigError("output.rel_eps", "must be positive");
    }
  }
  if (c.output.prefix.empty()) c.output.prefix = c.scenario;

  if (root.has("resources")) {
    const Reader r = root.at("resources");
    if (r.has("spins")) c.resources.spins = r.at("spins").nums();
    if (r.has("encodings")) {
      c.resources.encodings.clear();
      const Reader e = r.at("encodings");
      for (std::size_t i = 0; i < e.size(); ++i) c.resources.encodings.push_back(e.at(i).parse(encoding_from_string));
    }
    if (r.has("max_exact_strings")) {
      const auto v = r.at("max_exact_strings").integer();
      if (v < 0) throw ConfigError("resources.max_exact_strings", "must be >= 0");
      c.resources.max_exact_strings = static_cast<std::uint64_t>(v);
    }
    if (r.has("unit_rows")) c.resources.unit_rows = r.at("unit_rows").boolean();
    if (r.has("qubit_tables")) {
      const Reader t = r.at("qubit_tables");
      for (std::size_t i = 0; i < t.size(); ++i) {
        QubitTableSpec q;
        q.lattice = read_lattice(t.at(i), false);
        q.spins = t.at(i).at("spins").nums();
        c.resources.qubit_tables.push_back(q);
      }
    }
  }
  if (root.has("seed")) {
    const auto s = root.at("seed").integer();
    if (s < 0) throw ConfigError("seed", "must be >= 0");
    c.seed = static_cast<std::uint64_t>(s);
  }
  return c;
}

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string fmt_dt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void write_file(const std::filesystem::path& p, const std::string& text, RunResult& r) {
  std::ofstream f(p, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + p.string());
  f << text;
  r.files.push_back(p.string());
}

// Step indices at which a run with step dt is recorded.
std::vector<std::size_t> record_steps(double dt, const EvolutionConfig& e) {
  const auto steps = static_cast<std::size_t>(std::llround(e.total_time / dt));
  std::size_t every = 1;
  if (e.sample_every > 0) every = std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(e.sample_every / dt)));
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k <= steps; k += every) out.push_back(k);
  if (out.back() != steps) out.push_back(steps);
  return out;
}

SeriesPoint measure(double t, const StateVector& psi0, const StateVector& s, const ConfigSpace& space) {
  SeriesPoint p;
  p.t = t;
  p.loschmidt = loschmidt(psi0, s);
  p.particle_number = observables(s, space).particle_number;
  p.configs = config_probabilities(s, space);
  return p;
}

double prob_of(const SeriesPoint& p, const std::string& label) {
  for (const auto& c : p.configs) {
    if (c.label == label) return c.probability;
  }
  return 0.0;
}

// Labels with the largest peak probability over the reference series.
std::vector<std::string> pick_labels(const Series& ref, std::size_t keep) {
  std::map<std::string, double> peak;
  for (const auto& p : ref.points) {
    for (const auto& c : p.configs) peak[c.label] = std::max(peak[c.label], c.probability);
  }
  std::vector<std::pair<std::string, double>> v(peak.begin(), peak.end());
  std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  std::vector<std::string> out;
  for (std::size_t i = 0; i < v.size() && i < keep; ++i) out.push_back(v[i].first);
  return out;
}

// Value of the reference series at time t, or nullopt when it was not sampled there.
const SeriesPoint* at_time(const Series& s, double t) {
  for (const auto& p : s.points) {
    if (std::abs(p.t - t) < 1e-9) return &p;
  }
  return nullptr;
}

std::string series_csv(const Series& s, const std::vector<std::string>& labels, const Series* exact, double eps) {
  std::ostringstream os;
  os << "t,loschmidt,total_particle_number";
  for (const auto& l : labels) os << ",p[" << l << "]";
  os << ",p[other]";
  if (exact) {
    os << ",abs_err_loschmidt,rel_err_loschmidt,abs_err_particle_number,rel_err_particle_number";
  }
  os << '\n';
  for (const auto& p : s.points) {
    os << fmt(p.t) << ',' << fmt(p.loschmidt) << ',' << fmt(p.particle_number);
    double listed = 0, total = 0;
    for (const auto& c : p.configs) total += c.probability;
    for (const auto& l : labels) {
      const double v = prob_of(p, l);
      listed += v;
      os << ',' << fmt(v);
    }
    os << ',' << fmt(std::max(0.0, total - listed));
    if (exact) {
      const SeriesPoint* e = at_time(*exact, p.t);
      if (e) {
        const double dl = std::abs(p.loschmidt - e->loschmidt);
        const double dn = std::abs(p.particle_number - e->particle_number);
        os << ',' << fmt(dl) << ',' << fmt(dl / std::max(std::abs(e->loschmidt), eps)) << ',' << fmt(dn) << ','
           << fmt(dn / std::max(std::abs(e->particle_number), eps));
      } else {
        os << ",,,,";
      }
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace

std::vector<std::string> preset_names() {
  std::vector<std::string> n;
  for (const auto& [k, v] : presets()) n.push_back(k);
  return n;
}

std::string preset_json(const std::string& name) {
  auto it = presets().find(name);
  if (it == presets().end()) throw ConfigError("scenario", "unknown scenario '" + name + "'");
  return it->second;
}

ScenarioConfig parse_config(std::string_view text) {
  json user;
  try {
    user = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("", std::string("invalid JSON: ") + e.what());
  }
  if (!user.is_object()) throw ConfigError("", "top level must be an object");
  if (!user.contains("scenario")) throw ConfigError("scenario", "missing");
  if (!user["scenario"].is_string()) throw ConfigError("scenario", "expected a string");
  json merged = json::parse(preset_json(user["scenario"].get<std::string>()));
  merged.merge_patch(user);
  return from_json(merged);
}

ScenarioConfig load_config(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ConfigError("", "cannot open config file '" + path + "'");
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str());
}

std::string config_to_json(const ScenarioConfig& c) {
  const ModelParams& p = c.model.params;
  json j;
  j["scenario"] = c.scenario;
  j["lattice"] = lattice_json(c.model.lattice);
  j["model"] = {{"S", c.model.S},
                {"encoding", to_string(c.model.encoding)},
                {"padding", to_string(c.model.padding)},
                {"mapping", to_string(c.model.mapping)}};
  j["params"] = {{"m", p.m},
                 {"r", p.r},
                 {"a", p.a},
                 {"e", p.e},
                 {"theta", p.theta},
                 {"lambda_gauss", p.lambda},
                 {"electric_norm", p.electric_norm == ElectricNorm::Field ? "field" : "spin"},
                 {"gauss_charge", p.gauss_charge == GaussCharge::Mapped ? "mapped" : "qubit_z"},
                 {"lattice_prefactor", p.lattice_prefactor}};
  if (!c.evolution.dts.empty()) {
    j["evolution"] = {{"dt", c.evolution.dts},
                      {"total_time", c.evolution.total_time},
                      {"sample_every", c.evolution.sample_every},
                      {"ordering", to_string(c.evolution.ordering)},
                      {"exact", c.evolution.exact}};
  }
  switch (c.initial.kind) {
    case InitialKind::Vacuum: j["initial_state"] = "vacuum"; break;
    case InitialKind::FluxString: j["initial_state"] = "flux_string"; break;
    case InitialKind::Label: j["initial_state"] = c.initial.label; break;
    case InitialKind::Explicit:
      j["initial_state"] = {{"sites", c.initial.sites}, {"link_flux", c.initial.link_flux}};
      break;
  }
  j["output"] = {{"dir", c.output.dir},
                 {"prefix", c.output.prefix},
                 {"qasm", c.output.qasm},
                 {"top_labels", c.output.top_labels},
                 {"rel_eps", c.output.rel_eps}};
  json enc = json::array();
  for (Encoding e : c.resources.encodings) enc.push_back(to_string(e));
  json tables = json::array();
  for (const auto& t : c.resources.qubit_tables) {
    json l = lattice_json(t.lattice);
    l["spins"] = t.spins;
    tables.push_back(l);
  }
  j["resources"] = {{"spins", c.resources.spins},
                    {"encodings", enc},
                    {"max_exact_strings", c.resources.max_exact_strings},
                    {"unit_rows", c.resources.unit_rows},
                    {"qubit_tables", tables}};
  j["seed"] = c.seed;
  return j.dump(2) + "\n";
}

std::uint64_t initial_index(const InitialState& init, const ConfigSpace& space) {
  const LatticeModel& model = space.model();
  const Lattice& lat = model.lattice();
  const std::size_t nl = lat.links().size();
  switch (init.kind) {
    case InitialKind::Label:
      return space.index_of(init.label);
    case InitialKind::Explicit: {
      if (init.sites.size() != lat.n_sites()) {
        throw ConfigError("initial_state.sites", "needs " + std::to_string(lat.n_sites()) + " entries");
      }
      if (init.link_flux.size() != nl) {
        throw ConfigError("initial_state.link_flux", "needs " + std::to_string(nl) + " entries");
      }
      auto token = [&](std::size_t l) { return "(" + fmt(init.link_flux[l]) + ")"; };
      std::string label;
      if (lat.spec().d == 1) {
        for (std::size_t x = 0; x < lat.n_sites(); ++x) {
          label += init.sites[x];
          const std::size_t l = lat.link_index(lat.coord(x), 0);
          if (l != Lattice::npos) label += token(l);
        }
      } else {
        for (const auto& s : init.sites) label += s;
        label += '|';
        for (std::size_t l = 0; l < nl; ++l) label += token(l);
      }
      return space.index_of(label);
    }
    case InitialKind::Vacuum:
    case InitialKind::FluxString:
      break;
  }
  std::vector<double> flux(nl, 0.0);
  if (init.kind == InitialKind::FluxString) {
    const BoundaryFlux* in = nullptr;
    const BoundaryFlux* out = nullptr;
    for (const auto& b : lat.boundary_fluxes()) {
      if (b.incoming && !in) in = &b;
      if (!b.incoming && !out) out = &b;
    }
    if (!in || !out) {
      throw ConfigError("initial_state", "flux_string needs an incoming and an outgoing static link");
    }
    if (std::abs(in->flux - out->flux) > 1e-12) {
      throw ConfigError("initial_state", "flux_string needs equal boundary fluxes");
    }
    // Monotone path from the incoming to the outgoing site, axis 0 first.
    Coord c = lat.coord(in->site);
    const Coord target = lat.coord(out->site);
    for (int k = 0; k < lat.spec().d; ++k) {
      const auto ku = static_cast<std::size_t>(k);
      while (c[ku] != target[ku]) {
        if (c[ku] < target[ku]) {
          const std::size_t l = lat.link_index(c, k);
          if (l == Lattice::npos) throw ConfigError("initial_state", "flux path leaves the lattice");
          flux[l] += in->flux;
          ++c[ku];
        } else {
          const std::size_t l = lat.link_into(c, k);
          if (l == Lattice::npos) throw ConfigError("initial_state", "flux path leaves the lattice");
          flux[l] -= in->flux;
          --c[ku];
        }
      }
    }
  }
  std::vector<int> occ(static_cast<std::size_t>(model.layout().n_fermionic), 0);
  const auto& g0 = model.clifford().gammas[0];
  for (std::size_t x = 0; x < lat.n_sites(); ++x) {
    for (int al = 0; al < model.layout().n_spinor; ++al) {
      occ[static_cast<std::size_t>(model.layout().mode(x, al))] = g0(al, al).real() > 0 ? 0 : 1;
    }
  }
  return space.index_of(occ, flux);
}

StateVector initial_state(const InitialState& init, const ConfigSpace& space) {
  return StateVector::basis(space.n_qubits(), initial_index(init, space));
}

RunResult run(const ScenarioConfig& cfg) {
  RunResult result;
  const std::filesystem::path dir(cfg.output.dir);
  std::filesystem::create_directories(dir);
  const std::string& pre = cfg.output.prefix;

  if (cfg.scenario == "resource_report") {
    write_file(dir / (pre + "_resources.csv"), resources_csv(cfg), result);
    write_file(dir / (pre + "_qubits.csv"), qubit_table_csv(cfg), result);
    json meta;
    meta["scenario"] = cfg.scenario;
    meta["config"] = json::parse(config_to_json(cfg));
    meta["files"] = result.files;
    write_file(dir / (pre + "_meta.json"), meta.dump(2) + "\n", result);
    return result;
  }

  const LatticeModel model(cfg.model);
  if (model.n_qubits() > kMaxStateQubits) {
    throw ResourceLimitError("state vector limited to " + std::to_string(kMaxStateQubits) + " qubits, model needs " +
                             std::to_string(model.n_qubits()));
  }
  HamiltonianTerms terms = assemble(model);
  const ConfigSpace space(model);
  const StateVector psi0 = initial_state(cfg.initial, space);
  result.n_qubits = model.n_qubits();
  result.n_strings = terms.total.size();

  // Exact reference at every time any Trotter run records.
  std::vector<double> times;
  for (double dt : cfg.evolution.dts) {
    for (std::size_t k : record_steps(dt, cfg.evolution)) times.push_back(static_cast<double>(k) * dt);
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end(), [](double a, double b) { return std::abs(a - b) < 1e-9; }),
              times.end());

  const std::string how = cfg.evolution.exact;
  if (how != "none") {
    Series ex{"exact", 0.0, {}};
    bool done = false;
    if (how == "sector" || how == "auto") {
      try {
        const SectorPropagator sp(terms.total, psi0);
        result.exact_method = "sector";
        result.sector_dim = sp.dim();
        for (double t : times) ex.points.push_back(measure(t, psi0, sp.evolve(psi0, t), space));
        done = true;
      } catch (const ResourceLimitError&) {
        if (how == "sector") throw;
      }
    }
    if (!done) {
      const ExactMethod m = how == "dense" ? ExactMethod::Dense : how == "krylov" ? ExactMethod::Krylov : ExactMethod::Auto;
      const ExactPropagator prop(terms.total, m);
      result.exact_method = to_string(prop.method());
      StateVector s = psi0;
      double t_prev = 0;
      for (double t : times) {
        if (prop.method() == ExactMethod::Dense) {
          s = prop.evolve(psi0, t);
        } else if (t > t_prev) {
          s = prop.evolve(s, t - t_prev);
        }
        t_prev = t;
        ex.points.push_back(measure(t, psi0, s, space));
      }
    }
    result.series.push_back(std::move(ex));
  }

  const auto groups = trotter_groups(terms, cfg.model.params.lambda);
  for (double dt : cfg.evolution.dts) {
    const TrotterPlan plan = make_trotter_plan(groups, dt, cfg.evolution.total_time, cfg.evolution.ordering);
    const std::vector<std::size_t> rec = record_steps(dt, cfg.evolution);
    Series s{"trotter", dt, {}};
    StateVector psi = psi0;
    std::size_t next = 0;
    trotter_evolve(psi, plan, [&](std::size_t step, double t, const StateVector& st) {
      if (next < rec.size() && rec[next] == step) {
        s.points.push_back(measure(t, psi0, st, space));
        ++next;
      }
    });
    result.series.push_back(std::move(s));
  }

  const Series* exact = nullptr;
  if (!result.series.empty() && result.series.front().name == "exact") exact = &result.series.front();
  const Series& ref = exact ? *exact : result.series.back();
  const std::vector<std::string> labels = pick_labels(ref, cfg.output.top_labels);

  for (const auto& s : result.series) {
    const std::string name = s.name == "exact" ? pre + "_exact.csv" : pre + "_trotter_dt" + fmt_dt(s.dt) + ".csv";
    write_file(dir / name, series_csv(s, labels, s.name == "exact" ? nullptr : exact, cfg.output.rel_eps), result);
  }

  if (cfg.output.qasm) {
    for (double dt : cfg.evolution.dts) {
      const Circuit c = step_circuit(cfg, dt);
      write_file(dir / (pre + "_step_dt" + fmt_dt(dt) + ".qasm"), export_qasm(c), result);
      write_file(dir / (pre + "_step_dt" + fmt_dt(dt) + "_counts.json"), gate_counts_json(c), result);
    }
  }

  json meta;
  meta["scenario"] = cfg.scenario;
  meta["config"] = json::parse(config_to_json(cfg));
  meta["n_qubits"] = result.n_qubits;
  meta["n_pauli_strings"] = result.n_strings;
  meta["n_cnot_per_step"] = cnot_per_trotter_step(terms.total);
  meta["identity_shift"] = terms.identity_shift.real();
  meta["initial_label"] = space.label(initial_index(cfg.initial, space));
  meta["exact_method"] = result.exact_method.empty() ? json(nullptr) : json(result.exact_method);
  if (result.exact_method == "sector") meta["sector_dim"] = result.sector_dim;
  meta["labels"] = labels;
  meta["relative_error"] = {{"definition", "abs_err / max(|exact|, eps)"}, {"eps", cfg.output.rel_eps}};
  meta["files"] = result.files;
  write_file(dir / (pre + "_meta.json"), meta.dump(2) + "\n", result);
  return result;
}

std::string resources_csv(const ScenarioConfig& cfg) {
  ScalingOptions opt;
  opt.mapping = cfg.model.mapping;
  opt.max_exact_strings = cfg.resources.max_exact_strings;
  opt.unit_rows = cfg.resources.unit_rows;
  std::vector<double> spins = cfg.resources.spins;
  if (spins.empty()) spins.push_back(cfg.model.S);
  return scaling_csv(scaling_table(cfg.model.lattice, spins, cfg.resources.encodings, opt));
}

std::string qubit_table_csv(const ScenarioConfig& cfg) {
  std::ostringstream os;
  os << "lattice,S,encoding,n_qubits_total,n_qubits_fermionic,n_qubits_gauge\n";
  for (const auto& t : cfg.resources.qubit_tables) {
    std::string name;
    for (std::size_t i = 0; i < t.lattice.extents.size(); ++i) {
      name += (i ? "x" : "") + std::to_string(t.lattice.extents[i]);
    }
    for (Encoding enc : cfg.resources.encodings) {
      for (double S : t.spins) {
        const QubitReport q = qubit_report(t.lattice, S, enc);
        os << name << ',' << fmt_dt(S) << ',' << to_string(enc) << ',' << q.total << ',' << q.fermionic << ','
           << q.gauge << '\n';
      }
    }
  }
  return os.str();
}

Circuit step_circuit(const ScenarioConfig& cfg, double dt) {
  if (dt <= 0) {
    if (cfg.evolution.dts.empty()) throw ConfigError("evolution.dt", "no step size configured");
    dt = cfg.evolution.dts.front();
  }
  const LatticeModel model(cfg.model);
  const HamiltonianTerms terms = assemble(model);
  return synth_trotter_step(make_trotter_plan(trotter_groups(terms, cfg.model.params.lambda), dt, dt,
                                              cfg.evolution.ordering));
}

}  // namespace lgt
