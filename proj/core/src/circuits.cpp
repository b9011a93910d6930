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


#include "lgt/circuits.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace lgt {

std::string to_string(GateKind k) {
  switch (k) {
    case GateKind::H: return "h";
    case GateKind::SDG: return "sdg";
    case GateKind::S: return "s";
    case GateKind::RZ: return "rz";
    case GateKind::RX: return "rx";
    case GateKind::CNOT: return "cx";
  }
  return "?";
}

GateCounts& GateCounts::operator+=(const GateCounts& o) {
  h += o.h;
  s += o.s;
  sdg += o.sdg;
  rz += o.rz;
  rx += o.rx;
  cnot += o.cnot;
  return *this;
}

void Circuit::push(const Gate& g) {
  if (g.q0 >= n_ || g.q1 >= n_) throw std::out_of_range("gate operand outside register");
  if (g.kind == GateKind::CNOT && g.q0 == g.q1) throw std::invalid_argument("CNOT control equals target");
  if (!std::isfinite(g.angle)) throw std::invalid_argument("non-finite rotation angle");
  gates_.push_back(g);
}

void Circuit::append(const Circuit& c) {
  if (c.n_ != n_) throw std::invalid_argument("register size mismatch");
  gates_.insert(gates_.end(), c.gates_.begin(), c.gates_.end());
  phase_ += c.phase_;
}

GateCounts Circuit::counts() const {
  GateCounts n;
  for (const auto& g : gates_) {
    switch (g.kind) {
      case GateKind::H: ++n.h; break;
      case GateKind::S: ++n.s; break;
      case GateKind::SDG: ++n.sdg; break;
      case GateKind::RZ: ++n.rz; break;
      case GateKind::RX: ++n.rx; break;
      case GateKind::CNOT: ++n.cnot; break;
    }
  }
  return n;
}

Circuit synth_pauli_exp(const PauliWord& word, double angle) {
  Circuit c(word.size());
  std::vector<std::size_t> sup;
  for (std::size_t q = 0; q < word.size(); ++q) {
    if (word.get(q) != Axis::I) sup.push_back(q);
  }
  if (sup.empty()) {
    c.add_phase(-angle);
    return c;
  }
  for (std::size_t q : sup) {
    if (word.get(q) == Axis::X) {
      c.h(q);
    } else if (word.get(q) == Axis::Y) {
      c.sdg(q);
      c.h(q);
    }
  }
  for (std::size_t i = 0; i + 1 < sup.size(); ++i) c.cx(sup[i], sup[i + 1]);
  c.rz(sup.back(), 2 * angle);
  for (std::size_t i = sup.size() - 1; i > 0; --i) c.cx(sup[i - 1], sup[i]);
  for (std::size_t q : sup) {
    if (word.get(q) == Axis::X) {
      c.h(q);
    } else if (word.get(q) == Axis::Y) {
      c.h(q);
      c.s(q);
    }
  }
  return c;
}

Circuit synth_pauli_exp(const PauliString& p, double t) {
  if (std::abs(p.coeff.imag()) > 1e-12) {
    throw std::invalid_argument("exponent of a non-hermitian Pauli string");
  }
  return synth_pauli_exp(p.axes, p.coeff.real() * t);
}

Circuit synth_trotter_step(const TrotterPlan& plan) {
  Circuit c(plan.n_qubits);
  for (const auto& p : plan.sequence) c.append(synth_pauli_exp(p, plan.dt));
  return c;
}

Circuit synth_trotter_step(const PauliOperator& h, double dt, Ordering ordering) {
  return synth_trotter_step(make_trotter_plan({h}, dt, dt, ordering));
}

Schedule schedule_alap(const Circuit& c) {
  const auto& gates = c.gates();
  Schedule s;
  s.layer.resize(gates.size());
  // Distance from the end, filled back to front.
  std::vector<std::size_t> next(c.n_qubits(), 0);
  for (std::size_t i = gates.size(); i-- > 0;) {
    const Gate& g = gates[i];
    std::size_t l = next[g.q0];
    if (g.kind == GateKind::CNOT) l = std::max(l, next[g.q1]);
    s.layer[i] = l;
    next[g.q0] = l + 1;
    if (g.kind == GateKind::CNOT) next[g.q1] = l + 1;
    s.depth = std::max(s.depth, l + 1);
  }
  std::vector<char> has_cnot(s.depth, 0);
  for (std::size_t i = 0; i < gates.size(); ++i) {
    s.layer[i] = s.depth - 1 - s.layer[i];
    if (gates[i].kind == GateKind::CNOT) has_cnot[s.layer[i]] = 1;
  }
  s.cnot_depth = static_cast<std::size_t>(std::count(has_cnot.begin(), has_cnot.end(), 1));
  return s;
}

namespace {

// Applies the 2x2 matrix {{a, b}, {c, d}} to qubit q.
void apply_1q(std::vector<cplx>& amp, std::size_t n, std::size_t q, cplx a, cplx b, cplx c, cplx d) {
  const std::uint64_t bit = std::uint64_t{1} << (n - 1 - q);
  for (std::uint64_t r = 0; r < amp.size(); ++r) {
    if (r & bit) continue;
    const cplx x0 = amp[r], x1 = amp[r | bit];
    amp[r] = a * x0 + b * x1;
    amp[r | bit] = c * x0 + d * x1;
  }
}

}  // namespace

void apply_circuit(StateVector& state, const Circuit& c) {
  if (state.n_qubits() != c.n_qubits()) throw std::invalid_argument("circuit size does not match state");
  const std::size_t n = c.n_qubits();
  auto& amp = state.amplitudes();
  const double r2 = 1.0 / std::numbers::sqrt2;
  const cplx i(0, 1);
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::H: apply_1q(amp, n, g.q0, r2, r2, r2, -r2); break;
      case GateKind::S: apply_1q(amp, n, g.q0, 1, 0, 0, i); break;
      case GateKind::SDG: apply_1q(amp, n, g.q0, 1, 0, 0, -i); break;
      case GateKind::RZ:
        apply_1q(amp, n, g.q0, std::exp(-i * (g.angle / 2)), 0, 0, std::exp(i * (g.angle / 2)));
        break;
      case GateKind::RX: {
        const double co = std::cos(g.angle / 2), si = std::sin(g.angle / 2);
        apply_1q(amp, n, g.q0, co, -i * si, -i * si, co);
        break;
      }
      case GateKind::CNOT: {
        const std::uint64_t cb = std::uint64_t{1} << (n - 1 - g.q0);
        const std::uint64_t tb = std::uint64_t{1} << (n - 1 - g.q1);
        for (std::uint64_t r = 0; r < amp.size(); ++r) {
          if ((r & cb) && !(r & tb)) std::swap(amp[r], amp[r | tb]);
        }
        break;
      }
    }
  }
  const cplx ph = std::exp(i * c.global_phase());
  for (auto& a : amp) a *= ph;
}

Eigen::MatrixXcd circuit_unitary(const Circuit& c) {
  if (c.n_qubits() > 12) throw std::invalid_argument("unitary limited to 12 qubits");
  const std::size_t dim = std::size_t{1} << c.n_qubits();
  Eigen::MatrixXcd u(dim, dim);
  for (std::size_t col = 0; col < dim; ++col) {
    StateVector s = StateVector::basis(c.n_qubits(), col);
    apply_circuit(s, c);
    for (std::size_t row = 0; row < dim; ++row) {
      u(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = s[row];
    }
  }
  return u;
}

namespace {

std::string angle_text(double a) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", a);
  return buf;
}

}  // namespace

std::string export_qasm(const Circuit& c) {
  std::ostringstream os;
  os << "OPENQASM 2.0;\ninclude \"qelib1.inc\";\n";
  if (c.global_phase() != 0) os << "// global_phase " << angle_text(c.global_phase()) << '\n';
  os << "qreg q[" << c.n_qubits() << "];\n";
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::RZ:
      case GateKind::RX:
        os << to_string(g.kind) << '(' << angle_text(g.angle) << ") q[" << g.q0 << "];\n";
        break;
      case GateKind::CNOT:
        os << "cx q[" << g.q0 << "],q[" << g.q1 << "];\n";
        break;
      default:
        os << to_string(g.kind) << " q[" << g.q0 << "];\n";
    }
  }
  return os.str();
}

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::size_t parse_operand(const std::string& s) {
  std::size_t q = 0;
  int used = 0;
  if (std::sscanf(s.c_str(), " q[%zu]%n", &q, &used) != 1 || trim(s.substr(static_cast<std::size_t>(used))) != "") {
    throw std::invalid_argument("bad operand '" + s + "'");
  }
  return q;
}

}  // namespace

Circuit parse_qasm(std::string_view text) {
  Circuit c;
  bool have_reg = false;
  double phase = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    auto fail = [&](const std::string& why) {
      return std::invalid_argument("qasm line " + std::to_string(line_no) + ": " + why);
    };
    if (line.rfind("// global_phase", 0) == 0) {
      phase = std::stod(line.substr(15));
      continue;
    }
    if (line.empty() || line.rfind("//", 0) == 0) continue;
    if (line.back() != ';') throw fail("missing ';'");
    line.pop_back();
    if (line == "OPENQASM 2.0" || line == "include \"qelib1.inc\"") continue;
    std::size_t n = 0;
    if (std::sscanf(line.c_str(), "qreg q[%zu]", &n) == 1) {
      if (have_reg) throw fail("second register");
      c = Circuit(n);
      have_reg = true;
      continue;
    }
    if (!have_reg) throw fail("gate before qreg");
    const auto sp = line.find_first_of(" (");
    if (sp == std::string::npos) throw fail("unknown statement");
    const std::string name = line.substr(0, sp);
    std::string rest = line.substr(sp);
    double angle = 0;
    if (rest[0] == '(') {
      const auto close = rest.find(')');
      if (close == std::string::npos) throw fail("unclosed parameter");
      angle = std::stod(rest.substr(1, close - 1));
      rest = rest.substr(close + 1);
    }
    try {
      if (name == "cx") {
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw fail("cx needs two operands");
        c.cx(parse_operand(rest.substr(0, comma)), parse_operand(rest.substr(comma + 1)));
      } else if (name == "h") {
        c.h(parse_operand(rest));
      } else if (name == "s") {
        c.s(parse_operand(rest));
      } else if (name == "sdg") {
        c.sdg(parse_operand(rest));
      } else if (name == "rz") {
        c.rz(parse_operand(rest), angle);
      } else if (name == "rx") {
        c.rx(parse_operand(rest), angle);
      } else {
        throw fail("unsupported gate '" + name + "'");
      }
    } catch (const std::out_of_range& e) {
      throw fail(e.what());
    }
  }
  if (!have_reg) throw std::invalid_argument("qasm: no qreg declaration");
  c.add_phase(phase);
  return c;
}

std::string gate_counts_json(const Circuit& c) {
  const GateCounts n = c.counts();
  const Schedule s = schedule_alap(c);
  nlohmann::ordered_json j;
  j["n_qubits"] = c.n_qubits();
  j["gates"] = {{"h", n.h}, {"s", n.s}, {"sdg", n.sdg}, {"rz", n.rz}, {"rx", n.rx}, {"cx", n.cnot}};
  j["single_qubit"] = n.single_qubit();
  j["cnot"] = n.cnot;
  j["total"] = n.total();
  j["depth"] = s.depth;
  j["cnot_depth"] = s.cnot_depth;
  return j.dump(2) + "\n";
}

}  // namespace lgt
