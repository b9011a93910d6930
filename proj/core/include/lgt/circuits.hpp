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

#include <Eigen/Dense>

#include "lgt/dynamics.hpp"
#include "lgt/pauli.hpp"

namespace lgt {

enum class GateKind { H, SDG, S, RZ, RX, CNOT };
std::string to_string(GateKind k);

// RZ(a) = exp(-i a Z / 2), RX(a) = exp(-i a X / 2). For CNOT, q0 is the
// control and q1 the target.
struct Gate {
  GateKind kind = GateKind::H;
  std::size_t q0 = 0;
  std::size_t q1 = 0;
  double angle = 0;

  bool operator==(const Gate& o) const {
    return kind == o.kind && q0 == o.q0 && q1 == o.q1 && angle == o.angle;
  }
};

struct GateCounts {
  std::uint64_t h = 0, s = 0, sdg = 0, rz = 0, rx = 0, cnot = 0;
  std::uint64_t single_qubit() const { return h + s + sdg + rz + rx; }
  std::uint64_t total() const { return single_qubit() + cnot; }
  GateCounts& operator+=(const GateCounts& o);
  bool operator==(const GateCounts& o) const = default;
};

// Gates applied in order, times exp(i global_phase).
class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits) : n_(n_qubits) {}

  std::size_t n_qubits() const { return n_; }
  const std::vector<Gate>& gates() const { return gates_; }
  double global_phase() const { return phase_; }
  void add_phase(double p) { phase_ += p; }

  void h(std::size_t q) { push({GateKind::H, q, q, 0}); }
  void s(std::size_t q) { push({GateKind::S, q, q, 0}); }
  void sdg(std::size_t q) { push({GateKind::SDG, q, q, 0}); }
  void rz(std::size_t q, double a) { push({GateKind::RZ, q, q, a}); }
  void rx(std::size_t q, double a) { push({GateKind::RX, q, q, a}); }
  void cx(std::size_t control, std::size_t target) { push({GateKind::CNOT, control, target, 0}); }
  void push(const Gate& g);
  void append(const Circuit& c);

  GateCounts counts() const;

 private:
  std::size_t n_ = 0;
  std::vector<Gate> gates_;
  double phase_ = 0;
};

// exp(-i angle P): X and Y factors rotated onto Z (H, and S^dag then H), a
// CNOT ladder collecting the parity on the highest-index support qubit,
// RZ(2 angle) there, then the ladder and rotations undone. The identity word
// gives an empty circuit with global phase -angle.
Circuit synth_pauli_exp(const PauliWord& word, double angle);
// exp(-i t c P) for a string with real coefficient c.
Circuit synth_pauli_exp(const PauliString& p, double t);

// Per-string circuits of one Trotter step, concatenated in plan order.
Circuit synth_trotter_step(const TrotterPlan& plan);
Circuit synth_trotter_step(const PauliOperator& h, double dt, Ordering ordering = Ordering::Canonical);

// As-late-as-possible layering with all-to-all connectivity. layer[i] is the
// 0-based layer of gate i; gates on disjoint qubits share layers.
struct Schedule {
  std::size_t depth = 0;
  std::size_t cnot_depth = 0;  // layers holding at least one CNOT
  std::vector<std::size_t> layer;
};
Schedule schedule_alap(const Circuit& c);

void apply_circuit(StateVector& state, const Circuit& c);
// Full 2^n x 2^n unitary including the global phase.
Eigen::MatrixXcd circuit_unitary(const Circuit& c);

// OpenQASM 2.0. A nonzero global phase is kept as a "// global_phase" comment.
std::string export_qasm(const Circuit& c);
// Reads the subset written by export_qasm; throws std::invalid_argument.
Circuit parse_qasm(std::string_view text);

// {"n_qubits", "gates": {...}, "single_qubit", "cnot", "total", "depth", "cnot_depth"}
std::string gate_counts_json(const Circuit& c);

}  // namespace lgt
