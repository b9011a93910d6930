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

#include <cstddef>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lgt/pauli.hpp"

namespace lgt {

struct CliffordRep {
  int d = 1;
  int n_spinor = 2;
  std::vector<Eigen::MatrixXcd> gammas;  // gamma^0 .. gamma^d
};

// d=1: (sz, i sx); d=2: adds i sy; d=3: Dirac representation.
CliffordRep clifford_rep(int d);

enum class Mapping { JordanWigner, Parity, BravyiKitaev };

std::string to_string(Mapping m);
Mapping mapping_from_string(const std::string& s);

// Index sets of the ladder-operator form
//   a_j = 1/2 (X_U X_j Z_P + i X_U Y_j Z_R).
struct LadderSets {
  std::vector<std::size_t> update;
  std::vector<std::size_t> parity;
  std::vector<std::size_t> flip;
  std::vector<std::size_t> remainder;
};

LadderSets ladder_sets(Mapping m, std::size_t j, std::size_t n_modes);

// Basis-state conversion between mode occupations n and qubit values
// q = B n (mod 2) of the mapping's transform matrix B.
std::vector<int> qubits_from_occupations(Mapping m, const std::vector<int>& occ);
std::vector<int> occupations_from_qubits(Mapping m, const std::vector<int>& qubits);

// Fermionic modes 0..N-1 placed on qubits offset..offset+N-1 of an
// n_total-qubit register. Occupied mode under Jordan-Wigner is |1>.
class FermionEncoder {
 public:
  FermionEncoder(Mapping m, std::size_t n_modes, std::size_t n_total, std::size_t offset = 0);
  FermionEncoder(Mapping m, std::size_t n_modes) : FermionEncoder(m, n_modes, n_modes, 0) {}

  Mapping mapping() const { return mapping_; }
  std::size_t n_modes() const { return n_modes_; }
  std::size_t n_qubits() const { return n_total_; }

  const PauliOperator& annihilation(std::size_t j) const;
  const PauliOperator& creation(std::size_t j) const;
  // c * a^dag_i a_j
  PauliOperator bilinear(std::size_t i, std::size_t j, cplx c = 1.0) const;
  PauliOperator number(std::size_t j) const { return bilinear(j, j); }

 private:
  void check(std::size_t j) const;

  Mapping mapping_;
  std::size_t n_modes_;
  std::size_t n_total_;
  std::vector<PauliOperator> a_;
  std::vector<PauliOperator> adag_;
};

PauliOperator map_bilinear(Mapping m, std::size_t n_modes, std::size_t i, std::size_t j, cplx c = 1.0);

struct AnticommutatorReport {
  std::size_t pairs_checked = 0;
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

AnticommutatorReport mapped_anticommutator_check(Mapping m, std::size_t n_modes);

}  // namespace lgt
