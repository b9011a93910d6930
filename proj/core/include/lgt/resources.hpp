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
#include <optional>
#include <string>
#include <vector>

#include "lgt/hamiltonian.hpp"
#include "lgt/lattice.hpp"
#include "lgt/matter.hpp"
#include "lgt/pauli.hpp"

namespace lgt {

// Pauli counts for single building blocks: one gamma element of the hopping
// term on one link, the E and E^2 operators of one link, and U_p + U_p^dag of
// one plaquette.
struct UnitCounts {
  std::uint64_t hopping = 0;
  std::uint64_t e_op = 0;
  std::uint64_t e_sq = 0;
  std::uint64_t plaquette = 0;
};

// 2 (n_real + n_imag + 2 n_mixed)
std::uint64_t hopping_formula(const Classification& u);
// n^4 - 4 r i^3 - 4 i r^3 - m^2 (2 r^2 + 2 i^2 + 8 i r), n = r + i + m
std::uint64_t plaquette_formula(const Classification& u);

// Classification of the encoded U for a spin-S link.
Classification link_classification(double S, Encoding enc);

// Explicit construction. The plaquette block is skipped (left at 0) when it
// would need more than `max_plaquette_products` string products.
struct ExactUnitCounts {
  UnitCounts counts;
  bool plaquette_enumerated = false;
};
ExactUnitCounts exact_unit_counts(double S, Encoding enc,
                                  std::uint64_t max_plaquette_products = 4'000'000);
UnitCounts predicted_unit_counts(double S, Encoding enc);

struct TermCounts {
  std::uint64_t mass = 0;
  std::uint64_t hopping = 0;
  std::uint64_t electric = 0;
  std::uint64_t plaquette = 0;
  std::uint64_t total() const { return mass + hopping + electric + plaquette; }
};

// Lattice totals from the closed forms: unit counts times the number of
// sites, links (per direction, weighted by nonzero gamma-mix entries) and
// plaquettes.
TermCounts predict_pauli_counts(const LatticeSpec& spec, double S, Encoding enc,
                                const CliffordRep& rep, double r = 1.0);

// Strings per assembled term, identity strings excluded.
TermCounts exact_term_counts(const HamiltonianTerms& terms);

// 2 * sum over non-identity strings of (support - 1).
std::uint64_t cnot_per_trotter_step(const PauliOperator& op);
// hist[s] = number of strings with support s.
std::vector<std::uint64_t> support_histogram(const PauliOperator& op);

struct QubitReport {
  std::uint64_t fermionic = 0;
  std::uint64_t gauge = 0;
  std::uint64_t total = 0;
};
QubitReport qubit_report(const LatticeSpec& spec, double S, Encoding enc);

struct ScalingRow {
  std::string term;
  double S = 0;
  Encoding encoding = Encoding::Logarithmic;
  std::optional<std::uint64_t> n_pauli_exact;
  std::uint64_t n_pauli_formula = 0;
  std::optional<std::uint64_t> n_cnot;
  std::uint64_t n_qubits_fermionic = 0;
  std::uint64_t n_qubits_gauge = 0;
};

struct ScalingOptions {
  Mapping mapping = Mapping::JordanWigner;
  // Largest predicted lattice term count for which the Hamiltonian is built
  // explicitly.
  std::uint64_t max_exact_strings = 300'000;
  bool unit_rows = true;
};

// Rows for the per-unit blocks (unit_hopping, unit_E, unit_E2,
// unit_plaquette) and for the lattice terms (mass, hopping, electric,
// plaquette, total).
std::vector<ScalingRow> scaling_table(const LatticeSpec& spec, const std::vector<double>& spins,
                                      const std::vector<Encoding>& encodings,
                                      const ScalingOptions& opt = {});

std::string scaling_csv(const std::vector<ScalingRow>& rows);

}  // namespace lgt
