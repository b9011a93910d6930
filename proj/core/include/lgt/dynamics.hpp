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
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lgt/hamiltonian.hpp"
#include "lgt/pauli.hpp"

namespace lgt {

inline constexpr std::size_t kMaxStateQubits = 26;
inline constexpr std::size_t kMaxDenseQubits = 12;
inline constexpr std::size_t kAutoDenseQubits = 10;
inline constexpr std::size_t kMaxKrylovQubits = 24;

// Amplitudes over 2^n computational basis states. Qubit q is bit (n - 1 - q)
// of the basis index.
class StateVector {
 public:
  StateVector() = default;
  explicit StateVector(std::size_t n_qubits);
  static StateVector basis(std::size_t n_qubits, std::uint64_t index);

  std::size_t n_qubits() const { return n_; }
  std::size_t dim() const { return amp_.size(); }
  std::vector<cplx>& amplitudes() { return amp_; }
  const std::vector<cplx>& amplitudes() const { return amp_; }
  cplx& operator[](std::size_t i) { return amp_[i]; }
  const cplx& operator[](std::size_t i) const { return amp_[i]; }

  double norm() const;
  void normalize();

 private:
  std::size_t n_ = 0;
  std::vector<cplx> amp_;
};

// <a|b>
cplx inner(const StateVector& a, const StateVector& b);
// |<a|b>|^2
double loschmidt(const StateVector& state0, const StateVector& state_t);

// state <- exp(-i theta P) state, P the bare axis word.
void apply_pauli_exp(StateVector& state, const PauliWord& word, double theta);
// state <- exp(-i t c P) state for a string with real coefficient c.
void apply_pauli_exp(StateVector& state, const PauliString& p, double t);

// Pauli sum grouped by X mask for repeated matrix-vector products.
class CompiledOperator {
 public:
  CompiledOperator() = default;
  explicit CompiledOperator(const PauliOperator& op);

  std::size_t n_qubits() const { return n_; }
  void apply(const std::vector<cplx>& in, std::vector<cplx>& out) const;
  // Upper bound on the spectral radius: sum of |coefficients|.
  double norm_bound() const { return norm_bound_; }

 private:
  struct ZTerm {
    std::uint64_t z;
    cplx c;
  };
  struct Group {
    std::uint64_t x;
    std::vector<ZTerm> terms;
  };
  std::size_t n_ = 0;
  std::vector<Group> groups_;
  double norm_bound_ = 0;
};

StateVector apply_operator(const PauliOperator& op, const StateVector& state);
double expectation(const PauliOperator& op, const StateVector& state);

enum class Ordering { Canonical, ByTermGroup, Reversed };
std::string to_string(Ordering o);
Ordering ordering_from_string(const std::string& s);

struct TrotterPlan {
  std::size_t n_qubits = 0;
  std::vector<PauliString> sequence;  // identity strings removed
  double dt = 0;
  std::size_t steps = 0;
  Ordering ordering = Ordering::Canonical;
  double total_time() const { return dt * static_cast<double>(steps); }
};

// `groups` sum to H. Canonical and Reversed merge them first; ByTermGroup
// keeps group order with canonical order inside each group.
TrotterPlan make_trotter_plan(const std::vector<PauliOperator>& groups, double dt, double total_time,
                              Ordering ordering = Ordering::Canonical);
// mass, hopping, electric, plaquette, lambda * gauss.
std::vector<PauliOperator> trotter_groups(const HamiltonianTerms& terms, double lambda);

void trotter_step(StateVector& state, const TrotterPlan& plan);

// Called with step 0 before the first step and after every step.
using Observer = std::function<void(std::size_t step, double t, const StateVector& state)>;
void trotter_evolve(StateVector& state, const TrotterPlan& plan, const Observer& observe = {});

enum class ExactMethod { Auto, Dense, Krylov };
std::string to_string(ExactMethod m);

// exp(-i H t) applied either through a dense eigendecomposition or through a
// Lanczos exponential with adaptive sub-steps.
class ExactPropagator {
 public:
  explicit ExactPropagator(const PauliOperator& h, ExactMethod method = ExactMethod::Auto,
                           double tol = 1e-10);

  ExactMethod method() const { return method_; }
  StateVector evolve(const StateVector& state, double t) const;
  // Number of matrix-vector products spent so far by the Krylov path.
  std::size_t matvecs() const { return matvecs_; }

 private:
  StateVector evolve_dense(const StateVector& state, double t) const;
  StateVector evolve_krylov(const StateVector& state, double t) const;

  std::size_t n_ = 0;
  ExactMethod method_;
  double tol_;
  Eigen::MatrixXcd vecs_;
  Eigen::VectorXd vals_;
  CompiledOperator op_;
  mutable std::size_t matvecs_ = 0;
};

StateVector exact_evolve(const StateVector& state, const PauliOperator& h, double t,
                         ExactMethod method = ExactMethod::Auto);

inline constexpr std::size_t kMaxSectorDim = 4096;

// Exact evolution on the span of the basis states connected by h to the
// support of a reference state. Exact for every state in that span.
class SectorPropagator {
 public:
  SectorPropagator(const PauliOperator& h, const StateVector& reference,
                   std::size_t max_dim = kMaxSectorDim);

  std::size_t dim() const { return basis_.size(); }
  const std::vector<std::uint64_t>& basis() const { return basis_; }
  // Throws std::invalid_argument when `state` has weight outside the sector.
  StateVector evolve(const StateVector& state, double t) const;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> basis_;  // sorted
  Eigen::MatrixXcd vecs_;
  Eigen::VectorXd vals_;
};

// Reading of computational basis states as lattice configurations.
class ConfigSpace {
 public:
  explicit ConfigSpace(const LatticeModel& model);

  const LatticeModel& model() const { return *model_; }
  std::size_t n_qubits() const { return n_; }

  std::vector<int> occupations(std::uint64_t index) const;
  // Flux E/e = m + theta of a link, nullopt for states outside the spin window.
  std::optional<double> link_flux(std::uint64_t index, std::size_t link) const;
  // Site labels: o vacuum, p particle, a antiparticle, b pair.
  std::string site_label(const std::vector<int>& occ, std::size_t site) const;
  // Link labels: - flux 0, > flux 1, < flux -1, (f) otherwise, # unphysical.
  std::string label(std::uint64_t index) const;

  std::uint64_t index_of(const std::vector<int>& occupations, const std::vector<double>& link_flux) const;
  // Basis state of a label produced by label().
  std::uint64_t index_of(const std::string& label) const;

  // G_x / e on a basis state with all links physical.
  double gauss_value(const std::vector<int>& occ, const std::vector<double>& flux, std::size_t site) const;

 private:
  const LatticeModel* model_;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> occ_masks_;
  std::vector<int> upper_;  // gamma^0 diagonal sign per spinor component
};

struct Observables {
  double particle_number = 0;
  std::vector<double> charge;  // units of e
  std::vector<double> flux;    // E/e per dynamical link
  double unphysical = 0;       // weight on states outside the spin window
};

Observables observables(const StateVector& state, const ConfigSpace& space);

struct ConfigProbability {
  std::string label;
  double probability = 0;
};

// All labels with their summed probabilities, largest first.
std::vector<ConfigProbability> config_probabilities(const StateVector& state, const ConfigSpace& space,
                                                    double floor = 1e-14);
// Top `keep` entries plus an "other" entry with the remainder.
std::vector<ConfigProbability> top_configs(const std::vector<ConfigProbability>& all, std::size_t keep = 12);

struct GaussFilterResult {
  std::uint64_t total = 0;
  std::vector<std::uint64_t> invariant;  // sorted basis indices
};

GaussFilterResult gauss_filter(const ConfigSpace& space);

}  // namespace lgt
