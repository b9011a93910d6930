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
#include <memory>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lgt/lattice.hpp"
#include "lgt/pauli.hpp"

namespace lgt {

// Basis index k carries magnetic quantum number m = S - k.
struct SpinMatrices {
  double S = 0.5;
  int dim = 2;
  Eigen::MatrixXcd Sx, Sy, Sz, Splus;
};

SpinMatrices spin_matrices(double S);

// Position of the unused states in a logarithmic register. Trailing puts spin
// state k on basis state k; Leading shifts the spin states to the top of the
// register so that basis state 0 is unused.
enum class LogPadding { Trailing, Leading };
std::string to_string(LogPadding p);
LogPadding log_padding_from_string(const std::string& s);

// First register state holding a spin state.
std::uint64_t log_offset(double S, LogPadding p);

// Embeds a d x d matrix into the next power-of-two dimension with identity
// padding on the unused block, then decomposes.
PauliOperator encode_log(const Eigen::MatrixXcd& m, LogPadding p = LogPadding::Trailing);

// One-hot encoding on d qubits: |a><b| -> sigma+_a sigma-_b, |a><a| -> n_a.
PauliOperator encode_lin(const Eigen::MatrixXcd& m);

enum class SpinOp { X, Y, Z, Plus };
PauliOperator encode_lin(double S, SpinOp which);

struct EncodedLink {
  Encoding encoding = Encoding::Logarithmic;
  LogPadding padding = LogPadding::Trailing;
  double S = 0.5;
  double theta = 0.0;
  double e = 1.0;
  std::size_t n_qubits = 1;
  PauliOperator E;     // e (Sz + theta)
  PauliOperator U;     // (S+) / sqrt(S(S+1))
  PauliOperator Udag;
  PauliOperator E_sq;  // (Sz + theta)^2, no e factor
};

// Cached per (S, encoding, theta, e, padding).
std::shared_ptr<const EncodedLink> qlm_link(double S, Encoding enc, double theta = 0.0, double e = 1.0,
                                            LogPadding padding = LogPadding::Trailing);

// Restriction of a link-register matrix to the physical spin states: the d
// spin states of the register (log) or the one-hot states (linear).
Eigen::MatrixXcd physical_projection(const Eigen::MatrixXcd& full, int dim, Encoding enc,
                                     LogPadding padding = LogPadding::Trailing);

struct SpinPauliCounts {
  std::size_t sx = 0, sy = 0, sz = 0, splus = 0;
};

inline constexpr int kMaxLogSpinDim = 1024;
SpinPauliCounts spin_pauli_counts(double S, Encoding enc);

struct ScalingFit {
  double a = 0, b = 0, c = 0;  // a d^{log2 3} + b d + c
};

ScalingFit fit_spin_counts(const std::vector<int>& dims, const std::vector<double>& counts);

}  // namespace lgt
