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

#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Dense>

namespace lgt {

using cplx = std::complex<double>;

inline constexpr double kDropTol = 1e-12;

// Two-bit axis codes. The numeric order I < X < Y < Z is the canonical
// lexicographic order of packed words.
enum class Axis : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char axis_char(Axis a);
Axis axis_from_char(char c);

// Axis sequence on n qubits, packed 32 qubits per 64-bit word. Qubit 0 sits in
// the most significant bit pair of word 0, so comparing words compares the
// axis strings lexicographically.
class PauliWord {
 public:
  PauliWord() = default;
  explicit PauliWord(std::size_t n);
  static PauliWord from_string(std::string_view axes);
  static PauliWord identity(std::size_t n) { return PauliWord(n); }

  std::size_t size() const { return n_; }
  Axis get(std::size_t q) const;
  void set(std::size_t q, Axis a);

  std::size_t support() const;
  bool is_identity() const;
  // True when every non-identity axis is Z.
  bool is_diagonal() const;

  // Bit masks with qubit q mapped to bit (n - 1 - q): qubit 0 is the most
  // significant bit of a computational-basis index. Requires n <= 64.
  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  // Number of Y factors.
  int y_count() const;

  const std::vector<std::uint64_t>& words() const { return w_; }

  std::string to_string() const;

  // Places this word at qubit offset `offset` in an n_total-qubit register.
  PauliWord embed(std::size_t offset, std::size_t n_total) const;
  // Concatenates axis sequences: this on the low qubit indices, b after.
  PauliWord concat(const PauliWord& b) const;

  bool operator==(const PauliWord& o) const { return n_ == o.n_ && w_ == o.w_; }
  bool operator!=(const PauliWord& o) const { return !(*this == o); }
  bool operator<(const PauliWord& o) const;

  std::size_t hash() const;

 private:
  friend struct PauliProduct;
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct PauliWordHash {
  std::size_t operator()(const PauliWord& w) const { return w.hash(); }
};

// Product of two axis words: result word and phase i^k with k in {0,1,2,3}.
struct PauliProduct {
  PauliWord word;
  int phase = 0;
  static PauliProduct of(const PauliWord& a, const PauliWord& b);
};

cplx phase_of(int k);

struct PauliString {
  cplx coeff{1.0, 0.0};
  PauliWord axes;

  PauliString() = default;
  PauliString(cplx c, PauliWord w) : coeff(c), axes(std::move(w)) {}
  PauliString(cplx c, std::string_view s) : coeff(c), axes(PauliWord::from_string(s)) {}

  std::size_t size() const { return axes.size(); }
};

PauliString multiply(const PauliString& a, const PauliString& b);
std::size_t support(const PauliString& p);

struct Classification {
  std::size_t n_real = 0;
  std::size_t n_imag = 0;
  std::size_t n_mixed = 0;
};

// Weighted sum of Pauli strings. Terms are kept in canonical order with no
// duplicate axis words once simplify() has run; every constructor that takes a
// term list simplifies.
class PauliOperator {
 public:
  PauliOperator() = default;
  explicit PauliOperator(std::size_t n) : n_(n) {}
  PauliOperator(std::size_t n, std::vector<PauliString> terms, double tol = kDropTol);

  static PauliOperator identity(std::size_t n, cplx c = 1.0);
  static PauliOperator single(cplx c, std::string_view axes);

  std::size_t n_qubits() const { return n_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }
  const std::vector<PauliString>& terms() const { return terms_; }

  // Coefficient of an axis word, zero when absent.
  cplx coeff(const PauliWord& w) const;
  cplx coeff(std::string_view axes) const { return coeff(PauliWord::from_string(axes)); }

  PauliOperator& operator+=(const PauliOperator& o);
  PauliOperator& operator-=(const PauliOperator& o);
  PauliOperator& operator*=(cplx c);

  PauliOperator dagger() const;
  PauliOperator embed(std::size_t offset, std::size_t n_total) const;
  // Removes the identity string and returns its coefficient.
  cplx drop_identity();
  bool is_hermitian(double tol = kDropTol) const;
  double max_abs_coeff() const;

  std::string to_json() const;
  static PauliOperator from_json(std::string_view text);

  bool operator==(const PauliOperator& o) const;

 private:
  friend PauliOperator simplify(const PauliOperator&, double);
  friend class PauliAccumulator;
  std::size_t n_ = 0;
  std::vector<PauliString> terms_;
};

PauliOperator operator+(PauliOperator a, const PauliOperator& b);
PauliOperator operator-(PauliOperator a, const PauliOperator& b);
PauliOperator operator*(const PauliOperator& a, const PauliOperator& b);
PauliOperator operator*(cplx c, PauliOperator a);

// Hash-map accumulator for building large sums before canonicalisation.
class PauliAccumulator {
 public:
  explicit PauliAccumulator(std::size_t n) : n_(n) {}
  void add(const PauliWord& w, cplx c);
  void add(const PauliOperator& op, cplx scale = 1.0);
  void add_product(const PauliOperator& a, const PauliOperator& b, cplx scale = 1.0);
  std::size_t raw_size() const { return map_.size(); }
  PauliOperator finish(double tol = kDropTol) const;

 private:
  std::size_t n_;
  std::unordered_map<PauliWord, cplx, PauliWordHash> map_;
};

PauliOperator simplify(const PauliOperator& op, double tol = kDropTol);
Classification classify(const PauliOperator& op);
PauliOperator tensor(const PauliOperator& a, const PauliOperator& b);
PauliOperator commutator(const PauliOperator& a, const PauliOperator& b);
PauliOperator anticommutator(const PauliOperator& a, const PauliOperator& b);

inline constexpr std::size_t kOracleQubits = 12;

// Hilbert-Schmidt coefficients Tr(P M) / 2^n via an O(n 4^n) transform.
PauliOperator decompose_matrix(const Eigen::MatrixXcd& m, double tol = kDropTol);
Eigen::MatrixXcd to_matrix(const PauliOperator& op);
Eigen::MatrixXcd to_matrix(const PauliString& p);

}  // namespace lgt
