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

#include "lgt/matter.hpp"

#include <stdexcept>

#include "lgt/errors.hpp"

namespace lgt {
namespace {

using BitMatrix = std::vector<std::vector<unsigned char>>;

BitMatrix identity_bits(std::size_t n) {
  BitMatrix m(n, std::vector<unsigned char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

BitMatrix lower_ones(std::size_t n) {
  BitMatrix m(n, std::vector<unsigned char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k <= i; ++k) m[i][k] = 1;
  }
  return m;
}

BitMatrix bravyi_kitaev_bits(std::size_t n) {
  std::size_t size = 1;
  BitMatrix b{{1}};
  while (size < n) {
    BitMatrix c(2 * size, std::vector<unsigned char>(2 * size, 0));
    for (std::size_t i = 0; i < size; ++i) {
      for (std::size_t k = 0; k < size; ++k) {
        c[i][k] = b[i][k];
        c[size + i][size + k] = b[i][k];
      }
    }
    for (std::size_t k = 0; k < size; ++k) c[2 * size - 1][k] = 1;
    b = std::move(c);
    size *= 2;
  }
  BitMatrix out(n, std::vector<unsigned char>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) out[i][k] = b[i][k];
  }
  return out;
}

// Inverse over GF(2) of a unit lower-triangular matrix.
BitMatrix invert_lower(const BitMatrix& b) {
  const std::size_t n = b.size();
  BitMatrix inv = identity_bits(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < i; ++k) {
      if (!b[i][k]) continue;
      for (std::size_t c = 0; c <= k; ++c) inv[i][c] ^= inv[k][c];
    }
  }
  return inv;
}

BitMatrix transform_bits(Mapping m, std::size_t n) {
  switch (m) {
    case Mapping::JordanWigner: return identity_bits(n);
    case Mapping::Parity: return lower_ones(n);
    case Mapping::BravyiKitaev: return bravyi_kitaev_bits(n);
  }
  return identity_bits(n);
}

}  // namespace

CliffordRep clifford_rep(int d) {
  if (d < 1 || d > 3) throw std::invalid_argument("clifford_rep supports 1 <= d <= 3");
  const cplx i(0, 1);
  Eigen::Matrix2cd sx, sy, sz, id;
  sx << 0, 1, 1, 0;
  sy << 0, -i, i, 0;
  sz << 1, 0, 0, -1;
  id.setIdentity();
  CliffordRep rep;
  rep.d = d;
  if (d <= 2) {
    rep.n_spinor = 2;
    rep.gammas = {sz, i * sx};
    if (d == 2) rep.gammas.push_back(i * sy);
    return rep;
  }
  rep.n_spinor = 4;
  Eigen::MatrixXcd g0 = Eigen::MatrixXcd::Zero(4, 4);
  g0.topLeftCorner(2, 2) = id;
  g0.bottomRightCorner(2, 2) = -id;
  rep.gammas.push_back(g0);
  for (const Eigen::Matrix2cd& s : {sx, sy, sz}) {
    Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(4, 4);
    g.topRightCorner(2, 2) = s;
    g.bottomLeftCorner(2, 2) = -s;
    rep.gammas.push_back(g);
  }
  return rep;
}

std::string to_string(Mapping m) {
  switch (m) {
    case Mapping::JordanWigner: return "jw";
    case Mapping::Parity: return "parity";
    case Mapping::BravyiKitaev: return "bk";
  }
  return "jw";
}

Mapping mapping_from_string(const std::string& s) {
  if (s == "jw") return Mapping::JordanWigner;
  if (s == "parity") return Mapping::Parity;
  if (s == "bk") return Mapping::BravyiKitaev;
  throw ConfigError("mapping", "unknown mapping '" + s + "'");
}

namespace {

LadderSets sets_from(const BitMatrix& b, const BitMatrix& binv, std::size_t j) {
  const std::size_t n = b.size();
  LadderSets s;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != j && b[i][j]) s.update.push_back(i);
    if (i != j && binv[j][i]) s.flip.push_back(i);
  }
  if (j > 0) {
    // Row j-1 of (lower_ones * B^-1) gives the qubits carrying sum_{k<j} n_k.
    std::vector<unsigned char> row(n, 0);
    for (std::size_t k = 0; k < j; ++k) {
      for (std::size_t c = 0; c < n; ++c) row[c] ^= binv[k][c];
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (row[c]) s.parity.push_back(c);
    }
  }
  for (auto p : s.parity) {
    bool in_flip = false;
    for (auto f : s.flip) in_flip |= (f == p);
    if (!in_flip) s.remainder.push_back(p);
  }
  return s;
}

}  // namespace

namespace {

std::vector<int> apply_bits(const BitMatrix& b, const std::vector<int>& v) {
  std::vector<int> out(v.size(), 0);
  for (std::size_t i = 0; i < v.size(); ++i) {
    int acc = 0;
    for (std::size_t k = 0; k < v.size(); ++k) acc ^= b[i][k] & (v[k] & 1);
    out[i] = acc;
  }
  return out;
}

}  // namespace

std::vector<int> qubits_from_occupations(Mapping m, const std::vector<int>& occ) {
  return apply_bits(transform_bits(m, occ.size()), occ);
}

std::vector<int> occupations_from_qubits(Mapping m, const std::vector<int>& qubits) {
  return apply_bits(invert_lower(transform_bits(m, qubits.size())), qubits);
}

LadderSets ladder_sets(Mapping m, std::size_t j, std::size_t n) {
  if (j >= n) throw std::out_of_range("mode out of range");
  const BitMatrix b = transform_bits(m, n);
  return sets_from(b, invert_lower(b), j);
}

FermionEncoder::FermionEncoder(Mapping m, std::size_t n_modes, std::size_t n_total, std::size_t offset)
    : mapping_(m), n_modes_(n_modes), n_total_(n_total) {
  if (offset + n_modes > n_total) throw std::invalid_argument("fermion register out of range");
  const BitMatrix b = transform_bits(m, n_modes);
  const BitMatrix binv = invert_lower(b);
  a_.reserve(n_modes);
  adag_.reserve(n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) {
    const LadderSets s = sets_from(b, binv, j);
    PauliWord w1(n_total), w2(n_total);
    for (auto q : s.update) {
      w1.set(offset + q, Axis::X);
      w2.set(offset + q, Axis::X);
    }
    w1.set(offset + j, Axis::X);
    w2.set(offset + j, Axis::Y);
    for (auto q : s.parity) w1.set(offset + q, Axis::Z);
    for (auto q : s.remainder) w2.set(offset + q, Axis::Z);
    PauliOperator a(n_total, {PauliString(0.5, w1), PauliString(cplx(0, 0.5), w2)});
    adag_.push_back(a.dagger());
    a_.push_back(std::move(a));
  }
}

void FermionEncoder::check(std::size_t j) const {
  if (j >= n_modes_) throw std::out_of_range("mode out of range");
}

const PauliOperator& FermionEncoder::annihilation(std::size_t j) const {
  check(j);
  return a_[j];
}

const PauliOperator& FermionEncoder::creation(std::size_t j) const {
  check(j);
  return adag_[j];
}

PauliOperator FermionEncoder::bilinear(std::size_t i, std::size_t j, cplx c) const {
  check(i);
  check(j);
  PauliAccumulator acc(n_total_);
  acc.add_product(adag_[i], a_[j], c);
  return acc.finish();
}

PauliOperator map_bilinear(Mapping m, std::size_t n_modes, std::size_t i, std::size_t j, cplx c) {
  return FermionEncoder(m, n_modes).bilinear(i, j, c);
}

AnticommutatorReport mapped_anticommutator_check(Mapping m, std::size_t n) {
  const FermionEncoder enc(m, n);
  AnticommutatorReport r;
  const PauliOperator id = PauliOperator::identity(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      ++r.pairs_checked;
      const PauliOperator mixed = anticommutator(enc.annihilation(i), enc.creation(j));
      const PauliOperator expect = i == j ? id : PauliOperator(n);
      if (!(simplify(mixed - expect).empty())) {
        r.violations.push_back("{a_" + std::to_string(i) + ", a^dag_" + std::to_string(j) + "}");
      }
      const PauliOperator aa = anticommutator(enc.annihilation(i), enc.annihilation(j));
      if (!aa.empty()) {
        r.violations.push_back("{a_" + std::to_string(i) + ", a_" + std::to_string(j) + "}");
      }
    }
  }
  return r;
}

}  // namespace lgt
