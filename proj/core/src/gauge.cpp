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

#include "lgt/gauge.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <tuple>

#include "lgt/errors.hpp"

namespace lgt {

SpinMatrices spin_matrices(double S) {
  SpinMatrices s;
  s.S = S;
  s.dim = spin_dim(S);
  const int d = s.dim;
  s.Sz = Eigen::MatrixXcd::Zero(d, d);
  s.Splus = Eigen::MatrixXcd::Zero(d, d);
  for (int k = 0; k < d; ++k) s.Sz(k, k) = S - k;
  for (int k = 1; k < d; ++k) {
    const double m = S - k;
    s.Splus(k - 1, k) = std::sqrt(S * (S + 1) - m * (m + 1));
  }
  const Eigen::MatrixXcd sm = s.Splus.adjoint();
  s.Sx = 0.5 * (s.Splus + sm);
  s.Sy = cplx(0, -0.5) * (s.Splus - sm);
  return s;
}

std::string to_string(LogPadding p) { return p == LogPadding::Trailing ? "trailing" : "leading"; }

LogPadding log_padding_from_string(const std::string& s) {
  if (s == "trailing") return LogPadding::Trailing;
  if (s == "leading") return LogPadding::Leading;
  throw std::invalid_argument("unknown padding '" + s + "'");
}

namespace {

Eigen::Index register_dim(Eigen::Index d) {
  int n = 0;
  while ((Eigen::Index{1} << n) < d) ++n;
  if (n < 1) n = 1;
  return Eigen::Index{1} << n;
}

}  // namespace

std::uint64_t log_offset(double S, LogPadding p) {
  const int d = spin_dim(S);
  return p == LogPadding::Leading ? static_cast<std::uint64_t>(register_dim(d) - d) : 0;
}

PauliOperator encode_log(const Eigen::MatrixXcd& m, LogPadding p) {
  const auto d = m.rows();
  const Eigen::Index full = register_dim(d);
  Eigen::MatrixXcd e = Eigen::MatrixXcd::Identity(full, full);
  if (p == LogPadding::Trailing) {
    e.topLeftCorner(d, d) = m;
  } else {
    e.bottomRightCorner(d, d) = m;
  }
  return decompose_matrix(e);
}

PauliOperator encode_lin(const Eigen::MatrixXcd& m) {
  const auto d = static_cast<std::size_t>(m.rows());
  // sigma+ = |1><0| = (X - iY)/2, sigma- = (X + iY)/2, n = (I - Z)/2.
  auto local = [d](std::size_t q, Axis a, cplx c) {
    PauliWord w(d);
    w.set(q, a);
    return PauliString(c, w);
  };
  PauliAccumulator acc(d);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      const cplx v = m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
      if (std::abs(v) < kDropTol) continue;
      if (a == b) {
        acc.add(PauliWord(d), 0.5 * v);
        acc.add(local(a, Axis::Z, 1).axes, -0.5 * v);
        continue;
      }
      const PauliOperator up(d, {local(a, Axis::X, 0.5), local(a, Axis::Y, cplx(0, -0.5))});
      const PauliOperator down(d, {local(b, Axis::X, 0.5), local(b, Axis::Y, cplx(0, 0.5))});
      acc.add_product(up, down, v);
    }
  }
  return acc.finish();
}

PauliOperator encode_lin(double S, SpinOp which) {
  const SpinMatrices s = spin_matrices(S);
  switch (which) {
    case SpinOp::X: return encode_lin(s.Sx);
    case SpinOp::Y: return encode_lin(s.Sy);
    case SpinOp::Z: return encode_lin(s.Sz);
    case SpinOp::Plus: return encode_lin(s.Splus);
  }
  return {};
}

namespace {

EncodedLink build_link(double S, Encoding enc, double theta, double e, LogPadding pad) {
  const SpinMatrices s = spin_matrices(S);
  if (enc == Encoding::Logarithmic && s.dim > kMaxLogSpinDim) {
    throw ResourceLimitError("logarithmic encoding limited to d_S <= 1024");
  }
  EncodedLink l;
  l.encoding = enc;
  l.padding = enc == Encoding::Logarithmic ? pad : LogPadding::Trailing;
  l.S = S;
  l.theta = theta;
  l.e = e;
  l.n_qubits = static_cast<std::size_t>(qubits_per_link(S, enc));
  const double norm = 1.0 / std::sqrt(S * (S + 1));
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(s.dim, s.dim);
  const PauliOperator one = PauliOperator::identity(l.n_qubits);
  if (enc == Encoding::Logarithmic) {
    const PauliOperator sz = encode_log(s.Sz, pad);
    l.E = cplx(e) * (sz + cplx(theta) * one);
    // Sx and Sy are padded separately, which leaves the (1+i) terms on the
    // unphysical block.
    l.U = cplx(norm) * (encode_log(s.Sx, pad) + cplx(0, 1) * encode_log(s.Sy, pad));
    const Eigen::MatrixXcd shifted = s.Sz + theta * id;
    l.E_sq = encode_log(shifted * shifted, pad);
  } else {
    const PauliOperator sz = encode_lin(s.Sz) + cplx(theta) * one;
    l.E = cplx(e) * sz;
    l.U = cplx(norm) * encode_lin(s.Splus);
    l.E_sq = sz * sz;
  }
  l.Udag = l.U.dagger();
  return l;
}

}  // namespace

std::shared_ptr<const EncodedLink> qlm_link(double S, Encoding enc, double theta, double e,
                                            LogPadding padding) {
  if (enc == Encoding::Linear) padding = LogPadding::Trailing;
  using Key = std::tuple<double, int, double, double, int>;
  static std::map<Key, std::shared_ptr<const EncodedLink>> cache;
  static std::shared_mutex mu;
  const Key key{S, static_cast<int>(enc), theta, e, static_cast<int>(padding)};
  {
    std::shared_lock lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto link = std::make_shared<const EncodedLink>(build_link(S, enc, theta, e, padding));
  std::unique_lock lock(mu);
  return cache.emplace(key, std::move(link)).first->second;
}

Eigen::MatrixXcd physical_projection(const Eigen::MatrixXcd& full, int dim, Encoding enc,
                                     LogPadding padding) {
  if (enc == Encoding::Logarithmic) {
    return padding == LogPadding::Trailing ? Eigen::MatrixXcd(full.topLeftCorner(dim, dim))
                                           : Eigen::MatrixXcd(full.bottomRightCorner(dim, dim));
  }
  // One-hot state a has qubit a set; qubit 0 is the most significant bit.
  Eigen::MatrixXcd out(dim, dim);
  auto index = [dim](int a) { return Eigen::Index{1} << (dim - 1 - a); };
  for (int a = 0; a < dim; ++a) {
    for (int b = 0; b < dim; ++b) out(a, b) = full(index(a), index(b));
  }
  return out;
}

SpinPauliCounts spin_pauli_counts(double S, Encoding enc) {
  const SpinMatrices s = spin_matrices(S);
  SpinPauliCounts c;
  if (enc == Encoding::Logarithmic) {
    if (s.dim > kMaxLogSpinDim) throw ResourceLimitError("d_S above enumeration limit 1024");
    const PauliOperator x = encode_log(s.Sx), y = encode_log(s.Sy);
    c.sx = x.size();
    c.sy = y.size();
    c.sz = encode_log(s.Sz).size();
    c.splus = (x + cplx(0, 1) * y).size();
  } else {
    c.sx = encode_lin(s.Sx).size();
    c.sy = encode_lin(s.Sy).size();
    c.sz = encode_lin(s.Sz).size();
    c.splus = encode_lin(s.Splus).size();
  }
  return c;
}

ScalingFit fit_spin_counts(const std::vector<int>& dims, const std::vector<double>& counts) {
  if (dims.size() != counts.size() || dims.size() < 3) {
    throw std::invalid_argument("fit needs at least three points");
  }
  const auto n = static_cast<Eigen::Index>(dims.size());
  Eigen::MatrixXd a(n, 3);
  Eigen::VectorXd y(n);
  const double p = std::log2(3.0);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double d = dims[static_cast<std::size_t>(i)];
    a(i, 0) = std::pow(d, p);
    a(i, 1) = d;
    a(i, 2) = 1.0;
    y(i) = counts[static_cast<std::size_t>(i)];
  }
  const Eigen::Vector3d sol = a.colPivHouseholderQr().solve(y);
  return {sol(0), sol(1), sol(2)};
}

}  // namespace lgt
