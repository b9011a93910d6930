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


#include <cmath>

#include <gtest/gtest.h>

#include "lgt/errors.hpp"
#include "lgt/hamiltonian.hpp"
#include "lgt/parallel.hpp"
#include "oracles.hpp"

namespace {

using lgt::cplx;
using lgt::Encoding;
using lgt::LogPadding;
using lgt::Mapping;
using oracle::Mat;

lgt::ModelSpec chain(int n_sites, lgt::Boundary b, double S, Encoding enc = Encoding::Logarithmic,
                     Mapping map = Mapping::JordanWigner) {
  lgt::ModelSpec s;
  s.lattice.d = 1;
  s.lattice.extents = {n_sites};
  s.lattice.boundary = b;
  s.S = S;
  s.encoding = enc;
  s.mapping = map;
  s.params.m = 0.7;
  s.params.r = 1.0;
  s.params.a = 0.8;
  s.params.e = 1.1;
  s.params.theta = {0.3};
  s.params.lambda = 1.3;
  return s;
}

// Two-site open chain, one spin-1/2 link, built from Kronecker products.
// Qubits 0..3 are modes (site, component), qubit 4 is the link.
Mat dense_two_site(const lgt::ModelParams& p) {
  const int n = 5;
  const Mat I = oracle::identity(n);
  Mat a[4];
  for (int j = 0; j < 4; ++j) a[j] = oracle::jw_annihilation(j, n);
  auto num = [&](int j) -> Mat { return a[j].adjoint() * a[j]; };
  Mat up(2, 2);
  up << 0, 1, 0, 0;
  up /= std::sqrt(0.75);  // S+ / sqrt(S (S + 1))
  const Mat U = oracle::on(up, 4, n);
  const Mat sz = oracle::on(oracle::pauli('Z') / 2.0, 4, n);
  const Mat E = p.e * (sz + p.theta[0] * I);

  const double pref = p.a;
  Mat h = pref * (p.m + p.r / p.a) * (num(0) - num(1) + num(2) - num(3));

  // gamma0 (i gamma1 + r) with gamma0 = Z, gamma1 = i X.
  Mat g0 = oracle::pauli('Z'), g1 = cplx(0, 1) * oracle::pauli('X');
  const Mat mix = g0 * (cplx(0, 1) * g1 + p.r * Mat::Identity(2, 2));
  Mat hop = Mat::Zero(I.rows(), I.cols());
  for (int al = 0; al < 2; ++al) {
    for (int be = 0; be < 2; ++be) hop += mix(al, be) * a[al].adjoint() * U * a[2 + be];
  }
  h += pref / (2 * p.a) * (hop + hop.adjoint());

  h += pref * 0.5 * p.e * p.e * E * E;

  const Mat G0 = p.e * (num(0) + num(1) - I) - E;
  const Mat G1 = p.e * (num(2) + num(3) - I) + E;
  h += p.lambda * (G0 * G0 + G1 * G1);
  return h;
}

TEST(Hamiltonian, TwoSiteChainMatchesDenseOracle) {
  const lgt::LatticeModel model(chain(2, lgt::Boundary::Open, 0.5));
  ASSERT_EQ(model.n_qubits(), 5u);
  const lgt::HamiltonianTerms t = lgt::assemble(model);
  EXPECT_LT(oracle::max_abs(lgt::to_matrix(t.total) - dense_two_site(model.params())), 1e-12);
}

TEST(Hamiltonian, EveryPieceIsHermitian) {
  for (double S : {0.5, 1.0, 1.5}) {
    for (Encoding enc : {Encoding::Logarithmic, Encoding::Linear}) {
      const lgt::LatticeModel model(chain(3, lgt::Boundary::Periodic, S, enc));
      const lgt::HamiltonianTerms t = lgt::assemble(model);
      for (const auto* op : {&t.mass, &t.hopp_wilson, &t.elec, &t.plaq, &t.gauss, &t.total, &t.counted}) {
        EXPECT_TRUE(op->is_hermitian(1e-12)) << S;
      }
      for (const auto& g : t.gauss_sites) EXPECT_TRUE(g.is_hermitian(1e-12));
    }
  }
}

TEST(Hamiltonian, MappingsGiveTheSameSpectrum) {
  Eigen::VectorXd ref;
  for (Mapping m : {Mapping::JordanWigner, Mapping::Parity, Mapping::BravyiKitaev}) {
    const lgt::LatticeModel model(chain(2, lgt::Boundary::Periodic, 0.5, Encoding::Logarithmic, m));
    const Eigen::VectorXd ev = Eigen::SelfAdjointEigenSolver<Mat>(lgt::to_matrix(lgt::assemble(model).total)).eigenvalues();
    if (ref.size() == 0) {
      ref = ev;
    } else {
      EXPECT_LT((ev - ref).cwiseAbs().maxCoeff(), 1e-10);
    }
  }
}

// Gauss operators commute with every physical piece. Without padding this
// holds on the whole register.
TEST(Hamiltonian, GaussLawCommutesWithoutPadding) {
  std::vector<lgt::ModelSpec> specs{chain(3, lgt::Boundary::Periodic, 0.5), chain(3, lgt::Boundary::Periodic, 1.5),
                                    chain(4, lgt::Boundary::Open, 0.5, Encoding::Logarithmic, Mapping::BravyiKitaev)};
  lgt::ModelSpec sq;
  sq.lattice.d = 2;
  sq.lattice.extents = {2, 2};
  sq.lattice.boundary = lgt::Boundary::Periodic;
  sq.S = 0.5;
  sq.params.theta = {0.2, -0.4};
  specs.push_back(sq);
  lgt::ModelSpec sb = chain(3, lgt::Boundary::Open, 0.5);
  sb.lattice.static_links = {{{-1}, 0, 0.5}, {{2}, 0, 0.5}};
  specs.push_back(sb);
  for (const auto& s : specs) {
    const lgt::LatticeModel model(s);
    const lgt::HamiltonianTerms t = lgt::assemble(model);
    for (const auto& g : t.gauss_sites) {
      EXPECT_LT(lgt::commutator(t.total, g).max_abs_coeff(), 1e-12);
      for (const auto& g2 : t.gauss_sites) EXPECT_LT(lgt::commutator(g, g2).max_abs_coeff(), 1e-12);
    }
  }
}

// Projector onto register states whose link registers hold physical values.
Mat physical_projector(const lgt::LatticeModel& model) {
  const std::size_t n = model.n_qubits();
  const auto& lay = model.layout();
  const int d = lgt::spin_dim(model.spec().S);
  const std::size_t off = lgt::log_offset(model.spec().S, model.spec().padding);
  const Eigen::Index dim = Eigen::Index{1} << n;
  Mat p = Mat::Zero(dim, dim);
  for (Eigen::Index i = 0; i < dim; ++i) {
    bool ok = true;
    for (std::size_t l = 0; l < model.lattice().links().size(); ++l) {
      std::uint64_t v = 0;
      int ones = 0;
      for (std::size_t k = 0; k < lay.qubits_per_link; ++k) {
        const std::size_t q = lay.link_offset(l) + k;
        const int bit = static_cast<int>((static_cast<std::uint64_t>(i) >> (n - 1 - q)) & 1u);
        v = (v << 1) | static_cast<std::uint64_t>(bit);
        ones += bit;
      }
      if (model.spec().encoding == Encoding::Linear) {
        ok = ok && ones == 1;
      } else {
        ok = ok && v >= off && v < off + static_cast<std::uint64_t>(d);
      }
    }
    if (ok) p(i, i) = 1;
  }
  return p;
}

TEST(Hamiltonian, GaussLawOnThePhysicalSubspace) {
  struct Case {
    Encoding enc;
    LogPadding pad;
  };
  for (Case c : {Case{Encoding::Logarithmic, LogPadding::Trailing}, Case{Encoding::Logarithmic, LogPadding::Leading},
                 Case{Encoding::Linear, LogPadding::Trailing}}) {
    lgt::ModelSpec s = chain(2, lgt::Boundary::Open, 1.0, c.enc);
    s.padding = c.pad;
    const lgt::LatticeModel model(s);
    ASSERT_LE(model.n_qubits(), 10u);
    const lgt::HamiltonianTerms t = lgt::assemble(model);
    const Mat P = physical_projector(model);
    const Mat H = lgt::to_matrix(t.total);
    // H keeps the physical subspace invariant ...
    EXPECT_LT(oracle::max_abs((Mat::Identity(P.rows(), P.cols()) - P) * H * P), 1e-12);
    // ... and commutes with every G_x there.
    for (const auto& g : t.gauss_sites) {
      const Mat G = lgt::to_matrix(g);
      EXPECT_LT(oracle::max_abs(P * (H * G - G * H) * P), 1e-12);
    }
  }
}

TEST(Hamiltonian, SingleSiteIsMassOnly) {
  lgt::ModelSpec s = chain(1, lgt::Boundary::Open, 0.5);
  const lgt::LatticeModel model(s);
  EXPECT_EQ(model.n_qubits(), 2u);
  const lgt::HamiltonianTerms t = lgt::assemble(model);
  EXPECT_TRUE(t.hopp_wilson.empty());
  EXPECT_TRUE(t.plaq.empty());
  EXPECT_TRUE(t.elec.empty());
  // a (m + r/a) (n0 - n1) = a (m + r/a) (Z1 - Z0) / 2
  const double c = s.params.a * (s.params.m + s.params.r / s.params.a) / 2;
  EXPECT_EQ(t.mass.size(), 2u);
  EXPECT_NEAR(t.mass.coeff("ZI").real(), -c, 1e-14);
  EXPECT_NEAR(t.mass.coeff("IZ").real(), c, 1e-14);
}

lgt::ModelSpec vacuum_decay_model() {
  lgt::ModelSpec s = chain(3, lgt::Boundary::Periodic, 1.0);
  s.padding = LogPadding::Leading;
  s.params.m = 0.5;
  s.params.a = 0.5;
  s.params.e = std::sqrt(2.0);
  s.params.theta = {0.0};
  s.params.lambda = 10;
  return s;
}

TEST(Hamiltonian, VacuumDecayStringCount) {
  const lgt::LatticeModel model(vacuum_decay_model());
  EXPECT_EQ(model.n_qubits(), 12u);
  const lgt::HamiltonianTerms t = lgt::assemble(model);
  EXPECT_EQ(t.counted.size(), 466u);
  lgt::ModelSpec trailing = vacuum_decay_model();
  trailing.padding = LogPadding::Trailing;
  EXPECT_EQ(lgt::assemble(lgt::LatticeModel(trailing)).counted.size(), 466u);
}

TEST(Hamiltonian, StringBreakingStringCount) {
  lgt::ModelSpec s = chain(3, lgt::Boundary::Open, 1.0);
  s.padding = LogPadding::Leading;
  s.params.m = 0.4;
  s.params.a = 0.4;
  s.params.e = 2;
  s.params.theta = {0.0};
  s.lattice.static_links = {{{-1}, 0, 1.0}, {{2}, 0, 1.0}};
  const lgt::LatticeModel model(s);
  EXPECT_EQ(model.n_qubits(), 10u);
  EXPECT_EQ(lgt::assemble(model).counted.size(), 305u);
}

TEST(Hamiltonian, DropIdentityRecordsTheShift) {
  lgt::HamiltonianTerms t = lgt::assemble(lgt::LatticeModel(vacuum_decay_model()));
  const std::size_t before = t.total.size();
  const cplx id = t.total.coeff(lgt::PauliWord(t.total.n_qubits()));
  ASSERT_NE(std::abs(id), 0.0);
  EXPECT_EQ(t.drop_identity(), id);
  EXPECT_EQ(t.identity_shift, id);
  EXPECT_EQ(t.total.size(), before - 1);
  EXPECT_EQ(t.drop_identity(), cplx(0));
  EXPECT_EQ(t.identity_shift, id);
}

TEST(Hamiltonian, ResultDoesNotDependOnWorkerCount) {
  const unsigned saved = lgt::worker_count();
  lgt::ModelSpec s = vacuum_decay_model();
  s.lattice.extents = {5};
  lgt::set_worker_count(1);
  const std::string one = lgt::assemble(lgt::LatticeModel(s)).total.to_json();
  lgt::set_worker_count(4);
  const std::string four = lgt::assemble(lgt::LatticeModel(s)).total.to_json();
  lgt::set_worker_count(saved);
  EXPECT_EQ(one, four);
}

TEST(Hamiltonian, RejectsBadParameters) {
  lgt::ModelSpec s = chain(2, lgt::Boundary::Open, 0.5);
  s.params.a = 0;
  EXPECT_THROW(lgt::LatticeModel{s}, lgt::ConfigError);
  s = chain(2, lgt::Boundary::Open, 0.5);
  s.params.lambda = -1;
  EXPECT_THROW(lgt::LatticeModel{s}, lgt::ConfigError);
}

}  // namespace
