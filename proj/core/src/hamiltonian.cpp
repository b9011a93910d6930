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

#include "lgt/hamiltonian.hpp"

#include <cmath>
#include <stdexcept>

#include "lgt/errors.hpp"
#include "lgt/parallel.hpp"

namespace lgt {
namespace {

// Builds one operator per item in parallel, then sums them in item order so
// the result does not depend on scheduling.
template <typename Fn>
PauliOperator sum_over(std::size_t n_items, std::size_t n_qubits, Fn&& make) {
  std::vector<PauliOperator> parts(n_items);
  parallel_for(n_items, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) parts[i] = make(i);
  });
  PauliAccumulator acc(n_qubits);
  for (const auto& p : parts) acc.add(p);
  return acc.finish();
}

}  // namespace

void ModelParams::validate() const {
  if (!(a > 0)) throw ConfigError("params.a", "lattice spacing must be positive");
  if (!(e > 0)) throw ConfigError("params.e", "charge unit must be positive");
  if (lambda < 0) throw ConfigError("params.lambda_gauss", "must be >= 0");
}

LatticeModel::LatticeModel(ModelSpec spec) : spec_(std::move(spec)), lattice_(spec_.lattice) {
  spec_.params.validate();
  rep_ = clifford_rep(spec_.lattice.d);
  layout_ = lgt::layout(spec_.lattice, rep_.n_spinor, spec_.encoding, spec_.S);
  const auto n_modes = static_cast<std::size_t>(layout_.n_fermionic);
  fermions_ = std::make_unique<FermionEncoder>(spec_.mapping, n_modes, n_qubits(), 0);
  for (int k = 0; k < spec_.lattice.d; ++k) {
    links_.push_back(qlm_link(spec_.S, spec_.encoding, spec_.params.theta_for(k), spec_.params.e, spec_.padding));
  }
}

PauliOperator LatticeModel::on_link(const PauliOperator& local, std::size_t l) const {
  return local.embed(static_cast<std::size_t>(layout_.link_offset(l)), n_qubits());
}

PauliOperator LatticeModel::number(std::size_t mode, bool for_gauss) const {
  if (for_gauss && spec_.params.gauss_charge == GaussCharge::QubitZ) {
    PauliWord z(n_qubits());
    z.set(mode, Axis::Z);
    return PauliOperator(n_qubits(), {PauliString(0.5, PauliWord(n_qubits())), PauliString(-0.5, z)});
  }
  return fermions_->number(mode);
}

double LatticeModel::prefactor() const {
  return spec_.params.lattice_prefactor ? std::pow(spec_.params.a, spec_.lattice.d) : 1.0;
}

PauliOperator build_mass(const LatticeModel& model) {
  const auto& p = model.params();
  const auto& g0 = model.clifford().gammas[0];
  const int nsp = model.layout().n_spinor;
  const double coeff = model.prefactor() * (p.m + p.r * model.lattice().spec().d / p.a);
  return sum_over(model.lattice().n_sites(), model.n_qubits(), [&](std::size_t x) {
    PauliAccumulator acc(model.n_qubits());
    for (int al = 0; al < nsp; ++al) {
      for (int be = 0; be < nsp; ++be) {
        const cplx g = g0(al, be);
        if (std::abs(g) < kDropTol) continue;
        acc.add(model.fermions().bilinear(model.layout().mode(x, al), model.layout().mode(x, be)),
                coeff * g);
      }
    }
    return acc.finish();
  });
}

PauliOperator build_hopp_wilson(const LatticeModel& model) {
  const auto& p = model.params();
  const auto& rep = model.clifford();
  const int nsp = model.layout().n_spinor;
  const std::size_t n = model.n_qubits();
  const double coeff = model.prefactor() / (2.0 * p.a);
  const cplx i(0, 1);
  std::vector<Eigen::MatrixXcd> gmix;
  for (int k = 1; k <= rep.d; ++k) {
    gmix.push_back(rep.gammas[0] *
                   (i * rep.gammas[static_cast<std::size_t>(k)] +
                    p.r * Eigen::MatrixXcd::Identity(nsp, nsp)));
  }
  const auto& links = model.lattice().links();
  return sum_over(links.size(), n, [&](std::size_t l) {
    const Link& link = links[l];
    const PauliOperator u = model.on_link(model.link_encoding(link.dir).U, l);
    PauliAccumulator acc(n);
    for (int al = 0; al < nsp; ++al) {
      for (int be = 0; be < nsp; ++be) {
        const cplx g = gmix[static_cast<std::size_t>(link.dir)](al, be);
        if (std::abs(g) < kDropTol) continue;
        const auto& adag = model.fermions().creation(model.layout().mode(link.site, al));
        const auto& a = model.fermions().annihilation(model.layout().mode(link.head, be));
        const PauliOperator term = cplx(coeff) * g * ((adag * u) * a);
        acc.add(term);
        acc.add(term.dagger());
      }
    }
    return acc.finish();
  });
}

PauliOperator build_electric(const LatticeModel& model) {
  const auto& p = model.params();
  const double norm = p.electric_norm == ElectricNorm::Field ? p.e * p.e : 1.0;
  const double coeff = model.prefactor() * 0.5 * p.e * p.e * norm;
  const std::size_t n = model.n_qubits();
  const auto& links = model.lattice().links();
  PauliOperator out = sum_over(links.size(), n, [&](std::size_t l) {
    return cplx(coeff) * model.on_link(model.link_encoding(links[l].dir).E_sq, l);
  });
  // Static boundary links carry fixed flux: a constant energy.
  double constant = 0.0;
  for (const auto& b : model.lattice().boundary_fluxes()) constant += b.flux * b.flux;
  if (constant != 0.0) out += PauliOperator::identity(n, coeff * constant);
  return out;
}

PauliOperator build_plaquette(const LatticeModel& model) {
  const auto& p = model.params();
  const std::size_t n = model.n_qubits();
  const double coeff = -model.prefactor() / (4.0 * p.e * p.e);
  const auto& plaqs = model.lattice().plaquettes();
  return sum_over(plaqs.size(), n, [&](std::size_t i) {
    const Plaquette& q = plaqs[i];
    const auto& ek = model.link_encoding(q.k);
    const auto& ej = model.link_encoding(q.j);
    const PauliOperator loop = ((model.on_link(ek.U, q.l1) * model.on_link(ej.U, q.l2)) *
                                model.on_link(ek.Udag, q.l3)) *
                               model.on_link(ej.Udag, q.l4);
    PauliAccumulator acc(n);
    acc.add(loop, coeff);
    acc.add(loop.dagger(), coeff);
    return acc.finish();
  });
}

GaussTerms build_gauss(const LatticeModel& model) {
  const auto& p = model.params();
  const auto& lat = model.lattice();
  const std::size_t n = model.n_qubits();
  const int nsp = model.layout().n_spinor;
  GaussTerms g;
  g.sites.resize(lat.n_sites());
  parallel_for(lat.n_sites(), [&](std::size_t b, std::size_t e) {
    for (std::size_t x = b; x < e; ++x) {
      PauliAccumulator acc(n);
      const Coord c = lat.coord(x);
      for (int k = 0; k < lat.spec().d; ++k) {
        const auto& enc = model.link_encoding(k);
        const std::size_t in = lat.link_into(c, k);
        const std::size_t out = lat.link_index(c, k);
        if (in != Lattice::npos) acc.add(model.on_link(enc.E, in), 1.0);
        if (out != Lattice::npos) acc.add(model.on_link(enc.E, out), -1.0);
      }
      double constant = 0.0;
      for (const auto& bf : lat.boundary_fluxes()) {
        if (bf.site == x) constant += (bf.incoming ? 1.0 : -1.0) * p.e * bf.flux;
      }
      // Charge e (psi^dag psi - n_spinor/2) measured from the half-filled sea.
      for (int al = 0; al < nsp; ++al) {
        acc.add(model.number(model.layout().mode(x, al), true), p.e);
      }
      constant -= p.e * nsp / 2.0;
      acc.add(PauliWord(n), constant);
      g.sites[x] = acc.finish();
    }
  });
  g.h_gauss = sum_over(g.sites.size(), n, [&](std::size_t x) { return g.sites[x] * g.sites[x]; });
  return g;
}

cplx HamiltonianTerms::drop_identity() {
  const cplx c = total.drop_identity();
  identity_shift += c;
  return c;
}

HamiltonianTerms assemble(const LatticeModel& model) {
  HamiltonianTerms t;
  t.mass = build_mass(model);
  t.hopp_wilson = build_hopp_wilson(model);
  t.elec = build_electric(model);
  t.plaq = build_plaquette(model);
  GaussTerms g = build_gauss(model);
  t.gauss = std::move(g.h_gauss);
  t.gauss_sites = std::move(g.sites);
  const std::size_t n = model.n_qubits();
  PauliAccumulator base(n);
  base.add(t.mass);
  base.add(t.hopp_wilson);
  base.add(t.elec);
  base.add(t.plaq);
  PauliAccumulator total = base, counted = base;
  total.add(t.gauss, model.params().lambda);
  counted.add(t.gauss);
  t.total = total.finish();
  t.counted = counted.finish();
  return t;
}

}  // namespace lgt
