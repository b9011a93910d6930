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

#include "lgt/resources.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "lgt/gauge.hpp"

namespace lgt {
namespace {

std::uint64_t count_nonzero(const Eigen::MatrixXcd& m) {
  std::uint64_t n = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) n += std::abs(m(i, j)) > kDropTol;
  }
  return n;
}

// Number of Z-strings in a diagonal operator on 2^q levels, via an in-place
// Walsh-Hadamard transform of the diagonal.
std::uint64_t diagonal_string_count(std::vector<double> diag) {
  const std::size_t n = diag.size();
  for (std::size_t h = 1; h < n; h <<= 1) {
    for (std::size_t i = 0; i < n; i += 2 * h) {
      for (std::size_t j = i; j < i + h; ++j) {
        const double a = diag[j], b = diag[j + h];
        diag[j] = a + b;
        diag[j + h] = a - b;
      }
    }
  }
  std::uint64_t c = 0;
  for (double v : diag) c += std::abs(v / static_cast<double>(n)) > kDropTol;
  return c;
}

// Padded diagonal of f(m) for the logarithmic register of a spin-S link.
template <typename F>
std::vector<double> log_diagonal(double S, F&& f) {
  const int d = spin_dim(S);
  const std::size_t dim = std::size_t{1} << qubits_per_link(S, Encoding::Logarithmic);
  std::vector<double> diag(dim, 1.0);
  for (int k = 0; k < d; ++k) diag[static_cast<std::size_t>(k)] = f(S - k);
  return diag;
}

std::uint64_t non_identity(const PauliOperator& op) {
  std::uint64_t n = 0;
  for (const auto& t : op.terms()) n += !t.axes.is_identity();
  return n;
}

std::string format_spin(double S) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", S);
  return buf;
}

}  // namespace

std::uint64_t hopping_formula(const Classification& u) {
  return 2 * (u.n_real + u.n_imag + 2 * u.n_mixed);
}

std::uint64_t plaquette_formula(const Classification& u) {
  const auto r = static_cast<std::int64_t>(u.n_real);
  const auto i = static_cast<std::int64_t>(u.n_imag);
  const auto m = static_cast<std::int64_t>(u.n_mixed);
  const std::int64_t n = r + i + m;
  const std::int64_t v =
      n * n * n * n - 4 * r * i * i * i - 4 * i * r * r * r - m * m * (2 * r * r + 2 * i * i + 8 * i * r);
  return static_cast<std::uint64_t>(v);
}

Classification link_classification(double S, Encoding enc) {
  return classify(qlm_link(S, enc)->U);
}

ExactUnitCounts exact_unit_counts(double S, Encoding enc, std::uint64_t max_plaquette_products) {
  const auto link = qlm_link(S, enc);
  const std::size_t nq = link->n_qubits;
  ExactUnitCounts out;

  const FermionEncoder f(Mapping::JordanWigner, 2, 2 + nq, 0);
  const PauliOperator hop = (f.creation(0) * link->U.embed(2, 2 + nq)) * f.annihilation(1);
  out.counts.hopping = (hop + hop.dagger()).size();
  out.counts.e_op = link->E.size();
  out.counts.e_sq = link->E_sq.size();

  const auto n = static_cast<std::uint64_t>(link->U.size());
  if (n * n * n * n <= max_plaquette_products) {
    const std::size_t total = 4 * nq;
    const PauliOperator u12 = tensor(link->U, link->U);
    const PauliOperator d34 = tensor(link->Udag, link->Udag);
    PauliAccumulator acc(total);
    acc.add(tensor(u12, d34));
    acc.add(tensor(u12, d34).dagger());
    out.counts.plaquette = acc.finish().size();
    out.plaquette_enumerated = true;
  }
  return out;
}

UnitCounts predicted_unit_counts(double S, Encoding enc) {
  const Classification u = link_classification(S, enc);
  UnitCounts c;
  c.hopping = hopping_formula(u);
  c.plaquette = plaquette_formula(u);
  const auto d = static_cast<std::uint64_t>(spin_dim(S));
  if (enc == Encoding::Linear) {
    c.e_op = d % 2 == 0 ? d : d - 1;
    c.e_sq = d % 2 == 0 ? d * (d - 1) / 2 + 1 : (d - 1) * (d - 2) / 2 + 1;
  } else {
    c.e_op = diagonal_string_count(log_diagonal(S, [](double m) { return m; }));
    c.e_sq = diagonal_string_count(log_diagonal(S, [](double m) { return m * m; }));
  }
  return c;
}

TermCounts predict_pauli_counts(const LatticeSpec& spec, double S, Encoding enc,
                                const CliffordRep& rep, double r) {
  const LatticeCounts lc = count(spec);
  const UnitCounts u = predicted_unit_counts(S, enc);
  const int nsp = rep.n_spinor;
  const cplx i(0, 1);
  TermCounts t;
  t.mass = lc.n_sites * count_nonzero(rep.gammas[0]);
  for (int k = 1; k <= rep.d; ++k) {
    const Eigen::MatrixXcd mix =
        rep.gammas[0] * (i * rep.gammas[static_cast<std::size_t>(k)] +
                         r * Eigen::MatrixXcd::Identity(nsp, nsp));
    t.hopping += lc.n_links_dir[static_cast<std::size_t>(k - 1)] * count_nonzero(mix) * u.hopping;
  }
  t.electric = lc.n_links * u.e_sq;
  t.plaquette = lc.n_plaquettes * u.plaquette;
  return t;
}

TermCounts exact_term_counts(const HamiltonianTerms& terms) {
  TermCounts t;
  t.mass = non_identity(terms.mass);
  t.hopping = non_identity(terms.hopp_wilson);
  t.electric = non_identity(terms.elec);
  t.plaquette = non_identity(terms.plaq);
  return t;
}

std::uint64_t cnot_per_trotter_step(const PauliOperator& op) {
  std::uint64_t n = 0;
  for (const auto& t : op.terms()) {
    const std::size_t s = t.axes.support();
    if (s > 0) n += 2 * (s - 1);
  }
  return n;
}

std::vector<std::uint64_t> support_histogram(const PauliOperator& op) {
  std::vector<std::uint64_t> h(op.n_qubits() + 1, 0);
  for (const auto& t : op.terms()) ++h[t.axes.support()];
  return h;
}

QubitReport qubit_report(const LatticeSpec& spec, double S, Encoding enc) {
  const RegisterLayout l = layout(spec, n_spinor(spec.d), enc, S);
  return {l.n_fermionic, l.n_gauge, l.n_total};
}

std::vector<ScalingRow> scaling_table(const LatticeSpec& spec, const std::vector<double>& spins,
                                      const std::vector<Encoding>& encodings,
                                      const ScalingOptions& opt) {
  const CliffordRep rep = clifford_rep(spec.d);
  std::vector<ScalingRow> rows;
  for (Encoding enc : encodings) {
    for (double S : spins) {
      const QubitReport q = qubit_report(spec, S, enc);
      auto row = [&](std::string term, std::optional<std::uint64_t> exact, std::uint64_t formula,
                     std::optional<std::uint64_t> cnot) {
        rows.push_back({std::move(term), S, enc, exact, formula, cnot, q.fermionic, q.gauge});
      };
      if (opt.unit_rows) {
        const UnitCounts p = predicted_unit_counts(S, enc);
        const ExactUnitCounts e = exact_unit_counts(S, enc);
        row("unit_hopping", e.counts.hopping, p.hopping, std::nullopt);
        row("unit_E", e.counts.e_op, p.e_op, std::nullopt);
        row("unit_E2", e.counts.e_sq, p.e_sq, std::nullopt);
        row("unit_plaquette",
            e.plaquette_enumerated ? std::optional<std::uint64_t>(e.counts.plaquette) : std::nullopt,
            p.plaquette, std::nullopt);
      }
      const TermCounts f = predict_pauli_counts(spec, S, enc, rep);
      if (f.total() <= opt.max_exact_strings) {
        ModelSpec ms;
        ms.lattice = spec;
        ms.S = S;
        ms.encoding = enc;
        ms.mapping = opt.mapping;
        const LatticeModel model(ms);
        HamiltonianTerms h = assemble(model);
        h.drop_identity();
        const TermCounts x = exact_term_counts(h);
        row("mass", x.mass, f.mass, cnot_per_trotter_step(h.mass));
        row("hopping", x.hopping, f.hopping, cnot_per_trotter_step(h.hopp_wilson));
        row("electric", x.electric, f.electric, cnot_per_trotter_step(h.elec));
        row("plaquette", x.plaquette, f.plaquette, cnot_per_trotter_step(h.plaq));
        row("total", h.total.size(), f.total(), cnot_per_trotter_step(h.total));
      } else {
        row("mass", std::nullopt, f.mass, std::nullopt);
        row("hopping", std::nullopt, f.hopping, std::nullopt);
        row("electric", std::nullopt, f.electric, std::nullopt);
        row("plaquette", std::nullopt, f.plaquette, std::nullopt);
        row("total", std::nullopt, f.total(), std::nullopt);
      }
    }
  }
  return rows;
}

std::string scaling_csv(const std::vector<ScalingRow>& rows) {
  std::ostringstream os;
  os << "term,S,encoding,n_pauli_exact,n_pauli_formula,n_cnot,n_qubits_fermionic,n_qubits_gauge\n";
  for (const auto& r : rows) {
    os << r.term << ',' << format_spin(r.S) << ',' << to_string(r.encoding) << ',';
    if (r.n_pauli_exact) os << *r.n_pauli_exact;
    os << ',' << r.n_pauli_formula << ',';
    if (r.n_cnot) os << *r.n_cnot;
    os << ',' << r.n_qubits_fermionic << ',' << r.n_qubits_gauge << '\n';
  }
  return os.str();
}

}  // namespace lgt
