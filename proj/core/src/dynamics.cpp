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

#include "lgt/dynamics.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <unordered_map>

#include "lgt/errors.hpp"
#include "lgt/parallel.hpp"

namespace lgt {
namespace {

constexpr std::size_t kGrain = std::size_t{1} << 14;

int parity(std::uint64_t v) {
#if defined(__GNUC__)
  return __builtin_parityll(v);
#else
  return std::popcount(v) & 1;
#endif
}

void check_size(std::size_t n) {
  if (n > kMaxStateQubits) {
    throw ResourceLimitError("state vector of " + std::to_string(n) + " qubits exceeds the limit of " +
                             std::to_string(kMaxStateQubits));
  }
}

void check_match(const PauliWord& w, const StateVector& s) {
  if (w.size() != s.n_qubits()) throw std::invalid_argument("Pauli string length does not match state");
}

std::string format_flux(double f) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "(%g)", f);
  return buf;
}

}  // namespace

StateVector::StateVector(std::size_t n) : n_(n) {
  check_size(n);
  amp_.assign(std::size_t{1} << n, cplx(0.0, 0.0));
  amp_[0] = 1.0;
}

StateVector StateVector::basis(std::size_t n, std::uint64_t index) {
  StateVector s(n);
  if (index >= s.dim()) throw std::out_of_range("basis index out of range");
  s.amp_[0] = 0.0;
  s.amp_[index] = 1.0;
  return s;
}

double StateVector::norm() const {
  double acc = 0;
  for (const auto& a : amp_) acc += std::norm(a);
  return std::sqrt(acc);
}

void StateVector::normalize() {
  const double n = norm();
  if (n == 0) throw std::domain_error("cannot normalize the zero vector");
  for (auto& a : amp_) a /= n;
}

cplx inner(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("state sizes differ");
  cplx acc(0, 0);
  for (std::size_t i = 0; i < a.dim(); ++i) acc += std::conj(a[i]) * b[i];
  return acc;
}

double loschmidt(const StateVector& state0, const StateVector& state_t) {
  return std::min(1.0, std::norm(inner(state0, state_t)));
}

void apply_pauli_exp(StateVector& state, const PauliWord& word, double theta) {
  check_match(word, state);
  const std::uint64_t x = word.x_mask(), z = word.z_mask();
  const double c = std::cos(theta), s = std::sin(theta);
  auto& amp = state.amplitudes();
  if (x == 0) {
    const cplx even(c, -s), odd(c, s);
    parallel_for(amp.size(), [&](std::size_t b, std::size_t e) {
      for (std::size_t r = b; r < e; ++r) amp[r] *= parity(z & r) ? odd : even;
    }, kGrain);
    return;
  }
  // -i sin(theta) i^{#Y}
  const cplx k = cplx(0, -s) * phase_of(word.y_count());
  const int hb = 63 - std::countl_zero(x);
  const std::uint64_t low = (std::uint64_t{1} << hb) - 1;
  // parity(z & t) = parity(z & r) ^ parity(z & x)
  const double flip = parity(z & x) ? -1.0 : 1.0;
  parallel_for(amp.size() / 2, [&](std::size_t b, std::size_t e) {
    for (std::size_t i = b; i < e; ++i) {
      const std::uint64_t r = ((i & ~low) << 1) | (i & low);
      const std::uint64_t t = r ^ x;
      const cplx ar = amp[r], at = amp[t];
      const double sr = parity(z & r) ? -1.0 : 1.0;
      const double st = sr * flip;
      amp[r] = c * ar + k * st * at;
      amp[t] = c * at + k * sr * ar;
    }
  }, kGrain);
}

void apply_pauli_exp(StateVector& state, const PauliString& p, double t) {
  if (std::abs(p.coeff.imag()) > 1e-12) {
    throw std::invalid_argument("exponent of a non-hermitian Pauli string");
  }
  apply_pauli_exp(state, p.axes, p.coeff.real() * t);
}

CompiledOperator::CompiledOperator(const PauliOperator& op) : n_(op.n_qubits()) {
  check_size(n_);
  std::unordered_map<std::uint64_t, std::size_t> where;
  for (const auto& t : op.terms()) {
    const std::uint64_t x = t.axes.x_mask();
    auto [it, fresh] = where.try_emplace(x, groups_.size());
    if (fresh) groups_.push_back({x, {}});
    groups_[it->second].terms.push_back({t.axes.z_mask(), t.coeff * phase_of(t.axes.y_count())});
    norm_bound_ += std::abs(t.coeff);
  }
}

void CompiledOperator::apply(const std::vector<cplx>& in, std::vector<cplx>& out) const {
  out.assign(in.size(), cplx(0, 0));
  parallel_for(in.size(), [&](std::size_t b, std::size_t e) {
    for (std::size_t s = b; s < e; ++s) {
      cplx acc(0, 0);
      for (const auto& g : groups_) {
        const std::uint64_t r = s ^ g.x;
        cplx f(0, 0);
        for (const auto& t : g.terms) {
          if (parity(t.z & r)) {
            f -= t.c;
          } else {
            f += t.c;
          }
        }
        acc += f * in[r];
      }
      out[s] = acc;
    }
  }, kGrain);
}

StateVector apply_operator(const PauliOperator& op, const StateVector& state) {
  if (op.n_qubits() != state.n_qubits()) throw std::invalid_argument("operator size does not match state");
  StateVector out = state;
  CompiledOperator(op).apply(state.amplitudes(), out.amplitudes());
  return out;
}

double expectation(const PauliOperator& op, const StateVector& state) {
  return inner(state, apply_operator(op, state)).real();
}

std::string to_string(Ordering o) {
  switch (o) {
    case Ordering::Canonical: return "canonical";
    case Ordering::ByTermGroup: return "by-term-group";
    case Ordering::Reversed: return "reversed";
  }
  return "canonical";
}

Ordering ordering_from_string(const std::string& s) {
  if (s == "canonical") return Ordering::Canonical;
  if (s == "by-term-group" || s == "by_term_group") return Ordering::ByTermGroup;
  if (s == "reversed") return Ordering::Reversed;
  throw ConfigError("ordering", "unknown ordering '" + s + "'");
}

namespace {

std::vector<PauliString> sorted_strings(const PauliOperator& op) {
  std::vector<PauliString> v;
  for (const auto& t : op.terms()) {
    if (!t.axes.is_identity()) v.push_back(t);
  }
  std::sort(v.begin(), v.end(), [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  return v;
}

}  // namespace

TrotterPlan make_trotter_plan(const std::vector<PauliOperator>& groups, double dt, double total_time,
                              Ordering ordering) {
  if (groups.empty()) throw std::invalid_argument("no Hamiltonian terms");
  if (!(dt > 0)) throw ConfigError("dt", "time step must be positive");
  if (total_time < 0) throw ConfigError("t_final", "total time must be non-negative");
  const double ratio = total_time / dt;
  const auto steps = static_cast<std::size_t>(std::llround(ratio));
  if (std::abs(ratio - static_cast<double>(steps)) > 1e-6) {
    throw ConfigError("dt", "total time is not a multiple of the time step");
  }
  TrotterPlan plan;
  plan.n_qubits = groups.front().n_qubits();
  plan.dt = dt;
  plan.steps = steps;
  plan.ordering = ordering;
  if (ordering == Ordering::ByTermGroup) {
    for (const auto& g : groups) {
      auto v = sorted_strings(g);
      plan.sequence.insert(plan.sequence.end(), v.begin(), v.end());
    }
  } else {
    PauliAccumulator acc(plan.n_qubits);
    for (const auto& g : groups) acc.add(g);
    plan.sequence = sorted_strings(acc.finish());
    if (ordering == Ordering::Reversed) std::reverse(plan.sequence.begin(), plan.sequence.end());
  }
  for (const auto& p : plan.sequence) {
    if (std::abs(p.coeff.imag()) > 1e-12) throw std::invalid_argument("Trotter terms must be hermitian");
  }
  return plan;
}

std::vector<PauliOperator> trotter_groups(const HamiltonianTerms& terms, double lambda) {
  std::vector<PauliOperator> g{terms.mass, terms.hopp_wilson, terms.elec, terms.plaq};
  if (lambda != 0.0) g.push_back(cplx(lambda) * terms.gauss);
  return g;
}

void trotter_step(StateVector& state, const TrotterPlan& plan) {
  for (const auto& p : plan.sequence) apply_pauli_exp(state, p, plan.dt);
}

void trotter_evolve(StateVector& state, const TrotterPlan& plan, const Observer& observe) {
  if (plan.n_qubits != state.n_qubits()) throw std::invalid_argument("plan size does not match state");
  if (observe) observe(0, 0.0, state);
  for (std::size_t k = 1; k <= plan.steps; ++k) {
    trotter_step(state, plan);
    if (observe) observe(k, plan.dt * static_cast<double>(k), state);
  }
}

std::string to_string(ExactMethod m) {
  switch (m) {
    case ExactMethod::Auto: return "auto";
    case ExactMethod::Dense: return "dense";
    case ExactMethod::Krylov: return "krylov";
  }
  return "auto";
}

ExactPropagator::ExactPropagator(const PauliOperator& h, ExactMethod method, double tol)
    : n_(h.n_qubits()), method_(method), tol_(tol) {
  if (!h.is_hermitian(1e-10)) throw std::invalid_argument("Hamiltonian is not hermitian");
  if (method_ == ExactMethod::Auto) {
    method_ = n_ <= kAutoDenseQubits ? ExactMethod::Dense : ExactMethod::Krylov;
  }
  if (method_ == ExactMethod::Dense) {
    if (n_ > kMaxDenseQubits) {
      throw ResourceLimitError("dense evolution is limited to " + std::to_string(kMaxDenseQubits) + " qubits");
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_matrix(h));
    vecs_ = es.eigenvectors();
    vals_ = es.eigenvalues();
  } else {
    if (n_ > kMaxKrylovQubits) {
      throw ResourceLimitError("Krylov evolution is limited to " + std::to_string(kMaxKrylovQubits) + " qubits");
    }
    op_ = CompiledOperator(h);
  }
}

StateVector ExactPropagator::evolve(const StateVector& state, double t) const {
  if (state.n_qubits() != n_) throw std::invalid_argument("state size does not match Hamiltonian");
  if (t == 0.0) return state;
  return method_ == ExactMethod::Dense ? evolve_dense(state, t) : evolve_krylov(state, t);
}

StateVector ExactPropagator::evolve_dense(const StateVector& state, double t) const {
  const auto dim = static_cast<Eigen::Index>(state.dim());
  Eigen::Map<const Eigen::VectorXcd> psi(state.amplitudes().data(), dim);
  Eigen::VectorXcd c = vecs_.adjoint() * psi;
  for (Eigen::Index k = 0; k < dim; ++k) c(k) *= std::exp(cplx(0, -vals_(k) * t));
  StateVector out = state;
  Eigen::Map<Eigen::VectorXcd>(out.amplitudes().data(), dim) = vecs_ * c;
  return out;
}

StateVector ExactPropagator::evolve_krylov(const StateVector& state, double t) const {
  const std::size_t dim = state.dim();
  const std::size_t bytes = dim * sizeof(cplx);
  const std::size_t budget = std::size_t{1536} << 20;
  const std::size_t m_max = std::clamp<std::size_t>(budget / bytes, 6, 40);
  const double sign = t < 0 ? -1.0 : 1.0;
  const double span = std::abs(t);

  std::vector<cplx> v = state.amplitudes();
  std::vector<std::vector<cplx>> basis;
  std::vector<cplx> w;
  double remaining = span;
  while (remaining > 0) {
    double beta0 = 0;
    for (const auto& a : v) beta0 += std::norm(a);
    beta0 = std::sqrt(beta0);
    if (beta0 == 0) break;
    basis.assign(1, v);
    for (auto& a : basis[0]) a /= beta0;
    std::vector<double> alpha, beta;
    bool invariant = false;
    for (std::size_t j = 0;; ++j) {
      op_.apply(basis[j], w);
      ++matvecs_;
      // Full reorthogonalisation, two passes.
      for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t k = 0; k <= j; ++k) {
          cplx ov(0, 0);
          for (std::size_t i = 0; i < dim; ++i) ov += std::conj(basis[k][i]) * w[i];
          if (pass == 0 && k == j) alpha.push_back(ov.real());
          for (std::size_t i = 0; i < dim; ++i) w[i] -= ov * basis[k][i];
        }
      }
      double b = 0;
      for (const auto& a : w) b += std::norm(a);
      b = std::sqrt(b);
      beta.push_back(b);
      if (b < 1e-12 * std::max(1.0, op_.norm_bound())) {
        invariant = true;
        break;
      }
      if (j + 1 == m_max) break;
      for (auto& a : w) a /= b;
      basis.push_back(w);
    }
    const auto m = static_cast<Eigen::Index>(alpha.size());
    Eigen::MatrixXd tri = Eigen::MatrixXd::Zero(m, m);
    for (Eigen::Index j = 0; j < m; ++j) {
      tri(j, j) = alpha[static_cast<std::size_t>(j)];
      if (j + 1 < m) tri(j, j + 1) = tri(j + 1, j) = beta[static_cast<std::size_t>(j)];
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(tri);
    const Eigen::MatrixXd& q = es.eigenvectors();
    const Eigen::VectorXd& lam = es.eigenvalues();
    auto coeffs = [&](double tau) {
      Eigen::VectorXcd y(m);
      for (Eigen::Index k = 0; k < m; ++k) y(k) = q(0, k) * std::exp(cplx(0, -sign * lam(k) * tau));
      return Eigen::VectorXcd(q.cast<cplx>() * y);
    };
    double tau = remaining;
    Eigen::VectorXcd y = coeffs(tau);
    if (!invariant) {
      const double beta_m = beta.back();
      auto err = [&](const Eigen::VectorXcd& c) { return beta0 * beta_m * std::abs(c(m - 1)); };
      while (err(y) > tol_ * tau / span && tau > span * 1e-12) {
        tau *= 0.5;
        y = coeffs(tau);
      }
    }
    std::fill(v.begin(), v.end(), cplx(0, 0));
    for (Eigen::Index k = 0; k < m; ++k) {
      const cplx c = beta0 * y(k);
      const auto& bk = basis[static_cast<std::size_t>(k)];
      for (std::size_t i = 0; i < dim; ++i) v[i] += c * bk[i];
    }
    remaining -= tau;
    if (remaining < span * 1e-14) remaining = 0;
  }
  StateVector out = state;
  out.amplitudes() = std::move(v);
  return out;
}

StateVector exact_evolve(const StateVector& state, const PauliOperator& h, double t, ExactMethod method) {
  return ExactPropagator(h, method).evolve(state, t);
}

SectorPropagator::SectorPropagator(const PauliOperator& h, const StateVector& reference, std::size_t max_dim)
    : n_(h.n_qubits()) {
  if (reference.n_qubits() != n_) throw std::invalid_argument("operator size does not match state");
  struct Group {
    std::uint64_t x;
    std::vector<std::pair<std::uint64_t, cplx>> terms;
  };
  std::vector<Group> groups;
  std::unordered_map<std::uint64_t, std::size_t> where;
  for (const auto& t : h.terms()) {
    auto [it, fresh] = where.try_emplace(t.axes.x_mask(), groups.size());
    if (fresh) groups.push_back({t.axes.x_mask(), {}});
    groups[it->second].terms.emplace_back(t.axes.z_mask(), t.coeff * phase_of(t.axes.y_count()));
  }
  // <r ^ x| H |r> = sum over the group of c (-1)^{z.r}
  auto element = [&](const Group& g, std::uint64_t r) {
    cplx f(0, 0);
    for (const auto& [z, c] : g.terms) f += parity(z & r) ? -c : c;
    return f;
  };
  double one_norm = 0;
  for (const auto& t : h.terms()) one_norm += std::abs(t.coeff);
  const double tiny = 1e-13 * std::max(1.0, one_norm);

  std::unordered_map<std::uint64_t, std::size_t> id;
  std::vector<std::uint64_t> order;
  for (std::size_t r = 0; r < reference.dim(); ++r) {
    if (std::abs(reference[r]) > 0 && id.try_emplace(r, order.size()).second) order.push_back(r);
  }
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (const auto& g : groups) {
      if (g.x == 0) continue;
      const std::uint64_t r = order[k];
      if (std::abs(element(g, r)) <= tiny) continue;
      if (id.try_emplace(r ^ g.x, order.size()).second) {
        order.push_back(r ^ g.x);
        if (order.size() > max_dim) {
          throw ResourceLimitError("sector exceeds " + std::to_string(max_dim) + " basis states");
        }
      }
    }
  }
  basis_ = order;
  std::sort(basis_.begin(), basis_.end());
  for (std::size_t k = 0; k < basis_.size(); ++k) id[basis_[k]] = k;

  const auto d = static_cast<Eigen::Index>(basis_.size());
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(d, d);
  for (Eigen::Index col = 0; col < d; ++col) {
    const std::uint64_t r = basis_[static_cast<std::size_t>(col)];
    for (const auto& g : groups) {
      const cplx f = element(g, r);
      if (std::abs(f) <= tiny) continue;
      m(static_cast<Eigen::Index>(id.at(r ^ g.x)), col) += f;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(m);
  vecs_ = es.eigenvectors();
  vals_ = es.eigenvalues();
}

StateVector SectorPropagator::evolve(const StateVector& state, double t) const {
  if (state.n_qubits() != n_) throw std::invalid_argument("state size does not match operator");
  const auto d = static_cast<Eigen::Index>(basis_.size());
  Eigen::VectorXcd v(d);
  double inside = 0;
  for (Eigen::Index k = 0; k < d; ++k) {
    v(k) = state[basis_[static_cast<std::size_t>(k)]];
    inside += std::norm(v(k));
  }
  if (std::abs(state.norm() * state.norm() - inside) > 1e-12) {
    throw std::invalid_argument("state has weight outside the sector");
  }
  if (t == 0.0) return state;
  Eigen::VectorXcd c = vecs_.adjoint() * v;
  for (Eigen::Index k = 0; k < d; ++k) c(k) *= std::exp(cplx(0, -vals_(k) * t));
  v = vecs_ * c;
  StateVector out(n_);
  out[0] = 0;
  for (Eigen::Index k = 0; k < d; ++k) out[basis_[static_cast<std::size_t>(k)]] = v(k);
  return out;
}

ConfigSpace::ConfigSpace(const LatticeModel& model) : model_(&model), n_(model.n_qubits()) {
  if (n_ > 64) throw ResourceLimitError("configuration decoding is limited to 64 qubits");
  const auto& lay = model.layout();
  const auto nf = static_cast<std::size_t>(lay.n_fermionic);
  const Mapping mp = model.fermions().mapping();
  occ_masks_.assign(nf, 0);
  for (std::size_t c = 0; c < nf; ++c) {
    std::vector<int> unit(nf, 0);
    unit[c] = 1;
    const std::vector<int> col = occupations_from_qubits(mp, unit);
    for (std::size_t j = 0; j < nf; ++j) {
      if (col[j]) occ_masks_[j] |= std::uint64_t{1} << (n_ - 1 - c);
    }
  }
  const auto& g0 = model.clifford().gammas[0];
  for (int a = 0; a < lay.n_spinor; ++a) upper_.push_back(g0(a, a).real() > 0 ? 1 : 0);
}

std::vector<int> ConfigSpace::occupations(std::uint64_t index) const {
  std::vector<int> occ(occ_masks_.size());
  for (std::size_t j = 0; j < occ.size(); ++j) occ[j] = parity(index & occ_masks_[j]);
  return occ;
}

std::optional<double> ConfigSpace::link_flux(std::uint64_t index, std::size_t link) const {
  const auto& lay = model_->layout();
  const auto& spec = model_->spec();
  const std::size_t nq = lay.qubits_per_link;
  const std::size_t off = static_cast<std::size_t>(lay.link_offset(link));
  const int dir = model_->lattice().links()[link].dir;
  const int d = spin_dim(spec.S);
  int k = -1;
  if (spec.encoding == Encoding::Logarithmic) {
    std::uint64_t v = 0;
    for (std::size_t q = 0; q < nq; ++q) v = (v << 1) | ((index >> (n_ - 1 - off - q)) & 1);
    const std::uint64_t off0 = log_offset(spec.S, spec.padding);
    if (v >= off0 && v - off0 < static_cast<std::uint64_t>(d)) k = static_cast<int>(v - off0);
  } else {
    int set = 0;
    for (std::size_t q = 0; q < nq; ++q) {
      if ((index >> (n_ - 1 - off - q)) & 1) {
        ++set;
        k = static_cast<int>(q);
      }
    }
    if (set != 1) k = -1;
  }
  if (k < 0) return std::nullopt;
  return spec.S - k + spec.params.theta_for(dir);
}

std::string ConfigSpace::site_label(const std::vector<int>& occ, std::size_t site) const {
  const int nsp = model_->layout().n_spinor;
  int p = 0, a = 0;
  for (int al = 0; al < nsp; ++al) {
    const int n = occ[static_cast<std::size_t>(model_->layout().mode(site, al))];
    if (upper_[static_cast<std::size_t>(al)]) {
      p += n;
    } else {
      a += 1 - n;
    }
  }
  if (p == 0 && a == 0) return "o";
  if (p == 1 && a == 0) return "p";
  if (p == 0 && a == 1) return "a";
  if (p == 1 && a == 1) return "b";
  return "[p" + std::to_string(p) + "a" + std::to_string(a) + "]";
}

namespace {

std::string link_symbol(const std::optional<double>& f) {
  if (!f) return "#";
  if (std::abs(*f) < 1e-9) return "-";
  if (std::abs(*f - 1) < 1e-9) return ">";
  if (std::abs(*f + 1) < 1e-9) return "<";
  return format_flux(*f);
}

}  // namespace

std::string ConfigSpace::label(std::uint64_t index) const {
  const auto& lat = model_->lattice();
  const std::vector<int> occ = occupations(index);
  std::string out;
  if (lat.spec().d == 1) {
    for (std::size_t x = 0; x < lat.n_sites(); ++x) {
      out += site_label(occ, x);
      const std::size_t l = lat.link_index(lat.coord(x), 0);
      if (l != Lattice::npos) out += link_symbol(link_flux(index, l));
    }
    return out;
  }
  for (std::size_t x = 0; x < lat.n_sites(); ++x) out += site_label(occ, x);
  out += '|';
  for (std::size_t l = 0; l < lat.links().size(); ++l) out += link_symbol(link_flux(index, l));
  return out;
}

std::uint64_t ConfigSpace::index_of(const std::vector<int>& occ, const std::vector<double>& flux) const {
  const auto& lay = model_->layout();
  const auto& spec = model_->spec();
  const auto& lat = model_->lattice();
  if (occ.size() != occ_masks_.size() || flux.size() != lat.links().size()) {
    throw std::invalid_argument("configuration size does not match lattice");
  }
  std::uint64_t index = 0;
  const std::vector<int> q = qubits_from_occupations(model_->fermions().mapping(), occ);
  for (std::size_t c = 0; c < q.size(); ++c) {
    if (q[c]) index |= std::uint64_t{1} << (n_ - 1 - c);
  }
  const int d = spin_dim(spec.S);
  for (std::size_t l = 0; l < flux.size(); ++l) {
    const double m = flux[l] - spec.params.theta_for(lat.links()[l].dir);
    const double kf = spec.S - m;
    const auto k = static_cast<int>(std::lround(kf));
    if (std::abs(kf - k) > 1e-9 || k < 0 || k >= d) {
      throw ConfigError("initial_state", "flux " + std::to_string(flux[l]) + " on link " +
                                             std::to_string(l) + " is outside the spin window");
    }
    const std::size_t off = static_cast<std::size_t>(lay.link_offset(l));
    const std::size_t nq = lay.qubits_per_link;
    if (spec.encoding == Encoding::Logarithmic) {
      const std::uint64_t v = static_cast<std::uint64_t>(k) + log_offset(spec.S, spec.padding);
      for (std::size_t b = 0; b < nq; ++b) {
        if ((v >> (nq - 1 - b)) & 1) index |= std::uint64_t{1} << (n_ - 1 - off - b);
      }
    } else {
      index |= std::uint64_t{1} << (n_ - 1 - off - static_cast<std::size_t>(k));
    }
  }
  return index;
}

std::uint64_t ConfigSpace::index_of(const std::string& label) const {
  const auto& lat = model_->lattice();
  const int nsp = model_->layout().n_spinor;
  std::vector<int> occ(occ_masks_.size(), 0);
  std::vector<double> flux(lat.links().size(), 0.0);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> ConfigError {
    return ConfigError("initial_state", "bad configuration label '" + label + "': " + why);
  };
  auto read_site = [&](std::size_t x) {
    if (pos >= label.size()) throw fail("too short");
    int p = 0, a = 0;
    const char ch = label[pos];
    if (ch == '[') {
      const std::size_t end = label.find(']', pos);
      if (end == std::string::npos || std::sscanf(label.c_str() + pos, "[p%da%d]", &p, &a) != 2) {
        throw fail("malformed site token");
      }
      pos = end + 1;
    } else {
      switch (ch) {
        case 'o': break;
        case 'p': p = 1; break;
        case 'a': a = 1; break;
        case 'b': p = a = 1; break;
        default: throw fail(std::string("unknown site symbol '") + ch + "'");
      }
      ++pos;
    }
    for (int al = 0; al < nsp; ++al) {
      const auto mode = static_cast<std::size_t>(model_->layout().mode(x, al));
      if (upper_[static_cast<std::size_t>(al)]) {
        occ[mode] = p > 0 ? 1 : 0;
        p -= occ[mode];
      } else {
        occ[mode] = a > 0 ? 0 : 1;
        a -= 1 - occ[mode];
      }
    }
    if (p != 0 || a != 0) throw fail("site occupation exceeds the spinor");
  };
  auto read_link = [&](std::size_t l) {
    if (pos >= label.size()) throw fail("too short");
    const char ch = label[pos];
    if (ch == '(') {
      const std::size_t end = label.find(')', pos);
      if (end == std::string::npos) throw fail("malformed flux token");
      flux[l] = std::stod(label.substr(pos + 1, end - pos - 1));
      pos = end + 1;
      return;
    }
    switch (ch) {
      case '-': flux[l] = 0; break;
      case '>': flux[l] = 1; break;
      case '<': flux[l] = -1; break;
      default: throw fail(std::string("unknown link symbol '") + ch + "'");
    }
    ++pos;
  };
  if (lat.spec().d == 1) {
    for (std::size_t x = 0; x < lat.n_sites(); ++x) {
      read_site(x);
      const std::size_t l = lat.link_index(lat.coord(x), 0);
      if (l != Lattice::npos) read_link(l);
    }
  } else {
    for (std::size_t x = 0; x < lat.n_sites(); ++x) read_site(x);
    if (pos >= label.size() || label[pos] != '|') throw fail("expected '|'");
    ++pos;
    for (std::size_t l = 0; l < flux.size(); ++l) read_link(l);
  }
  if (pos != label.size()) throw fail("trailing characters");
  return index_of(occ, flux);
}

double ConfigSpace::gauss_value(const std::vector<int>& occ, const std::vector<double>& flux,
                                std::size_t site) const {
  const auto& lat = model_->lattice();
  const Coord c = lat.coord(site);
  double g = 0;
  for (int k = 0; k < lat.spec().d; ++k) {
    const std::size_t in = lat.link_into(c, k), out = lat.link_index(c, k);
    if (in != Lattice::npos) g += flux[in];
    if (out != Lattice::npos) g -= flux[out];
  }
  for (const auto& b : lat.boundary_fluxes()) {
    if (b.site == site) g += b.incoming ? b.flux : -b.flux;
  }
  const int nsp = model_->layout().n_spinor;
  for (int al = 0; al < nsp; ++al) g += occ[static_cast<std::size_t>(model_->layout().mode(site, al))];
  return g - nsp / 2.0;
}

Observables observables(const StateVector& state, const ConfigSpace& space) {
  const auto& model = space.model();
  const auto& lat = model.lattice();
  const int nsp = model.layout().n_spinor;
  Observables o;
  o.charge.assign(lat.n_sites(), 0.0);
  o.flux.assign(lat.links().size(), 0.0);
  const auto& g0 = model.clifford().gammas[0];
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state[i]);
    if (p == 0) continue;
    const std::vector<int> occ = space.occupations(i);
    for (std::size_t x = 0; x < lat.n_sites(); ++x) {
      int n = 0;
      for (int al = 0; al < nsp; ++al) {
        const int v = occ[static_cast<std::size_t>(model.layout().mode(x, al))];
        n += v;
        o.particle_number += p * (g0(al, al).real() > 0 ? v : 1 - v);
      }
      o.charge[x] += p * (n - nsp / 2.0);
    }
    bool physical = true;
    for (std::size_t l = 0; l < o.flux.size(); ++l) {
      const auto f = space.link_flux(i, l);
      if (f) {
        o.flux[l] += p * *f;
      } else {
        physical = false;
      }
    }
    if (!physical) o.unphysical += p;
  }
  return o;
}

std::vector<ConfigProbability> config_probabilities(const StateVector& state, const ConfigSpace& space,
                                                    double floor) {
  std::unordered_map<std::string, double> acc;
  for (std::size_t i = 0; i < state.dim(); ++i) {
    const double p = std::norm(state[i]);
    if (p > floor) acc[space.label(i)] += p;
  }
  std::vector<ConfigProbability> out;
  out.reserve(acc.size());
  for (auto& [k, v] : acc) out.push_back({k, v});
  std::sort(out.begin(), out.end(), [](const ConfigProbability& a, const ConfigProbability& b) {
    return a.probability != b.probability ? a.probability > b.probability : a.label < b.label;
  });
  return out;
}

std::vector<ConfigProbability> top_configs(const std::vector<ConfigProbability>& all, std::size_t keep) {
  std::vector<ConfigProbability> out;
  double rest = 0;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (i < keep) {
      out.push_back(all[i]);
    } else {
      rest += all[i].probability;
    }
  }
  out.push_back({"other", rest});
  return out;
}

GaussFilterResult gauss_filter(const ConfigSpace& space) {
  const auto& model = space.model();
  const auto& lat = model.lattice();
  if (space.n_qubits() > kMaxKrylovQubits) {
    throw ResourceLimitError("Gauss enumeration is limited to " + std::to_string(kMaxKrylovQubits) + " qubits");
  }
  const auto nf = static_cast<std::size_t>(model.layout().n_fermionic);
  const std::size_t nl = lat.links().size();
  const int d = spin_dim(model.spec().S);
  GaussFilterResult r;
  r.total = std::uint64_t{1} << nf;
  for (std::size_t l = 0; l < nl; ++l) r.total *= static_cast<std::uint64_t>(d);

  std::vector<double> flux(nl);
  std::vector<int> k(nl, 0);
  std::vector<int> occ(nf);
  for (std::uint64_t fb = 0; fb < (std::uint64_t{1} << nf); ++fb) {
    for (std::size_t j = 0; j < nf; ++j) occ[j] = static_cast<int>((fb >> (nf - 1 - j)) & 1);
    std::fill(k.begin(), k.end(), 0);
    for (;;) {
      for (std::size_t l = 0; l < nl; ++l) {
        flux[l] = model.spec().S - k[l] + model.params().theta_for(lat.links()[l].dir);
      }
      bool ok = true;
      for (std::size_t x = 0; x < lat.n_sites() && ok; ++x) {
        ok = std::abs(space.gauss_value(occ, flux, x)) < 1e-9;
      }
      if (ok) r.invariant.push_back(space.index_of(occ, flux));
      std::size_t l = 0;
      while (l < nl && ++k[l] == d) k[l++] = 0;
      if (l == nl) break;
    }
  }
  std::sort(r.invariant.begin(), r.invariant.end());
  return r;
}

}  // namespace lgt
