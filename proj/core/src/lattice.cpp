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

#include "lgt/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "lgt/errors.hpp"

namespace lgt {

std::string to_string(Encoding e) { return e == Encoding::Logarithmic ? "log" : "linear"; }

Encoding encoding_from_string(const std::string& s) {
  if (s == "log" || s == "logarithmic") return Encoding::Logarithmic;
  if (s == "linear" || s == "lin") return Encoding::Linear;
  throw ConfigError("gauge_encoding", "unsupported encoding '" + s + "'");
}

void LatticeSpec::validate() const {
  if (d < 1) throw ConfigError("lattice.d", "must be >= 1");
  if (extents.size() != static_cast<std::size_t>(d)) {
    throw ConfigError("lattice.extents", "length must equal d");
  }
  for (int e : extents) {
    if (e < 1) throw ConfigError("lattice.extents", "every extent must be >= 1");
  }
  if (!static_links.empty() && boundary != Boundary::Open) {
    throw ConfigError("lattice.static_links", "static links require open boundary");
  }
  for (const auto& s : static_links) {
    if (s.site.size() != static_cast<std::size_t>(d) || s.dir < 0 || s.dir >= d) {
      throw ConfigError("lattice.static_links", "malformed static link");
    }
  }
}

std::size_t LatticeSpec::n_sites() const {
  std::size_t n = 1;
  for (int e : extents) n *= static_cast<std::size_t>(e);
  return n;
}

Lattice::Lattice(LatticeSpec spec) : spec_(std::move(spec)) {
  spec_.validate();
  n_sites_ = spec_.n_sites();
  const int d = spec_.d;
  link_of_.assign(n_sites_ * static_cast<std::size_t>(d), npos);
  for (std::size_t s = 0; s < n_sites_; ++s) {
    for (int k = 0; k < d; ++k) {
      Coord c = coord(s);
      if (!shift(c, k, 1)) continue;
      link_of_[s * d + k] = links_.size();
      links_.push_back({s, k, site_index(c)});
    }
  }
  for (std::size_t s = 0; s < n_sites_; ++s) {
    const Coord x = coord(s);
    for (int k = 0; k < d; ++k) {
      for (int j = k + 1; j < d; ++j) {
        Coord xk = x, xj = x;
        if (!shift(xk, k, 1) || !shift(xj, j, 1)) continue;
        Plaquette p{s, k, j, link_index(x, k), link_index(xk, j), link_index(xj, k), link_index(x, j)};
        if (p.l1 == npos || p.l2 == npos || p.l3 == npos || p.l4 == npos) continue;
        plaquettes_.push_back(p);
      }
    }
  }
  for (const auto& sl : spec_.static_links) {
    const bool tail_in = [&] {
      for (int i = 0; i < d; ++i) {
        if (sl.site[i] < 0 || sl.site[i] >= spec_.extents[i]) return false;
      }
      return true;
    }();
    Coord head = sl.site;
    head[sl.dir] += 1;
    const bool head_in = [&] {
      for (int i = 0; i < d; ++i) {
        if (head[i] < 0 || head[i] >= spec_.extents[i]) return false;
      }
      return true;
    }();
    if (tail_in == head_in) {
      throw ConfigError("lattice.static_links", "static link must cross the box boundary");
    }
    if (head_in) {
      boundary_.push_back({site_index(head), sl.dir, true, sl.flux});
    } else {
      boundary_.push_back({site_index(sl.site), sl.dir, false, sl.flux});
    }
  }
}

std::size_t Lattice::site_index(const Coord& c) const {
  std::size_t idx = 0;
  for (int i = 0; i < spec_.d; ++i) idx = idx * spec_.extents[i] + static_cast<std::size_t>(c[i]);
  return idx;
}

Coord Lattice::coord(std::size_t site) const {
  Coord c(spec_.d);
  for (int i = spec_.d - 1; i >= 0; --i) {
    c[i] = static_cast<int>(site % spec_.extents[i]);
    site /= spec_.extents[i];
  }
  return c;
}

bool Lattice::shift(Coord& c, int dir, int step) const {
  const int e = spec_.extents[dir];
  int v = c[dir] + step;
  if (spec_.boundary == Boundary::Periodic) {
    v = ((v % e) + e) % e;
  } else if (v < 0 || v >= e) {
    return false;
  }
  c[dir] = v;
  return true;
}

std::size_t Lattice::link_index(const Coord& x, int dir) const {
  return link_of_[site_index(x) * spec_.d + dir];
}

std::size_t Lattice::link_into(const Coord& x, int dir) const {
  Coord tail = x;
  if (!shift(tail, dir, -1)) return npos;
  return link_index(tail, dir);
}

LatticeCounts count(const LatticeSpec& spec) {
  spec.validate();
  LatticeCounts c;
  c.n_sites = 1;
  for (int e : spec.extents) c.n_sites *= static_cast<std::uint64_t>(e);
  const bool periodic = spec.boundary == Boundary::Periodic;
  for (int k = 0; k < spec.d; ++k) {
    const auto ek = static_cast<std::uint64_t>(spec.extents[k]);
    c.n_links_dir.push_back(periodic ? c.n_sites : c.n_sites / ek * (ek - 1));
    c.n_links += c.n_links_dir.back();
    for (int j = k + 1; j < spec.d; ++j) {
      const auto ej = static_cast<std::uint64_t>(spec.extents[j]);
      c.n_plaquettes += periodic ? c.n_sites : c.n_sites / (ek * ej) * (ek - 1) * (ej - 1);
    }
  }
  return c;
}

int n_spinor(int d) {
  if (d < 1) throw std::invalid_argument("d must be >= 1");
  return 1 << ((d % 2 == 0) ? d / 2 : (d + 1) / 2);
}

int spin_dim(double S) {
  const double two_s = 2.0 * S;
  if (S <= 0 || std::abs(two_s - std::round(two_s)) > 1e-9) {
    throw std::invalid_argument("spin must be a positive half-integer");
  }
  return static_cast<int>(std::lround(two_s)) + 1;
}

int qubits_per_link(double S, Encoding enc) {
  const int d = spin_dim(S);
  if (enc == Encoding::Linear) return d;
  int q = 0;
  while ((1 << q) < d) ++q;
  return q < 1 ? 1 : q;
}

RegisterLayout layout(const LatticeSpec& spec, int nsp, Encoding enc, double S) {
  if (nsp != n_spinor(spec.d)) throw std::invalid_argument("n_spinor inconsistent with d");
  const LatticeCounts c = count(spec);
  RegisterLayout r;
  r.n_spinor = nsp;
  r.qubits_per_link = static_cast<std::size_t>(qubits_per_link(S, enc));
  r.n_fermionic = c.n_sites * static_cast<std::uint64_t>(nsp);
  r.n_gauge = c.n_links * r.qubits_per_link;
  r.n_total = r.n_fermionic + r.n_gauge;
  return r;
}

}  // namespace lgt
