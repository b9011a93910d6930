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

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace lgt {

enum class Boundary { Periodic, Open };
enum class Encoding { Logarithmic, Linear };

std::string to_string(Encoding e);
Encoding encoding_from_string(const std::string& s);

using Coord = std::vector<int>;

// A classical boundary link from `site` along +dir with fixed flux (units of
// e). Exactly one endpoint lies inside the box.
struct StaticLink {
  Coord site;
  int dir = 0;
  double flux = 0.0;
};

struct LatticeSpec {
  int d = 1;
  std::vector<int> extents{1};
  Boundary boundary = Boundary::Open;
  std::vector<StaticLink> static_links;

  void validate() const;
  std::size_t n_sites() const;
};

struct Link {
  std::size_t site = 0;  // tail, row-major index
  int dir = 0;
  std::size_t head = 0;
  bool operator==(const Link& o) const { return site == o.site && dir == o.dir; }
};

// Closed loop U(x,k) U(x+k,j) U^dag(x+j,k) U^dag(x,j); link indices into
// Lattice::links.
struct Plaquette {
  std::size_t site = 0;
  int k = 0;
  int j = 1;
  std::size_t l1 = 0, l2 = 0, l3 = 0, l4 = 0;
};

// Static link resolved against the box: which site it touches and whether
// the flux flows into that site.
struct BoundaryFlux {
  std::size_t site = 0;
  int dir = 0;
  bool incoming = true;
  double flux = 0.0;
};

class Lattice {
 public:
  explicit Lattice(LatticeSpec spec);

  const LatticeSpec& spec() const { return spec_; }
  std::size_t n_sites() const { return n_sites_; }
  const std::vector<Link>& links() const { return links_; }
  const std::vector<Plaquette>& plaquettes() const { return plaquettes_; }
  const std::vector<BoundaryFlux>& boundary_fluxes() const { return boundary_; }

  std::size_t site_index(const Coord& c) const;
  Coord coord(std::size_t site) const;
  // Index of the dynamical link leaving x along +dir, or npos.
  std::size_t link_index(const Coord& x, int dir) const;
  // Index of the dynamical link arriving at x along +dir, or npos.
  std::size_t link_into(const Coord& x, int dir) const;
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  bool shift(Coord& c, int dir, int step) const;

  LatticeSpec spec_;
  std::size_t n_sites_ = 0;
  std::vector<Link> links_;
  std::vector<std::size_t> link_of_;  // site * d + dir -> link index
  std::vector<Plaquette> plaquettes_;
  std::vector<BoundaryFlux> boundary_;
};

struct LatticeCounts {
  std::uint64_t n_sites = 0;
  std::uint64_t n_links = 0;
  std::uint64_t n_plaquettes = 0;
  std::vector<std::uint64_t> n_links_dir;
};

// Closed-form counts, usable for lattices too large to enumerate.
LatticeCounts count(const LatticeSpec& spec);

int n_spinor(int d);
int spin_dim(double S);
int qubits_per_link(double S, Encoding enc);

struct RegisterLayout {
  int n_spinor = 2;
  std::size_t qubits_per_link = 1;
  std::uint64_t n_fermionic = 0;
  std::uint64_t n_gauge = 0;
  std::uint64_t n_total = 0;

  std::uint64_t mode(std::size_t site, int component) const {
    return site * static_cast<std::uint64_t>(n_spinor) + static_cast<std::uint64_t>(component);
  }
  std::uint64_t link_offset(std::size_t link) const { return n_fermionic + link * qubits_per_link; }
};

RegisterLayout layout(const LatticeSpec& spec, int n_spinor, Encoding enc, double S);

}  // namespace lgt
