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

#include "lgt/pauli.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "lgt/errors.hpp"

namespace lgt {
namespace {

constexpr std::uint64_t kLow = 0x5555555555555555ULL;
constexpr std::size_t kPerWord = 32;

inline std::size_t word_count(std::size_t n) { return (n + kPerWord - 1) / kPerWord; }
inline unsigned shift_of(std::size_t q) { return 2 * (kPerWord - 1 - q % kPerWord); }

// Symplectic bits of a packed word, one bit per qubit at even positions.
inline std::uint64_t xbits(std::uint64_t w) { return (w ^ (w >> 1)) & kLow; }
inline std::uint64_t zbits(std::uint64_t w) { return (w >> 1) & kLow; }
inline std::uint64_t pack(std::uint64_t x, std::uint64_t z) { return (x ^ z) | (z << 1); }

void check_same(std::size_t a, std::size_t b) {
  if (a != b) throw std::invalid_argument("Pauli length mismatch");
}

}  // namespace

char axis_char(Axis a) {
  static constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(a)];
}

Axis axis_from_char(char c) {
  switch (c) {
    case 'I': return Axis::I;
    case 'X': return Axis::X;
    case 'Y': return Axis::Y;
    case 'Z': return Axis::Z;
    default: throw std::invalid_argument(std::string("bad Pauli axis '") + c + "'");
  }
}

PauliWord::PauliWord(std::size_t n) : n_(n), w_(word_count(n), 0) {}

PauliWord PauliWord::from_string(std::string_view axes) {
  PauliWord w(axes.size());
  for (std::size_t q = 0; q < axes.size(); ++q) w.set(q, axis_from_char(axes[q]));
  return w;
}

Axis PauliWord::get(std::size_t q) const {
  return static_cast<Axis>((w_[q / kPerWord] >> shift_of(q)) & 3U);
}

void PauliWord::set(std::size_t q, Axis a) {
  auto& word = w_[q / kPerWord];
  const unsigned s = shift_of(q);
  word = (word & ~(std::uint64_t{3} << s)) | (std::uint64_t(a) << s);
}

std::size_t PauliWord::support() const {
  std::size_t s = 0;
  for (auto w : w_) s += std::popcount((w | (w >> 1)) & kLow);
  return s;
}

bool PauliWord::is_identity() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return w == 0; });
}

bool PauliWord::is_diagonal() const {
  return std::all_of(w_.begin(), w_.end(), [](std::uint64_t w) { return xbits(w) == 0; });
}

std::uint64_t PauliWord::x_mask() const {
  if (n_ > 64) throw ResourceLimitError("mask requires at most 64 qubits");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    const Axis a = get(q);
    if (a == Axis::X || a == Axis::Y) m |= std::uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

std::uint64_t PauliWord::z_mask() const {
  if (n_ > 64) throw ResourceLimitError("mask requires at most 64 qubits");
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < n_; ++q) {
    const Axis a = get(q);
    if (a == Axis::Z || a == Axis::Y) m |= std::uint64_t{1} << (n_ - 1 - q);
  }
  return m;
}

int PauliWord::y_count() const {
  int c = 0;
  for (auto w : w_) c += std::popcount(xbits(w) & zbits(w));
  return c;
}

std::string PauliWord::to_string() const {
  std::string s(n_, 'I');
  for (std::size_t q = 0; q < n_; ++q) s[q] = axis_char(get(q));
  return s;
}

PauliWord PauliWord::embed(std::size_t offset, std::size_t n_total) const {
  if (offset + n_ > n_total) throw std::invalid_argument("embed out of range");
  PauliWord out(n_total);
  for (std::size_t q = 0; q < n_; ++q) {
    const Axis a = get(q);
    if (a != Axis::I) out.set(offset + q, a);
  }
  return out;
}

PauliWord PauliWord::concat(const PauliWord& b) const {
  PauliWord out = embed(0, n_ + b.n_);
  for (std::size_t q = 0; q < b.n_; ++q) {
    const Axis a = b.get(q);
    if (a != Axis::I) out.set(n_ + q, a);
  }
  return out;
}

bool PauliWord::operator<(const PauliWord& o) const {
  if (n_ != o.n_) return n_ < o.n_;
  return w_ < o.w_;
}

std::size_t PauliWord::hash() const {
  std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ n_;
  for (auto w : w_) {
    h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    h *= 0xff51afd7ed558ccdULL;
  }
  return static_cast<std::size_t>(h ^ (h >> 33));
}

PauliProduct PauliProduct::of(const PauliWord& a, const PauliWord& b) {
  check_same(a.n_, b.n_);
  PauliProduct p;
  p.word = PauliWord(a.n_);
  int k = 0;
  for (std::size_t i = 0; i < a.w_.size(); ++i) {
    const std::uint64_t x1 = xbits(a.w_[i]), z1 = zbits(a.w_[i]);
    const std::uint64_t x2 = xbits(b.w_[i]), z2 = zbits(b.w_[i]);
    const std::uint64_t x3 = x1 ^ x2, z3 = z1 ^ z2;
    // P(x,z) = i^{x.z} X^x Z^z, and Z^z1 X^x2 = (-1)^{z1.x2} X^x2 Z^z1.
    k += std::popcount(x1 & z1) + std::popcount(x2 & z2) + 2 * std::popcount(z1 & x2) -
         std::popcount(x3 & z3);
    p.word.w_[i] = pack(x3, z3);
  }
  p.phase = ((k % 4) + 4) % 4;
  return p;
}

cplx phase_of(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, 1};
    case 2: return {-1, 0};
    default: return {0, -1};
  }
}

PauliString multiply(const PauliString& a, const PauliString& b) {
  const auto p = PauliProduct::of(a.axes, b.axes);
  return {a.coeff * b.coeff * phase_of(p.phase), p.word};
}

std::size_t support(const PauliString& p) { return p.axes.support(); }

// ---------------------------------------------------------------------------

PauliOperator::PauliOperator(std::size_t n, std::vector<PauliString> terms, double tol) : n_(n) {
  for (const auto& t : terms) check_same(t.axes.size(), n);
  terms_ = std::move(terms);
  *this = simplify(*this, tol);
}

PauliOperator PauliOperator::identity(std::size_t n, cplx c) {
  return PauliOperator(n, {PauliString(c, PauliWord(n))});
}

PauliOperator PauliOperator::single(cplx c, std::string_view axes) {
  return PauliOperator(axes.size(), {PauliString(c, axes)});
}

cplx PauliOperator::coeff(const PauliWord& w) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), w,
                             [](const PauliString& t, const PauliWord& k) { return t.axes < k; });
  if (it != terms_.end() && it->axes == w) return it->coeff;
  return 0.0;
}

PauliOperator& PauliOperator::operator+=(const PauliOperator& o) {
  if (terms_.empty() && n_ == 0) n_ = o.n_;
  check_same(n_, o.n_);
  std::vector<PauliString> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  std::merge(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
             std::back_inserter(merged),
             [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  terms_ = std::move(merged);
  *this = simplify(*this);
  return *this;
}

PauliOperator& PauliOperator::operator-=(const PauliOperator& o) { return *this += cplx(-1.0) * o; }

PauliOperator& PauliOperator::operator*=(cplx c) {
  for (auto& t : terms_) t.coeff *= c;
  *this = simplify(*this);
  return *this;
}

PauliOperator PauliOperator::dagger() const {
  PauliOperator out = *this;
  for (auto& t : out.terms_) t.coeff = std::conj(t.coeff);
  return out;
}

PauliOperator PauliOperator::embed(std::size_t offset, std::size_t n_total) const {
  PauliOperator out(n_total);
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) out.terms_.emplace_back(t.coeff, t.axes.embed(offset, n_total));
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  return out;
}

cplx PauliOperator::drop_identity() {
  if (!terms_.empty() && terms_.front().axes.is_identity()) {
    const cplx c = terms_.front().coeff;
    terms_.erase(terms_.begin());
    return c;
  }
  return 0.0;
}

bool PauliOperator::is_hermitian(double tol) const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [tol](const PauliString& t) { return std::abs(t.coeff.imag()) < tol; });
}

double PauliOperator::max_abs_coeff() const {
  double m = 0;
  for (const auto& t : terms_) m = std::max(m, std::abs(t.coeff));
  return m;
}

std::string PauliOperator::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& t : terms_) {
    arr.push_back({{"coeff", {t.coeff.real(), t.coeff.imag()}}, {"axes", t.axes.to_string()}});
  }
  return arr.dump();
}

PauliOperator PauliOperator::from_json(std::string_view text) {
  const auto arr = nlohmann::json::parse(text);
  if (!arr.is_array()) throw std::invalid_argument("operator JSON must be an array");
  std::vector<PauliString> terms;
  std::size_t n = 0;
  for (const auto& e : arr) {
    const auto axes = e.at("axes").get<std::string>();
    const auto& c = e.at("coeff");
    if (terms.empty()) n = axes.size();
    terms.emplace_back(cplx(c.at(0).get<double>(), c.at(1).get<double>()), axes);
  }
  PauliOperator op(n);
  for (const auto& t : terms) check_same(t.axes.size(), n);
  op.terms_ = std::move(terms);
  // Keep values bit-exact; only restore canonical order.
  std::sort(op.terms_.begin(), op.terms_.end(),
            [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  return op;
}

bool PauliOperator::operator==(const PauliOperator& o) const {
  if (n_ != o.n_ || terms_.size() != o.terms_.size()) return false;
  for (std::size_t i = 0; i < terms_.size(); ++i) {
    if (terms_[i].axes != o.terms_[i].axes || terms_[i].coeff != o.terms_[i].coeff) return false;
  }
  return true;
}

PauliOperator operator+(PauliOperator a, const PauliOperator& b) { return a += b; }
PauliOperator operator-(PauliOperator a, const PauliOperator& b) { return a -= b; }

PauliOperator operator*(const PauliOperator& a, const PauliOperator& b) {
  check_same(a.n_qubits(), b.n_qubits());
  PauliAccumulator acc(a.n_qubits());
  acc.add_product(a, b);
  return acc.finish();
}

PauliOperator operator*(cplx c, PauliOperator a) { return a *= c; }

// ---------------------------------------------------------------------------

void PauliAccumulator::add(const PauliWord& w, cplx c) {
  check_same(w.size(), n_);
  map_[w] += c;
}

void PauliAccumulator::add(const PauliOperator& op, cplx scale) {
  for (const auto& t : op.terms()) add(t.axes, scale * t.coeff);
}

void PauliAccumulator::add_product(const PauliOperator& a, const PauliOperator& b, cplx scale) {
  map_.reserve(map_.size() + a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) {
      auto p = PauliProduct::of(ta.axes, tb.axes);
      map_[std::move(p.word)] += scale * ta.coeff * tb.coeff * phase_of(p.phase);
    }
  }
}

PauliOperator PauliAccumulator::finish(double tol) const {
  PauliOperator out(n_);
  out.terms_.reserve(map_.size());
  for (const auto& [w, c] : map_) {
    if (std::abs(c) >= tol) out.terms_.emplace_back(c, w);
  }
  std::sort(out.terms_.begin(), out.terms_.end(),
            [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  return out;
}

PauliOperator simplify(const PauliOperator& op, double tol) {
  std::vector<PauliString> t = op.terms_;
  std::stable_sort(t.begin(), t.end(),
                   [](const PauliString& a, const PauliString& b) { return a.axes < b.axes; });
  PauliOperator out(op.n_);
  for (std::size_t i = 0; i < t.size();) {
    std::size_t j = i;
    cplx c = 0;
    while (j < t.size() && t[j].axes == t[i].axes) c += t[j++].coeff;
    if (std::abs(c) >= tol) out.terms_.emplace_back(c, t[i].axes);
    i = j;
  }
  return out;
}

Classification classify(const PauliOperator& op) {
  Classification c;
  for (const auto& t : op.terms()) {
    const bool re0 = std::abs(t.coeff.real()) < kDropTol;
    const bool im0 = std::abs(t.coeff.imag()) < kDropTol;
    if (im0) {
      ++c.n_real;
    } else if (re0) {
      ++c.n_imag;
    } else {
      ++c.n_mixed;
    }
  }
  return c;
}

PauliOperator tensor(const PauliOperator& a, const PauliOperator& b) {
  std::vector<PauliString> out;
  out.reserve(a.size() * b.size());
  for (const auto& ta : a.terms()) {
    for (const auto& tb : b.terms()) out.emplace_back(ta.coeff * tb.coeff, ta.axes.concat(tb.axes));
  }
  return PauliOperator(a.n_qubits() + b.n_qubits(), std::move(out));
}

PauliOperator commutator(const PauliOperator& a, const PauliOperator& b) {
  PauliAccumulator acc(a.n_qubits());
  acc.add_product(a, b);
  acc.add_product(b, a, -1.0);
  return acc.finish();
}

PauliOperator anticommutator(const PauliOperator& a, const PauliOperator& b) {
  PauliAccumulator acc(a.n_qubits());
  acc.add_product(a, b);
  acc.add_product(b, a);
  return acc.finish();
}

// ---------------------------------------------------------------------------

namespace {

// Spreads the low 32 bits of v so that bit b lands on bit 2b.
std::uint64_t spread(std::uint64_t v) {
  v &= 0xffffffffULL;
  v = (v | (v << 16)) & 0x0000ffff0000ffffULL;
  v = (v | (v << 8)) & 0x00ff00ff00ff00ffULL;
  v = (v | (v << 4)) & 0x0f0f0f0f0f0f0f0fULL;
  v = (v | (v << 2)) & 0x3333333333333333ULL;
  v = (v | (v << 1)) & 0x5555555555555555ULL;
  return v;
}

}  // namespace

PauliOperator decompose_matrix(const Eigen::MatrixXcd& m, double tol) {
  const auto d = static_cast<std::uint64_t>(m.rows());
  if (m.rows() != m.cols() || d == 0 || (d & (d - 1)) != 0) {
    throw std::invalid_argument("matrix dimension is not a power of two");
  }
  const std::size_t n = std::countr_zero(d);
  if (n > kOracleQubits) throw ResourceLimitError("decompose_matrix limited to 12 qubits");

  // Base-4 digit of qubit q (bit position b = n-1-q) is 2 r_b + c_b.
  std::vector<cplx> t(d * d);
  for (std::uint64_t r = 0; r < d; ++r) {
    const std::uint64_t sr = spread(r) << 1;
    for (std::uint64_t c = 0; c < d; ++c) t[sr | spread(c)] = m(r, c);
  }
  const cplx im(0, 1);
  for (std::size_t b = 0; b < n; ++b) {
    const std::uint64_t stride = std::uint64_t{1} << (2 * b);
    for (std::uint64_t base = 0; base < t.size(); base += 4 * stride) {
      for (std::uint64_t off = 0; off < stride; ++off) {
        const std::uint64_t i0 = base + off;
        const cplx a = t[i0], bb = t[i0 + stride], c = t[i0 + 2 * stride], dd = t[i0 + 3 * stride];
        t[i0] = 0.5 * (a + dd);                    // I
        t[i0 + stride] = 0.5 * (bb + c);           // X
        t[i0 + 2 * stride] = 0.5 * im * (bb - c);  // Y
        t[i0 + 3 * stride] = 0.5 * (a - dd);       // Z
      }
    }
  }
  std::vector<PauliString> terms;
  for (std::uint64_t idx = 0; idx < t.size(); ++idx) {
    if (std::abs(t[idx]) < tol) continue;
    PauliWord w(n);
    for (std::size_t q = 0; q < n; ++q) {
      w.set(q, static_cast<Axis>((idx >> (2 * (n - 1 - q))) & 3U));
    }
    terms.emplace_back(t[idx], std::move(w));
  }
  return PauliOperator(n, std::move(terms), tol);
}

Eigen::MatrixXcd to_matrix(const PauliOperator& op) {
  const std::size_t n = op.n_qubits();
  if (n > kOracleQubits) throw ResourceLimitError("to_matrix limited to 12 qubits");
  const std::uint64_t d = std::uint64_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (const auto& t : op.terms()) {
    const std::uint64_t x = t.axes.x_mask(), z = t.axes.z_mask();
    const cplx base = t.coeff * phase_of(t.axes.y_count());
    for (std::uint64_t r = 0; r < d; ++r) {
      m(static_cast<Eigen::Index>(r ^ x), static_cast<Eigen::Index>(r)) +=
          (std::popcount(z & r) & 1) ? -base : base;
    }
  }
  return m;
}

Eigen::MatrixXcd to_matrix(const PauliString& p) {
  return to_matrix(PauliOperator(p.size(), {p}, 0.0));
}

}  // namespace lgt
