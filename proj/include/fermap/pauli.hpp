// Copyright 2026 The fermap Authors
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

/**
 * @file pauli.hpp
 * @brief Exact n-qubit Pauli strings and complex-weighted sums of them.
 *
 * A PauliString stores packed X and Z bit masks plus a phase exponent k, so
 * that the represented operator is i^k * P_0 (x) P_1 (x) ... with
 * (x,z) = (1,0) -> X, (0,1) -> Z, (1,1) -> Y. Qubit 0 is the least
 * significant bit of word 0. All group arithmetic is exact.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <map>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fermap/errors.hpp"

namespace fermap {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

inline char pauli_char(Pauli p) {
  constexpr char kChars[] = {'I', 'X', 'Y', 'Z'};
  return kChars[static_cast<int>(p)];
}

inline Pauli pauli_from_char(char c) {
  switch (c) {
    case 'I': return Pauli::I;
    case 'X': return Pauli::X;
    case 'Y': return Pauli::Y;
    case 'Z': return Pauli::Z;
    default: throw ArgumentError(std::string("not a Pauli label: ") + c);
  }
}

class PauliString {
 public:
  PauliString() = default;

  explicit PauliString(std::size_t n_qubits)
      : n_qubits_(n_qubits), x_(word_count(n_qubits), 0), z_(word_count(n_qubits), 0) {}

  /// Sparse constructor, e.g. {{1, Pauli::Z}, {3, Pauli::X}}. Repeated qubits multiply.
  PauliString(std::size_t n_qubits, std::initializer_list<std::pair<std::size_t, Pauli>> ops)
      : PauliString(n_qubits) {
    for (auto [q, p] : ops) {
      PauliString single(n_qubits);
      single.set(q, p);
      *this = *this * single;
    }
  }

  /// Parses "Z1 Z2 X3 X6", optionally prefixed by a phase "+", "-", "i", "+i", "-i".
  /// An empty body (or "I") is the identity.
  static PauliString parse(std::size_t n_qubits, std::string_view text) {
    PauliString out(n_qubits);
    std::string s(text);
    std::size_t pos = 0;
    auto skip_ws = [&] { while (pos < s.size() && s[pos] == ' ') ++pos; };
    skip_ws();
    int k = 0;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') k = 2;
      ++pos;
    }
    if (pos < s.size() && s[pos] == 'i') {
      k += 1;
      ++pos;
    }
    std::istringstream in(s.substr(pos));
    std::string tok;
    while (in >> tok) {
      if (tok == "I") continue;
      Pauli p = pauli_from_char(tok[0]);
      std::size_t q = std::stoul(tok.substr(1));
      PauliString single(n_qubits);
      single.set(q, p);
      out = out * single;
    }
    out.phase_ = static_cast<std::uint8_t>((out.phase_ + k) & 3);
    return out;
  }

  std::size_t n_qubits() const { return n_qubits_; }
  std::span<const std::uint64_t> x_words() const { return x_; }
  std::span<const std::uint64_t> z_words() const { return z_; }

  /// Phase exponent k in {0,1,2,3}; the operator carries the factor i^k.
  int phase_exponent() const { return phase_; }
  Complex phase() const {
    constexpr Complex kPhases[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    return kPhases[phase_];
  }

  Pauli at(std::size_t q) const {
    check_index(q);
    const bool x = (x_[q >> 6] >> (q & 63)) & 1U;
    const bool z = (z_[q >> 6] >> (q & 63)) & 1U;
    if (x && z) return Pauli::Y;
    if (x) return Pauli::X;
    if (z) return Pauli::Z;
    return Pauli::I;
  }

  /// Overwrites the factor on qubit q; the phase is left unchanged.
  void set(std::size_t q, Pauli p) {
    check_index(q);
    const std::uint64_t bit = std::uint64_t{1} << (q & 63);
    const bool x = p == Pauli::X || p == Pauli::Y;
    const bool z = p == Pauli::Z || p == Pauli::Y;
    x_[q >> 6] = x ? (x_[q >> 6] | bit) : (x_[q >> 6] & ~bit);
    z_[q >> 6] = z ? (z_[q >> 6] | bit) : (z_[q >> 6] & ~bit);
  }

  void set_phase_exponent(int k) { phase_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4); }

  /// Same Pauli factors with phase +1.
  PauliString unsigned_part() const {
    PauliString out = *this;
    out.phase_ = 0;
    return out;
  }

  std::size_t weight() const {
    std::size_t w = 0;
    for (std::size_t i = 0; i < x_.size(); ++i) w += std::popcount(x_[i] | z_[i]);
    return w;
  }

  std::vector<std::size_t> support() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < x_.size(); ++i) {
      std::uint64_t m = x_[i] | z_[i];
      while (m) {
        out.push_back(i * 64 + std::countr_zero(m));
        m &= m - 1;
      }
    }
    return out;
  }

  bool is_identity() const { return weight() == 0; }
  /// Hermitian iff the phase is real.
  bool is_hermitian() const { return (phase_ & 1) == 0; }

  friend PauliString operator*(const PauliString& a, const PauliString& b) {
    require_same_size(a, b);
    PauliString out(a.n_qubits_);
    int k = a.phase_ + b.phase_;
    for (std::size_t i = 0; i < a.x_.size(); ++i) {
      const std::uint64_t ax = a.x_[i], az = a.z_[i], bx = b.x_[i], bz = b.z_[i];
      const std::uint64_t a_x = ax & ~az, a_y = ax & az, a_z = ~ax & az;
      const std::uint64_t b_x = bx & ~bz, b_y = bx & bz, b_z = ~bx & bz;
      // XY = iZ, YZ = iX, ZX = iY and the reversed orders give -i.
      const std::uint64_t plus = (a_x & b_y) | (a_y & b_z) | (a_z & b_x);
      const std::uint64_t minus = (a_x & b_z) | (a_y & b_x) | (a_z & b_y);
      k += std::popcount(plus) - std::popcount(minus);
      out.x_[i] = ax ^ bx;
      out.z_[i] = az ^ bz;
    }
    out.phase_ = static_cast<std::uint8_t>(((k % 4) + 4) % 4);
    return out;
  }

  friend bool operator==(const PauliString& a, const PauliString& b) = default;

  /// "+Z1 Z2 X3", "-iY0", "+I".
  std::string to_string() const {
    constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
    std::string out = kPrefix[phase_];
    bool first = true;
    for (std::size_t q : support()) {
      if (!first) out += ' ';
      out += pauli_char(at(q));
      out += std::to_string(q);
      first = false;
    }
    if (first) out += 'I';
    return out;
  }

 private:
  static std::size_t word_count(std::size_t n) { return (n + 63) / 64; }

  static void require_same_size(const PauliString& a, const PauliString& b) {
    if (a.n_qubits_ != b.n_qubits_) {
      throw DimensionError("Pauli strings act on " + std::to_string(a.n_qubits_) + " and " +
                           std::to_string(b.n_qubits_) + " qubits");
    }
  }

  void check_index(std::size_t q) const {
    if (q >= n_qubits_) {
      throw ArgumentError("qubit " + std::to_string(q) + " out of range for " +
                          std::to_string(n_qubits_) + " qubits");
    }
  }

  std::size_t n_qubits_ = 0;
  std::vector<std::uint64_t> x_;
  std::vector<std::uint64_t> z_;
  std::uint8_t phase_ = 0;
};

inline PauliString multiply(const PauliString& a, const PauliString& b) { return a * b; }

/// Symplectic test: true iff <a.x, b.z> + <a.z, b.x> is even.
inline bool commutes(const PauliString& a, const PauliString& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw DimensionError("commutes: qubit counts differ");
  }
  const auto ax = a.x_words(), az = a.z_words(), bx = b.x_words(), bz = b.z_words();
  int parity = 0;
  for (std::size_t i = 0; i < ax.size(); ++i) {
    parity ^= std::popcount((ax[i] & bz[i]) ^ (az[i] & bx[i])) & 1;
  }
  return parity == 0;
}

inline std::size_t weight(const PauliString& p) { return p.weight(); }

/// Canonical key order: numeric value of the z mask, then of the x mask.
struct PauliKeyLess {
  bool operator()(const PauliString& a, const PauliString& b) const {
    if (int c = compare_words(a.z_words(), b.z_words()); c != 0) return c < 0;
    return compare_words(a.x_words(), b.x_words()) < 0;
  }

 private:
  static int compare_words(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
  }
};

/// Sum of Pauli strings with complex coefficients. Keys are stored with
/// phase +1 (the phase is folded into the coefficient) and exact zeros are
/// dropped after every mutation.
class QubitOperator {
 public:
  using TermMap = std::map<PauliString, Complex, PauliKeyLess>;

  QubitOperator() = default;
  explicit QubitOperator(std::size_t n_qubits) : n_qubits_(n_qubits) {}
  QubitOperator(const PauliString& p, Complex coeff = 1.0) : n_qubits_(p.n_qubits()) {
    add_term(p, coeff);
  }

  static QubitOperator identity(std::size_t n_qubits, Complex coeff = 1.0) {
    return QubitOperator(PauliString(n_qubits), coeff);
  }

  std::size_t n_qubits() const { return n_qubits_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool empty() const { return terms_.empty(); }

  Complex coefficient(const PauliString& p) const {
    auto it = terms_.find(p.unsigned_part());
    return it == terms_.end() ? Complex{0.0, 0.0} : it->second * p.phase();
  }

  void add_term(const PauliString& p, Complex coeff) {
    require_size(p.n_qubits());
    if (coeff == Complex{0.0, 0.0}) return;
    PauliString key = p.unsigned_part();
    Complex c = coeff * p.phase();
    auto [it, inserted] = terms_.try_emplace(std::move(key), c);
    if (!inserted) {
      it->second += c;
      if (it->second == Complex{0.0, 0.0}) terms_.erase(it);
    }
  }

  QubitOperator& operator+=(const QubitOperator& other) {
    require_size(other.n_qubits_);
    for (const auto& [p, c] : other.terms_) add_term(p, c);
    return *this;
  }
  QubitOperator& operator-=(const QubitOperator& other) {
    require_size(other.n_qubits_);
    for (const auto& [p, c] : other.terms_) add_term(p, -c);
    return *this;
  }
  QubitOperator& operator*=(Complex s) {
    if (s == Complex{0.0, 0.0}) {
      terms_.clear();
      return *this;
    }
    for (auto it = terms_.begin(); it != terms_.end();) {
      it->second *= s;
      it = it->second == Complex{0.0, 0.0} ? terms_.erase(it) : std::next(it);
    }
    return *this;
  }

  friend QubitOperator operator+(QubitOperator a, const QubitOperator& b) { return a += b; }
  friend QubitOperator operator-(QubitOperator a, const QubitOperator& b) { return a -= b; }
  friend QubitOperator operator*(QubitOperator a, Complex s) { return a *= s; }
  friend QubitOperator operator*(Complex s, QubitOperator a) { return a *= s; }

  friend QubitOperator operator*(const QubitOperator& a, const QubitOperator& b) {
    if (a.n_qubits_ != b.n_qubits_) throw DimensionError("operator product: qubit counts differ");
    QubitOperator out(a.n_qubits_);
    for (const auto& [pa, ca] : a.terms_) {
      for (const auto& [pb, cb] : b.terms_) out.add_term(pa * pb, ca * cb);
    }
    return out;
  }

  friend bool operator==(const QubitOperator& a, const QubitOperator& b) {
    return a.n_qubits_ == b.n_qubits_ && a.terms_ == b.terms_;
  }

  QubitOperator adjoint() const {
    QubitOperator out(n_qubits_);
    for (const auto& [p, c] : terms_) out.add_term(p, std::conj(c));
    return out;
  }

  /// Every key is a Hermitian string, so Hermiticity means real coefficients.
  bool is_hermitian(double tol = 0.0) const {
    return std::all_of(terms_.begin(), terms_.end(),
                       [tol](const auto& t) { return std::abs(t.second.imag()) <= tol; });
  }

  /// Drops terms with |coeff| <= tol. With tol = 0 this is a no-op on a
  /// canonical operator, so canonicalization is idempotent.
  QubitOperator pruned(double tol) const {
    QubitOperator out(n_qubits_);
    for (const auto& [p, c] : terms_) {
      if (std::abs(c) > tol) out.terms_.emplace(p, c);
    }
    return out;
  }

  std::size_t max_weight() const {
    std::size_t w = 0;
    for (const auto& [p, c] : terms_) w = std::max(w, p.weight());
    return w;
  }

  /// Qubits on which at least one non-identity term acts.
  std::vector<std::size_t> support() const {
    std::vector<std::uint64_t> mask((n_qubits_ + 63) / 64, 0);
    for (const auto& [p, c] : terms_) {
      auto x = p.x_words();
      auto z = p.z_words();
      for (std::size_t i = 0; i < mask.size(); ++i) mask[i] |= x[i] | z[i];
    }
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < mask.size(); ++i) {
      for (std::uint64_t m = mask[i]; m; m &= m - 1) out.push_back(i * 64 + std::countr_zero(m));
    }
    return out;
  }

  /// Number of qubits the operator acts on non-trivially.
  std::size_t locality() const { return support().size(); }

  std::string to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [p, c] : terms_) {
      if (!first) os << " + ";
      os << "(" << c.real() << (c.imag() < 0 ? "-" : "+") << std::abs(c.imag()) << "i) "
         << p.to_string().substr(1);
      first = false;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  void require_size(std::size_t n) {
    if (terms_.empty() && n_qubits_ == 0) n_qubits_ = n;
    if (n != n_qubits_) {
      throw DimensionError("qubit count " + std::to_string(n) + " does not match operator on " +
                           std::to_string(n_qubits_));
    }
  }

  std::size_t n_qubits_ = 0;
  TermMap terms_;
};

inline QubitOperator anticommutator(const QubitOperator& a, const QubitOperator& b) {
  return a * b + b * a;
}

inline QubitOperator commutator(const QubitOperator& a, const QubitOperator& b) {
  return a * b - b * a;
}

inline constexpr std::size_t kDefaultDenseCap = 12;

/// Dense 2^n x 2^n matrix; basis index bit q is the computational state of qubit q.
inline Eigen::MatrixXcd to_dense(const QubitOperator& op, std::size_t cap = kDefaultDenseCap) {
  const std::size_t n = op.n_qubits();
  if (n > cap) {
    throw ResourceError("dense expansion of " + std::to_string(n) + " qubits exceeds cap " +
                        std::to_string(cap));
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& [p, c] : op.terms()) {
    const std::uint64_t x = n ? p.x_words()[0] : 0;
    const std::uint64_t z = n ? p.z_words()[0] : 0;
    // Y = iXZ on each qubit carrying both bits.
    constexpr Complex kIPow[] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const Complex base = c * kIPow[std::popcount(x & z) & 3];
    for (std::uint64_t col = 0; col < dim; ++col) {
      const bool odd = std::popcount(z & col) & 1;
      m(static_cast<Eigen::Index>(col ^ x), static_cast<Eigen::Index>(col)) += odd ? -base : base;
    }
  }
  return m;
}

inline Eigen::MatrixXcd to_dense(const PauliString& p, std::size_t cap = kDefaultDenseCap) {
  return to_dense(QubitOperator(p), cap);
}

}  // namespace fermap
