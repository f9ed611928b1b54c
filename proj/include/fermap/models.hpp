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
 * @file models.hpp
 * @brief Lattices, fermionic operators and the Hubbard model builder.
 *
 * Lattice vertices are numbered row-major with axis 0 fastest: on a w x h
 * rectangle vertex (x, y) is y*w + x, with y = 0 the top row. The mode
 * index of a vertex within a spin block is given by the site ordering;
 * spin down occupies modes [0, S) and spin up [S, 2S) for S sites.
 */

#pragma once

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "fermap/errors.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

enum class SiteOrdering { row_major, snake };

inline std::string to_string(SiteOrdering o) { return o == SiteOrdering::snake ? "snake" : "row_major"; }

inline SiteOrdering site_ordering_from_string(const std::string& s) {
  if (s == "snake") return SiteOrdering::snake;
  if (s == "row_major") return SiteOrdering::row_major;
  throw ArgumentError("unknown ordering '" + s + "'");
}

struct LatticeEdge {
  std::size_t a = 0;     ///< smaller vertex id
  std::size_t b = 0;     ///< larger vertex id
  std::size_t axis = 0;  ///< 0 = horizontal, 1 = vertical, k = k-th hypercube axis

  friend bool operator==(const LatticeEdge&, const LatticeEdge&) = default;
};

/// Open-boundary hypercubic lattice; a rectangle is the D = 2 case with extents {w, h}.
class Lattice {
 public:
  static Lattice rectangle(std::size_t w, std::size_t h, SiteOrdering ordering = SiteOrdering::row_major) {
    if (w == 0 || h == 0) throw ArgumentError("rectangle dimensions must be >= 1");
    return Lattice({w, h}, ordering, false);
  }

  static Lattice hypercube(std::size_t dim, std::size_t w, SiteOrdering ordering = SiteOrdering::row_major) {
    if (dim == 0 || w == 0) throw ArgumentError("hypercube needs D >= 1 and w >= 1");
    return Lattice(std::vector<std::size_t>(dim, w), ordering, true);
  }

  bool is_hypercube() const { return hypercube_; }
  std::size_t dim() const { return extents_.size(); }
  const std::vector<std::size_t>& extents() const { return extents_; }
  std::size_t width() const { return extents_[0]; }
  std::size_t height() const { return extents_.size() > 1 ? extents_[1] : 1; }
  SiteOrdering ordering() const { return ordering_; }
  std::size_t n_sites() const {
    return std::accumulate(extents_.begin(), extents_.end(), std::size_t{1}, std::multiplies<>());
  }
  std::size_t n_modes() const { return 2 * n_sites(); }

  std::vector<std::size_t> coords(std::size_t v) const {
    std::vector<std::size_t> c(extents_.size());
    for (std::size_t k = 0; k < extents_.size(); ++k) {
      c[k] = v % extents_[k];
      v /= extents_[k];
    }
    return c;
  }

  std::size_t vertex(const std::vector<std::size_t>& c) const {
    std::size_t v = 0;
    for (std::size_t k = extents_.size(); k-- > 0;) v = v * extents_[k] + c[k];
    return v;
  }

  /// Nearest-neighbour edges, sorted by (a, axis).
  std::vector<LatticeEdge> edges() const {
    std::vector<LatticeEdge> out;
    std::size_t stride = 1;
    std::vector<std::size_t> strides;
    for (std::size_t e : extents_) {
      strides.push_back(stride);
      stride *= e;
    }
    for (std::size_t v = 0; v < n_sites(); ++v) {
      auto c = coords(v);
      for (std::size_t k = 0; k < extents_.size(); ++k) {
        if (c[k] + 1 < extents_[k]) out.push_back({v, v + strides[k], k});
      }
    }
    return out;
  }

  std::size_t degree(std::size_t v) const {
    auto c = coords(v);
    std::size_t d = 0;
    for (std::size_t k = 0; k < extents_.size(); ++k) {
      if (c[k] > 0) ++d;
      if (c[k] + 1 < extents_[k]) ++d;
    }
    return d;
  }

  /// Vertex id -> mode index within one spin block. Snake reverses axis 0
  /// on every row whose higher coordinates have odd parity, and recursively
  /// reverses each axis k on odd parity of the axes above it.
  std::vector<std::size_t> order_sites() const {
    std::vector<std::size_t> out(n_sites());
    if (ordering_ == SiteOrdering::row_major) {
      std::iota(out.begin(), out.end(), std::size_t{0});
      return out;
    }
    auto path = snake_path();
    for (std::size_t i = 0; i < path.size(); ++i) out[path[i]] = i;
    return out;
  }

  /// Boustrophedon traversal; consecutive entries are lattice neighbours.
  std::vector<std::size_t> snake_path() const {
    std::vector<std::size_t> out;
    out.reserve(n_sites());
    for (std::size_t i = 0; i < n_sites(); ++i) {
      // Mixed-radix digits of i, most significant axis first; each lower
      // digit is reflected when the sum of the higher digits is odd.
      std::vector<std::size_t> c(extents_.size());
      std::size_t rest = i;
      for (std::size_t k = 0; k < extents_.size(); ++k) {
        c[k] = rest % extents_[k];
        rest /= extents_[k];
      }
      std::size_t parity = 0;
      for (std::size_t k = extents_.size(); k-- > 0;) {
        if (parity & 1U) c[k] = extents_[k] - 1 - c[k];
        parity += c[k];
      }
      out.push_back(vertex(c));
    }
    return out;
  }

  std::string describe() const {
    std::string s = hypercube_ ? "hypercube(D=" + std::to_string(dim()) + ",w=" + std::to_string(width()) + ")"
                               : "rectangle(" + std::to_string(width()) + "x" + std::to_string(height()) + ")";
    return s + "," + to_string(ordering_);
  }

 private:
  Lattice(std::vector<std::size_t> extents, SiteOrdering ordering, bool hypercube)
      : extents_(std::move(extents)), ordering_(ordering), hypercube_(hypercube) {}

  std::vector<std::size_t> extents_;
  SiteOrdering ordering_ = SiteOrdering::row_major;
  bool hypercube_ = false;
};

/// E(D, w) = D (w-1) w^(D-1).
inline std::uint64_t edge_count(std::size_t dim, std::size_t w) {
  if (dim == 0 || w == 0) throw ArgumentError("edge_count needs D >= 1 and w >= 1");
  std::uint64_t p = 1;
  for (std::size_t k = 1; k < dim; ++k) p *= w;
  return static_cast<std::uint64_t>(dim) * (w - 1) * p;
}

enum class Flavor : std::uint8_t { raise, lower, number };

struct FermionFactor {
  std::size_t mode = 0;
  Flavor flavor = Flavor::raise;

  friend bool operator==(const FermionFactor&, const FermionFactor&) = default;
};

struct FermionTerm {
  Complex coeff{1.0, 0.0};
  std::vector<FermionFactor> factors;  ///< applied right-to-left like an operator product
};

class FermionOperator {
 public:
  explicit FermionOperator(std::size_t n_modes = 0) : n_modes_(n_modes) {}

  std::size_t n_modes() const { return n_modes_; }
  const std::vector<FermionTerm>& terms() const { return terms_; }

  void add(Complex coeff, std::vector<FermionFactor> factors) {
    for (const auto& f : factors) {
      if (f.mode >= n_modes_) {
        throw ArgumentError("mode " + std::to_string(f.mode) + " out of range for " +
                            std::to_string(n_modes_) + " modes");
      }
    }
    if (coeff == Complex{0.0, 0.0}) return;
    terms_.push_back({coeff, std::move(factors)});
  }

  FermionOperator& operator+=(const FermionOperator& other) {
    if (other.n_modes_ != n_modes_) throw DimensionError("fermion operators on different mode counts");
    terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
    return *this;
  }

  /// Hermitian conjugate: reverse factor order, swap raise/lower, conjugate coefficients.
  FermionOperator adjoint() const {
    FermionOperator out(n_modes_);
    for (const auto& t : terms_) {
      std::vector<FermionFactor> f(t.factors.rbegin(), t.factors.rend());
      for (auto& x : f) {
        if (x.flavor == Flavor::raise) {
          x.flavor = Flavor::lower;
        } else if (x.flavor == Flavor::lower) {
          x.flavor = Flavor::raise;
        }
      }
      out.terms_.push_back({std::conj(t.coeff), std::move(f)});
    }
    return out;
  }

 private:
  std::size_t n_modes_ = 0;
  std::vector<FermionTerm> terms_;
};

/// a†_i a_j + a†_j a_i
inline FermionOperator hopping_pair(std::size_t n_modes, std::size_t i, std::size_t j, Complex coeff = 1.0) {
  FermionOperator op(n_modes);
  op.add(coeff, {{i, Flavor::raise}, {j, Flavor::lower}});
  op.add(coeff, {{j, Flavor::raise}, {i, Flavor::lower}});
  return op;
}

/// Mode index of (vertex, spin); spin 0 = down, 1 = up.
inline std::size_t mode_index(const Lattice& lattice, const std::vector<std::size_t>& order, std::size_t vertex,
                              int spin) {
  return static_cast<std::size_t>(spin) * lattice.n_sites() + order[vertex];
}

/// -t sum_{<ij>,s} (a†_is a_js + h.c.) + U sum_i n_i↑ n_i↓ + onsite sum_{i,s} n_is.
inline FermionOperator hubbard(const Lattice& lattice, double t, double u, double onsite = 0.0) {
  FermionOperator op(lattice.n_modes());
  const auto order = lattice.order_sites();
  for (int spin = 0; spin < 2; ++spin) {
    for (const auto& e : lattice.edges()) {
      const std::size_t i = mode_index(lattice, order, e.a, spin);
      const std::size_t j = mode_index(lattice, order, e.b, spin);
      op.add(-t, {{i, Flavor::raise}, {j, Flavor::lower}});
      op.add(-t, {{j, Flavor::raise}, {i, Flavor::lower}});
    }
  }
  for (std::size_t v = 0; v < lattice.n_sites(); ++v) {
    op.add(u, {{mode_index(lattice, order, v, 1), Flavor::number}, {mode_index(lattice, order, v, 0), Flavor::number}});
  }
  if (onsite != 0.0) {
    for (int spin = 0; spin < 2; ++spin) {
      for (std::size_t v = 0; v < lattice.n_sites(); ++v) {
        op.add(onsite, {{mode_index(lattice, order, v, spin), Flavor::number}});
      }
    }
  }
  return op;
}

/// Spinless nearest-neighbour model on one lattice copy: -t sum (a†a + h.c.) + onsite sum n.
inline FermionOperator single_spin_hopping(const Lattice& lattice, double t, double onsite) {
  FermionOperator op(lattice.n_sites());
  const auto order = lattice.order_sites();
  for (const auto& e : lattice.edges()) {
    const std::size_t i = order[e.a];
    const std::size_t j = order[e.b];
    op.add(-t, {{i, Flavor::raise}, {j, Flavor::lower}});
    op.add(-t, {{j, Flavor::raise}, {i, Flavor::lower}});
  }
  for (std::size_t v = 0; v < lattice.n_sites(); ++v) op.add(onsite, {{order[v], Flavor::number}});
  return op;
}

/// Reference Fock-space matrix. Basis index bit j is the occupancy of mode j
/// and a†_j carries the sign (-1)^(number of occupied modes below j). This is
/// the Jordan-Wigner representation used purely as a matrix device.
inline Eigen::MatrixXcd fock_matrix(const FermionOperator& op, std::size_t cap = kDefaultDenseCap) {
  const std::size_t n = op.n_modes();
  if (n > cap) {
    throw ResourceError("Fock space of " + std::to_string(n) + " modes exceeds cap " + std::to_string(cap));
  }
  const std::size_t dim = std::size_t{1} << n;
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(dim, dim);
  for (const auto& term : op.terms()) {
    for (std::uint64_t col = 0; col < dim; ++col) {
      std::uint64_t state = col;
      double sign = 1.0;
      bool alive = true;
      for (auto it = term.factors.rbegin(); it != term.factors.rend() && alive; ++it) {
        const std::uint64_t bit = std::uint64_t{1} << it->mode;
        const bool occupied = state & bit;
        switch (it->flavor) {
          case Flavor::number:
            alive = occupied;
            break;
          case Flavor::raise:
          case Flavor::lower: {
            if (occupied == (it->flavor == Flavor::raise)) {
              alive = false;
              break;
            }
            if (std::popcount(state & (bit - 1)) & 1) sign = -sign;
            state ^= bit;
            break;
          }
        }
      }
      if (alive) m(static_cast<Eigen::Index>(state), static_cast<Eigen::Index>(col)) += term.coeff * sign;
    }
  }
  return m;
}

}  // namespace fermap
