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
 * @file lsfs.hpp
 * @brief Loop-stabilized encoding: one qubit per lattice edge.
 *
 * Vertices use the lattice's row-major numbering (axis 0 fastest, y = 0 on
 * top). Edge qubits are numbered axis by axis and, within an axis, by the
 * lower endpoint; on a rectangle this lists the horizontal edges row by row
 * and then the vertical ones.
 *
 * Generators for an edge (j, k) with j < k:
 *
 *   B_v       = prod_{e ~ v} Z_e
 *   A_(jk)    = eps_jk X_(jk) prod_{l in n(j), l < k} Z_(lj) prod_{s in n(k), s < j} Z_(sk)
 *
 * On a rectangle this is X Z_j^up Z_k^up Z_j^left for horizontal edges and
 * X Z_j^left Z_j^up Z_j^right for vertical ones. The plaquette loop
 * A_(ab) A_(bc) A_(cd) A_(da) fixes the codespace at eigenvalue +1.
 */

#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "fermap/errors.hpp"
#include "fermap/models.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

enum class Direction { left, up, right, down };

/// Sign tensor convention: eps_jk = +1 for j > k (standard) or for j < k.
enum class Gauge { standard, flipped };

using Plaquette = std::array<std::size_t, 4>;

class EdgeLayout {
 public:
  struct Edge {
    std::size_t lo, hi, axis;
  };

  EdgeLayout(std::size_t w, std::size_t h) : EdgeLayout(Lattice::rectangle(w, h)) {}

  explicit EdgeLayout(Lattice lattice) : lattice_(std::move(lattice)) {
    const std::size_t n = lattice_.n_sites();
    const std::size_t d = lattice_.dim();
    strides_.assign(d, 1);
    for (std::size_t k = 1; k < d; ++k) strides_[k] = strides_[k - 1] * lattice_.extents()[k - 1];
    for (std::size_t axis = 0; axis < d; ++axis) {
      for (std::size_t v = 0; v < n; ++v) {
        if (lattice_.coords(v)[axis] + 1 < lattice_.extents()[axis]) edges_.push_back({v, v + strides_[axis], axis});
      }
    }
    neighbours_.resize(n);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      neighbours_[edges_[e].lo].push_back({edges_[e].hi, e});
      neighbours_[edges_[e].hi].push_back({edges_[e].lo, e});
    }
    for (auto& nb : neighbours_) std::sort(nb.begin(), nb.end());
  }

  const Lattice& lattice() const { return lattice_; }
  std::size_t width() const { return lattice_.width(); }
  std::size_t height() const { return lattice_.height(); }
  std::size_t n_vertices() const { return lattice_.n_sites(); }
  std::size_t n_qubits() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }

  /// (neighbour, edge qubit) pairs sorted by neighbour.
  const std::vector<std::pair<std::size_t, std::size_t>>& neighbours(std::size_t v) const {
    check_vertex(v);
    return neighbours_[v];
  }

  std::optional<std::size_t> edge_between(std::size_t a, std::size_t b) const {
    check_vertex(a);
    check_vertex(b);
    for (const auto& [nb, e] : neighbours_[a]) {
      if (nb == b) return e;
    }
    return std::nullopt;
  }

  /// Edge leaving `v` along `axis`; nullopt at the boundary.
  std::optional<std::size_t> edge_along(std::size_t v, std::size_t axis, bool forward) const {
    check_vertex(v);
    if (axis >= lattice_.dim()) return std::nullopt;
    const std::size_t c = lattice_.coords(v)[axis];
    if (forward) {
      if (c + 1 >= lattice_.extents()[axis]) return std::nullopt;
      return edge_between(v, v + strides_[axis]);
    }
    if (c == 0) return std::nullopt;
    return edge_between(v, v - strides_[axis]);
  }

  /// Rectangle accessors; `up` points toward row 0.
  std::optional<std::size_t> edge(std::size_t v, Direction d) const {
    switch (d) {
      case Direction::left: return edge_along(v, 0, false);
      case Direction::right: return edge_along(v, 0, true);
      case Direction::up: return edge_along(v, 1, false);
      case Direction::down: return edge_along(v, 1, true);
    }
    return std::nullopt;
  }

  /// Unit squares (v, v+a, v+a+b, v+b) for each axis pair a < b.
  std::vector<Plaquette> plaquettes() const {
    std::vector<Plaquette> out;
    const auto& ext = lattice_.extents();
    for (std::size_t a = 0; a < ext.size(); ++a) {
      for (std::size_t b = a + 1; b < ext.size(); ++b) {
        for (std::size_t v = 0; v < n_vertices(); ++v) {
          auto c = lattice_.coords(v);
          if (c[a] + 1 < ext[a] && c[b] + 1 < ext[b]) {
            out.push_back({v, v + strides_[a], v + strides_[a] + strides_[b], v + strides_[b]});
          }
        }
      }
    }
    return out;
  }

  void check_vertex(std::size_t v) const {
    if (v >= n_vertices()) {
      throw ArgumentError("vertex " + std::to_string(v) + " out of range for " + std::to_string(n_vertices()) +
                          " vertices");
    }
  }

 private:
  Lattice lattice_;
  std::vector<std::size_t> strides_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> neighbours_;
};

inline PauliString b_string(const EdgeLayout& layout, std::size_t v) {
  PauliString p(layout.n_qubits());
  for (const auto& [nb, e] : layout.neighbours(v)) p.set(e, Pauli::Z);
  return p;
}

inline QubitOperator b_op(const EdgeLayout& layout, std::size_t v) { return QubitOperator(b_string(layout, v)); }

inline PauliString a_string(const EdgeLayout& layout, std::size_t j, std::size_t k, Gauge gauge = Gauge::standard) {
  auto e = layout.edge_between(j, k);
  if (!e) throw ArgumentError("(" + std::to_string(j) + "," + std::to_string(k) + ") is not a lattice edge");
  const std::size_t lo = std::min(j, k), hi = std::max(j, k);
  PauliString p(layout.n_qubits());
  for (const auto& [l, q] : layout.neighbours(lo)) {
    if (l < hi) p.set(q, Pauli::Z);
  }
  for (const auto& [s, q] : layout.neighbours(hi)) {
    if (s < lo) p.set(q, Pauli::Z);
  }
  p.set(*e, Pauli::X);
  const bool positive = (j > k) == (gauge == Gauge::standard);
  p.set_phase_exponent(positive ? 0 : 2);
  return p;
}

inline QubitOperator a_op(const EdgeLayout& layout, std::size_t j, std::size_t k, Gauge gauge = Gauge::standard) {
  return QubitOperator(a_string(layout, j, k, gauge));
}

/// A_(ab) A_(bc) A_(cd) A_(da) around a unit square given in cyclic order.
inline PauliString stabilizer_string(const EdgeLayout& layout, const Plaquette& p, Gauge gauge = Gauge::standard) {
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t k = i + 1; k < 4; ++k) {
      if (p[i] == p[k]) throw ArgumentError("plaquette vertices must be distinct");
    }
    if (!layout.edge_between(p[i], p[(i + 1) % 4])) {
      throw ArgumentError("plaquette vertices are not a cyclic unit square");
    }
  }
  return a_string(layout, p[0], p[1], gauge) * a_string(layout, p[1], p[2], gauge) *
         a_string(layout, p[2], p[3], gauge) * a_string(layout, p[3], p[0], gauge);
}

inline QubitOperator stabilizer(const EdgeLayout& layout, const Plaquette& p, Gauge gauge = Gauge::standard) {
  return QubitOperator(stabilizer_string(layout, p, gauge));
}

inline std::vector<PauliString> stabilizers(const EdgeLayout& layout, Gauge gauge = Gauge::standard) {
  std::vector<PauliString> out;
  for (const auto& p : layout.plaquettes()) out.push_back(stabilizer_string(layout, p, gauge));
  return out;
}

/// a†_j a_k + a†_k a_j  ->  -i (A_(jk) B_k + B_j A_(jk)) / 2
inline QubitOperator lsfs_hop(const EdgeLayout& layout, std::size_t j, std::size_t k, Gauge gauge = Gauge::standard) {
  const auto a = a_string(layout, j, k, gauge);
  QubitOperator op(layout.n_qubits());
  op.add_term(a * b_string(layout, k), Complex{0.0, -0.5});
  op.add_term(b_string(layout, j) * a, Complex{0.0, -0.5});
  return op;
}

/// n_v -> (1 - B_v) / 2
inline QubitOperator lsfs_number(const EdgeLayout& layout, std::size_t v) {
  QubitOperator op = QubitOperator::identity(layout.n_qubits(), 0.5);
  op.add_term(b_string(layout, v), -0.5);
  return op;
}

/// -(delta/2) sum of all plaquette stabilizers.
inline QubitOperator lsfs_penalty(const EdgeLayout& layout, double delta, Gauge gauge = Gauge::standard) {
  QubitOperator op(layout.n_qubits());
  if (delta == 0.0) return op;
  for (const auto& s : stabilizers(layout, gauge)) op.add_term(s, -delta / 2.0);
  return op;
}

/// Single-spin -t sum hop + eps sum n - (delta/2) sum C.
inline QubitOperator lsfs_single_spin(const EdgeLayout& layout, double t, double eps, double delta = 0.0,
                                      Gauge gauge = Gauge::standard) {
  QubitOperator op(layout.n_qubits());
  for (const auto& e : layout.edges()) op += lsfs_hop(layout, e.lo, e.hi, gauge) * Complex{-t};
  if (eps != 0.0) {
    for (std::size_t v = 0; v < layout.n_vertices(); ++v) op += lsfs_number(layout, v) * Complex{eps};
  }
  op += lsfs_penalty(layout, delta, gauge);
  return op;
}

/// Copies `op` into qubits [offset, offset + op.n_qubits()) of an n-qubit register.
inline QubitOperator embed(const QubitOperator& op, std::size_t n, std::size_t offset) {
  if (offset + op.n_qubits() > n) throw DimensionError("embedding does not fit the target register");
  QubitOperator out(n);
  for (const auto& [p, c] : op.terms()) {
    PauliString q(n);
    for (std::size_t i : p.support()) q.set(offset + i, p.at(i));
    out.add_term(q, c);
  }
  return out;
}

/// Two-spin Hubbard model; spin-down edge qubits come first.
inline QubitOperator hubbard_lsfs(const EdgeLayout& layout, double t, double u, double eps, double delta,
                                  Gauge gauge = Gauge::standard) {
  if (layout.n_qubits() == 0) throw DimensionError("lattice has no edges");
  if (delta < 0.0) throw ArgumentError("penalty must be non-negative");
  const std::size_t e = layout.n_qubits();
  const auto single = lsfs_single_spin(layout, t, eps, delta, gauge);
  QubitOperator op = embed(single, 2 * e, 0) + embed(single, 2 * e, e);
  if (u != 0.0) {
    for (std::size_t v = 0; v < layout.n_vertices(); ++v) {
      op += embed(lsfs_number(layout, v), 2 * e, 0) * embed(lsfs_number(layout, v), 2 * e, e) * Complex{u};
    }
  }
  return op;
}

inline QubitOperator hubbard_lsfs(std::size_t w, std::size_t h, double t, double u, double eps, double delta) {
  if (w < 2 || h < 2) throw DimensionError("hubbard_lsfs needs w, h >= 2");
  return hubbard_lsfs(EdgeLayout(w, h), t, u, eps, delta);
}

/// Projector onto the joint +1 eigenspace of every plaquette stabilizer.
inline Eigen::MatrixXcd codespace_projector(const EdgeLayout& layout, std::size_t cap = kDefaultDenseCap) {
  const std::size_t n = layout.n_qubits();
  if (n > cap) {
    throw ResourceError("codespace projector needs " + std::to_string(n) + " qubits, cap is " + std::to_string(cap));
  }
  const auto dim = Eigen::Index{1} << n;
  Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
  for (const auto& s : stabilizers(layout)) {
    Eigen::MatrixXcd half = 0.5 * (Eigen::MatrixXcd::Identity(dim, dim) + to_dense(s, cap));
    proj = proj * half;
  }
  return proj;
}

}  // namespace fermap
