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


#include <gtest/gtest.h>

#include <bit>

#include "fermap/lsfs.hpp"
#include "oracles.hpp"

namespace {

using fermap::EdgeLayout;
using fermap::Gauge;
using fermap::PauliString;

/// Rectangle edge numbering written out directly: horizontal edges row by
/// row, then vertical edges row by row.
struct Grid {
  std::size_t w, h;
  std::size_t n_edges() const { return h * (w - 1) + w * (h - 1); }
  long hedge(std::size_t r, std::size_t c) const { return static_cast<long>(r * (w - 1) + c); }
  long vedge(std::size_t r, std::size_t c) const { return static_cast<long>(h * (w - 1) + r * w + c); }
  long left(std::size_t v) const { return v % w > 0 ? hedge(v / w, v % w - 1) : -1; }
  long right(std::size_t v) const { return v % w + 1 < w ? hedge(v / w, v % w) : -1; }
  long up(std::size_t v) const { return v / w > 0 ? vedge(v / w - 1, v % w) : -1; }
  long down(std::size_t v) const { return v / w + 1 < h ? vedge(v / w, v % w) : -1; }

  PauliString make(std::vector<long> zs, long x, int sign) const {
    PauliString p(n_edges());
    for (long q : zs) {
      if (q >= 0) p.set(static_cast<std::size_t>(q), fermap::Pauli::Z);
    }
    if (x >= 0) p.set(static_cast<std::size_t>(x), fermap::Pauli::X);
    p.set_phase_exponent(sign > 0 ? 0 : 2);
    return p;
  }
  PauliString b(std::size_t v) const { return make({left(v), right(v), up(v), down(v)}, -1, 1); }
  PauliString a(std::size_t j, std::size_t k) const {
    const std::size_t lo = std::min(j, k), hi = std::max(j, k);
    const int sign = j > k ? 1 : -1;
    if (hi == lo + 1) return make({up(lo), up(hi), left(lo)}, right(lo), sign);
    return make({left(lo), up(lo), right(lo)}, down(lo), sign);
  }
};

Eigen::MatrixXcd code_basis(const oracle::Mat& projector) {
  Eigen::SelfAdjointEigenSolver<oracle::Mat> s(projector);
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < s.eigenvalues().size(); ++i) {
    if (s.eigenvalues()[i] > 0.5) keep.push_back(i);
  }
  oracle::Mat q(projector.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) q.col(static_cast<Eigen::Index>(i)) = s.eigenvectors().col(keep[i]);
  return q;
}

oracle::Mat projector_from(const std::vector<PauliString>& stabs, std::size_t n) {
  const auto dim = Eigen::Index{1} << n;
  oracle::Mat p = oracle::Mat::Identity(dim, dim);
  for (const auto& s : stabs) p = p * (0.5 * (oracle::Mat::Identity(dim, dim) + fermap::to_dense(s)));
  return p;
}

Eigen::VectorXd even_sector_spectrum(const oracle::Mat& m, std::size_t n, std::size_t blocks = 1) {
  const std::size_t per = n / blocks;
  std::vector<Eigen::Index> idx;
  for (Eigen::Index b = 0; b < m.rows(); ++b) {
    bool even = true;
    for (std::size_t k = 0; k < blocks; ++k) {
      const auto part = (static_cast<std::uint64_t>(b) >> (k * per)) & ((std::uint64_t{1} << per) - 1);
      if (std::popcount(part) % 2 != 0) even = false;
    }
    if (even) idx.push_back(b);
  }
  oracle::Mat sub(idx.size(), idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = 0; j < idx.size(); ++j) sub(i, j) = m(idx[i], idx[j]);
  }
  return oracle::eigvals(sub);
}

oracle::Mat spinless_reference(std::size_t w, std::size_t h, double t, double eps) {
  const std::size_t n = w * h;
  const auto dim = Eigen::Index{1} << n;
  oracle::Mat m = oracle::Mat::Zero(dim, dim);
  for (const auto& [p, q] : oracle::grid_edges({w, h})) {
    m += -t * (oracle::jw_lower(n, p).adjoint() * oracle::jw_lower(n, q) +
               oracle::jw_lower(n, q).adjoint() * oracle::jw_lower(n, p));
  }
  for (std::size_t v = 0; v < n; ++v) m += eps * oracle::jw_lower(n, v).adjoint() * oracle::jw_lower(n, v);
  return m;
}

TEST(Lsfs, EdgeNumbering) {
  for (std::size_t w = 2; w <= 5; ++w) {
    for (std::size_t h = 2; h <= 5; ++h) {
      const EdgeLayout layout(w, h);
      const Grid g{w, h};
      ASSERT_EQ(layout.n_qubits(), g.n_edges());
      for (std::size_t v = 0; v < w * h; ++v) {
        auto get = [](std::optional<std::size_t> e) { return e ? static_cast<long>(*e) : -1L; };
        EXPECT_EQ(get(layout.edge(v, fermap::Direction::left)), g.left(v));
        EXPECT_EQ(get(layout.edge(v, fermap::Direction::right)), g.right(v));
        EXPECT_EQ(get(layout.edge(v, fermap::Direction::up)), g.up(v));
        EXPECT_EQ(get(layout.edge(v, fermap::Direction::down)), g.down(v));
      }
    }
  }
}

TEST(Lsfs, OperatorsMatchExplicitRectangleForms) {
  for (std::size_t w = 2; w <= 5; ++w) {
    for (std::size_t h = 2; h <= 5; ++h) {
      const EdgeLayout layout(w, h);
      const Grid g{w, h};
      for (std::size_t v = 0; v < w * h; ++v) EXPECT_EQ(fermap::b_string(layout, v), g.b(v));
      for (const auto& e : layout.edges()) {
        EXPECT_EQ(fermap::a_string(layout, e.lo, e.hi), g.a(e.lo, e.hi));
        EXPECT_EQ(fermap::a_string(layout, e.hi, e.lo), g.a(e.hi, e.lo));
        EXPECT_EQ(fermap::a_string(layout, e.hi, e.lo, Gauge::flipped), g.a(e.lo, e.hi));
      }
    }
  }
}

TEST(Lsfs, HopStringsMatchExplicitForms) {
  for (auto [w, h] : {std::pair<std::size_t, std::size_t>{4, 4}, {3, 5}, {5, 2}}) {
    const EdgeLayout layout(w, h);
    const Grid g{w, h};
    for (const auto& e : layout.edges()) {
      auto y_string = [&](std::vector<long> zs, long edge) {
        auto p = g.make(std::move(zs), -1, 1);
        p.set(static_cast<std::size_t>(edge), fermap::Pauli::Y);
        return p;
      };
      fermap::QubitOperator want(g.n_edges());
      if (e.hi == e.lo + 1) {
        const std::size_t k = e.lo;
        // -(1/2) Y (Z_k^down Z_{k+1}^up - Z_k^up Z_k^left Z_{k+1}^right Z_{k+1}^down)
        want.add_term(y_string({g.down(k), g.up(k + 1)}, g.right(k)), -0.5);
        want.add_term(y_string({g.up(k), g.left(k), g.right(k + 1), g.down(k + 1)}, g.right(k)), 0.5);
      } else {
        const std::size_t k = e.lo, j = e.hi;
        // (1/2) Y (Z_k^{left,right,up} Z_j^{left,right,down} - 1)
        want.add_term(y_string({g.left(k), g.right(k), g.up(k), g.left(j), g.right(j), g.down(j)}, g.up(j)), 0.5);
        want.add_term(y_string({}, g.up(j)), -0.5);
      }
      EXPECT_EQ(fermap::lsfs_hop(layout, e.lo, e.hi), want) << w << "x" << h << " " << e.lo << "-" << e.hi;
      EXPECT_EQ(fermap::lsfs_hop(layout, e.hi, e.lo), want);
    }
  }
}

TEST(Lsfs, NonEdgesRejected) {
  const EdgeLayout layout(3, 3);
  EXPECT_THROW(fermap::a_string(layout, 0, 4), fermap::ArgumentError);
  EXPECT_THROW(fermap::a_string(layout, 2, 3), fermap::ArgumentError);
  EXPECT_THROW(fermap::b_string(layout, 9), fermap::ArgumentError);
  EXPECT_THROW(fermap::stabilizer_string(layout, {0, 1, 4, 4}), fermap::ArgumentError);
  EXPECT_THROW(fermap::stabilizer_string(layout, {0, 1, 3, 4}), fermap::ArgumentError);
  EXPECT_THROW(fermap::hubbard_lsfs(1, 4, 1, 1, 0, 0), fermap::DimensionError);
}

void expect_algebra(const EdgeLayout& layout) {
  const auto& edges = layout.edges();
  for (const auto& e : edges) {
    const auto a = fermap::a_string(layout, e.lo, e.hi);
    const auto flipped = fermap::a_string(layout, e.hi, e.lo);
    EXPECT_EQ(flipped.unsigned_part(), a.unsigned_part());
    EXPECT_EQ((flipped.phase_exponent() - a.phase_exponent() + 4) % 4, 2);
    for (const auto& f : edges) {
      if (&e == &f) continue;
      const std::size_t shared = (e.lo == f.lo) + (e.lo == f.hi) + (e.hi == f.lo) + (e.hi == f.hi);
      EXPECT_EQ(fermap::commutes(a, fermap::a_string(layout, f.lo, f.hi)), shared == 0)
          << e.lo << "-" << e.hi << " vs " << f.lo << "-" << f.hi;
    }
    for (std::size_t v = 0; v < layout.n_vertices(); ++v) {
      EXPECT_EQ(fermap::commutes(a, fermap::b_string(layout, v)), v != e.lo && v != e.hi);
    }
  }
  for (std::size_t u = 0; u < layout.n_vertices(); ++u) {
    for (std::size_t v = 0; v < layout.n_vertices(); ++v) {
      EXPECT_TRUE(fermap::commutes(fermap::b_string(layout, u), fermap::b_string(layout, v)));
    }
  }
  const auto stabs = fermap::stabilizers(layout);
  for (const auto& s : stabs) {
    EXPECT_TRUE(s.is_hermitian());
    for (const auto& e : edges) EXPECT_TRUE(fermap::commutes(s, fermap::a_string(layout, e.lo, e.hi)));
    for (std::size_t v = 0; v < layout.n_vertices(); ++v) EXPECT_TRUE(fermap::commutes(s, fermap::b_string(layout, v)));
    for (const auto& r : stabs) EXPECT_TRUE(fermap::commutes(s, r));
  }
}

TEST(Lsfs, AlgebraOnRectangles) {
  for (std::size_t w = 2; w <= 5; ++w) {
    for (std::size_t h = 2; h <= 5; ++h) expect_algebra(EdgeLayout(w, h));
  }
}

TEST(Lsfs, AlgebraOnHypercubes) {
  expect_algebra(EdgeLayout(fermap::Lattice::hypercube(3, 3)));
  expect_algebra(EdgeLayout(fermap::Lattice::hypercube(3, 2)));
  expect_algebra(EdgeLayout(fermap::Lattice::hypercube(4, 2)));
  EXPECT_EQ(EdgeLayout(fermap::Lattice::hypercube(3, 3)).plaquettes().size(), 36u);
}

TEST(Lsfs, PlaquetteCountAndProductOfVertexOperators) {
  for (std::size_t w = 2; w <= 6; ++w) {
    for (std::size_t h = 2; h <= 6; ++h) {
      const EdgeLayout layout(w, h);
      EXPECT_EQ(layout.plaquettes().size(), (w - 1) * (h - 1));
      PauliString prod(layout.n_qubits());
      for (std::size_t v = 0; v < w * h; ++v) prod = prod * fermap::b_string(layout, v);
      EXPECT_TRUE(prod.is_identity());
      EXPECT_EQ(prod.phase_exponent(), 0);
    }
  }
  EXPECT_EQ(fermap::stabilizers(EdgeLayout(4, 4)).size(), 9u);
}

TEST(Lsfs, StabilizerIsProductAroundSquare) {
  const EdgeLayout layout(4, 3);
  const Grid g{4, 3};
  for (const auto& p : layout.plaquettes()) {
    const auto want = g.a(p[0], p[1]) * g.a(p[1], p[2]) * g.a(p[2], p[3]) * g.a(p[3], p[0]);
    EXPECT_EQ(fermap::stabilizer_string(layout, p), want);
  }
}

TEST(Lsfs, CodespaceDimension) {
  for (auto [w, h] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}, {2, 4}}) {
    const EdgeLayout layout(w, h);
    const auto p = fermap::codespace_projector(layout);
    EXPECT_NEAR(p.trace().real(), std::pow(2.0, static_cast<double>(w * h - 1)), 1e-9);
    EXPECT_LT((p * p - p).norm(), 1e-9);
    EXPECT_LT((p - projector_from(fermap::stabilizers(layout), layout.n_qubits())).norm(), 1e-9);
  }
  EXPECT_THROW(fermap::codespace_projector(EdgeLayout(4, 4)), fermap::ResourceError);
}

TEST(Lsfs, SingleSpinSpectrumMatchesEvenParitySector) {
  for (auto [w, h] : {std::pair<std::size_t, std::size_t>{2, 2}, {2, 3}, {3, 2}}) {
    const double t = 1.1, eps = 0.35;
    const auto want = even_sector_spectrum(spinless_reference(w, h, t, eps), w * h);
    for (Gauge gauge : {Gauge::standard, Gauge::flipped}) {
      const EdgeLayout layout(w, h);
      const auto h_q = fermap::to_dense(fermap::lsfs_single_spin(layout, t, eps, 0.0, gauge));
      const auto q = code_basis(projector_from(fermap::stabilizers(layout, gauge), layout.n_qubits()));
      ASSERT_EQ(q.cols(), want.size());
      const oracle::Mat compressed = q.adjoint() * h_q * q;
      EXPECT_LT((oracle::eigvals(compressed) - want).cwiseAbs().maxCoeff(), 1e-9) << w << "x" << h;
      // the Hamiltonian preserves the codespace
      EXPECT_LT((h_q * q - q * compressed).norm(), 1e-9);
    }
  }
}

TEST(Lsfs, PenaltyShiftsGroundStateIntoCodespace) {
  const EdgeLayout layout(3, 2);
  const double t = 1.0, eps = 0.2, delta = 20.0;
  const auto full = oracle::eigvals(fermap::to_dense(fermap::lsfs_single_spin(layout, t, eps, delta)));
  const auto want = even_sector_spectrum(spinless_reference(3, 2, t, eps), 6);
  const double offset = -delta / 2.0 * static_cast<double>(layout.plaquettes().size());
  EXPECT_NEAR(full[0], want[0] + offset, 1e-9);
  EXPECT_TRUE(fermap::lsfs_penalty(layout, 0.0).empty());
}

TEST(Lsfs, HubbardTwoByTwoMatchesPerSpinEvenSector) {
  const double t = 0.9, u = 2.5, eps = -0.3;
  const auto op = fermap::hubbard_lsfs(2, 2, t, u, eps, 0.0);
  ASSERT_EQ(op.n_qubits(), 8u);
  EXPECT_TRUE(op.is_hermitian());
  const EdgeLayout layout(2, 2);
  std::vector<PauliString> stabs;
  for (std::size_t off : {0, 4}) {
    for (const auto& s : fermap::stabilizers(layout)) {
      stabs.push_back(fermap::embed(fermap::QubitOperator(s), 8, off).terms().begin()->first);
    }
  }
  const auto q = code_basis(projector_from(stabs, 8));
  const auto got = oracle::eigvals(q.adjoint() * fermap::to_dense(op) * q);

  oracle::Mat ref = oracle::Mat::Zero(256, 256);
  auto a = [](std::size_t j) { return oracle::jw_lower(8, j); };
  for (std::size_t s : {0, 4}) {
    for (const auto& [p, r] : oracle::grid_edges({2, 2})) {
      ref += -t * (a(s + p).adjoint() * a(s + r) + a(s + r).adjoint() * a(s + p));
    }
    for (std::size_t v = 0; v < 4; ++v) ref += eps * a(s + v).adjoint() * a(s + v);
  }
  for (std::size_t v = 0; v < 4; ++v) ref += u * a(v).adjoint() * a(v) * a(v + 4).adjoint() * a(v + 4);
  const auto want = even_sector_spectrum(ref, 8, 2);
  ASSERT_EQ(got.size(), want.size());
  EXPECT_LT((got - want).cwiseAbs().maxCoeff(), 1e-9);
}

TEST(Lsfs, EmbedPlacesOperatorAtOffset) {
  fermap::QubitOperator op(2);
  op.add_term(PauliString::parse(2, "X0 Z1"), 2.0);
  const auto e = fermap::embed(op, 5, 3);
  EXPECT_EQ(e.coefficient(PauliString::parse(5, "X3 Z4")), fermap::Complex(2.0));
  EXPECT_THROW(fermap::embed(op, 4, 3), fermap::DimensionError);
}

}  // namespace
