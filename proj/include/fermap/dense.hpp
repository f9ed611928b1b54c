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
 * @file dense.hpp
 * @brief Small dense linear-algebra helpers for desk-scale checks.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "fermap/errors.hpp"

namespace fermap::dense {

/// Ascending eigenvalues of a Hermitian matrix.
inline Eigen::VectorXd eigenvalues(const Eigen::MatrixXcd& m) {
  if (m.rows() != m.cols()) throw DimensionError("eigenvalues of a non-square matrix");
  if (m.rows() == 0) return Eigen::VectorXd();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(m, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ResourceError("eigensolver did not converge");
  return solver.eigenvalues();
}

/// Largest |m - m†| entry.
inline double hermiticity_residual(const Eigen::MatrixXcd& m) {
  if (m.size() == 0) return 0.0;
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

/// Orthonormal basis (columns) of the range of an orthogonal projector.
inline Eigen::MatrixXcd range_basis(const Eigen::MatrixXcd& projector) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(projector);
  const auto& ev = solver.eigenvalues();
  std::vector<Eigen::Index> keep;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (ev[i] > 0.5) keep.push_back(i);
  }
  Eigen::MatrixXcd q(projector.rows(), static_cast<Eigen::Index>(keep.size()));
  for (std::size_t c = 0; c < keep.size(); ++c) q.col(static_cast<Eigen::Index>(c)) = solver.eigenvectors().col(keep[c]);
  return q;
}

/// Q† M Q for an isometry Q.
inline Eigen::MatrixXcd compress(const Eigen::MatrixXcd& m, const Eigen::MatrixXcd& q) { return q.adjoint() * m * q; }

/// Computational-basis states with an even number of set bits.
inline std::vector<Eigen::Index> even_parity_states(std::size_t n_qubits) {
  std::vector<Eigen::Index> out;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n_qubits); ++b) {
    if ((std::popcount(b) & 1) == 0) out.push_back(static_cast<Eigen::Index>(b));
  }
  return out;
}

inline Eigen::MatrixXcd submatrix(const Eigen::MatrixXcd& m, const std::vector<Eigen::Index>& idx) {
  const auto k = static_cast<Eigen::Index>(idx.size());
  Eigen::MatrixXcd out(k, k);
  for (Eigen::Index r = 0; r < k; ++r) {
    for (Eigen::Index c = 0; c < k; ++c) out(r, c) = m(idx[static_cast<std::size_t>(r)], idx[static_cast<std::size_t>(c)]);
  }
  return out;
}

/// max_i |a_i - b_i| for equally sized sorted spectra; infinity on size mismatch.
inline double spectrum_distance(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  if (a.size() != b.size()) return INFINITY;
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace fermap::dense
