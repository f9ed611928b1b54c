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
 * @file aux_fermion.hpp
 * @brief Resource planner for the auxiliary-fermion scheme.
 *
 * A snake path G1 fixes which hops are consecutive. Each remaining edge at
 * a site is non-local; one auxiliary mode absorbs up to two of them, so a
 * site needs ceil(d_nl / 2) auxiliaries. Only resources and localities are
 * reported here; no auxiliary operators are synthesized.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "fermap/errors.hpp"
#include "fermap/models.hpp"

namespace fermap {

struct AuxPlan {
  Lattice lattice = Lattice::rectangle(1, 1);
  std::vector<std::size_t> path;
  std::vector<std::size_t> degree;
  std::vector<std::size_t> nonlocal_degree;
  std::vector<std::size_t> aux_per_site;
  std::size_t qubits_per_spin = 0;
  std::size_t total_qubits = 0;  ///< both spin copies
};

inline std::vector<std::size_t> snake_path(std::size_t w, std::size_t h) {
  return Lattice::rectangle(w, h, SiteOrdering::snake).snake_path();
}

namespace detail {

inline AuxPlan plan_lattice(const Lattice& lattice) {
  AuxPlan plan;
  plan.lattice = lattice;
  plan.path = lattice.snake_path();
  const std::size_t n = lattice.n_sites();
  std::vector<std::size_t> path_degree(n, 0);
  for (std::size_t i = 0; i + 1 < plan.path.size(); ++i) {
    ++path_degree[plan.path[i]];
    ++path_degree[plan.path[i + 1]];
  }
  std::size_t aux_total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t deg = lattice.degree(v);
    plan.degree.push_back(deg);
    plan.nonlocal_degree.push_back(deg - path_degree[v]);
    plan.aux_per_site.push_back((plan.nonlocal_degree.back() + 1) / 2);
    aux_total += plan.aux_per_site.back();
  }
  plan.qubits_per_spin = n + aux_total;
  plan.total_qubits = 2 * plan.qubits_per_spin;
  return plan;
}

}  // namespace detail

inline AuxPlan plan(std::size_t w, std::size_t h) {
  if (w < 2 || h < 2) throw DimensionError("auxiliary plan needs w, h >= 2");
  return detail::plan_lattice(Lattice::rectangle(w, h, SiteOrdering::snake));
}

inline AuxPlan plan_hypercubic(std::size_t dim, std::size_t w) {
  if (dim == 0 || w < 2) throw DimensionError("hypercubic plan needs D >= 1 and w >= 2");
  return detail::plan_lattice(Lattice::hypercube(dim, w, SiteOrdering::snake));
}

/// Closed-form two-spin qubit count on a rectangle.
inline std::size_t aux_qubits_formula(std::size_t w, std::size_t h) { return 4 * w * h - 4; }

/// Two-spin qubit scaling for hypercubes, 2 D w^D.
inline std::uint64_t aux_qubits_hypercubic_formula(std::size_t dim, std::size_t w) {
  std::uint64_t p = 1;
  for (std::size_t i = 0; i < dim; ++i) p *= w;
  return 2 * dim * p;
}

struct AuxLocality {
  std::size_t density = 2;
  std::vector<std::size_t> hop_per_axis;  ///< axis 0 is horizontal
  std::size_t hop = 0;                    ///< worst over all axes
  std::size_t hop_text = 0;               ///< alternative closed form 2D - 2
};

/// A path edge touches its two modes; any other edge also touches every
/// auxiliary mode of both endpoints.
inline AuxLocality locality_profile(const AuxPlan& plan) {
  AuxLocality out;
  std::set<std::pair<std::size_t, std::size_t>> on_path;
  for (std::size_t i = 0; i + 1 < plan.path.size(); ++i) {
    on_path.insert(std::minmax(plan.path[i], plan.path[i + 1]));
  }
  out.hop_per_axis.assign(plan.lattice.dim(), 0);
  for (const auto& e : plan.lattice.edges()) {
    std::size_t loc = 2;
    if (!on_path.count({e.a, e.b})) loc += plan.aux_per_site[e.a] + plan.aux_per_site[e.b];
    out.hop_per_axis[e.axis] = std::max(out.hop_per_axis[e.axis], loc);
    out.hop = std::max(out.hop, loc);
  }
  out.hop_text = 2 * plan.lattice.dim() >= 2 ? 2 * plan.lattice.dim() - 2 : 0;
  return out;
}

/// Reorders a row-major (top row first) per-site vector so rows run bottom to top.
inline std::vector<std::size_t> rows_bottom_up(const std::vector<std::size_t>& values, std::size_t w, std::size_t h) {
  if (values.size() != w * h) throw DimensionError("vector length does not match the lattice");
  std::vector<std::size_t> out;
  out.reserve(values.size());
  for (std::size_t r = h; r-- > 0;) {
    out.insert(out.end(), values.begin() + static_cast<std::ptrdiff_t>(r * w),
               values.begin() + static_cast<std::ptrdiff_t>((r + 1) * w));
  }
  return out;
}

}  // namespace fermap
