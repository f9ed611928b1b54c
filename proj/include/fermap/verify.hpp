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
 * @file verify.hpp
 * @brief Symbolic algebra sweeps and dense spectral cross-checks.
 *
 * Symbolic checks are exact: any surviving Pauli term is a failure and the
 * residual counts offending pairs. Dense checks compare sorted spectra with
 * an absolute tolerance of 1e-9 (spectra) or 1e-6 (penalty offsets).
 */

#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fermap/dense.hpp"
#include "fermap/encodings.hpp"
#include "fermap/io.hpp"
#include "fermap/lsfs.hpp"
#include "fermap/models.hpp"

namespace fermap {

inline constexpr double kSpectrumTolerance = 1e-9;
inline constexpr double kPenaltyTolerance = 1e-6;

enum class CheckStatus { pass, fail, skipped };

inline std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "?";
}

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double max_residual = 0.0;
  double measured = 0.0;  ///< check-specific headline number (dimension, offset, count)
  double seconds = 0.0;
  std::string detail;

  bool passed() const { return status == CheckStatus::pass; }
};

struct VerificationSuiteResult {
  std::vector<CheckResult> checks;

  std::string overall() const {
    bool skipped = false;
    for (const auto& c : checks) {
      if (c.status == CheckStatus::fail) return "fail";
      if (c.status == CheckStatus::skipped) skipped = true;
    }
    return skipped ? "partial" : "pass";
  }

  Json to_json(bool with_timing = false) const {
    Json arr = Json::array();
    for (const auto& c : checks) {
      Json j;
      j["name"] = c.name;
      j["status"] = to_string(c.status);
      j["max_residual"] = c.max_residual;
      j["measured"] = c.measured;
      if (with_timing) j["seconds"] = c.seconds;
      j["detail"] = c.detail;
      arr.push_back(j);
    }
    Json out;
    out["overall"] = overall();
    out["checks"] = arr;
    return out;
  }
};

namespace detail {

inline CheckResult timed(std::string name, const std::function<void(CheckResult&)>& body) {
  CheckResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  try {
    body(r);
  } catch (const ResourceError& e) {
    r.status = CheckStatus::skipped;
    r.detail = e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

inline void note_failure(CheckResult& r, const std::string& what) {
  r.status = CheckStatus::fail;
  r.max_residual += 1.0;
  if (r.detail.size() < 400) r.detail += (r.detail.empty() ? "" : "; ") + what;
}

inline std::string pair_label(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

}  // namespace detail

/// {a_i, a†_j} = delta_ij and {a_i, a_j} = 0 for every pair, in the Pauli algebra.
inline CheckResult check_car(const EncodingSpec& spec, const std::string& label = "") {
  return detail::timed("car " + (label.empty() ? to_string(spec.kind) : label), [&](CheckResult& r) {
    const std::size_t n = spec.n_modes();
    std::vector<QubitOperator> lo, hi;
    for (std::size_t j = 0; j < n; ++j) {
      lo.push_back(lowering(spec, j));
      hi.push_back(raising(spec, j));
    }
    const auto one = QubitOperator::identity(n);
    const QubitOperator zero(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (anticommutator(lo[i], hi[j]) != (i == j ? one : zero)) {
          detail::note_failure(r, "{a,a+} at " + detail::pair_label(i, j));
        }
        if (!anticommutator(lo[i], lo[j]).empty()) detail::note_failure(r, "{a,a} at " + detail::pair_label(i, j));
      }
    }
    r.measured = static_cast<double>(n);
  });
}

/// {c_i, c_j} = {d_i, d_j} = 2 delta_ij, {c_i, d_j} = 0.
inline CheckResult check_majorana_car(const EncodingSpec& spec, const std::string& label = "") {
  return detail::timed("majorana " + (label.empty() ? to_string(spec.kind) : label), [&](CheckResult& r) {
    const std::size_t n = spec.n_modes();
    std::vector<PauliString> c, d;
    for (std::size_t j = 0; j < n; ++j) {
      c.push_back(majorana_c_string(spec, j));
      d.push_back(majorana_d_string(spec, j));
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (const auto* s : {&c[i], &d[i]}) {
        const auto sq = *s * *s;
        if (!sq.is_identity() || sq.phase_exponent() != 0) detail::note_failure(r, "square at " + std::to_string(i));
      }
      if (commutes(c[i], d[i])) detail::note_failure(r, "{c,d} at " + detail::pair_label(i, i));
      for (std::size_t j = i + 1; j < n; ++j) {
        if (commutes(c[i], c[j]) || commutes(d[i], d[j]) || commutes(c[i], d[j]) || commutes(d[i], c[j])) {
          detail::note_failure(r, "majorana pair " + detail::pair_label(i, j));
        }
      }
    }
    r.measured = static_cast<double>(n);
  });
}

/// Random composition of n into segment sizes, driven by raw generator bits
/// so the sequence is identical on every standard library.
inline std::vector<std::size_t> random_segments(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> sizes;
  std::size_t run = 0;
  for (std::size_t j = 0; j < n; ++j) {
    ++run;
    if (j + 1 == n || (rng() & 1U)) {
      sizes.push_back(run);
      run = 0;
    }
  }
  return sizes;
}

inline CheckResult check_random_forests(std::size_t trials, std::size_t max_modes, std::uint64_t seed) {
  return detail::timed("car random forests", [&](CheckResult& r) {
    std::mt19937_64 rng(seed);
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t n = 1 + static_cast<std::size_t>(rng() % max_modes);
      const auto spec = EncodingSpec::segmented(random_segments(n, rng));
      const auto one = check_car(spec);
      const auto two = check_majorana_car(spec);
      if (!one.passed() || !two.passed()) {
        std::ostringstream os;
        os << "trial " << t << " segments";
        for (const auto& s : spec.forest.segments()) os << ' ' << (s.end - s.start);
        detail::note_failure(r, os.str() + ": " + one.detail + two.detail);
      }
    }
    r.measured = static_cast<double>(trials);
  });
}

/// Generator relations of the loop-stabilized encoding on `layout`.
inline CheckResult check_lsfs_algebra(const EdgeLayout& layout, Gauge gauge = Gauge::standard) {
  return detail::timed("lsfs algebra " + layout.lattice().describe(), [&](CheckResult& r) {
    const std::size_t nv = layout.n_vertices();
    std::vector<PauliString> b, a;
    for (std::size_t v = 0; v < nv; ++v) b.push_back(b_string(layout, v));
    for (const auto& e : layout.edges()) a.push_back(a_string(layout, e.lo, e.hi, gauge));
    const auto& edges = layout.edges();

    PauliString prod(layout.n_qubits());
    for (const auto& s : b) {
      prod = prod * s;
      if (!(s * s).is_identity() || (s * s).phase_exponent() != 0) detail::note_failure(r, "B^2 != I");
    }
    if (!prod.is_identity() || prod.phase_exponent() != 0) detail::note_failure(r, "prod B != I");
    for (std::size_t i = 0; i < nv; ++i) {
      for (std::size_t j = i + 1; j < nv; ++j) {
        if (!commutes(b[i], b[j])) detail::note_failure(r, "B" + detail::pair_label(i, j) + " anticommute");
      }
    }
    for (std::size_t x = 0; x < edges.size(); ++x) {
      const auto sq = a[x] * a[x];
      if (!sq.is_identity() || sq.phase_exponent() != 0) detail::note_failure(r, "A^2 != I");
      auto rev = a_string(layout, edges[x].hi, edges[x].lo, gauge);
      rev.set_phase_exponent(rev.phase_exponent() + 2);
      if (!(rev == a[x])) detail::note_failure(r, "A_(jk) != -A_(kj) at " + detail::pair_label(edges[x].lo, edges[x].hi));
      for (std::size_t v = 0; v < nv; ++v) {
        const bool touches = v == edges[x].lo || v == edges[x].hi;
        if (commutes(a[x], b[v]) == touches) {
          detail::note_failure(r, "A" + detail::pair_label(edges[x].lo, edges[x].hi) + " vs B" + std::to_string(v));
        }
      }
      for (std::size_t y = x + 1; y < edges.size(); ++y) {
        const int shared = (edges[x].lo == edges[y].lo) + (edges[x].lo == edges[y].hi) + (edges[x].hi == edges[y].lo) +
                           (edges[x].hi == edges[y].hi);
        if (commutes(a[x], a[y]) == (shared == 1)) {
          detail::note_failure(r, "A" + detail::pair_label(edges[x].lo, edges[x].hi) + " vs A" +
                                      detail::pair_label(edges[y].lo, edges[y].hi));
        }
      }
    }
    const auto stabs = stabilizers(layout, gauge);
    for (std::size_t s = 0; s < stabs.size(); ++s) {
      if (!stabs[s].is_hermitian()) detail::note_failure(r, "stabilizer " + std::to_string(s) + " not Hermitian");
      for (const auto& g : a) {
        if (!commutes(stabs[s], g)) detail::note_failure(r, "stabilizer " + std::to_string(s) + " vs A");
      }
      for (const auto& g : b) {
        if (!commutes(stabs[s], g)) detail::note_failure(r, "stabilizer " + std::to_string(s) + " vs B");
      }
      for (std::size_t t = s + 1; t < stabs.size(); ++t) {
        if (!commutes(stabs[s], stabs[t])) detail::note_failure(r, "stabilizers " + detail::pair_label(s, t));
      }
    }
    r.measured = static_cast<double>(stabs.size());
    if (r.detail.empty()) r.detail = std::to_string(stabs.size()) + " stabilizers";
  });
}

/// Sorted spectra of `model` under two encodings, both compared with the
/// Fock-space reference.
inline CheckResult spectra_match(const FermionOperator& model, const EncodingSpec& a, const EncodingSpec& b,
                                 std::size_t cap = kDefaultDenseCap, const std::string& label = "") {
  return detail::timed("spectra " + (label.empty() ? to_string(a.kind) + " vs " + to_string(b.kind) : label),
                       [&](CheckResult& r) {
                         const auto ref = dense::eigenvalues(fock_matrix(model, cap));
                         const auto ea = dense::eigenvalues(to_dense(encode_model(a, model), cap));
                         const auto eb = dense::eigenvalues(to_dense(encode_model(b, model), cap));
                         r.max_residual = std::max({dense::spectrum_distance(ea, eb), dense::spectrum_distance(ea, ref),
                                                    dense::spectrum_distance(eb, ref)});
                         r.measured = static_cast<double>(ref.size());
                         if (!(r.max_residual <= kSpectrumTolerance)) {
                           r.status = CheckStatus::fail;
                           r.detail = "spectra differ";
                         }
                       });
}

/// Eigenvalues of the single-spin loop-stabilized model on the stabilizer
/// codespace against the even-particle sector of the Jordan-Wigner model.
inline CheckResult lsfs_sector_match(std::size_t w, std::size_t h, double t, double eps,
                                     std::size_t cap = kDefaultDenseCap) {
  return detail::timed("lsfs sector " + std::to_string(w) + "x" + std::to_string(h), [&](CheckResult& r) {
    const EdgeLayout layout(w, h);
    const auto hq = to_dense(lsfs_single_spin(layout, t, eps), cap);
    const auto q = dense::range_basis(codespace_projector(layout, cap));
    const auto code = dense::eigenvalues(dense::compress(hq, q));

    const auto lat = Lattice::rectangle(w, h);
    const auto jw = to_dense(encode_model(EncodingSpec::jordan_wigner(lat.n_sites()), single_spin_hopping(lat, t, eps)), cap);
    const auto even = dense::eigenvalues(dense::submatrix(jw, dense::even_parity_states(lat.n_sites())));

    r.measured = static_cast<double>(q.cols());
    r.max_residual = dense::spectrum_distance(code, even);
    if (!(r.max_residual <= kSpectrumTolerance)) {
      r.status = CheckStatus::fail;
      r.detail = "codespace dim " + std::to_string(q.cols()) + ", even sector dim " + std::to_string(even.size());
    }
  });
}

/// Energy cost of flipping one stabilizer under -(delta/2) sum C.
///
/// For every sector with exactly one violated stabilizer the spectrum shift
/// of H + H_penalty relative to H is compared with the codespace shift; the
/// difference must equal delta. When delta exceeds the bandwidth of H the
/// lowest levels of the full Hamiltonian must also be the shifted codespace
/// spectrum. `measured` reports the largest single-violation offset.
inline CheckResult penalty_gap_check(std::size_t w, std::size_t h, double t, double eps, double delta,
                                     std::size_t cap = kDefaultDenseCap) {
  return detail::timed("penalty gap " + std::to_string(w) + "x" + std::to_string(h) + " delta=" + std::to_string(delta),
                       [&](CheckResult& r) {
    const EdgeLayout layout(w, h);
    const auto stabs = stabilizers(layout);
    const std::size_t m = stabs.size();
    const auto h0 = to_dense(lsfs_single_spin(layout, t, eps), cap);
    const auto h1 = to_dense(lsfs_single_spin(layout, t, eps, delta), cap);
    const auto dim = h0.rows();
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);
    std::vector<Eigen::MatrixXcd> cs;
    for (const auto& s : stabs) cs.push_back(to_dense(s, cap));

    auto sector_offset = [&](std::size_t violated, Eigen::VectorXd* base) {
      Eigen::MatrixXcd proj = id;
      for (std::size_t k = 0; k < m; ++k) proj = proj * (0.5 * (id + (k == violated ? -1.0 : 1.0) * cs[k]));
      const auto q = dense::range_basis(proj);
      const auto e0 = dense::eigenvalues(dense::compress(h0, q));
      const auto e1 = dense::eigenvalues(dense::compress(h1, q));
      if (base) *base = e0;
      return e0.size() == 0 ? 0.0 : (e1 - e0).mean();
    };

    Eigen::VectorXd code;
    const double code_offset = sector_offset(m, &code);
    double worst = 0.0, offset_max = 0.0;
    for (std::size_t k = 0; k < m; ++k) {
      const double diff = sector_offset(k, nullptr) - code_offset;
      offset_max = std::max(offset_max, diff);
      worst = std::max(worst, std::abs(diff - delta));
    }
    const auto full0 = dense::eigenvalues(h0);
    const double bandwidth = full0.size() ? full0.maxCoeff() - full0.minCoeff() : 0.0;
    if (m > 0 && delta > bandwidth) {
      const auto full1 = dense::eigenvalues(h1);
      const Eigen::VectorXd low = full1.head(code.size());
      Eigen::VectorXd expect = code.array() + code_offset;
      worst = std::max(worst, dense::spectrum_distance(low, expect));
    }
    r.measured = offset_max;
    r.max_residual = worst;
    if (!(worst <= kPenaltyTolerance)) {
      r.status = CheckStatus::fail;
      r.detail = "offset " + std::to_string(offset_max) + " expected " + std::to_string(delta);
    }
  });
}

struct SuiteOptions {
  std::uint64_t seed = 1;
  std::size_t dense_cap = kDefaultDenseCap;
  bool symbolic_only = false;
  std::size_t random_trials = 100;
};

/// Default desk-scale suite.
inline VerificationSuiteResult run_suite(const SuiteOptions& opt) {
  VerificationSuiteResult out;
  out.checks.push_back(check_car(EncodingSpec::jordan_wigner(7), "jw N=7"));
  out.checks.push_back(check_car(EncodingSpec::bravyi_kitaev(7), "bk N=7"));
  out.checks.push_back(check_majorana_car(EncodingSpec::bravyi_kitaev(16), "bk N=16"));
  out.checks.push_back(check_majorana_car(EncodingSpec::segmented({4, 4, 4, 4}), "forest 4x4"));
  out.checks.push_back(check_random_forests(opt.random_trials, 12, opt.seed));
  out.checks.push_back(check_lsfs_algebra(EdgeLayout(3, 3)));
  out.checks.push_back(check_lsfs_algebra(EdgeLayout(4, 4)));
  if (opt.symbolic_only) return out;
  const auto lat = Lattice::rectangle(2, 2);
  const auto model = hubbard(lat, 1.0, 4.0);
  out.checks.push_back(spectra_match(model, EncodingSpec::jordan_wigner(8), EncodingSpec::bravyi_kitaev(8),
                                     opt.dense_cap, "hubbard 2x2 jw vs bk"));
  out.checks.push_back(spectra_match(model, EncodingSpec::jordan_wigner(8), EncodingSpec::segmented_blocks(4, {2}),
                                     opt.dense_cap, "hubbard 2x2 jw vs sbk"));
  out.checks.push_back(lsfs_sector_match(2, 2, 1.0, 0.3, opt.dense_cap));
  for (double d : {10.0, 100.0}) out.checks.push_back(penalty_gap_check(2, 2, 1.0, 0.3, d, opt.dense_cap));
  return out;
}

}  // namespace fermap
