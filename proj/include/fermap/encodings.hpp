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
 * @file encodings.hpp
 * @brief Fenwick-forest fermion-to-qubit encodings (JW, BK, segmented BK).
 *
 * Majoranas c_j = a_j + a†_j and d_j = i(a†_j - a_j) map to single strings
 *
 *   c_j -> Z_{P(j)} X_j X_{U(j)},     d_j -> Z_{P(j) \ F(j)} Y_j X_{U(j)},
 *
 * and every other operator is assembled from them.
 */

#pragma once

#include <string>
#include <vector>

#include "fermap/fenwick.hpp"
#include "fermap/models.hpp"
#include "fermap/pauli.hpp"

namespace fermap {

enum class EncodingKind { jw, bk, forest };

inline std::string to_string(EncodingKind k) {
  switch (k) {
    case EncodingKind::jw: return "jw";
    case EncodingKind::bk: return "bk";
    case EncodingKind::forest: return "forest";
  }
  return "?";
}

struct EncodingSpec {
  EncodingKind kind = EncodingKind::jw;
  FenwickForest forest;

  std::size_t n_modes() const { return forest.n_sites(); }

  static EncodingSpec jordan_wigner(std::size_t n) { return {EncodingKind::jw, FenwickForest::singletons(n)}; }
  static EncodingSpec bravyi_kitaev(std::size_t n) { return {EncodingKind::bk, FenwickForest::build(n)}; }
  static EncodingSpec segmented(std::vector<std::size_t> sizes) {
    std::size_t n = 0;
    for (auto s : sizes) n += s;
    return {EncodingKind::forest, FenwickForest::build(n, sizes)};
  }
  /// `blocks` consecutive blocks of `block_size` modes, each split by `per_block`.
  static EncodingSpec segmented_blocks(std::size_t blocks, const std::vector<std::size_t>& per_block) {
    std::vector<std::size_t> sizes;
    for (std::size_t b = 0; b < blocks; ++b) sizes.insert(sizes.end(), per_block.begin(), per_block.end());
    return segmented(std::move(sizes));
  }
};

namespace detail {

inline void check_mode(const EncodingSpec& spec, std::size_t j) {
  if (j >= spec.n_modes()) {
    throw ArgumentError("mode " + std::to_string(j) + " out of range for " + std::to_string(spec.n_modes()) +
                        " modes");
  }
}

inline PauliString majorana_string(const EncodingSpec& spec, std::size_t j, bool is_d) {
  check_mode(spec, j);
  const auto& f = spec.forest;
  PauliString p(spec.n_modes());
  for (std::size_t q : is_d ? f.remainder_set(j) : f.parity_set(j)) p.set(q, Pauli::Z);
  p.set(j, is_d ? Pauli::Y : Pauli::X);
  for (std::size_t q : f.ancestors(j)) p.set(q, Pauli::X);
  return p;
}

}  // namespace detail

inline PauliString majorana_c_string(const EncodingSpec& spec, std::size_t j) {
  return detail::majorana_string(spec, j, false);
}
inline PauliString majorana_d_string(const EncodingSpec& spec, std::size_t j) {
  return detail::majorana_string(spec, j, true);
}

inline QubitOperator majorana_c(const EncodingSpec& spec, std::size_t j) { return QubitOperator(majorana_c_string(spec, j)); }
inline QubitOperator majorana_d(const EncodingSpec& spec, std::size_t j) { return QubitOperator(majorana_d_string(spec, j)); }

/// a_j = (c_j + i d_j) / 2
inline QubitOperator lowering(const EncodingSpec& spec, std::size_t j) {
  QubitOperator op(spec.n_modes());
  op.add_term(majorana_c_string(spec, j), 0.5);
  op.add_term(majorana_d_string(spec, j), Complex{0.0, 0.5});
  return op;
}

/// a†_j = (c_j - i d_j) / 2
inline QubitOperator raising(const EncodingSpec& spec, std::size_t j) {
  QubitOperator op(spec.n_modes());
  op.add_term(majorana_c_string(spec, j), 0.5);
  op.add_term(majorana_d_string(spec, j), Complex{0.0, -0.5});
  return op;
}

/// n_j = (1 - Z_{F(j) u {j}}) / 2
inline QubitOperator number_op(const EncodingSpec& spec, std::size_t j) {
  detail::check_mode(spec, j);
  PauliString z(spec.n_modes());
  for (std::size_t q : spec.forest.children(j)) z.set(q, Pauli::Z);
  z.set(j, Pauli::Z);
  QubitOperator op = QubitOperator::identity(spec.n_modes(), 0.5);
  op.add_term(z, -0.5);
  return op;
}

/// a†_k a_j + a†_j a_k = (i/2)(c_k d_j + c_j d_k)
inline QubitOperator hopping_op(const EncodingSpec& spec, std::size_t j, std::size_t k) {
  if (j == k) throw ArgumentError("hopping_op needs distinct modes (j == k is 2 n_j)");
  const auto cj = majorana_c_string(spec, j), dj = majorana_d_string(spec, j);
  const auto ck = majorana_c_string(spec, k), dk = majorana_d_string(spec, k);
  QubitOperator op(spec.n_modes());
  op.add_term(ck * dj, Complex{0.0, 0.5});
  op.add_term(cj * dk, Complex{0.0, 0.5});
  return op;
}

inline QubitOperator encode_factor(const EncodingSpec& spec, const FermionFactor& f) {
  switch (f.flavor) {
    case Flavor::raise: return raising(spec, f.mode);
    case Flavor::lower: return lowering(spec, f.mode);
    case Flavor::number: return number_op(spec, f.mode);
  }
  return QubitOperator(spec.n_modes());
}

inline QubitOperator encode_term(const EncodingSpec& spec, const FermionTerm& term) {
  QubitOperator out = QubitOperator::identity(spec.n_modes(), term.coeff);
  for (const auto& f : term.factors) out = out * encode_factor(spec, f);
  return out;
}

/// Factor-by-factor Majorana encoding of every term, summed and canonicalized.
inline QubitOperator encode_model(const EncodingSpec& spec, const FermionOperator& model) {
  if (model.n_modes() > spec.n_modes()) {
    throw ArgumentError("model uses " + std::to_string(model.n_modes()) + " modes, encoding has " +
                        std::to_string(spec.n_modes()));
  }
  QubitOperator out(spec.n_modes());
  for (const auto& term : model.terms()) out += encode_term(spec, term);
  return out;
}

}  // namespace fermap
