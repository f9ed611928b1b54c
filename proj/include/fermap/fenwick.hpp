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
 * @file fenwick.hpp
 * @brief Fenwick trees and segmented Fenwick forests over fermionic sites.
 *
 * Each segment [L, R] is linked by the midpoint recursion
 *
 *   Fenwick(L, R): if L != R, connect R to floor((L+R)/2), then recurse on
 *                  [L, floor((L+R)/2)] and [floor((L+R)/2)+1, R],
 *
 * which roots the segment at R. A forest of singleton segments is the
 * Jordan-Wigner limit; a single segment is the Bravyi-Kitaev tree.
 *
 * Per site j the forest answers
 *   F(j)  children of j,
 *   U(j)  ancestors of j (all > j),
 *   C(j)  children of ancestors of j with index < j,
 *   P(j)  F(j) u C(j) u {roots of earlier segments} (all < j).
 * Every query returns a sorted index list.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fermap/errors.hpp"

namespace fermap {

struct Segment {
  std::size_t start = 0;  ///< first site
  std::size_t end = 0;    ///< last site (inclusive); also the segment's root

  friend bool operator==(const Segment&, const Segment&) = default;
};

/// Occupancy n_j or encoded partial sum x_j, one entry per site, values 0/1.
using BitString = std::vector<std::uint8_t>;

inline BitString bits_from_string(const std::string& s) {
  BitString out;
  out.reserve(s.size());
  for (char c : s) {
    if (c != '0' && c != '1') throw ArgumentError(std::string("not a bit: ") + c);
    out.push_back(static_cast<std::uint8_t>(c - '0'));
  }
  return out;
}

inline std::string bits_to_string(const BitString& b) {
  std::string out;
  out.reserve(b.size());
  for (auto v : b) out.push_back(static_cast<char>('0' + v));
  return out;
}

class FenwickForest {
 public:
  /// One tree per entry of segment_sizes; an empty list means a single tree over all sites.
  static FenwickForest build(std::size_t n_sites, const std::vector<std::size_t>& segment_sizes = {}) {
    if (n_sites == 0) throw ArgumentError("Fenwick forest needs at least one site");
    std::vector<std::size_t> sizes = segment_sizes.empty() ? std::vector<std::size_t>{n_sites} : segment_sizes;
    std::size_t total = 0;
    for (std::size_t s : sizes) {
      if (s == 0) throw ArgumentError("segment sizes must be positive");
      total += s;
    }
    if (total != n_sites) {
      throw ArgumentError("segment sizes sum to " + std::to_string(total) + ", expected " +
                          std::to_string(n_sites));
    }

    FenwickForest f;
    f.parent_.assign(n_sites, std::nullopt);
    f.children_.assign(n_sites, {});
    f.segment_of_.assign(n_sites, 0);
    std::size_t start = 0;
    for (std::size_t s : sizes) {
      const Segment seg{start, start + s - 1};
      f.link(seg.start, seg.end);
      for (std::size_t j = seg.start; j <= seg.end; ++j) f.segment_of_[j] = f.segments_.size();
      f.segments_.push_back(seg);
      f.roots_.push_back(seg.end);
      start += s;
    }
    for (auto& c : f.children_) std::sort(c.begin(), c.end());
    return f;
  }

  /// All singleton segments (Jordan-Wigner limit).
  static FenwickForest singletons(std::size_t n_sites) {
    return build(n_sites, std::vector<std::size_t>(n_sites, 1));
  }

  std::size_t n_sites() const { return parent_.size(); }
  const std::vector<Segment>& segments() const { return segments_; }
  const std::vector<std::size_t>& roots() const { return roots_; }
  std::optional<std::size_t> parent(std::size_t j) const {
    check(j);
    return parent_[j];
  }
  std::size_t segment_of(std::size_t j) const {
    check(j);
    return segment_of_[j];
  }

  /// F(j)
  const std::vector<std::size_t>& children(std::size_t j) const {
    check(j);
    return children_[j];
  }

  /// U(j), ascending (nearest ancestor first).
  std::vector<std::size_t> ancestors(std::size_t j) const {
    check(j);
    std::vector<std::size_t> out;
    for (auto p = parent_[j]; p; p = parent_[*p]) out.push_back(*p);
    return out;
  }

  /// C(j)
  std::vector<std::size_t> lesser_cousins(std::size_t j) const {
    std::vector<std::size_t> out;
    for (std::size_t a : ancestors(j)) {
      for (std::size_t c : children_[a]) {
        if (c < j) out.push_back(c);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Roots of segments that end before j's segment starts.
  std::vector<std::size_t> earlier_roots(std::size_t j) const {
    check(j);
    return {roots_.begin(), roots_.begin() + static_cast<std::ptrdiff_t>(segment_of_[j])};
  }

  /// P(j) = F(j) u C(j) u earlier roots.
  std::vector<std::size_t> parity_set(std::size_t j) const {
    std::vector<std::size_t> out = children(j);
    auto c = lesser_cousins(j);
    auto r = earlier_roots(j);
    out.insert(out.end(), c.begin(), c.end());
    out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// P(j) \ F(j): the Z support of the d_j Majorana.
  std::vector<std::size_t> remainder_set(std::size_t j) const {
    std::vector<std::size_t> out = lesser_cousins(j);
    auto r = earlier_roots(j);
    out.insert(out.end(), r.begin(), r.end());
    std::sort(out.begin(), out.end());
    return out;
  }

  /// Edges on the longest root-to-leaf path of segment s.
  std::size_t depth(std::size_t s = 0) const {
    const Segment& seg = segments_.at(s);
    std::size_t best = 0;
    for (std::size_t j = seg.start; j <= seg.end; ++j) {
      std::size_t d = 0;
      for (auto p = parent_[j]; p; p = parent_[*p]) ++d;
      best = std::max(best, d);
    }
    return best;
  }

  /// x_j = n_j + sum_{k in F(j)} x_k (mod 2). Children precede parents, so one ascending pass suffices.
  BitString encode(const BitString& occupancies) const {
    require_length(occupancies.size());
    BitString x(occupancies.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
      std::uint8_t v = occupancies[j] & 1U;
      for (std::size_t c : children_[j]) v ^= x[c];
      x[j] = v;
    }
    return x;
  }

  BitString decode(const BitString& code) const {
    require_length(code.size());
    BitString n(code.size());
    for (std::size_t j = 0; j < n.size(); ++j) {
      std::uint8_t v = code[j] & 1U;
      for (std::size_t c : children_[j]) v ^= code[c];
      n[j] = v;
    }
    return n;
  }

  /// One line per node: "j: parent=p children=[a,b]" (parent=- for roots).
  std::string dump() const {
    std::ostringstream os;
    for (std::size_t j = 0; j < n_sites(); ++j) {
      os << j << ": parent=";
      if (parent_[j]) {
        os << *parent_[j];
      } else {
        os << '-';
      }
      os << " children=[";
      for (std::size_t i = 0; i < children_[j].size(); ++i) os << (i ? "," : "") << children_[j][i];
      os << "]\n";
    }
    return os.str();
  }

 private:
  // Recursion depth is O(log N).
  void link(std::size_t left, std::size_t right) {
    if (left == right) return;
    const std::size_t mid = (left + right) / 2;
    parent_[mid] = right;
    children_[right].push_back(mid);
    link(left, mid);
    link(mid + 1, right);
  }

  void check(std::size_t j) const {
    if (j >= parent_.size()) {
      throw ArgumentError("site " + std::to_string(j) + " out of range for " +
                          std::to_string(parent_.size()) + " sites");
    }
  }

  void require_length(std::size_t n) const {
    if (n != parent_.size()) {
      throw DimensionError("bit string of length " + std::to_string(n) + " for " +
                           std::to_string(parent_.size()) + " sites");
    }
  }

  std::vector<std::optional<std::size_t>> parent_;
  std::vector<std::vector<std::size_t>> children_;
  std::vector<std::size_t> segment_of_;
  std::vector<Segment> segments_;
  std::vector<std::size_t> roots_;
};

}  // namespace fermap
