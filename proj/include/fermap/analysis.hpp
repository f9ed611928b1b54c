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
 * @file analysis.hpp
 * @brief Worst-case operator locality of encoded Hubbard models.
 *
 * The locality of one physical term (a Hermitian hopping pair or an on-site
 * density product) is the number of qubits its encoded operator acts on,
 * i.e. the size of the union of the supports of its Pauli strings. The
 * heaviest single string is kept alongside as a secondary figure.
 */

#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "fermap/aux_fermion.hpp"
#include "fermap/encodings.hpp"
#include "fermap/errors.hpp"
#include "fermap/lsfs.hpp"
#include "fermap/models.hpp"

namespace fermap {

inline constexpr int kLocalityCsvVersion = 1;

inline bool is_pow2(std::uint64_t x) { return x != 0 && std::has_single_bit(x); }
inline std::size_t floor_log2(std::uint64_t x) { return x == 0 ? 0 : static_cast<std::size_t>(std::bit_width(x) - 1); }
inline std::size_t ceil_log2(std::uint64_t x) { return x <= 1 ? 0 : static_cast<std::size_t>(std::bit_width(x - 1)); }

inline std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e-- > 0) r *= b;
  return r;
}

// ---------------------------------------------------------------------------
// Measurement

struct MeasuredLocality {
  std::size_t qubits = 0;
  std::size_t density = 0;
  std::size_t density_string = 0;
  std::vector<std::size_t> hop_per_axis;
  std::vector<std::size_t> hop_string_per_axis;
  std::size_t hop = 0;
  std::size_t hop_string = 0;

  std::size_t horizontal() const { return hop_per_axis.empty() ? 0 : hop_per_axis[0]; }
  std::size_t vertical() const { return hop_per_axis.size() < 2 ? 0 : hop_per_axis[1]; }
  std::size_t worst() const { return std::max(density, hop); }
};

namespace detail {

inline void record_hop(MeasuredLocality& m, std::size_t axis, const QubitOperator& op) {
  const std::size_t loc = op.locality(), str = op.max_weight();
  m.hop_per_axis[axis] = std::max(m.hop_per_axis[axis], loc);
  m.hop_string_per_axis[axis] = std::max(m.hop_string_per_axis[axis], str);
  m.hop = std::max(m.hop, loc);
  m.hop_string = std::max(m.hop_string, str);
}

inline void record_density(MeasuredLocality& m, const QubitOperator& op) {
  m.density = std::max(m.density, op.locality());
  m.density_string = std::max(m.density_string, op.max_weight());
}

}  // namespace detail

/// Encodes every hopping pair and on-site interaction of the two-spin Hubbard
/// model on `lattice` and records the worst locality per term class.
inline MeasuredLocality measure(const EncodingSpec& spec, const Lattice& lattice) {
  if (spec.n_modes() != lattice.n_modes()) {
    throw ArgumentError("encoding covers " + std::to_string(spec.n_modes()) + " modes, model has " +
                        std::to_string(lattice.n_modes()));
  }
  MeasuredLocality m;
  m.qubits = spec.n_modes();
  m.hop_per_axis.assign(lattice.dim(), 0);
  m.hop_string_per_axis.assign(lattice.dim(), 0);
  const auto order = lattice.order_sites();
  const std::size_t n = lattice.n_modes();
  for (int spin = 0; spin < 2; ++spin) {
    for (const auto& e : lattice.edges()) {
      const auto pair = hopping_pair(n, mode_index(lattice, order, e.a, spin), mode_index(lattice, order, e.b, spin));
      detail::record_hop(m, e.axis, encode_model(spec, pair));
    }
  }
  for (std::size_t v = 0; v < lattice.n_sites(); ++v) {
    FermionOperator dd(n);
    dd.add(1.0, {{mode_index(lattice, order, v, 1), Flavor::number}, {mode_index(lattice, order, v, 0), Flavor::number}});
    detail::record_density(m, encode_model(spec, dd));
  }
  return m;
}

/// Two-spin loop-stabilized Hubbard model on `layout`.
inline MeasuredLocality measure(const EdgeLayout& layout) {
  MeasuredLocality m;
  const std::size_t e = layout.n_qubits();
  const std::size_t dim = layout.lattice().dim();
  m.qubits = 2 * e;
  m.hop_per_axis.assign(dim, 0);
  m.hop_string_per_axis.assign(dim, 0);
  for (std::size_t offset : {std::size_t{0}, e}) {
    for (const auto& edge : layout.edges()) {
      detail::record_hop(m, edge.axis, embed(lsfs_hop(layout, edge.lo, edge.hi), 2 * e, offset));
    }
  }
  for (std::size_t v = 0; v < layout.n_vertices(); ++v) {
    const auto n = lsfs_number(layout, v);
    detail::record_density(m, embed(n, 2 * e, 0) * embed(n, 2 * e, e));
  }
  return m;
}

/// Auxiliary-fermion values come from the resource model, not from operators.
inline MeasuredLocality measure(const AuxPlan& plan) {
  const auto prof = locality_profile(plan);
  MeasuredLocality m;
  m.qubits = plan.total_qubits;
  m.density = m.density_string = prof.density;
  m.hop_per_axis = m.hop_string_per_axis = prof.hop_per_axis;
  m.hop = m.hop_string = prof.hop;
  return m;
}

// ---------------------------------------------------------------------------
// Encodings used by the tables

/// One Fenwick tree per spin block.
inline EncodingSpec bk_per_spin(std::size_t sites) {
  auto spec = EncodingSpec::segmented({sites, sites});
  spec.kind = EncodingKind::bk;
  return spec;
}

/// Every consecutive run of `run` modes (both spin blocks) split into two trees.
inline EncodingSpec sbk_half_runs(std::size_t run, std::size_t runs) {
  if (run < 2) return EncodingSpec::segmented_blocks(runs, {run});
  return EncodingSpec::segmented_blocks(runs, {(run + 1) / 2, run / 2});
}

/// One tree per lattice row.
inline EncodingSpec sbk_rows(std::size_t w, std::size_t h) { return EncodingSpec::segmented_blocks(2 * h, {w}); }

/// Half-row trees on a w x h rectangle, both spins.
inline EncodingSpec sbk_half_row(std::size_t w, std::size_t h) { return sbk_half_runs(w, 2 * h); }

// ---------------------------------------------------------------------------
// Reports

enum class Exactness { exact, upper_bound, measured_only, reported };

inline std::string to_string(Exactness e) {
  switch (e) {
    case Exactness::exact: return "exact";
    case Exactness::upper_bound: return "upper_bound";
    case Exactness::measured_only: return "measured_only";
    case Exactness::reported: return "reported";
  }
  return "?";
}

enum class TermClass { density, horizontal_hop, vertical_hop, hop, qubits };

inline std::string to_string(TermClass t) {
  switch (t) {
    case TermClass::density: return "density-density";
    case TermClass::horizontal_hop: return "horizontal-hop";
    case TermClass::vertical_hop: return "vertical-hop";
    case TermClass::hop: return "hop";
    case TermClass::qubits: return "qubits";
  }
  return "?";
}

struct LocalityRow {
  std::string encoding;
  TermClass term = TermClass::hop;
  std::string variant;  ///< empty, or "text" for the alternative closed form
  std::size_t measured = 0;
  std::size_t formula = 0;
  std::string formula_text;
  Exactness exactness = Exactness::exact;

  std::string term_label() const { return variant.empty() ? to_string(term) : to_string(term) + ":" + variant; }

  bool holds() const {
    switch (exactness) {
      case Exactness::exact: return measured == formula;
      case Exactness::upper_bound: return measured <= formula;
      default: return true;
    }
  }
};

struct LocalityReport {
  enum class Kind { rectangle, hypercube };
  Kind kind = Kind::rectangle;
  std::size_t first = 0;   ///< w for rectangles, D for hypercubes
  std::size_t second = 0;  ///< h for rectangles, w for hypercubes
  std::vector<LocalityRow> rows;

  const LocalityRow* find(const std::string& encoding, TermClass term, const std::string& variant = "") const {
    for (const auto& r : rows) {
      if (r.encoding == encoding && r.term == term && r.variant == variant) return &r;
    }
    return nullptr;
  }

  bool consistent() const {
    return std::all_of(rows.begin(), rows.end(), [](const LocalityRow& r) { return r.holds(); });
  }
};

namespace detail {

inline void add_row(LocalityReport& rep, std::string enc, TermClass term, std::size_t measured, std::size_t formula,
                    std::string text, Exactness ex, std::string variant = "") {
  rep.rows.push_back({std::move(enc), term, std::move(variant), measured, formula, std::move(text), ex});
}

}  // namespace detail

/// Rows for the 2D rectangle. Empty when w or h is below 2.
inline LocalityReport table_I(std::size_t w, std::size_t h) {
  LocalityReport rep;
  rep.kind = LocalityReport::Kind::rectangle;
  rep.first = w;
  rep.second = h;
  if (w < 2 || h < 2) return rep;
  using detail::add_row;
  const std::size_t n = w * h;
  const auto lat = Lattice::rectangle(w, h, SiteOrdering::row_major);
  const auto E = Exactness::exact;
  const auto T = TermClass::qubits;

  const auto jw = measure(EncodingSpec::jordan_wigner(2 * n), lat);
  add_row(rep, "JW", TermClass::density, jw.density, 2, "2", E);
  add_row(rep, "JW", TermClass::horizontal_hop, jw.horizontal(), 2, "2", E);
  add_row(rep, "JW", TermClass::vertical_hop, jw.vertical(), w + 1, "w+1", E);
  add_row(rep, "JW", T, jw.qubits, 2 * n, "2wh", E);

  const auto bk = measure(bk_per_spin(n), lat);
  const std::size_t fl = floor_log2(n), cl = ceil_log2(n);
  const bool bk_pow2 = is_pow2(n);
  add_row(rep, "BK", TermClass::density, bk.density, 2 * fl + 2, "2floor(log2(wh))+2",
          bk_pow2 ? E : Exactness::measured_only);
  add_row(rep, "BK", TermClass::horizontal_hop, bk.horizontal(), fl + cl, "floor(log2(wh))+ceil(log2(wh))",
          bk_pow2 ? Exactness::upper_bound : Exactness::measured_only);
  add_row(rep, "BK", TermClass::vertical_hop, bk.vertical(), fl + cl, "floor(log2(wh))+ceil(log2(wh))",
          bk_pow2 ? Exactness::upper_bound : Exactness::measured_only);
  add_row(rep, "BK", T, bk.qubits, 2 * n, "2wh", E);

  const auto sbk = measure(sbk_half_row(w, h), lat);
  const std::size_t fw = floor_log2(w), cw = ceil_log2(w);
  const auto sbk_ex = is_pow2(w) ? Exactness::upper_bound : Exactness::measured_only;
  add_row(rep, "SBK", TermClass::density, sbk.density, 2 * fw + 2, "2floor(log2(w))+2", sbk_ex);
  add_row(rep, "SBK", TermClass::horizontal_hop, sbk.horizontal(), fw + cw, "floor(log2(w))+ceil(log2(w))", sbk_ex);
  add_row(rep, "SBK", TermClass::vertical_hop, sbk.vertical(), 2 * fw + 1, "2floor(log2(w))+1", sbk_ex);
  add_row(rep, "SBK", T, sbk.qubits, 2 * n, "2wh", E);

  const auto af = measure(plan(w, h));
  add_row(rep, "AF", TermClass::density, af.density, 2, "2", E);
  add_row(rep, "AF", TermClass::horizontal_hop, af.horizontal(), 2, "2", E);
  add_row(rep, "AF", TermClass::vertical_hop, af.vertical(), 4, "4", E);
  add_row(rep, "AF", T, af.qubits, 4 * (n - 1), "4(wh-1)", E);

  // A hop touches at most deg(j) + deg(k) - 1 edges, so 7 needs two adjacent
  // interior vertices along the hop axis; 8 needs one interior vertex.
  const auto ls = measure(EdgeLayout(w, h));
  const auto only = Exactness::measured_only;
  add_row(rep, "LSFS", TermClass::density, ls.density, 8, "8", (w >= 3 && h >= 3) ? E : only);
  add_row(rep, "LSFS", TermClass::horizontal_hop, ls.horizontal(), 7, "7", (w >= 4 && h >= 3) ? E : only);
  add_row(rep, "LSFS", TermClass::vertical_hop, ls.vertical(), 7, "7", (w >= 3 && h >= 4) ? E : only);
  add_row(rep, "LSFS", T, ls.qubits, 4 * n - 2 * h - 2 * w, "4wh-2h-2w", E);
  return rep;
}

/// Hopping rows for the D-dimensional hypercube of side w (D >= 2, w >= 2).
inline LocalityReport table_II(std::size_t dim, std::size_t w) {
  if (dim < 2 || w < 2) throw DimensionError("table_II needs D >= 2 and w >= 2");
  LocalityReport rep;
  rep.kind = LocalityReport::Kind::hypercube;
  rep.first = dim;
  rep.second = w;
  using detail::add_row;
  const std::uint64_t n = ipow(w, dim), slab = ipow(w, dim - 1);
  const auto lat = Lattice::hypercube(dim, w, SiteOrdering::row_major);
  const auto E = Exactness::exact;
  const auto T = TermClass::qubits;
  const auto H = TermClass::hop;

  const auto jw = measure(EncodingSpec::jordan_wigner(2 * n), lat);
  add_row(rep, "JW", H, jw.hop, slab + 1, "w^(D-1)+1", E);
  add_row(rep, "JW", T, jw.qubits, 2 * n, "2w^D", E);

  const auto bk = measure(bk_per_spin(n), lat);
  const auto bk_ex = is_pow2(n) ? Exactness::upper_bound : Exactness::measured_only;
  add_row(rep, "BK", H, bk.hop, 2 * floor_log2(n), "2floor(log2(w^D))", bk_ex);
  add_row(rep, "BK", H, bk.hop, floor_log2(n) + ceil_log2(n), "floor(log2(w^D))+ceil(log2(w^D))", bk_ex, "text");
  add_row(rep, "BK", T, bk.qubits, 2 * n, "2w^D", E);

  const auto sbk = measure(sbk_half_runs(slab, 2 * w), lat);
  add_row(rep, "SBK", H, sbk.hop, 2 * floor_log2(slab) + 1, "2floor(log2(w^(D-1)))+1",
          is_pow2(slab) ? Exactness::upper_bound : Exactness::measured_only);
  add_row(rep, "SBK", T, sbk.qubits, 2 * n, "2w^D", E);

  const auto af_plan = plan_hypercubic(dim, w);
  const auto af = measure(af_plan);
  const auto bulk_ex = w >= 3 ? E : Exactness::measured_only;
  add_row(rep, "AF", H, af.hop, 2 * dim, "2D", bulk_ex);
  add_row(rep, "AF", H, af.hop, 2 * dim - 2, "2D-2", Exactness::reported, "text");
  add_row(rep, "AF", T, af.qubits, aux_qubits_hypercubic_formula(dim, w), "2Dw^D", Exactness::reported);

  const auto ls = measure(EdgeLayout(lat));
  add_row(rep, "LSFS", H, ls.hop, 4 * dim, "4D", Exactness::upper_bound);
  add_row(rep, "LSFS", H, ls.hop, 4 * dim - 1, "4D-1", w >= 4 ? E : Exactness::measured_only, "text");
  add_row(rep, "LSFS", TermClass::density, ls.density, 4 * dim, "4D", bulk_ex);
  add_row(rep, "LSFS", T, ls.qubits, 2 * edge_count(dim, w), "2D(w-1)w^(D-1)", E);
  return rep;
}

inline std::string to_csv(const std::vector<LocalityReport>& reports, bool header = true) {
  std::ostringstream os;
  const bool hyper = !reports.empty() && reports.front().kind == LocalityReport::Kind::hypercube;
  if (header) {
    os << "# fermap locality v" << kLocalityCsvVersion << "\n";
    os << (hyper ? "encoding,term_class,D,w,measured,formula,exactness\n"
                 : "encoding,term_class,w,h,measured,formula,exactness\n");
  }
  for (const auto& rep : reports) {
    for (const auto& r : rep.rows) {
      os << r.encoding << ',' << r.term_label() << ',' << rep.first << ',' << rep.second << ',' << r.measured << ','
         << r.formula << ',' << to_string(r.exactness) << '\n';
    }
  }
  return os.str();
}

inline std::string to_csv(const LocalityReport& report) { return to_csv(std::vector<LocalityReport>{report}); }

/// Method-per-line Markdown table; cells read "measured (formula)".
inline std::string to_markdown(const LocalityReport& rep) {
  std::ostringstream os;
  const bool hyper = rep.kind == LocalityReport::Kind::hypercube;
  std::vector<std::pair<TermClass, std::string>> cols;
  if (hyper) {
    os << "D = " << rep.first << ", w = " << rep.second << "\n\n";
    cols = {{TermClass::hop, "Hop"}, {TermClass::density, "Density-density"}, {TermClass::qubits, "Qubits"}};
  } else {
    os << "w = " << rep.first << ", h = " << rep.second << "\n\n";
    cols = {{TermClass::density, "Density-density"},
            {TermClass::horizontal_hop, "Horizontal"},
            {TermClass::vertical_hop, "Vertical"},
            {TermClass::qubits, "Qubits"}};
  }
  os << "| Method |";
  for (const auto& c : cols) os << ' ' << c.second << " |";
  os << "\n|---|";
  for (std::size_t i = 0; i < cols.size(); ++i) os << "---|";
  os << '\n';
  std::vector<std::string> encodings;
  for (const auto& r : rep.rows) {
    if (std::find(encodings.begin(), encodings.end(), r.encoding) == encodings.end()) encodings.push_back(r.encoding);
  }
  for (const auto& enc : encodings) {
    os << "| " << enc << " |";
    for (const auto& c : cols) {
      std::string cell;
      for (const auto& r : rep.rows) {
        if (r.encoding != enc || r.term != c.first) continue;
        if (!cell.empty()) cell += "; ";
        cell += std::to_string(r.measured) + " (" + r.formula_text + " = " + std::to_string(r.formula) + ")";
      }
      os << ' ' << (cell.empty() ? "-" : cell) << " |";
    }
    os << '\n';
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Segment sweep

struct SweepPoint {
  std::size_t segment = 0;
  std::size_t vertical = 0;
};

struct SweepResult {
  std::size_t width = 0;
  std::size_t rows = 0;
  std::vector<SweepPoint> points;
  std::vector<std::size_t> minimizers;
  std::size_t argmin = 0;  ///< largest minimizing segment size (fewest trees)
  std::size_t minimum = 0;
};

/// Splits one row of `w` sites into consecutive trees of `segment` sites
/// (the last may be shorter) for `rows` single-spin rows and records the
/// worst vertical-hop locality for each segment size in [from, to].
inline SweepResult sbk_segment_sweep(std::size_t w, std::size_t from, std::size_t to, std::size_t rows = 2) {
  if (w == 0 || rows < 2) throw ArgumentError("sweep needs w >= 1 and at least two rows");
  if (from == 0 || from > to || to > w) throw ArgumentError("segment range must satisfy 1 <= from <= to <= w");
  SweepResult res;
  res.width = w;
  res.rows = rows;
  for (std::size_t s = from; s <= to; ++s) {
    std::vector<std::size_t> row;
    for (std::size_t rem = w; rem > 0; rem -= std::min(s, rem)) row.push_back(std::min(s, rem));
    const auto spec = EncodingSpec::segmented_blocks(rows, row);
    std::size_t worst = 0;
    for (std::size_t r = 0; r + 1 < rows; ++r) {
      for (std::size_t c = 0; c < w; ++c) worst = std::max(worst, hopping_op(spec, r * w + c, (r + 1) * w + c).locality());
    }
    res.points.push_back({s, worst});
  }
  res.minimum = std::min_element(res.points.begin(), res.points.end(), [](const SweepPoint& a, const SweepPoint& b) {
                  return a.vertical < b.vertical;
                })->vertical;
  for (const auto& p : res.points) {
    if (p.vertical == res.minimum) res.minimizers.push_back(p.segment);
  }
  res.argmin = res.minimizers.back();
  return res;
}

inline std::string to_csv(const SweepResult& s) {
  std::ostringstream os;
  os << "# fermap sweep v" << kLocalityCsvVersion << " w=" << s.width << " rows=" << s.rows << " argmin=" << s.argmin
     << " min=" << s.minimum << "\n";
  os << "segment_size,vertical_hop_locality\n";
  for (const auto& p : s.points) os << p.segment << ',' << p.vertical << '\n';
  return os.str();
}

// ---------------------------------------------------------------------------
// Worst-case locality versus square lattice size

struct Fig6Row {
  std::size_t w = 0;
  std::size_t jw = 0, bk = 0, sbk = 0, af = 0, lsfs = 0;
};

inline std::vector<Fig6Row> fig6_series(std::size_t from, std::size_t to) {
  if (from < 2 || from > to) throw ArgumentError("fig6 range must satisfy 2 <= from <= to");
  std::vector<Fig6Row> out;
  for (std::size_t w = from; w <= to; ++w) {
    const auto lat = Lattice::rectangle(w, w);
    Fig6Row r;
    r.w = w;
    r.jw = measure(EncodingSpec::jordan_wigner(2 * w * w), lat).worst();
    r.bk = measure(bk_per_spin(w * w), lat).worst();
    r.sbk = measure(sbk_half_row(w, w), lat).worst();
    r.af = measure(plan(w, w)).worst();
    r.lsfs = measure(EdgeLayout(w, w)).worst();
    out.push_back(r);
  }
  return out;
}

inline std::string to_csv(const std::vector<Fig6Row>& rows) {
  std::ostringstream os;
  os << "# fermap fig6 v" << kLocalityCsvVersion << "\n";
  os << "w,JW,BK,SBK,AF,LSFS\n";
  for (const auto& r : rows) os << r.w << ',' << r.jw << ',' << r.bk << ',' << r.sbk << ',' << r.af << ',' << r.lsfs << '\n';
  return os.str();
}

}  // namespace fermap
