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


// fermap command-line front end.
//
// Exit codes: 0 success, 1 a verification check failed, 2 usage or
// configuration error. Every option can also be set through FERMAP_<NAME>
// (e.g. FERMAP_DENSE_CAP) or a JSON file passed with --config; the command
// line wins over the environment, which wins over the config file.

#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fermap.hpp"

namespace {

using fermap::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Settings {
  std::string config;
  std::string model;
  std::string encoding = "jw";
  std::vector<std::size_t> segments;
  std::size_t w = 0, h = 0, dim = 0;
  double t = 1.0, u = 4.0, eps = 0.0;
  std::optional<double> delta;
  std::size_t dense_cap = fermap::kDefaultDenseCap;
  std::string out;
  std::uint64_t seed = 1;
  std::string ordering = "row_major";

  // Subcommand options.
  std::string spin = "both";
  std::string format = "md";
  std::size_t from = 0, to = 0, rows = 2;
  bool symbolic_only = false;
  bool timing = false;
};

std::string env_name(const std::string& flag) {
  std::string s = "FERMAP_";
  for (char c : flag) s += c == '-' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return s;
}

void emit(const Settings& s, const std::string& text) {
  if (s.out.empty()) {
    std::cout << text;
  } else {
    fermap::write_file_atomically(s.out, text);
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json read_json_file(const std::string& path, const std::string& what) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + what + " '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) throw UsageError(what + " '" + path + "' is empty");
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw UsageError(what + " '" + path + "' is not valid JSON: " + e.what());
  }
}

/// Applies config-file values to options the user did not set otherwise.
void apply_config(CLI::App& app, const Settings& s) {
  if (s.config.empty()) return;
  const Json cfg = read_json_file(s.config, "config");
  if (!cfg.is_object()) throw UsageError("config must be a JSON object");
  if (cfg.empty()) throw UsageError("config '" + s.config + "' has no settings");
  for (const auto& [key, value] : cfg.items()) {
    CLI::Option* opt = nullptr;
    try {
      opt = app.get_option("--" + key);
    } catch (const CLI::OptionNotFound&) {
      throw UsageError("unknown config key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    std::vector<std::string> vals;
    auto scalar = [](const Json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); };
    if (value.is_array()) {
      for (const auto& v : value) vals.push_back(scalar(v));
    } else {
      vals.push_back(scalar(value));
    }
    for (const auto& v : vals) opt->add_result(v);
    try {
      opt->run_callback();
    } catch (const CLI::ParseError& e) {
      throw UsageError("config key '" + key + "': " + e.what());
    }
  }
}

fermap::Lattice lattice_from(const Settings& s, const Json* model) {
  auto ordering = fermap::site_ordering_from_string(s.ordering);
  if (model) {
    if (model->contains("ordering")) ordering = fermap::site_ordering_from_string(model->at("ordering").get<std::string>());
    const auto& lat = model->at("lattice");
    const auto kind = lat.value("kind", std::string("rectangle"));
    if (kind == "rectangle") return fermap::Lattice::rectangle(lat.at("w").get<std::size_t>(), lat.at("h").get<std::size_t>(), ordering);
    if (kind == "hypercube") return fermap::Lattice::hypercube(lat.at("dim").get<std::size_t>(), lat.at("w").get<std::size_t>(), ordering);
    throw UsageError("unknown lattice kind '" + kind + "'");
  }
  if (s.dim > 0) {
    if (s.w == 0) throw UsageError("--dim needs --w");
    return fermap::Lattice::hypercube(s.dim, s.w, ordering);
  }
  if (s.w == 0 || s.h == 0) throw UsageError("lattice needs --w and --h (or --dim and --w, or --model)");
  return fermap::Lattice::rectangle(s.w, s.h, ordering);
}

struct ModelParams {
  fermap::Lattice lattice;
  double t, u, eps;
  std::optional<Json> encoding;
};

ModelParams model_from(const Settings& s) {
  if (s.model.empty()) return {lattice_from(s, nullptr), s.t, s.u, s.eps, std::nullopt};
  const Json m = read_json_file(s.model, "model");
  if (!m.is_object() || !m.contains("lattice")) throw UsageError("model must be an object with a 'lattice' entry");
  ModelParams p{lattice_from(s, &m), m.value("t", s.t), m.value("U", s.u), m.value("eps", s.eps), std::nullopt};
  if (m.contains("encoding")) p.encoding = m.at("encoding");
  return p;
}

/// Segment list: one row's worth (repeated over every row and spin) or the full mode list.
std::vector<std::size_t> expand_segments(const std::vector<std::size_t>& seg, const fermap::Lattice& lat) {
  std::size_t sum = 0;
  for (auto x : seg) sum += x;
  if (sum == lat.n_modes()) return seg;
  if (sum == lat.width()) {
    std::vector<std::size_t> out;
    for (std::size_t r = 0; r < lat.n_modes() / lat.width(); ++r) out.insert(out.end(), seg.begin(), seg.end());
    return out;
  }
  throw UsageError("segments sum to " + std::to_string(sum) + "; expected the row width " +
                   std::to_string(lat.width()) + " or the mode count " + std::to_string(lat.n_modes()));
}

fermap::EncodingSpec encoding_from(const std::string& kind_in, std::vector<std::size_t> segments,
                                   const fermap::Lattice& lat) {
  const std::size_t n = lat.n_modes();
  if (kind_in == "jw") return fermap::EncodingSpec::jordan_wigner(n);
  if (kind_in == "bk") return fermap::EncodingSpec::bravyi_kitaev(n);
  if (kind_in == "bk-spin") return fermap::bk_per_spin(lat.n_sites());
  if (kind_in == "sbk" || kind_in == "forest") {
    if (segments.empty()) {
      if (kind_in == "forest") throw UsageError("forest encoding needs --segments");
      return fermap::sbk_half_runs(lat.width(), n / lat.width());
    }
    auto spec = fermap::EncodingSpec::segmented(expand_segments(segments, lat));
    return spec;
  }
  throw UsageError("unknown encoding '" + kind_in + "' (jw, bk, bk-spin, sbk, forest, lsfs)");
}

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

// ---------------------------------------------------------------------------

int cmd_encode(const Settings& s) {
  auto mp = model_from(s);
  std::string kind = lower(s.encoding);
  auto segments = s.segments;
  if (mp.encoding) {
    kind = lower(mp.encoding->value("kind", kind));
    if (mp.encoding->contains("segments")) segments = mp.encoding->at("segments").get<std::vector<std::size_t>>();
  }
  Json meta;
  meta["format"] = "fermap-operator";
  meta["version"] = 1;
  meta["encoding"] = kind;
  meta["lattice"] = mp.lattice.describe();
  meta["t"] = mp.t;
  meta["U"] = mp.u;
  meta["eps"] = mp.eps;

  Json doc;
  if (kind == "lsfs") {
    const fermap::EdgeLayout layout(mp.lattice);
    const double delta =
        s.delta.value_or(10.0 * std::max({std::abs(mp.t), std::abs(mp.u), std::abs(mp.eps)}));
    fermap::QubitOperator op(0);
    if (s.spin == "single") {
      op = fermap::lsfs_single_spin(layout, mp.t, mp.eps, delta);
    } else {
      op = fermap::hubbard_lsfs(layout, mp.t, mp.u, mp.eps, delta);
    }
    meta["spin"] = s.spin;
    meta["delta"] = delta;
    meta["n_qubits"] = op.n_qubits();
    meta["n_terms"] = op.size();
    Json stabs = Json::array();
    const std::size_t e = layout.n_qubits();
    const auto plaqs = layout.plaquettes();
    for (std::size_t copy = 0; copy < (s.spin == "single" ? 1u : 2u); ++copy) {
      for (std::size_t i = 0; i < plaqs.size(); ++i) {
        auto emb = fermap::embed(fermap::stabilizer(layout, plaqs[i]), op.n_qubits(), copy * e);
        Json entry;
        entry["spin"] = s.spin == "single" ? "single" : (copy == 0 ? "down" : "up");
        entry["plaquette"] = plaqs[i];
        entry["operator"] = fermap::to_json_value(emb);
        stabs.push_back(entry);
      }
    }
    Json side;
    side["format"] = "fermap-stabilizers";
    side["version"] = 1;
    side["lattice"] = mp.lattice.describe();
    side["count"] = stabs.size();
    side["stabilizers"] = stabs;
    doc["metadata"] = meta;
    doc["operator"] = fermap::to_json_value(op);
    if (s.out.empty()) {
      doc["stabilizers"] = side;
    } else {
      std::string side_path = s.out;
      if (side_path.size() > 5 && side_path.ends_with(".json")) side_path.resize(side_path.size() - 5);
      fermap::write_file_atomically(side_path + ".stabilizers.json", dump(side));
    }
  } else {
    if (s.spin == "single") throw UsageError("--spin single is only supported for lsfs");
    const auto spec = encoding_from(kind, segments, mp.lattice);
    const auto op = fermap::encode_model(spec, fermap::hubbard(mp.lattice, mp.t, mp.u, mp.eps));
    meta["segments"] = Json::array();
    for (const auto& seg : spec.forest.segments()) meta["segments"].push_back(seg.end - seg.start);
    meta["n_qubits"] = op.n_qubits();
    meta["n_terms"] = op.size();
    doc["metadata"] = meta;
    doc["operator"] = fermap::to_json_value(op);
  }
  emit(s, dump(doc));
  return kExitOk;
}

int cmd_analyze(const Settings& s) {
  auto mp = model_from(s);
  const std::string kind = lower(mp.encoding ? mp.encoding->value("kind", s.encoding) : s.encoding);
  auto segments = s.segments;
  if (mp.encoding && mp.encoding->contains("segments")) {
    segments = mp.encoding->at("segments").get<std::vector<std::size_t>>();
  }
  fermap::MeasuredLocality m;
  if (kind == "lsfs") {
    m = fermap::measure(fermap::EdgeLayout(mp.lattice));
  } else if (kind == "af") {
    m = mp.lattice.dim() == 2 && !mp.lattice.is_hypercube()
            ? fermap::measure(fermap::plan(mp.lattice.width(), mp.lattice.height()))
            : fermap::measure(fermap::plan_hypercubic(mp.lattice.dim(), mp.lattice.width()));
  } else {
    m = fermap::measure(encoding_from(kind, segments, mp.lattice), mp.lattice);
  }
  std::ostringstream os;
  os << "# fermap analyze v" << fermap::kLocalityCsvVersion << " lattice=" << mp.lattice.describe() << "\n";
  os << "encoding,term_class,axis,locality,max_string\n";
  os << kind << ",density-density,," << m.density << ',' << m.density_string << '\n';
  for (std::size_t a = 0; a < m.hop_per_axis.size(); ++a) {
    os << kind << ",hop," << a << ',' << m.hop_per_axis[a] << ',' << m.hop_string_per_axis[a] << '\n';
  }
  os << kind << ",qubits,," << m.qubits << ',' << '\n';
  emit(s, os.str());
  return kExitOk;
}

int cmd_tables(const Settings& s) {
  fermap::LocalityReport rep;
  if (s.dim > 0) {
    rep = fermap::table_II(s.dim, s.w == 0 ? 3 : s.w);
  } else {
    const std::size_t w = s.w == 0 ? 4 : s.w, h = s.h == 0 ? 8 : s.h;
    if (w < 2 || h < 2) throw UsageError("tables need w, h >= 2");
    rep = fermap::table_I(w, h);
  }
  const std::string text = s.format == "csv" ? fermap::to_csv(rep) : fermap::to_markdown(rep);
  emit(s, text);
  for (const auto& r : rep.rows) {
    if (!r.holds()) {
      std::cerr << "warning: " << r.encoding << ' ' << r.term_label() << " measured " << r.measured
                << " violates " << to_string(r.exactness) << ' ' << r.formula << '\n';
    }
  }
  return kExitOk;
}

int cmd_sweep(const Settings& s) {
  const std::size_t w = s.w == 0 ? 64 : s.w;
  const std::size_t from = s.from == 0 ? 1 : s.from;
  const std::size_t to = s.to == 0 ? w : s.to;
  const auto res = fermap::sbk_segment_sweep(w, from, to, s.rows);
  emit(s, fermap::to_csv(res));
  return kExitOk;
}

int cmd_fig6(const Settings& s) {
  const std::size_t from = s.from == 0 ? 2 : s.from;
  const std::size_t to = s.to == 0 ? 10 : s.to;
  emit(s, fermap::to_csv(fermap::fig6_series(from, to)));
  return kExitOk;
}

int cmd_verify(const Settings& s) {
  fermap::SuiteOptions opt;
  opt.seed = s.seed;
  opt.dense_cap = s.dense_cap;
  opt.symbolic_only = s.symbolic_only;
  const auto res = fermap::run_suite(opt);
  for (const auto& c : res.checks) {
    if (c.status == fermap::CheckStatus::skipped) std::cerr << "warning: skipped " << c.name << ": " << c.detail << '\n';
    if (c.status == fermap::CheckStatus::fail) std::cerr << "FAIL " << c.name << ": " << c.detail << '\n';
  }
  emit(s, dump(res.to_json(s.timing)));
  return res.overall() == "fail" ? kExitCheckFailed : kExitOk;
}

int cmd_plan_aux(const Settings& s) {
  const auto p = s.dim > 0 ? fermap::plan_hypercubic(s.dim, s.w == 0 ? 3 : s.w)
                           : fermap::plan(s.w == 0 ? 3 : s.w, s.h == 0 ? 3 : s.h);
  const auto prof = fermap::locality_profile(p);
  Json j;
  j["format"] = "fermap-aux-plan";
  j["version"] = 1;
  j["lattice"] = p.lattice.describe();
  j["path"] = p.path;
  j["degree"] = p.degree;
  j["nonlocal_degree"] = p.nonlocal_degree;
  j["aux_per_site"] = p.aux_per_site;
  j["qubits_per_spin"] = p.qubits_per_spin;
  j["total_qubits"] = p.total_qubits;
  if (s.dim > 0) {
    j["total_qubits_scaling"] = fermap::aux_qubits_hypercubic_formula(s.dim, s.w == 0 ? 3 : s.w);
  } else {
    j["total_qubits_formula"] = fermap::aux_qubits_formula(p.lattice.width(), p.lattice.height());
  }
  Json loc;
  loc["density"] = prof.density;
  loc["hop_per_axis"] = prof.hop_per_axis;
  loc["hop"] = prof.hop;
  loc["hop_text"] = prof.hop_text;
  j["locality"] = loc;
  emit(s, dump(j));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"fermap: fermion-to-qubit encodings, locality tables and desk-scale verification"};
  app.set_help_flag("--help", "print this help and exit");
  app.require_subcommand(1, 1);
  app.fallthrough();
  Settings s;

  auto env = [](CLI::Option* o, const std::string& flag) { return o->envname(env_name(flag)); };
  env(app.add_option("--config", s.config, "JSON file with option defaults"), "config");
  env(app.add_option("--model", s.model, "model JSON: {\"lattice\": {...}, \"t\", \"U\", \"eps\", \"ordering\"}"), "model");
  env(app.add_option("--encoding", s.encoding, "jw | bk | bk-spin | sbk | forest | lsfs | af"), "encoding");
  env(app.add_option("--segments", s.segments, "Fenwick segment sizes (one row, or all modes)")->delimiter(','),
      "segments");
  env(app.add_option("--w", s.w, "lattice width"), "w");
  env(app.add_option("--h", s.h, "lattice height"), "h");
  env(app.add_option("--dim", s.dim, "hypercube dimension"), "dim");
  env(app.add_option("--t", s.t, "hopping amplitude"), "t");
  env(app.add_option("--u", s.u, "on-site interaction"), "u");
  env(app.add_option("--eps", s.eps, "on-site energy"), "eps");
  env(app.add_option("--delta", s.delta, "stabilizer penalty (default 10 max(|t|,|U|,|eps|))"), "delta");
  env(app.add_option("--dense-cap", s.dense_cap, "largest qubit count for dense matrices")
          ->check(CLI::PositiveNumber),
      "dense-cap");
  env(app.add_option("--out", s.out, "output file (written atomically); stdout if omitted"), "out");
  env(app.add_option("--seed", s.seed, "seed for randomized checks"), "seed");
  env(app.add_option("--ordering", s.ordering, "row_major | snake"), "ordering");

  auto* encode = app.add_subcommand("encode", "encode a Hubbard model and write the qubit operator as JSON");
  encode->add_option("--spin", s.spin, "both | single (lsfs only)")->check(CLI::IsMember({"both", "single"}));
  auto* analyze = app.add_subcommand("analyze", "measure worst-case locality per term class");
  auto* tables = app.add_subcommand("tables", "2D locality table (--w/--h) or hypercube table (--dim/--w)");
  tables->add_option("--format", s.format, "md | csv")->check(CLI::IsMember({"md", "csv"}));
  auto* sweep = app.add_subcommand("sweep", "segment-size sweep of the vertical-hop locality");
  sweep->add_option("--from", s.from, "smallest segment size");
  sweep->add_option("--to", s.to, "largest segment size");
  sweep->add_option("--rows", s.rows, "lattice rows")->check(CLI::Range(2, 1 << 20));
  auto* fig6 = app.add_subcommand("fig6", "worst-case locality versus square lattice size");
  fig6->add_option("--from", s.from, "smallest width");
  fig6->add_option("--to", s.to, "largest width");
  auto* verify = app.add_subcommand("verify", "run the algebra and spectrum checks");
  verify->add_flag("--symbolic-only", s.symbolic_only, "skip dense checks");
  verify->add_flag("--timing", s.timing, "include wall-clock seconds in the report");
  auto* plan_aux = app.add_subcommand("plan-aux", "auxiliary-fermion resource plan");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    apply_config(app, s);
    if (encode->parsed()) return cmd_encode(s);
    if (analyze->parsed()) return cmd_analyze(s);
    if (tables->parsed()) return cmd_tables(s);
    if (sweep->parsed()) return cmd_sweep(s);
    if (fig6->parsed()) return cmd_fig6(s);
    if (verify->parsed()) return cmd_verify(s);
    if (plan_aux->parsed()) return cmd_plan_aux(s);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const fermap::ResourceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Json::exception& e) {
    std::cerr << "error: bad JSON input: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
