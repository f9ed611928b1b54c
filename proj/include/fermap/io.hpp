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

// JSON forms of QubitOperator:
//   {"n_qubits": n, "terms": [{"coeff": [re, im], "paulis": [[q, "X"], ...]}, ...]}
// Terms are written in canonical key order and qubits ascend within a term.

#pragma once

#include <cstdio>
#include <fstream>
#include <string>

#include <json.hpp>

#include "fermap/pauli.hpp"

namespace fermap {

using Json = nlohmann::ordered_json;

inline Json to_json_value(const PauliString& p) {
  Json paulis = Json::array();
  for (std::size_t q : p.support()) paulis.push_back(Json::array({q, std::string(1, pauli_char(p.at(q)))}));
  return paulis;
}

inline Json to_json_value(const QubitOperator& op) {
  Json terms = Json::array();
  for (const auto& [p, c] : op.terms()) {
    Json t;
    t["coeff"] = Json::array({c.real(), c.imag()});
    t["paulis"] = to_json_value(p);
    terms.push_back(std::move(t));
  }
  Json out;
  out["n_qubits"] = op.n_qubits();
  out["terms"] = std::move(terms);
  return out;
}

inline QubitOperator qubit_operator_from_json(const Json& j) {
  const std::size_t n = j.at("n_qubits").get<std::size_t>();
  QubitOperator op(n);
  for (const auto& t : j.at("terms")) {
    const auto& c = t.at("coeff");
    PauliString p(n);
    for (const auto& f : t.at("paulis")) {
      const auto q = f.at(0).get<std::size_t>();
      const auto label = f.at(1).get<std::string>();
      if (label.size() != 1) throw ArgumentError("bad Pauli label '" + label + "'");
      if (p.at(q) != Pauli::I) throw ArgumentError("qubit " + std::to_string(q) + " listed twice");
      p.set(q, pauli_from_char(label[0]));
    }
    op.add_term(p, Complex{c.at(0).get<double>(), c.at(1).get<double>()});
  }
  return op;
}

/// Writes to a sibling temporary and renames it over the target.
inline void write_file_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << contents;
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace fermap
