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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "fermap/encodings.hpp"
#include "fermap/io.hpp"

namespace {

using fermap::Json;

TEST(Io, OperatorJsonRoundTrip) {
  const auto model = fermap::hubbard(fermap::Lattice::rectangle(2, 2), 1.0, 4.0);
  const auto op = fermap::encode_model(fermap::EncodingSpec::bravyi_kitaev(8), model);
  const Json j = fermap::to_json_value(op);
  EXPECT_EQ(j["n_qubits"], 8);
  EXPECT_EQ(j["terms"].size(), op.size());
  EXPECT_EQ(fermap::qubit_operator_from_json(Json::parse(j.dump())), op);
}

TEST(Io, TermLayout) {
  fermap::QubitOperator op(3);
  op.add_term(fermap::PauliString::parse(3, "X0 Z2"), fermap::Complex(0.5, -0.25));
  const Json j = fermap::to_json_value(op);
  EXPECT_EQ(j.dump(), R"({"n_qubits":3,"terms":[{"coeff":[0.5,-0.25],"paulis":[[0,"X"],[2,"Z"]]}]})");
}

TEST(Io, MalformedInputRejected) {
  EXPECT_THROW(fermap::qubit_operator_from_json(Json::parse(R"({"terms":[]})")), Json::exception);
  EXPECT_THROW(fermap::qubit_operator_from_json(
                   Json::parse(R"({"n_qubits":2,"terms":[{"coeff":[1,0],"paulis":[[0,"Q"]]}]})")),
               fermap::ArgumentError);
  EXPECT_THROW(fermap::qubit_operator_from_json(
                   Json::parse(R"({"n_qubits":2,"terms":[{"coeff":[1,0],"paulis":[[0,"X"],[0,"Z"]]}]})")),
               fermap::ArgumentError);
  EXPECT_THROW(fermap::qubit_operator_from_json(
                   Json::parse(R"({"n_qubits":2,"terms":[{"coeff":[1,0],"paulis":[[5,"X"]]}]})")),
               fermap::ArgumentError);
}

TEST(Io, AtomicWrite) {
  const auto dir = std::filesystem::temp_directory_path() / "fermap_io_test";
  std::filesystem::create_directories(dir);
  const auto path = (dir / "out.txt").string();
  fermap::write_file_atomically(path, "first");
  fermap::write_file_atomically(path, "second");
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), "second");
  EXPECT_FALSE(std::filesystem::exists(path + ".tmp"));
  EXPECT_THROW(fermap::write_file_atomically((dir / "missing" / "x.txt").string(), "x"), std::runtime_error);
  std::filesystem::remove_all(dir);
}

}  // namespace
