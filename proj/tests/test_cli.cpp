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
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "fermap/io.hpp"

namespace {

namespace fs = std::filesystem;
using fermap::Json;

struct Result {
  int code;
  std::string out;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("fermap_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  Result exec(const std::string& args, const std::string& env = "") const {
    const std::string out = path("stdout.txt");
    const std::string cmd = env + " '" FERMAP_CLI_PATH "' " + args + " > '" + out + "' 2> '" + path("stderr.txt") + "'";
    const int status = std::system(cmd.c_str());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, read(out)};
  }

  static std::string read(const std::string& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, EncodeJordanWignerTwoByTwo) {
  const auto r = exec("encode --w 2 --h 2 --encoding jw --out " + path("op.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(read(path("op.json")));
  EXPECT_EQ(doc["metadata"]["n_qubits"], 8);
  EXPECT_EQ(doc["metadata"]["encoding"], "jw");
  EXPECT_EQ(doc["metadata"]["lattice"], "rectangle(2x2),row_major");
  const auto op = fermap::qubit_operator_from_json(doc["operator"]);
  EXPECT_EQ(op.n_qubits(), 8u);
  EXPECT_TRUE(op.is_hermitian(1e-12));
}

TEST_F(Cli, EncodeIsDeterministic) {
  for (const char* enc : {"bk", "sbk", "lsfs"}) {
    const std::string args = std::string("encode --w 3 --h 2 --encoding ") + enc + " --t 0.5 --u 2";
    const auto a = exec(args), b = exec(args);
    ASSERT_EQ(a.code, 0) << enc;
    EXPECT_EQ(a.out, b.out) << enc;
    EXPECT_FALSE(a.out.empty());
  }
}

TEST_F(Cli, LsfsSingleSpinSidecar) {
  const auto r = exec("encode --w 4 --h 4 --encoding lsfs --spin single --out " + path("lsfs.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(read(path("lsfs.json")));
  EXPECT_EQ(doc["metadata"]["n_qubits"], 24);
  const auto side = Json::parse(read(path("lsfs.stabilizers.json")));
  EXPECT_EQ(side["count"], 9);
  EXPECT_EQ(side["stabilizers"].size(), 9u);
  for (const auto& s : side["stabilizers"]) {
    const auto op = fermap::qubit_operator_from_json(s["operator"]);
    EXPECT_EQ(op.size(), 1u);
  }
}

TEST_F(Cli, ModelFileAndEncodingSpec) {
  write("model.json", R"({"lattice": {"kind": "rectangle", "w": 4, "h": 2}, "t": 1.0, "U": 3.0,
                          "encoding": {"kind": "forest", "segments": [2, 2]}})");
  const auto r = exec("encode --model " + path("model.json"));
  ASSERT_EQ(r.code, 0);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc["metadata"]["segments"].size(), 8u);
  EXPECT_EQ(doc["metadata"]["U"], 3.0);
}

TEST_F(Cli, TablesRowSets) {
  const auto md = exec("tables");
  ASSERT_EQ(md.code, 0);
  for (const char* enc : {"| JW ", "| BK ", "| SBK ", "| AF ", "| LSFS "}) EXPECT_NE(md.out.find(enc), std::string::npos);
  const auto hyper = exec("tables --dim 3 --w 4 --format csv");
  ASSERT_EQ(hyper.code, 0);
  for (const char* enc : {"\nJW,hop", "\nBK,hop", "\nSBK,hop", "\nAF,hop", "\nLSFS,hop"}) {
    EXPECT_NE(hyper.out.find(enc), std::string::npos) << enc;
  }
}

TEST_F(Cli, SweepAndFig6) {
  const auto s = exec("sweep");
  ASSERT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("argmin=32 min=13"), std::string::npos);
  EXPECT_NE(s.out.find("\n64,14\n"), std::string::npos);
  EXPECT_NE(s.out.find("\n32,13\n"), std::string::npos);
  const auto one = exec("sweep --w 8 --from 4 --to 4");
  ASSERT_EQ(one.code, 0);
  EXPECT_EQ(std::count(one.out.begin(), one.out.end(), '\n'), 3);
  EXPECT_EQ(exec("sweep --w 8 --from 5 --to 4").code, 2);
  const auto f = exec("fig6 --from 2 --to 5");
  ASSERT_EQ(f.code, 0);
  std::istringstream lines(f.out);
  std::string line;
  std::size_t data = 0;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'w') continue;
    ++data;
    EXPECT_EQ(line.substr(line.rfind(',', line.rfind(',') - 1) + 1, 1), "4") << line;
  }
  EXPECT_EQ(data, 4u);
}

TEST_F(Cli, VerifyExitCodes) {
  const auto sym = exec("verify --symbolic-only");
  EXPECT_EQ(sym.code, 0);
  EXPECT_EQ(Json::parse(sym.out)["overall"], "pass");
  const auto capped = exec("verify --dense-cap 3");
  EXPECT_EQ(capped.code, 0);
  EXPECT_EQ(Json::parse(capped.out)["overall"], "partial");
  const auto again = exec("verify --dense-cap 3");
  EXPECT_EQ(again.out, capped.out);
}

TEST_F(Cli, UsageErrors) {
  EXPECT_EQ(exec("").code, 2);
  EXPECT_EQ(exec("frobnicate").code, 2);
  EXPECT_EQ(exec("encode --w 2").code, 2);
  EXPECT_EQ(exec("encode --w 2 --h 2 --encoding nope").code, 2);
  EXPECT_EQ(exec("verify --dense-cap 0").code, 2);
  write("empty.json", "");
  EXPECT_EQ(exec("tables --config " + path("empty.json")).code, 2);
  write("blank.json", "{}");
  EXPECT_EQ(exec("tables --config " + path("blank.json")).code, 2);
  write("corrupt.json", "{\"w\": 4,");
  EXPECT_EQ(exec("verify --config " + path("corrupt.json")).code, 2);
  write("unknown.json", R"({"colour": "red"})");
  EXPECT_EQ(exec("tables --config " + path("unknown.json")).code, 2);
  EXPECT_EQ(exec("encode --model " + path("missing.json")).code, 2);
}

TEST_F(Cli, ConfigAndEnvironmentOverrides) {
  write("cfg.json", R"({"w": 3, "h": 5})");
  const auto cfg = exec("tables --format csv --config " + path("cfg.json"));
  ASSERT_EQ(cfg.code, 0);
  EXPECT_NE(cfg.out.find("\nJW,qubits,3,5,30,30,exact"), std::string::npos);
  const auto cli_wins = exec("tables --format csv --w 2 --config " + path("cfg.json"));
  EXPECT_NE(cli_wins.out.find("\nJW,qubits,2,5,20,20,exact"), std::string::npos);
  const auto env = exec("tables --format csv", "FERMAP_W=5 FERMAP_H=2");
  ASSERT_EQ(env.code, 0);
  EXPECT_NE(env.out.find("\nJW,qubits,5,2,20,20,exact"), std::string::npos);
  const auto flag_wins = exec("tables --format csv --w 2", "FERMAP_W=5 FERMAP_H=2");
  EXPECT_NE(flag_wins.out.find("\nJW,qubits,2,2,8,8,exact"), std::string::npos);
  const auto env_over_cfg = exec("tables --format csv --config " + path("cfg.json"), "FERMAP_W=6");
  EXPECT_NE(env_over_cfg.out.find("\nJW,qubits,6,5,60,60,exact"), std::string::npos);
}

TEST_F(Cli, PlanAux) {
  const auto r = exec("plan-aux --w 3 --h 3");
  ASSERT_EQ(r.code, 0);
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["total_qubits"], 32);
  EXPECT_EQ(j["total_qubits_formula"], 32);
  EXPECT_EQ(j["locality"]["hop"], 4);
}

TEST_F(Cli, AnalyzeReportsLocalities) {
  const auto r = exec("analyze --w 4 --h 3 --encoding lsfs");
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("lsfs,hop,0,7,"), std::string::npos);
  EXPECT_NE(r.out.find("lsfs,density-density,,8,"), std::string::npos);
}

}  // namespace
