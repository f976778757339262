// Copyright 2026 The Polysum Authors.
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


#include "cli.h"

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace polysum::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Cli(std::vector<std::string> args) {
  args.insert(args.begin(), "polysum");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = RunCli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> Lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) out.push_back(line);
  }
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("polysum_cli_" + std::string(::testing::UnitTest::GetInstance()
                                             ->current_test_info()
                                             ->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string Path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

TEST_F(CliTest, ProveVerifyAndRejections) {
  const std::string proof = Path("p.bin");
  ASSERT_EQ(Cli({"prove", "--gate", "20", "--mu", "6", "--seed", "3", "--out", proof}).code,
            kExitOk);
  EXPECT_EQ(Cli({"verify", "--gate", "20", "--proof", proof, "--seed", "3"}).code, kExitOk);
  EXPECT_EQ(Cli({"verify", "--gate", "20", "--proof", proof, "--seed", "3", "--mode",
                 "direct"})
                .code,
            kExitOk);

  std::ifstream in(proof, std::ios::binary);
  std::vector<char> bytes((std::istreambuf_iterator<char>(in)), {});
  in.close();
  {
    std::ofstream f(Path("trunc.bin"), std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size() / 2));
  }
  EXPECT_EQ(Cli({"verify", "--gate", "20", "--proof", Path("trunc.bin")}).code,
            kExitMalformed);
  bytes[bytes.size() - 40] ^= 1;
  {
    std::ofstream f(Path("flip.bin"), std::ios::binary);
    f.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  }
  const int flipped = Cli({"verify", "--gate", "20", "--proof", Path("flip.bin")}).code;
  EXPECT_TRUE(flipped == kExitRejected || flipped == kExitMalformed) << flipped;
  EXPECT_EQ(Cli({"verify", "--gate", "20", "--proof", Path("missing.bin")}).code,
            kExitError);
}

TEST_F(CliTest, WitnessFilesFeedProver) {
  ASSERT_EQ(Cli({"witness", "--gate", "0", "--mu", "4", "--seed", "9", "--out", Path("w")}).code,
            kExitOk);
  EXPECT_FALSE(fs::is_empty(Path("w")));
  const std::string proof = Path("p.bin");
  EXPECT_EQ(Cli({"prove", "--gate", "0", "--witness", Path("w"), "--out", proof}).code,
            kExitOk);
  EXPECT_EQ(Cli({"verify", "--gate", "0", "--proof", proof, "--witness", Path("w"),
                 "--mode", "direct"})
                .code,
            kExitOk);
}

TEST_F(CliTest, BenchCoversAllGatesDeterministically) {
  const Result a = Cli({"bench", "--mu", "6", "--seed", "1"});
  ASSERT_EQ(a.code, kExitOk) << a.err;
  const auto lines = Lines(a.out);
  ASSERT_GE(lines.size(), 2u);
  EXPECT_EQ(lines[0], "# schema: bench/1");
  EXPECT_EQ(lines[1].rfind("gate,degree,", 0), 0u);
  EXPECT_EQ(lines.size(), 2u + 25u);
  EXPECT_EQ(Cli({"bench", "--mu", "6", "--seed", "1"}).out, a.out);

  const Result empty = Cli({"bench", "--mu", "6", "--gates", ""});
  EXPECT_EQ(empty.code, kExitOk);
  EXPECT_EQ(Lines(empty.out).size(), 2u);
  EXPECT_EQ(Cli({"bench", "--gates", "nope"}).code, kExitError);
}

TEST_F(CliTest, SweepSingleDegree) {
  const Result r = Cli({"sweep-degree", "--dmin", "4", "--dmax", "4", "--mu", "12"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto lines = Lines(r.out);
  ASSERT_EQ(lines.size(), 3u);
  EXPECT_EQ(lines[0], "# schema: sweep/1");
  EXPECT_EQ(lines[2].rfind("4,", 0), 0u);
  EXPECT_NE(Cli({"sweep-degree", "--dmin", "5", "--dmax", "3"}).code, kExitOk);
}

TEST_F(CliTest, ScheduleDumpAndInfeasibleShape) {
  const Result r = Cli({"schedule", "--gate", "22", "--ees", "3", "--pls", "4"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("\"steps\""), std::string::npos);
  EXPECT_NE(r.out.find("\"lane_plan\""), std::string::npos);
  EXPECT_EQ(Cli({"schedule", "--gate", "22", "--ees", "1"}).code, kExitInfeasible);
  {
    std::ofstream f(Path("g.txt"));
    f << "f = a*b*c +";
  }
  EXPECT_EQ(Cli({"schedule", "--gate-file", Path("g.txt")}).code, kExitMalformed);
}

TEST_F(CliTest, ModelAndHardwareFiles) {
  const std::string hw = std::string(POLYSUM_CONFIG_DIR) + "/hw_sweep.json";
  const Result r = Cli({"model", "--gate", "20", "--mu", "10", "--hw", hw});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Lines(r.out)[0], "# schema: model/1");
  {
    std::ofstream f(Path("bad.json"));
    f << R"({"num_pes": 4, "typo": 1})";
  }
  EXPECT_EQ(Cli({"model", "--hw", Path("bad.json")}).code, kExitMalformed);
  EXPECT_EQ(Cli({"model", "--ees", "1"}).code, kExitInfeasible);
}

TEST_F(CliTest, DseOnSmallGrid) {
  {
    std::ofstream f(Path("grid.json"));
    f << R"({"pes": [2, 4], "ees": [2, 3], "pls": [4], "bank_elems": [4096],
            "bandwidths_gbps": [512]})";
  }
  const Result r = Cli({"dse", "--grid", Path("grid.json"), "--mu", "12", "--gates", "0,20"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Lines(r.out)[0], "# schema: dse/1");
  EXPECT_EQ(Lines(r.out).size(), 2u + 4u);
}

TEST_F(CliTest, Permcheck) {
  EXPECT_EQ(Cli({"permcheck", "--k", "3", "--mu", "5"}).code, kExitOk);
  EXPECT_EQ(Cli({"permcheck", "--k", "3", "--mu", "5", "--tamper"}).code, kExitRejected);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(Cli({"frobnicate"}).code, kExitError);
  EXPECT_EQ(Cli({"prove", "--gate", "99", "--out", Path("x")}).code, kExitError);
  EXPECT_EQ(Cli({"gates"}).code, kExitOk);
  EXPECT_EQ(Lines(Cli({"gates"}).out).size(), 2u + 25u);
}

}  // namespace
}  // namespace polysum::cli
