// Copyright 2026 The Authors.
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


#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "normrig/cli.h"

namespace normrig {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result RunCli(std::vector<std::string> args) {
  args.insert(args.begin(), "normrig");
  std::ostringstream out, err;
  const int code = Main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) {
  return std::string(NORMRIG_DATA_DIR) + "/" + name;
}

std::string WriteTemp(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

TEST(CliTest, K23Verdicts) {
  Result r = RunCli({"check-sparse", "--k", "2", "--l", "2", Data("k23.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("(2,2)-sparse: yes"), std::string::npos) << r.out;
  r = RunCli({"check-uv-sparse", Data("k23.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("uv-sparse: no"), std::string::npos);
  EXPECT_NE(r.out.find("{0,1,2},{0,1,3},{0,1,4}: covers 6 > val 5"), std::string::npos)
      << r.out;
  r = RunCli({"check-uv-sparse", "--bruteforce", Data("k23.graph")});
  EXPECT_NE(r.out.find("uv-sparse: no"), std::string::npos);
  r = RunCli({"uv-rank", Data("k23.graph")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("rank 5"), std::string::npos) << r.out;
}

TEST(CliTest, TwoK4) {
  Result r = RunCli({"uv-rank", Data("two_k4.graph")});
  EXPECT_NE(r.out.find("rank 12"), std::string::npos) << r.out;
  r = RunCli({"uv-rigid-comb", Data("two_k4.graph")});
  EXPECT_NE(r.out.find("uv-rigid-comb: yes"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("(6 vertices, 11 edges)"), std::string::npos);
}

TEST(CliTest, JsonEnvelope) {
  const Result r = RunCli({"--json", "rank", Data("k4.graph")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "rank");
  EXPECT_EQ(j["trials"], 10);
  EXPECT_EQ(j["seed"], 1);
  EXPECT_TRUE(j.contains("result"));
}

TEST(CliTest, Deterministic) {
  const std::vector<std::string> args = {"--json", "--seed", "7", "uv-rank",
                                         Data("two_k4.graph")};
  EXPECT_EQ(RunCli(args).out, RunCli(args).out);
  const std::vector<std::string> gen = {"--seed", "3", "generate-global", "--size", "9"};
  EXPECT_EQ(RunCli(gen).out, RunCli(gen).out);
}

TEST(CliTest, SeedFromEnvironment) {
  ::setenv(kSeedEnvVar, "11", 1);
  const Result r = RunCli({"--json", "rank", Data("k4.graph")});
  ::unsetenv(kSeedEnvVar);
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 11);
}

TEST(CliTest, ParallelEdgeIsAnInputError) {
  const std::string path = WriteTemp("dup.graph", "3 3\n0 1\n1 2\n1 0\n");
  const Result r = RunCli({"rank", path});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err, "error: graph: " + path + ": parallel edge at line 4\n");
  EXPECT_TRUE(r.out.empty());
}

TEST(CliTest, ConfigurationErrors) {
  EXPECT_EQ(RunCli({"--norm", "lp:2", "rank", Data("k4.graph")}).code, 1);
  EXPECT_EQ(RunCli({"--trials", "0", "rank", Data("k4.graph")}).code, 1);
  EXPECT_EQ(RunCli({"experiment", "nope"}).code, 1);
  EXPECT_EQ(RunCli({"rank", "/nonexistent/file.graph"}).code, 1);
  EXPECT_NE(RunCli({"frobnicate"}).code, 0);
}

TEST(CliTest, Certify) {
  const Result r = RunCli({"certify-global", "--numeric", Data("h_split.seq")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("final graph: 7 vertices, 13 edges"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("split-rigid: pass"), std::string::npos);
  EXPECT_NE(r.out.find("split-redundant: pass"), std::string::npos);
  EXPECT_NE(r.out.find("numeric re-check: pass"), std::string::npos);
}

TEST(CliTest, OpApply) {
  const Result r = RunCli({"op", "apply", Data("k4.graph"), "zeroext 0 1 -> 4"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, 4), "5 8\n");
  EXPECT_EQ(RunCli({"op", "apply", Data("k4.graph"), "zeroext 0 9 -> 4"}).code, 1);
}

TEST(CliTest, Experiment) {
  const Result r = RunCli({"--json", "experiment", "cover-bound", "--max-n", "4"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["name"], "cover-bound");
  EXPECT_TRUE(j["disagreements"].empty());
}

TEST(CliTest, Version) {
  const Result r = RunCli({"--version"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, VersionString() + "\n");
}

}  // namespace
}  // namespace normrig
