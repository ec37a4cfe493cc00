// Copyright 2026 The uct Authors
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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace uct::cli {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "uct");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  std::string write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("uct_cli_test_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::filesystem::path dir_;
};

const char* kP3 = "3 2\n0 1\n1 2\n";

TEST_F(CliTest, SolvePath) {
  const auto r = run_cli({"solve", "--input", write("p3.txt", kP3)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "value 2 method cograph\n0 2\n");
}

TEST_F(CliTest, SolveForcedProperInterval) {
  const auto r = run_cli({"solve", "--input", write("p3.txt", kP3), "--class", "proper_interval", "--witness"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "value 2 method proper_interval\n0 2\ncert 0: 0 1\ncert 2: 1 2\n");
}

TEST_F(CliTest, SolveReadsStdin) {
  const auto r = run_cli({"solve"}, kP3);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 8), "value 2 ");
}

TEST_F(CliTest, VerifyMiddleVertex) {
  const auto r = run_cli({"verify", "--input", write("p3.txt", kP3), "--set", "1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "minimal clique transversal 1\ncert 1: 0 1\n");
}

TEST_F(CliTest, VerifyRefutations) {
  const auto path = write("p3.txt", kP3);
  auto r = run_cli({"verify", "--input", path, "--set", "0", "1"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "refutation no_private_clique: vertex 0\n");
  r = run_cli({"verify", "--input", path, "--set", "0", "--format", "json-lines"});
  EXPECT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["refutation"], "missed_clique");
  EXPECT_EQ(j["clique"], nlohmann::json({1, 2}));
  r = run_cli({"verify", "--input", path, "--set", "0,2"});
  EXPECT_EQ(r.code, 0);
  r = run_cli({"verify", "--input", path});
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, GenerateTwoStar) {
  const auto r = run_cli({"generate", "--gadget", "two-star", "--q", "3"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("# relation: "), std::string::npos);
  const Graph g = parse_graph(r.out);
  EXPECT_EQ(g.n(), 8u);
  EXPECT_EQ(g.m(), 7u);
}

TEST_F(CliTest, GenerateThenCheck) {
  for (const char* gadget : {"two-star", "chordal-ssf", "line-graph", "subdivision"}) {
    const auto gen = run_cli({"generate", "--gadget", gadget, "--seed", "5"});
    ASSERT_EQ(gen.code, 0) << gadget << gen.err;
    const auto check = run_cli({"check", "--input", write("g.txt", gen.out)});
    EXPECT_TRUE(check.code == 0 || check.code == 3) << gadget << check.out;
    EXPECT_EQ(check.out.rfind("relation ", 0), 0u);
  }
}

TEST_F(CliTest, GenerateIsDeterministic) {
  const auto a = run_cli({"generate", "--gadget", "chordal-ssf", "--seed", "17"});
  const auto b = run_cli({"generate", "--gadget", "chordal-ssf", "--seed", "17"});
  EXPECT_EQ(a.out, b.out);
  const auto c = run_cli({"generate", "--gadget", "chordal-ssf", "--seed", "18"});
  EXPECT_NE(a.out, c.out);
}

TEST_F(CliTest, GenerateFromSourceFile) {
  const auto r = run_cli({"generate", "--gadget", "chordal", "--input", write("p3.txt", kP3)});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(parse_graph(r.out).n(), 7u);
  const auto bad = run_cli({"generate", "--gadget", "line-graph", "--input", write("p3b.txt", kP3)});
  EXPECT_EQ(bad.code, 2);
}

TEST_F(CliTest, CheckDetectsFailure) {
  const auto r = run_cli({"check"}, "# gadget: line_graph\n# source: 4 4 | 0 1 | 1 2 | 2 3 | 0 3\n4 0\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out.rfind("relation fail: ", 0), 0u);
}

TEST_F(CliTest, Recognize) {
  const auto path = write("c4.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n");
  auto r = run_cli({"recognize", "--input", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "classes cograph bipartite triangle_free\n");
  r = run_cli({"recognize", "--input", path, "--class", "cograph"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "cograph yes: cotree (J (U 0 2) (U 1 3))\n");
  r = run_cli({"recognize", "--input", path, "--class", "split", "--format", "json-lines"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(nlohmann::json::parse(r.out)["refutation"], "recognition");
}

TEST_F(CliTest, OracleCommandAndCaps) {
  const auto path = write("p3.txt", kP3);
  auto r = run_cli({"oracle", "--input", path, "--format", "json-lines", "--witness"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["value"], 2);
  EXPECT_EQ(j["witness"], nlohmann::json({0, 2}));
  EXPECT_EQ(j["certificates"].size(), 2u);
  r = run_cli({"oracle", "--input", path, "--max-n", "2"});
  EXPECT_EQ(r.code, 3);
  EXPECT_NE(r.err.find("cap"), std::string::npos);
}

TEST_F(CliTest, CliqueCap) {
  std::string text = "12 ";
  std::string body;
  int m = 0;
  for (int u = 0; u < 12; ++u)
    for (int v = u + 1; v < 12; ++v)
      if (!(u % 2 == 0 && v == u + 1)) {
        body += std::to_string(u) + " " + std::to_string(v) + "\n";
        ++m;
      }
  text += std::to_string(m) + "\n" + body;
  const auto r = run_cli({"oracle", "--input", write("cp.txt", text), "--max-cliques", "10"});
  EXPECT_EQ(r.code, 3);
}

TEST_F(CliTest, InputErrors) {
  auto r = run_cli({"solve", "--input", (dir_ / "missing.txt").string()});
  EXPECT_EQ(r.code, 1);
  r = run_cli({"solve"}, "3 2\n0 1\n1 5\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("line 3"), std::string::npos);
  r = run_cli({"solve", "--format", "json-lines"}, "oops\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(nlohmann::json::parse(r.out)["error"], "parse");
  r = run_cli({"frobnicate"});
  EXPECT_EQ(r.code, 1);
  r = run_cli({"solve", "--max-n", "0"}, kP3);
  EXPECT_EQ(r.code, 1);
  r = run_cli({"solve", "--class", "interval"}, kP3);
  EXPECT_EQ(r.code, 1);
}

TEST_F(CliTest, ForcedClassRefutation) {
  const auto r = run_cli({"solve", "--class", "cograph"}, "4 3\n0 1\n1 2\n2 3\n");
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.out, "refutation recognition: not a cograph: induced P4 0 1 2 3\n");
}

TEST_F(CliTest, JsonSolveIsOneLine) {
  const auto r = run_cli({"solve", "--format", "json-lines", "--witness"}, kP3);
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["method"], "cograph");
  EXPECT_EQ(j["verified"], true);
}

TEST_F(CliTest, HelpExitsCleanly) {
  const auto r = run_cli({"--help"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("solve"), std::string::npos);
}

}  // namespace
}  // namespace uct::cli
