// Copyright 2026 The Rigicheck Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli.h"
#include "rigicheck/named.h"
#include "rigicheck/rigidity.h"

namespace rigicheck {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result Invoke(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::Run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string Data(const std::string& name) { return std::string(RIGICHECK_TEST_DATA) + "/" + name; }

TEST(CliTest, GlobalRigidityOfOctahedronIsFalse) {
  const Result r = Invoke({"global-rigidity", "--complex", Data("octahedron.fct"), "--seed", "1"});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema"], "rigicheck/1");
  EXPECT_EQ(j["verdict"], false);
  EXPECT_EQ(j["witnesses"]["reason"], "planar");
  EXPECT_EQ(j["seed"], 1);
}

TEST(CliTest, Algorithm81OnK66IsInconclusive) {
  const Result r = Invoke({"alg81", "--graph", Data("k66.edg"), "--k", "2", "--seed", "1"});
  EXPECT_EQ(r.code, 2);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["verdict"], "inconclusive");
  EXPECT_EQ(j["witnesses"]["reason"], "A_G is empty");
}

TEST(CliTest, LowerBoundOfIcosahedron) {
  const Result r = Invoke({"lbt", "--complex", Data("icosahedron.fct"), "--seed", "1"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["witnesses"]["edges"], 30);
  EXPECT_EQ(j["witnesses"]["classification"], nlohmann::json::array({"planar"}));
}

TEST(CliTest, SameSeedGivesIdenticalOutput) {
  const std::vector<std::string> args{"global-rigidity", "--graph", Data("k66.edg"), "--dim", "3",
                                      "--seed", "77", "--full-ranks"};
  const Result a = Invoke(args);
  const Result b = Invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const Result c = Invoke({"global-rigidity", "--graph", Data("k66.edg"), "--dim", "3"});
  EXPECT_TRUE(nlohmann::json::parse(c.out).contains("seed"));
}

TEST(CliTest, ErrorsExitWithThree) {
  EXPECT_EQ(Invoke({"circuit-check", "--complex", Data("bad.fct")}).code, 3);
  EXPECT_EQ(Invoke({"circuit-check", "--complex", Data("missing.fct")}).code, 3);
  EXPECT_EQ(Invoke({"no-such-command"}).code, 3);
  EXPECT_EQ(Invoke({"lbt", "--graph", Data("k66.edg")}).code, 3);
  EXPECT_EQ(Invoke({"redundant", "--complex", Data("octahedron.fct"), "--edge", "0", "1"}).code, 3);
  EXPECT_EQ(Invoke({"enumerate", "--k", "2", "--n", "9"}).code, 3);
  EXPECT_EQ(Invoke({"--help"}).code, 0);
}

TEST(CliTest, AuditAndTimings) {
  const Result r = Invoke({"fogelsanger-verify", "--named", "figure-one", "--edge", "0", "1",
                           "--seed", "3", "--audit", "--timings"});
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["witnesses"]["audit"]["all_match"].get<bool>());
  EXPECT_TRUE(j.contains("timings"));
}

TEST(CliTest, EveryCommandRuns) {
  const std::string oct = Data("octahedron.fct");
  const std::string torus = Data("torus7.fct");
  const std::vector<std::pair<std::vector<std::string>, int>> cases{
      {{"circuit-check", "--complex", oct}, 0},
      {{"decompose", "--complex", oct, "--edge", "0", "2"}, 0},
      {{"fogelsanger-verify", "--complex", torus, "--edge", "0", "1"}, 0},
      {{"blocks", "--named", "two-octahedra"}, 0},
      {{"blocks", "--graph", Data("k66.edg"), "--t", "3"}, 0},
      {{"rigidity", "--complex", oct}, 0},
      {{"global-rigidity", "--complex", torus, "--audit"}, 0},
      {{"coincident", "--complex", torus, "--pair", "0", "1"}, 0},
      {{"redundant", "--complex", torus, "--edge", "0", "1"}, 0},
      {{"lbt", "--complex", torus}, 1},
      {{"m-connected", "--complex", oct}, 0},
      {{"alg81", "--complex", torus}, 0},
      {{"stress", "--graph", Data("k66.edg"), "--dim", "3"}, 0},
      {{"enumerate", "--k", "2", "--max-n", "5"}, 0},
  };
  for (const auto& [args, code] : cases) {
    std::vector<std::string> with_seed = args;
    with_seed.insert(with_seed.end(), {"--seed", "5"});
    const Result r = Invoke(with_seed);
    EXPECT_EQ(r.code, code) << args.front() << ": " << r.err;
    EXPECT_NO_THROW(nlohmann::json::parse(r.out)) << args.front();
  }
}

TEST(CliTest, ReconstructFromFrameworkFiles) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "rigicheck_cli_reconstruct";
  fs::create_directories(dir);
  const SimplicialMulticomplex s = CyclicPolytopeBoundary(7);
  {
    std::ofstream out(dir / "c7.fct");
    out << "dim 3\n";
    for (const Simplex& f : s.Expanded()) {
      for (VertexId v : f) out << v << " ";
      out << "\n";
    }
  }
  RandomSource rng(3);
  const Framework p = RandomFramework(GraphOf(s), 4, rng);
  Framework q = p;
  for (auto& [v, point] : q.points) std::swap(point[0], point[1]);
  std::ofstream(dir / "p.json") << FrameworkToJson(p).dump();
  std::ofstream(dir / "q.json") << FrameworkToJson(q).dump();
  const Result r = Invoke({"reconstruct", "--complex", (dir / "c7.fct").string(), "--p",
                           (dir / "p.json").string(), "--q", (dir / "q.json").string(),
                           "--seed", "2", "--output", (dir / "out.json").string()});
  EXPECT_EQ(r.code, 0) << r.err;
  std::ifstream in(dir / "out.json");
  const auto j = nlohmann::json::parse(in);
  EXPECT_EQ(j["claim"], "affine-reconstruction");
  EXPECT_EQ(j["witnesses"]["stress_rank"], 2);
  fs::remove_all(dir);
}

}  // namespace
}  // namespace rigicheck
