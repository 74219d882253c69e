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
#include <random>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "rigicheck/connectivity.h"
#include "rigicheck/decision.h"
#include "rigicheck/error.h"
#include "rigicheck/io.h"
#include "rigicheck/isomorphism.h"
#include "rigicheck/named.h"
#include "rigicheck/oracle.h"
#include "support/reference.h"

namespace rigicheck {
namespace {

TEST(EnumerateTest, FourVerticesGiveTheTetrahedron) {
  const auto circuits = EnumerateCircuits({2, 4});
  ASSERT_EQ(circuits.size(), 1u);
  EXPECT_TRUE(AreIsomorphic(circuits.front(), CanonicalK(2, {0, 1, 2, 3})));
}

TEST(EnumerateTest, FiveVerticesGiveOneNonCompleteCircuit) {
  const auto circuits = EnumerateCircuits({2, 5});
  int non_complete = 0;
  for (const auto& s : circuits) {
    if (GraphOf(s).IsComplete()) continue;
    ++non_complete;
    EXPECT_TRUE(AreIsomorphic(s, CanonicalL(2, {0, 1, 2, 3, 4})));
  }
  EXPECT_EQ(non_complete, 1);
}

TEST(EnumerateTest, OneDimensionalCircuitsAreCycles) {
  for (int m = 3; m <= 8; ++m) {
    const auto circuits = EnumerateCircuits({1, m});
    ASSERT_EQ(circuits.size(), 1u) << m;
    EXPECT_EQ(GraphOf(circuits.front()).num_edges(), static_cast<std::size_t>(m));
    for (VertexId v : circuits.front().Vertices()) EXPECT_EQ(GraphOf(circuits.front()).Degree(v), 2u);
  }
}

TEST(EnumerateTest, OutputIsCircuitsWithoutDuplicates) {
  for (int k = 2; k <= 3; ++k) {
    const auto all = EnumerateCircuitsUpTo(k, 6);
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_TRUE(IsNontrivialCircuit(all[i]));
      EXPECT_TRUE(BruteIsCircuit(all[i]));
      for (std::size_t j = i + 1; j < all.size(); ++j) EXPECT_FALSE(AreIsomorphic(all[i], all[j]));
    }
  }
  // Octahedron and the 6-vertex stacked spheres are among them.
  bool octahedron = false;
  for (const auto& s : EnumerateCircuits({2, 6})) octahedron = octahedron || AreIsomorphic(s, Octahedron());
  EXPECT_TRUE(octahedron);
}

TEST(EnumerateTest, BudgetIsEnforced) {
  EXPECT_THROW(EnumerateCircuits({2, 8}), BudgetExceeded);
  EXPECT_THROW(EnumerateCircuits({-1, 4}), InvalidInput);
}

TEST(BruteSeparatorTest, OctahedralGraph) {
  const auto seps = BruteMinSeparators(OctahedralGraph());
  EXPECT_EQ(seps, (std::vector<std::vector<VertexId>>{{0, 1, 2, 4}, {0, 1, 3, 5}, {2, 3, 4, 5}}));
  EXPECT_EQ(BruteVertexConnectivity(CompleteGraph({0, 1, 2, 3})), 3);
}

TEST(BruteSeparatorTest, MatchesFlowConnectivity) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g;
    const int n = 3 + trial % 7;
    for (int v = 0; v < n; ++v) g.AddVertex(v);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (rng() % 3) g.AddEdge(a, b);
    EXPECT_EQ(BruteVertexConnectivity(g), VertexConnectivity(g));
    EXPECT_EQ(BruteVertexConnectivity(g), testing::ReferenceConnectivity(g));
    for (const auto& x : BruteMinSeparators(g)) EXPECT_TRUE(IsSeparator(g, x));
  }
}

TEST(StackedBySubdivisionTest, Examples) {
  EXPECT_TRUE(IsStackedBySubdivision(StackedSphere(3, 9, 5)));
  EXPECT_TRUE(IsStackedBySubdivision(StackedSphere(2, 10, 1)));
  EXPECT_FALSE(IsStackedBySubdivision(Octahedron()));
  EXPECT_FALSE(IsStackedBySubdivision(SevenVertexTorus()));
}

TEST(RationalAuditTest, VerdictRanks) {
  RandomOptions opts;
  const Verdict v = GlobalRigidityVerdict(CompleteBipartiteGraph(6, 6), 3, opts);
  EXPECT_TRUE(RationalRankAudit(v));
  Verdict forged = v;
  forged.ranks.front().rank += 1;
  EXPECT_FALSE(RationalRankAudit(forged));
}

TEST(AtlasTest, WritesFilesAndIndex) {
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "rigicheck_atlas_test";
  std::filesystem::remove_all(dir);
  const auto circuits = EnumerateCircuitsUpTo(2, 6);
  WriteAtlas(dir.string(), circuits);
  std::ifstream in(dir / "index.json");
  const auto index = nlohmann::json::parse(in);
  ASSERT_EQ(index.size(), circuits.size());
  for (std::size_t i = 0; i < circuits.size(); ++i) {
    EXPECT_EQ(ReadFacetFile((dir / index[i]["file"].get<std::string>()).string()), circuits[i]);
  }
  std::filesystem::remove_all(dir);
}

}  // namespace
}  // namespace rigicheck
