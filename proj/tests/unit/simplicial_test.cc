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

#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "rigicheck/error.h"
#include "rigicheck/io.h"
#include "rigicheck/isomorphism.h"
#include "rigicheck/named.h"
#include "rigicheck/oracle.h"
#include "rigicheck/simplicial.h"

namespace rigicheck {
namespace {

SimplicialMulticomplex Relabel(const SimplicialMulticomplex& s, const std::vector<VertexId>& to) {
  SimplicialMulticomplex out(s.dim());
  for (const Simplex& f : s.Expanded()) {
    std::vector<VertexId> vs;
    for (VertexId v : f) vs.push_back(to[v]);
    out.Add(Simplex(vs));
  }
  return out;
}

TEST(SimplexTest, RejectsRepeatedVertex) {
  EXPECT_THROW(Simplex({1, 2, 2}), InvalidInput);
  EXPECT_THROW(Simplex({-1, 2}), InvalidInput);
}

TEST(SimplexTest, SortsAndEditsVertices) {
  const Simplex s{3, 1, 2};
  EXPECT_EQ(s, (Simplex{1, 2, 3}));
  EXPECT_EQ(s.Without(2), (Simplex{1, 3}));
  EXPECT_EQ(s.With(0), (Simplex{0, 1, 2, 3}));
  EXPECT_EQ(s.Codim1Faces().size(), 3u);
  EXPECT_TRUE(s.Contains(Simplex{1, 3}));
}

TEST(MulticomplexTest, ArityIsChecked) {
  SimplicialMulticomplex s(2);
  EXPECT_THROW(s.Add(Simplex{0, 1}), InvalidInput);
  EXPECT_THROW(s.Remove(Simplex{0, 1, 2}), InvalidInput);
}

TEST(MulticomplexTest, MultiplicityAccumulates) {
  const auto s = MakeComplex(1, {{0, 1}, {0, 1}, {1, 2}});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.distinct_size(), 2u);
  EXPECT_EQ(s.Multiplicity(Simplex{0, 1}), 2);
  EXPECT_FALSE(s.IsComplex());
}

TEST(BoundaryTest, TriangleWithoutOneFace) {
  auto k = CanonicalK(2, {0, 1, 2, 3});
  k.Remove(Simplex{1, 2, 3});
  EXPECT_EQ(Boundary(k), MakeComplex(1, {{1, 2}, {1, 3}, {2, 3}}));
}

TEST(BoundaryTest, DimensionZero) {
  EXPECT_EQ(Boundary(MakeComplex(0, {{0}, {1}})).size(), 0u);
  EXPECT_EQ(Boundary(MakeComplex(0, {{0}})).size(), 1u);
}

TEST(BoundaryTest, BoundaryOfBoundaryVanishes) {
  std::mt19937 rng(3);
  const auto all = CanonicalK(3, {0, 1, 2, 3, 4});
  for (int trial = 0; trial < 20; ++trial) {
    SimplicialMulticomplex s(3);
    for (const Simplex& f : all.Expanded()) {
      if (rng() % 2) s.Add(f);
    }
    EXPECT_TRUE(Boundary(Boundary(s)).empty());
  }
}

TEST(CircuitTest, CanonicalComplexes) {
  for (int k = 0; k <= 4; ++k) {
    std::vector<VertexId> vs(k + 3);
    for (int i = 0; i < k + 3; ++i) vs[i] = i;
    EXPECT_TRUE(IsNontrivialCircuit(CanonicalK(k, {vs.begin(), vs.begin() + k + 2}))) << k;
    EXPECT_TRUE(IsNontrivialCircuit(CanonicalL(k, vs))) << k;
  }
}

TEST(CircuitTest, TrivialCircuitIsTwoCopies) {
  const auto s = MakeComplex(2, {{0, 1, 2}, {0, 1, 2}});
  EXPECT_TRUE(IsCircuit(s));
  EXPECT_TRUE(IsTrivialCircuit(s));
  EXPECT_FALSE(IsNontrivialCircuit(s));
  EXPECT_FALSE(IsCircuit(MakeComplex(2, {{0, 1, 2}, {0, 1, 2}, {0, 1, 2}, {0, 1, 2}})));
}

TEST(CircuitTest, DisjointSpheresAreACycleButNotACircuit) {
  const auto s = Union(CanonicalK(2, {0, 1, 2, 3}), CanonicalK(2, {4, 5, 6, 7}));
  EXPECT_TRUE(IsCycle(s));
  EXPECT_FALSE(IsCircuit(s));
  const auto parts = PartitionIntoCircuits(s);
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(Union(parts[0], parts[1]), s);
}

TEST(CircuitTest, NamedComplexesAreCircuits) {
  for (const std::string& name : NamedComplexNames()) {
    EXPECT_TRUE(IsCircuit(NamedComplex(name))) << name;
  }
}

TEST(CircuitTest, AgreesWithSubsetSearch) {
  std::mt19937 rng(17);
  std::vector<Simplex> pool;
  for (int a = 0; a < 6; ++a)
    for (int b = a + 1; b < 6; ++b)
      for (int c = b + 1; c < 6; ++c) pool.push_back(Simplex{a, b, c});
  int circuits = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    SimplicialMulticomplex s(2);
    const int size = 2 + static_cast<int>(rng() % 11);
    for (int i = 0; i < size; ++i) s.Add(pool[rng() % pool.size()]);
    const bool fast = IsCircuit(s);
    circuits += fast;
    ASSERT_EQ(fast, BruteIsCircuit(s)) << FacetsToString(s);
  }
  for (const auto& s : EnumerateCircuitsUpTo(2, 6)) {
    EXPECT_TRUE(BruteIsCircuit(s));
    SimplicialMulticomplex broken = s;
    broken.Remove(s.Expanded().front());
    EXPECT_FALSE(IsCircuit(broken));
    EXPECT_FALSE(BruteIsCircuit(broken));
  }
  EXPECT_GT(circuits, 0);
}

TEST(CircuitTest, ExtractCircuitContainsSeed) {
  const auto s = Union(Octahedron(), Relabel(Octahedron(), {10, 11, 12, 13, 14, 15}));
  const Simplex seed{10, 12, 13};
  const auto c = ExtractCircuit(s, seed);
  EXPECT_TRUE(IsCircuit(c));
  EXPECT_TRUE(c.Contains(seed));
  EXPECT_THROW(ExtractCircuit(Octahedron(), Simplex{7, 8, 9}), InvalidInput);
}

TEST(LinkTest, OctahedronVertexLinkIsFourCycle) {
  const auto link = Link(Octahedron(), Simplex{0});
  EXPECT_EQ(link, MakeComplex(1, {{2, 3}, {3, 4}, {4, 5}, {2, 5}}));
  EXPECT_EQ(Star(Octahedron(), Simplex{0}).size(), 4u);
  EXPECT_TRUE(Link(Octahedron(), Simplex{0, 1}).empty());
}

TEST(ContractTest, OctahedronEdge) {
  const ContractionMap m = Contract(Octahedron(), 0, 2);
  EXPECT_EQ(m.image.size(), 6u);
  EXPECT_EQ(m.gamma.size(), 6u);
  EXPECT_TRUE(IsCircuit(m.image));
  for (const auto& [from, to] : m.gamma) EXPECT_FALSE(to.Contains(2));
  EXPECT_THROW(Contract(Octahedron(), 0, 0), InvalidInput);
}

TEST(ContractTest, DegenerateContractionLeavesDoubledTriangles) {
  // Contracting uv in the figure-one sphere produces three doubled triangles.
  const ContractionMap m = Contract(FigureOneSphere(), 0, 1);
  EXPECT_TRUE(IsCycle(m.image));
  EXPECT_EQ(PartitionIntoCircuits(m.image).size(), 3u);
}

TEST(PseudomanifoldTest, Classification) {
  EXPECT_TRUE(IsPseudomanifold(Octahedron()));
  EXPECT_TRUE(IsPseudomanifold(SevenVertexTorus()));
  EXPECT_FALSE(IsPseudomanifold(PinchedSphere()));
  EXPECT_TRUE(IsStronglyConnected(PinchedSphere()));
  EXPECT_FALSE(IsStronglyConnected(Union(CanonicalK(2, {0, 1, 2, 3}), CanonicalK(2, {4, 5, 6, 7}))));
}

TEST(IsomorphismTest, RelabellingPreservesCanonicalForm) {
  std::vector<VertexId> perm{5, 3, 0, 4, 1, 2};
  EXPECT_TRUE(AreIsomorphic(Octahedron(), Relabel(Octahedron(), perm)));
  EXPECT_FALSE(AreIsomorphic(Octahedron(), StackedSphere(2, 6, 1)));
  std::vector<VertexId> torus_perm{3, 6, 2, 0, 5, 1, 4};
  EXPECT_EQ(Canonicalize(SevenVertexTorus()),
            Canonicalize(Relabel(SevenVertexTorus(), torus_perm)));
}

TEST(IoTest, RoundTrip) {
  for (const std::string& name : NamedComplexNames()) {
    const auto s = NamedComplex(name);
    std::istringstream in(FacetsToString(s));
    EXPECT_EQ(ParseFacets(in), s) << name;
  }
}

TEST(IoTest, CommentsAndErrors) {
  std::istringstream ok("# octahedron cap\ndim 2\n0 2 3  # face\n\n0 3 4\n");
  EXPECT_EQ(ParseFacets(ok).size(), 2u);
  std::istringstream bad("0 1 2\n0 1\n");
  try {
    ParseFacets(bad);
    FAIL();
  } catch (const InvalidInput& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
  std::istringstream junk("0 x 2\n");
  EXPECT_THROW(ParseFacets(junk), InvalidInput);
  std::istringstream edges("0 1\n1 2\n7\n");
  const Graph g = ParseEdgeList(edges);
  EXPECT_EQ(g.num_vertices(), 4u);
  EXPECT_EQ(g.num_edges(), 2u);
}

}  // namespace
}  // namespace rigicheck
