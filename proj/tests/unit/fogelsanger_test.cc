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

#include <gtest/gtest.h>

#include "rigicheck/error.h"
#include "rigicheck/fogelsanger.h"
#include "rigicheck/named.h"
#include "rigicheck/rigidity.h"
#include "support/reference.h"

namespace rigicheck {
namespace {

using L = FigureOneLabels;

SimplicialMulticomplex FromFacets(int k, const std::vector<Simplex>& facets) {
  SimplicialMulticomplex s(k);
  for (const Simplex& f : facets) s.Add(f);
  return s;
}

TEST(StarCompletionTest, FigureOne) {
  const StarCompletionResult whole = StarCompletion(FigureOneSphere(), L::u, L::v);
  // K = {u, v, w} with uw and vw edges: w in {y, z, a, b}.
  EXPECT_EQ(whole.dagger.size(), 4u);
  // A sphere has no boundary, so nothing completes it.
  EXPECT_TRUE(whole.star.empty());
  const std::vector<Simplex> s = FigureOneFacets();
  const StarCompletionResult part =
      StarCompletion(FromFacets(2, {s[0], s[1], s[7]}), L::u, L::v);
  EXPECT_EQ(part.star, FromFacets(2, {Simplex{L::u, L::v, L::z}}));
  EXPECT_THROW(StarCompletion(FigureOneSphere(), L::u, L::u), InvalidInput);
}

TEST(DecomposeTest, FigureOneParts) {
  const Decomposition dec = Decompose(FigureOneSphere(), L::u, L::v);
  const std::vector<Simplex> s = FigureOneFacets();
  const Simplex k1{L::u, L::v, L::z};
  const Simplex k2{L::u, L::v, L::y};
  std::vector<SimplicialMulticomplex> expected{
      FromFacets(2, {s[0], s[1], s[7], k1}),
      FromFacets(2, {s[2], s[3], k1, k2}),
      FromFacets(2, {s[4], s[5], s[6], k2}),
  };
  ASSERT_EQ(dec.parts.size(), 3u);
  for (const auto& want : expected) {
    bool found = false;
    for (const FogelsangerPart& part : dec.parts) found = found || part.plus == want;
    EXPECT_TRUE(found) << "missing part";
  }
  for (const FogelsangerPart& part : dec.parts) {
    EXPECT_TRUE(IsNontrivialCircuit(part.plus));
    EXPECT_EQ(part.plus, Union(part.base, part.star));
  }
  const Verdict v = VerifyDecomposition(dec);
  EXPECT_TRUE(v.value()) << v.witnesses.dump();
}

TEST(DecomposeTest, PinchedTorusHasThreeParts) {
  const Decomposition dec = Decompose(PinchedTorus(), 0, 6);
  EXPECT_EQ(dec.parts.size(), 3u);
  EXPECT_TRUE(VerifyDecomposition(dec).value());
}

TEST(DecomposeTest, EveryEdgeOfNamedComplexes) {
  for (const char* name : {"octahedron", "torus7", "two-octahedra", "pinched-sphere",
                           "torus-flipped-edge", "l2", "cyclic7"}) {
    const auto s = NamedComplex(name);
    const int d = s.dim() + 1;
    for (const auto& [u, v] : GraphOf(s).Edges()) {
      const Decomposition dec = Decompose(s, u, v);
      const Verdict verdict = VerifyDecomposition(dec);
      ASSERT_TRUE(verdict.value()) << name << " " << u << v << verdict.witnesses.dump();
      for (const FogelsangerPart& part : dec.parts) {
        EXPECT_TRUE(testing::ReferenceIsRigid(GraphOf(part.plus), d)) << name;
      }
    }
  }
}

TEST(DecomposeTest, RejectsBadInput) {
  EXPECT_THROW(Decompose(Octahedron(), 0, 1), InvalidInput);
  EXPECT_THROW(Decompose(MakeComplex(2, {{0, 1, 2}, {0, 1, 2}}), 0, 1), InvalidInput);
}

TEST(VerifyTest, TamperedDecompositionFails) {
  Decomposition dec = Decompose(FigureOneSphere(), L::u, L::v);
  dec.parts.pop_back();
  EXPECT_FALSE(VerifyDecomposition(dec).value());
}

TEST(SurgeryTest, RemovingAConeVertex) {
  // Star of the cone vertex 4 in a subdivided tetrahedron boundary.
  const auto s = SubdivideFacet(CanonicalK(2, {0, 1, 2, 3}), Simplex{1, 2, 3}, 4);
  const auto s1 = Star(s, Simplex{4});
  const SurgeryResult r = BoundarySurgeryK1(s, s1);
  EXPECT_FALSE(r.degenerate);
  EXPECT_EQ(r.result, CanonicalK(2, {1, 2, 3, 4}));
  const SurgeryResult single = BoundarySurgeryK1(s, FromFacets(2, {Simplex{0, 1, 2}}));
  EXPECT_TRUE(single.degenerate);
}

TEST(SurgeryTest, SquareBoundary) {
  const auto s = Octahedron();
  const auto s1 = Star(s, Simplex{0});
  const auto out = BoundarySurgeryK2(s, s1, 2, 4, 2, 3);
  EXPECT_TRUE(IsNontrivialCircuit(out));
  EXPECT_EQ(out.size(), 6u);
  EXPECT_TRUE(out.Contains(Simplex{3, 4, 5}));
  EXPECT_TRUE(out.Contains(Simplex{2, 3, 5}));
  EXPECT_THROW(BoundarySurgeryK2(s, s1, 2, 4, 2, 4), InvalidInput);
  EXPECT_THROW(BoundarySurgeryK2(s, s1, 2, 3, 2, 4), InvalidInput);
}

}  // namespace
}  // namespace rigicheck
