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

// Acceptance run: one PASS/FAIL line per criterion, with the counts behind it
// and the wall time against its limit. Exits non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rigicheck/block_tree.h"
#include "rigicheck/connectivity.h"
#include "rigicheck/decision.h"
#include "rigicheck/fogelsanger.h"
#include "rigicheck/isomorphism.h"
#include "rigicheck/named.h"
#include "rigicheck/oracle.h"
#include "rigicheck/planarity.h"
#include "rigicheck/rigidity.h"

namespace rigicheck {
namespace {

struct CriterionResult {
  bool pass = true;
  std::string detail;
};

// Every modular rank produced by criteria 2-8, audited in criterion 9.
RankLog audit_pool;

void Require(CriterionResult& o, bool condition, const std::string& what) {
  if (!condition && o.pass) {
    o.pass = false;
    o.detail = "first failure: " + what;
  }
}

RandomOptions Logged(std::uint64_t seed, int trials, RankLog* log) {
  RandomOptions opts;
  opts.seed = seed;
  opts.trials = trials;
  opts.log = log;
  return opts;
}

void Keep(RankLog& log) {
  audit_pool.insert(audit_pool.end(), log.begin(), log.end());
  log.clear();
}

void Keep(const Verdict& v) { audit_pool.insert(audit_pool.end(), v.ranks.begin(), v.ranks.end()); }

const std::vector<SimplicialMulticomplex>& Corpus(int k) {
  static const std::vector<SimplicialMulticomplex> two = EnumerateCircuitsUpTo(2, 7);
  static const std::vector<SimplicialMulticomplex> three = EnumerateCircuitsUpTo(3, 7);
  return k == 2 ? two : three;
}

CriterionResult Classification() {
  CriterionResult o;
  const auto four = EnumerateCircuits({2, 4});
  Require(o, four.size() == 1 && AreIsomorphic(four[0], CanonicalK(2, {0, 1, 2, 3})),
          "n=4 is not exactly K_2");
  int non_complete = 0;
  bool is_l2 = true;
  for (const auto& s : EnumerateCircuits({2, 5})) {
    if (GraphOf(s).IsComplete()) continue;
    ++non_complete;
    is_l2 = is_l2 && AreIsomorphic(s, CanonicalL(2, {0, 1, 2, 3, 4}));
  }
  Require(o, non_complete == 1 && is_l2, "n=5 non-complete circuits are not exactly L_2");
  if (o.pass) o.detail = "n=4: 1 (K_2); n=5 non-complete: 1 (L_2)";
  return o;
}

CriterionResult FogelsangerSoundness() {
  CriterionResult o;
  RankLog log;
  std::size_t cases = 0;
  std::size_t parts = 0;
  std::uint64_t seed = 1000;
  for (std::size_t i = 0; i < Corpus(2).size(); ++i) {
    const SimplicialMulticomplex& s = Corpus(2)[i];
    for (const auto& [u, v] : GraphOf(s).Edges()) {
      const Decomposition dec = Decompose(s, u, v);
      const Verdict verdict = VerifyDecomposition(dec);
      std::ostringstream where;
      where << "circuit " << i << " edge " << u << "-" << v;
      Require(o, verdict.value(), "decomposition checks fail on " + where.str());
      for (const FogelsangerPart& part : dec.parts) {
        Require(o, IsRigid(GraphOf(part.plus), 3, Logged(++seed, 3, &log)),
                "part not rigid on " + where.str());
        ++parts;
      }
      ++cases;
    }
  }
  Keep(log);
  if (o.pass) {
    o.detail = std::to_string(Corpus(2).size()) + " circuits, " + std::to_string(cases) +
               " edges, " + std::to_string(parts) + " rigid parts";
  }
  return o;
}

CriterionResult StructureAgreesWithStresses() {
  CriterionResult o;
  std::size_t counts[2] = {0, 0};
  std::size_t rigid[2] = {0, 0};
  std::uint64_t seed = 2000;
  for (int k : {2, 3}) {
    const auto& corpus = Corpus(k);
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      const Verdict structural = GloballyRigidCircuit(corpus[i]);
      RankLog log;
      const bool stress = IsGloballyRigidGHT(GraphOf(corpus[i]), k + 1, Logged(++seed, 5, &log));
      Keep(log);
      Require(o, structural.value() == stress,
              "k=" + std::to_string(k) + " circuit " + std::to_string(i) + " disagrees");
      ++counts[k - 2];
      rigid[k - 2] += stress;
    }
  }
  if (o.pass) {
    o.detail = "k=2: " + std::to_string(counts[0]) + " agree (" + std::to_string(rigid[0]) +
               " globally rigid); k=3: " + std::to_string(counts[1]) + " agree (" +
               std::to_string(rigid[1]) + " globally rigid)";
  }
  return o;
}

CriterionResult NamedInstances() {
  CriterionResult o;
  RankLog log;
  const Graph oct = GraphOf(Octahedron());
  Require(o, IsRigid(oct, 3, Logged(1, 3, &log)), "octahedron not rigid");
  Require(o, !GloballyRigidCircuit(Octahedron()).value(), "octahedron globally rigid");
  Require(o, IsPlanar(oct) && oct.num_edges() == 3 * oct.num_vertices() - 6,
          "octahedron not a plane triangulation");
  Require(o, !IsGloballyRigidGHT(oct, 3, Logged(2, 5, &log)), "octahedron passes the stress test");
  const Graph torus = GraphOf(SevenVertexTorus());
  Require(o, GloballyRigidCircuit(SevenVertexTorus()).value(), "torus not globally rigid");
  Require(o, IsGloballyRigidGHT(torus, 3, Logged(3, 5, &log)), "torus fails the stress test");
  const Graph k66 = CompleteBipartiteGraph(6, 6);
  const Verdict alg = Algorithm81(k66, 2);
  Require(o, alg.outcome == rigicheck::Outcome::kInconclusive &&
                 alg.witnesses["reason"] == "A_G is empty",
          "K66 not inconclusive with empty A_G");
  Require(o, IsGloballyRigidGHT(k66, 3, Logged(4, 5, &log)), "K66 fails the stress test");
  Keep(log);
  if (o.pass) {
    o.detail = "octahedron rigid, planar, not globally rigid; K7 torus globally rigid; "
               "K66 inconclusive (A_G empty) and stress-certified";
  }
  return o;
}

CriterionResult LowerBoundExtremality() {
  CriterionResult o;
  std::size_t equal = 0;
  for (std::size_t i = 0; i < Corpus(2).size(); ++i) {
    const SimplicialMulticomplex& s = Corpus(2)[i];
    const Graph g = GraphOf(s);
    const std::string where = "circuit " + std::to_string(i);
    const long long n = g.num_vertices();
    const long long e = g.num_edges();
    Require(o, e >= 3 * n - 6, where + " below the bound");
    const bool embedded = IsPlaneTriangulation(g) && TriangulationFaces(g) == s;
    Require(o, (e == 3 * n - 6) == embedded, where + " equality does not match the embedding");
    try {
      Require(o, LowerBoundCheck(s).value() == (e == 3 * n - 6), where + " verdict mismatch");
    } catch (const std::exception& ex) {
      Require(o, false, where + ": " + ex.what());
    }
    equal += e == 3 * n - 6;
  }
  if (o.pass) {
    o.detail = std::to_string(Corpus(2).size()) + " circuits, " + std::to_string(equal) +
               " extremal, all with matching plane faces";
  }
  return o;
}

CriterionResult RedundancyCharacterisation() {
  CriterionResult o;
  std::vector<std::pair<std::string, SimplicialMulticomplex>> fixtures;
  for (std::uint64_t seed = 1; seed <= 3; ++seed) {
    fixtures.emplace_back("stacked2-" + std::to_string(seed), StackedSphere(2, 9, seed));
    fixtures.emplace_back("stacked3-" + std::to_string(seed), StackedSphere(3, 8, seed));
  }
  fixtures.emplace_back("octahedron-chain-2", OctahedronChain(2));
  fixtures.emplace_back("octahedron-chain-3", OctahedronChain(3));
  fixtures.emplace_back("torus-appendage-1", TorusWithStackedAppendage(1));
  fixtures.emplace_back("torus-appendage-2", TorusWithStackedAppendage(2));
  std::size_t edges = 0;
  std::size_t redundant = 0;
  std::uint64_t seed = 3000;
  for (const auto& [name, s] : fixtures) {
    for (const Edge& e : GraphOf(s).Edges()) {
      const Verdict v = RedundantEdge(s, e, Logged(++seed, 3, nullptr));
      Keep(v);
      Require(o, v.witnesses["rank_test_agrees"].get<bool>(),
              name + " edge " + std::to_string(e.first) + "-" + std::to_string(e.second));
      ++edges;
      redundant += v.value();
    }
  }
  if (o.pass) {
    o.detail = std::to_string(fixtures.size()) + " fixtures, " + std::to_string(edges) +
               " edges, " + std::to_string(redundant) + " redundant";
  }
  return o;
}

CriterionResult CoincidentConsistency() {
  CriterionResult o;
  std::size_t graphs = 0;
  std::size_t pairs = 0;
  std::uint64_t seed = 4000;
  RankLog log;
  for (std::size_t i = 0; i < Corpus(2).size(); ++i) {
    const Graph g = GraphOf(Corpus(2)[i]);
    if (!VertexConnectivityAtLeast(g, 4).at_least || IsPlanar(g)) continue;
    ++graphs;
    const auto vertices = g.Vertices();
    for (std::size_t a = 0; a < vertices.size(); ++a) {
      for (std::size_t b = a + 1; b < vertices.size(); ++b) {
        const VertexId u = vertices[a];
        const VertexId v = vertices[b];
        if (!IsRigid(ContractEdge(g, u, v), 3, Logged(++seed, 3, &log))) continue;
        ++pairs;
        Require(o, IsUvCoincidentRigid(g, u, v, 3, Logged(++seed, 3, &log)),
                "circuit " + std::to_string(i) + " pair " + std::to_string(u) + "," +
                    std::to_string(v));
      }
    }
  }
  Keep(log);
  if (o.pass) {
    o.detail = std::to_string(graphs) + " 4-connected non-planar circuit graphs, " +
               std::to_string(pairs) + " pairs with rigid contraction, all coincident rigid";
  }
  return o;
}

CriterionResult StressReconstruction() {
  CriterionResult o;
  const Graph g = GraphOf(CyclicPolytopeBoundary(7));
  // Integer coordinates and maps small enough that no value wraps modulo p, so
  // the exact audit sees the same affine relation as the modular check.
  RandomSource source(5000);
  std::mt19937_64 rng(5001);
  Framework p;
  p.graph = g;
  p.dim = 4;
  for (VertexId v : g.Vertices()) {
    std::vector<std::uint64_t> point(4);
    for (auto& x : point) x = rng() % (1u << 20);
    p.points.emplace(v, std::move(point));
  }
  RankLog log;
  const StressCertificate cert = FullRankStressAt(p, source, 5, &log);
  Keep(log);
  Require(o, cert.full_rank && cert.stress_rank == 2, "no stress of rank n-5 = 2");
  int certified = 0;
  int rejected = 0;
  for (int trial = 0; trial < 20; ++trial) {
    std::uint64_t a[4][4];
    std::uint64_t b[4];
    for (auto& row : a)
      for (auto& x : row) x = rng() % (1u << 10);
    for (auto& x : b) x = rng() % (1u << 10);
    Framework q = p;
    for (auto& [v, point] : q.points) {
      const auto& src = p.points.at(v);
      for (int i = 0; i < 4; ++i) {
        std::uint64_t acc = b[i];
        for (int j = 0; j < 4; ++j) acc += a[i][j] * src[j];
        point[i] = acc;
      }
    }
    const Verdict v = StressReconstructCheck(p, q, Logged(5100 + trial, 3, nullptr));
    Keep(v);
    certified += v.value();
  }
  for (int trial = 0; trial < 20; ++trial) {
    Framework q = p;
    // Move one vertex off the affine image.
    auto it = q.points.begin();
    std::advance(it, trial % q.points.size());
    for (auto& x : it->second) x = rng() % kMersenne61;
    const Verdict v = StressReconstructCheck(p, q, Logged(5200 + trial, 3, nullptr));
    Keep(v);
    rejected += !v.value() && v.witnesses["reason"] == "stress spaces differ";
  }
  Require(o, certified == 20, "affine images certified: " + std::to_string(certified) + "/20");
  Require(o, rejected == 20, "perturbations rejected: " + std::to_string(rejected) + "/20");
  if (o.pass) {
    o.detail = "stress rank 2 = n-5; 20/20 affine images certified; 20/20 perturbations "
               "rejected by stress spaces";
  }
  return o;
}

CriterionResult RandomnessAudit() {
  CriterionResult o;
  std::size_t matched = 0;
  std::size_t kinds[3] = {0, 0, 0};
  for (const RankRecord& r : audit_pool) {
    const bool ok = AuditRankRecord(r);
    Require(o, ok, "rank " + std::to_string(r.rank) + " differs over the rationals");
    matched += ok;
    ++kinds[static_cast<int>(r.kind)];
  }
  Require(o, !audit_pool.empty(), "no ranks recorded");
  if (o.pass) {
    o.detail = std::to_string(matched) + "/" + std::to_string(audit_pool.size()) +
               " ranks match (" + std::to_string(kinds[0]) + " rigidity, " +
               std::to_string(kinds[1]) + " stress, " + std::to_string(kinds[2]) + " joint)";
  }
  return o;
}

}  // namespace
}  // namespace rigicheck

int main() {
  using rigicheck::CriterionResult;
  struct Criterion {
    int number;
    const char* name;
    double limit_seconds;
    std::function<CriterionResult()> run;
  };
  const Criterion criteria[] = {
      {1, "classification exactness", 10, rigicheck::Classification},
      {2, "decomposition soundness", 300, rigicheck::FogelsangerSoundness},
      {3, "structural verdict vs stress test", 600, rigicheck::StructureAgreesWithStresses},
      {4, "named instances", 30, rigicheck::NamedInstances},
      {5, "lower bound extremality", 300, rigicheck::LowerBoundExtremality},
      {6, "redundancy characterisation", 120, rigicheck::RedundancyCharacterisation},
      {7, "coincident rigidity", 300, rigicheck::CoincidentConsistency},
      {8, "stress reconstruction", 60, rigicheck::StressReconstruction},
      {9, "exact rank audit", 1e9, rigicheck::RandomnessAudit},
  };
  int failures = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    CriterionResult o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = seconds <= c.limit_seconds;
    const bool pass = o.pass && in_time;
    failures += !pass;
    std::printf("criterion %d (%s): %s  %.2fs", c.number, c.name, pass ? "PASS" : "FAIL",
                seconds);
    if (c.limit_seconds < 1e8) std::printf(" / %.0fs", c.limit_seconds);
    std::printf("  %s%s\n", o.detail.c_str(), in_time ? "" : " [over time limit]");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
