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

// Randomized exact rigidity over F_p: rigidity matrices, generic rank,
// rigidity and redundancy tests, sparsity counts, stresses and the
// full-rank-stress global rigidity test, coincident realisations, and the
// vertex split and 0-extension moves.
//
// Every rank that feeds a decision can be appended to a RankLog; each record
// carries the integer data needed to recompute it over the rationals.

#ifndef RIGICHECK_RIGIDITY_H_
#define RIGICHECK_RIGIDITY_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigicheck/field.h"
#include "rigicheck/graph.h"

namespace rigicheck {

struct Framework {
  Graph graph;
  int dim = 0;
  std::map<VertexId, std::vector<std::uint64_t>> points;
  std::uint64_t modulus = kMersenne61;
};

struct RankRecord {
  enum class Kind {
    kRigidity,  // rank R(G,p)
    kStress,    // rank of the stress matrix of a combination of the kernel basis
    kJoint,     // rank of [R(G,p) | R(G,q)]
  };
  Kind kind = Kind::kRigidity;
  Framework framework;
  std::optional<Framework> other;          // kJoint only
  std::vector<std::uint64_t> coefficients;  // kStress only
  std::size_t rank = 0;
};
using RankLog = std::vector<RankRecord>;

struct RandomOptions {
  std::uint64_t seed = 1;
  int trials = 3;
  std::uint64_t modulus = kMersenne61;
  RankLog* log = nullptr;
};

// d n - C(d+1, 2) when n >= d, else C(n, 2).
std::size_t TargetRank(std::size_t n, int d);

Framework RandomFramework(const Graph& g, int d, RandomSource& rng,
                          std::uint64_t modulus = kMersenne61);
// Random points except p(v) = p(u).
Framework CoincidentFramework(const Graph& g, int d, VertexId u, VertexId v,
                              RandomSource& rng, std::uint64_t modulus = kMersenne61);

// Rows follow g.Edges(); column block i belongs to the i-th smallest vertex.
// Throws InvalidInput if a vertex lacks a d-dimensional point.
ModMatrix RigidityMatrix(const Framework& f);
std::size_t FrameworkRank(const Framework& f, RankLog* log = nullptr);

// Maximum rank over opts.trials random frameworks.
std::size_t GenericRank(const Graph& g, int d, const RandomOptions& opts);
bool IsRigid(const Graph& g, int d, const RandomOptions& opts);
// Rigid and G - e rigid for every edge e.
bool IsRedundantlyRigid(const Graph& g, int d, const RandomOptions& opts);
// Edges e for which G - e stays rigid (empty when G is not rigid).
std::vector<Edge> RedundantEdges(const Graph& g, int d, const RandomOptions& opts);
// Rigid with |E| equal to the target rank.
bool IsMinRigid(const Graph& g, int d, const RandomOptions& opts);

// |E(H)| <= d|V(H)| - C(d+1,2) for every subgraph H with |V(H)| >= d, decided
// exactly by a maximum-closure computation per d-subset of vertices.
bool IsSparse(const Graph& g, int d);
// max over subgraphs H with |V(H)| >= d of |E(H)| - d|V(H)|, with a maximiser.
std::pair<long long, std::vector<VertexId>> MaxSparsityExcess(const Graph& g, int d);

// Basis of the left kernel of R(G,p), indexed like g.Edges().
std::vector<std::vector<std::uint64_t>> StressSpace(const Framework& f);
// Weighted Laplacian on the sorted vertex order.
ModMatrix StressMatrix(const Framework& f, const std::vector<std::uint64_t>& stress);

struct StressCertificate {
  bool full_rank = false;
  std::size_t stress_rank = 0;  // rank of Omega for the best trial
  std::size_t target = 0;       // n - d - 1
  Framework framework;
  std::vector<std::uint64_t> coefficients;  // combination of the kernel basis
  std::vector<std::uint64_t> stress;
};

// Searches for a stress with rank Omega = n - d - 1 over opts.trials generic
// frameworks. Graphs on at most d+1 vertices are decided by completeness and
// return without a framework.
StressCertificate FindFullRankStress(const Graph& g, int d, const RandomOptions& opts);
// Same search on a fixed framework, drawing combinations from `rng`.
StressCertificate FullRankStressAt(const Framework& f, RandomSource& rng, int trials,
                                   RankLog* log = nullptr);
bool IsGloballyRigidGHT(const Graph& g, int d, const RandomOptions& opts);

// Rank at random u,v-coincident points equals the target rank.
bool IsUvCoincidentRigid(const Graph& g, VertexId u, VertexId v, int d,
                         const RandomOptions& opts);

// Splits v: it keeps its label with neighbours `to_vprime` plus `shared`,
// and a new vertex max(V)+1 gets N(v) minus `to_vprime`, plus `shared`; the
// two are joined. Throws InvalidInput on non-neighbours or |shared| < d - 1.
Graph VertexSplit(const Graph& g, VertexId v, const std::vector<VertexId>& to_vprime,
                  const std::vector<VertexId>& shared, int d);
// Adds v_new adjacent to the d vertices of `attach`.
Graph ZeroExtension(const Graph& g, VertexId v_new, const std::vector<VertexId>& attach,
                    int d);

// xy avoids u and v, and {u,v,x,y} induces neither C4 nor K4 in G + uv.
bool IsNormalEdge(const Graph& g, VertexId u, VertexId v, VertexId x, VertexId y);
// x, y have d-1 common neighbours N with {u,v} not inside N + {x,y}.
bool IsUvAdmissible(const Graph& g, VertexId u, VertexId v, VertexId x, VertexId y, int d);

// Recomputes a record over the rationals and compares ranks.
bool AuditRankRecord(const RankRecord& record);
std::size_t RationalRankOf(const RankRecord& record);

nlohmann::json FrameworkToJson(const Framework& f);
// Reads {dim, points: {vertex: [ints]}, modulus}; the graph is supplied
// separately. Negative coordinates are reduced mod p.
Framework FrameworkFromJson(const nlohmann::json& j, const Graph& g);
nlohmann::json RankRecordToJson(const RankRecord& r);

}  // namespace rigicheck

#endif  // RIGICHECK_RIGIDITY_H_
