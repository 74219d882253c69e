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

// Structured verdicts with the evidence needed to re-check them, and the JSON
// encodings shared by the command-line tool.

#ifndef RIGICHECK_VERDICT_H_
#define RIGICHECK_VERDICT_H_

#include <cstdint>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "rigicheck/block_tree.h"
#include "rigicheck/graph.h"
#include "rigicheck/rigidity.h"
#include "rigicheck/simplicial.h"

namespace rigicheck {

inline constexpr const char* kSchema = "rigicheck/1";

enum class Claim {
  kCircuit,
  kDecomposition,
  kBlockTree,
  kRigid,
  kGloballyRigid,
  kCoincidentRigid,
  kRedundantEdge,
  kHendricksonScreen,
  kLowerBoundExtremal,
  kMConnected,
  kStackedSphere,
  kPlaneTriangulation,
  kStrongCleavage,
  kAffineReconstruction,
  kEnumeration,
};

enum class Outcome { kTrue, kFalse, kInconclusive };

struct Verdict {
  Claim claim = Claim::kCircuit;
  Outcome outcome = Outcome::kFalse;
  nlohmann::json witnesses = nlohmann::json::object();
  // Set when the answer used random points.
  std::optional<std::uint64_t> seed;
  int trials = 0;
  // Every modular rank the answer relied on.
  RankLog ranks;

  bool value() const { return outcome == Outcome::kTrue; }
};

Verdict MakeVerdict(Claim claim, bool value);

std::string ClaimName(Claim claim);
// 0 true, 1 false, 2 inconclusive.
int ExitCode(const Verdict& v);

// {schema, claim, verdict, witnesses, seed?, trials?, ranks?}. Rank records
// are summarised by kind and value unless `full_ranks` is set.
nlohmann::json VerdictToJson(const Verdict& v, bool full_ranks = false);

nlohmann::json ComplexToJson(const SimplicialMulticomplex& s);
nlohmann::json GraphToJson(const Graph& g);
nlohmann::json BlockTreeToJson(const BlockTree& tree);
nlohmann::json VerticesToJson(const std::vector<VertexId>& vertices);

}  // namespace rigicheck

#endif  // RIGICHECK_VERDICT_H_
