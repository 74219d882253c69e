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

#include "rigicheck/verdict.h"

namespace rigicheck {

Verdict MakeVerdict(Claim claim, bool value) {
  Verdict v;
  v.claim = claim;
  v.outcome = value ? Outcome::kTrue : Outcome::kFalse;
  return v;
}

std::string ClaimName(Claim claim) {
  switch (claim) {
    case Claim::kCircuit: return "circuit";
    case Claim::kDecomposition: return "fogelsanger-decomposition";
    case Claim::kBlockTree: return "block-tree";
    case Claim::kRigid: return "rigid";
    case Claim::kGloballyRigid: return "globally-rigid";
    case Claim::kCoincidentRigid: return "coincident-rigid";
    case Claim::kRedundantEdge: return "redundant-edge";
    case Claim::kHendricksonScreen: return "hendrickson-screen";
    case Claim::kLowerBoundExtremal: return "lower-bound-extremal";
    case Claim::kMConnected: return "m-connected";
    case Claim::kStackedSphere: return "stacked-sphere";
    case Claim::kPlaneTriangulation: return "plane-triangulation";
    case Claim::kStrongCleavage: return "strong-cleavage";
    case Claim::kAffineReconstruction: return "affine-reconstruction";
    case Claim::kEnumeration: return "enumeration";
  }
  return "unknown";
}

int ExitCode(const Verdict& v) {
  switch (v.outcome) {
    case Outcome::kTrue: return 0;
    case Outcome::kFalse: return 1;
    case Outcome::kInconclusive: return 2;
  }
  return 2;
}

nlohmann::json VerdictToJson(const Verdict& v, bool full_ranks) {
  nlohmann::json j;
  j["schema"] = kSchema;
  j["claim"] = ClaimName(v.claim);
  switch (v.outcome) {
    case Outcome::kTrue: j["verdict"] = true; break;
    case Outcome::kFalse: j["verdict"] = false; break;
    case Outcome::kInconclusive: j["verdict"] = "inconclusive"; break;
  }
  j["witnesses"] = v.witnesses;
  if (v.seed) {
    j["seed"] = *v.seed;
    j["trials"] = v.trials;
  }
  if (!v.ranks.empty()) {
    nlohmann::json ranks = nlohmann::json::array();
    for (const RankRecord& r : v.ranks) {
      if (full_ranks) {
        ranks.push_back(RankRecordToJson(r));
      } else {
        static const char* kKinds[] = {"rigidity", "stress", "joint"};
        ranks.push_back({{"kind", kKinds[static_cast<int>(r.kind)]},
                         {"vertices", r.framework.graph.num_vertices()},
                         {"edges", r.framework.graph.num_edges()},
                         {"rank", r.rank}});
      }
    }
    j["ranks"] = ranks;
  }
  return j;
}

nlohmann::json ComplexToJson(const SimplicialMulticomplex& s) {
  nlohmann::json facets = nlohmann::json::array();
  for (const Simplex& f : s.Expanded()) {
    facets.push_back(std::vector<VertexId>(f.begin(), f.end()));
  }
  return facets;
}

nlohmann::json GraphToJson(const Graph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : g.Edges()) edges.push_back({a, b});
  return {{"vertices", g.Vertices()}, {"edges", edges}};
}

nlohmann::json BlockTreeToJson(const BlockTree& tree) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [b, s] : tree.edges) edges.push_back({{"block", b}, {"separator", s}});
  return {{"t", tree.t},
          {"blocks", tree.blocks},
          {"separators", tree.separators},
          {"tree_edges", edges}};
}

nlohmann::json VerticesToJson(const std::vector<VertexId>& vertices) {
  return nlohmann::json(vertices);
}

}  // namespace rigicheck
