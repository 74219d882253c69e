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

#include "rigicheck/decision.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "rigicheck/block_tree.h"
#include "rigicheck/connectivity.h"
#include "rigicheck/error.h"
#include "rigicheck/gf2.h"
#include "rigicheck/planarity.h"

namespace rigicheck {
namespace {

using nlohmann::json;

// Routes the rank log of `opts` into the verdict and stamps the seed.
RandomOptions Logged(const RandomOptions& opts, Verdict& v) {
  RandomOptions local = opts;
  local.log = &v.ranks;
  v.seed = opts.seed;
  v.trials = opts.trials;
  return local;
}

json EdgeJson(const Edge& e) { return json::array({e.first, e.second}); }

json EdgesJson(const std::vector<Edge>& edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(EdgeJson(e));
  return out;
}

json FacesJson(const std::vector<std::vector<VertexId>>& faces) {
  json out = json::array();
  for (const auto& f : faces) out.push_back(VerticesToJson(f));
  return out;
}

long long LowerBound(long long n, long long d) { return d * n - d * (d + 1) / 2; }

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t Find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void Join(std::size_t a, std::size_t b) { parent_[Find(a)] = Find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Adds the (k+2)-connectivity and (k = 2) planarity evidence for a graph to
// `w` and returns whether both conditions hold.
bool ConnectedAndNonPlanar(const Graph& g, int k, json& w) {
  const ConnectivityResult conn = VertexConnectivityAtLeast(g, k + 2);
  if (!conn.at_least) {
    w["reason"] = conn.separator ? "separator" : "too few vertices";
    if (conn.separator) w["separator"] = VerticesToJson(*conn.separator);
    return false;
  }
  w["connectivity_at_least"] = k + 2;
  if (k != 2) return true;
  const PlanarityResult planarity = TestPlanarity(g);
  if (planarity.planar) {
    w["reason"] = "planar";
    w["faces"] = FacesJson(planarity.faces);
    return false;
  }
  w["kuratowski_edges"] = EdgesJson(planarity.kuratowski_edges);
  return true;
}

}  // namespace

Verdict CircuitCheck(const SimplicialMulticomplex& s) {
  const bool circuit = IsCircuit(s);
  Verdict v = MakeVerdict(Claim::kCircuit, circuit);
  json& w = v.witnesses;
  w["dim"] = s.dim();
  w["facets"] = s.size();
  w["vertices"] = s.Vertices().size();
  w["cycle"] = IsCycle(s);
  w["nontrivial"] = IsNontrivialCircuit(s);
  if (s.dim() >= 1 && s.IsComplex()) w["pseudomanifold"] = IsPseudomanifold(s);
  if (!w["cycle"].get<bool>()) w["boundary"] = ComplexToJson(Boundary(s));
  if (!circuit && IsCycle(s) && !s.empty()) {
    const auto parts = PartitionIntoCircuits(s);
    if (parts.size() > 1) w["proper_subcycle"] = ComplexToJson(parts.front());
  }
  return v;
}

Verdict GloballyRigidCircuit(const SimplicialMulticomplex& s, const RandomOptions* cross_check) {
  if (!IsCircuit(s)) throw InvalidInput("input is not a simplicial circuit");
  const int k = s.dim();
  const Graph g = GraphOf(s);
  Verdict v;
  v.claim = Claim::kGloballyRigid;
  json& w = v.witnesses;
  w["dim"] = k + 1;
  w["vertices"] = g.num_vertices();
  w["edges"] = g.num_edges();
  bool value;
  if (g.IsComplete() && (k <= 1 || static_cast<int>(g.num_vertices()) <= k + 2)) {
    value = true;
    w["reason"] = "complete";
  } else if (k <= 1) {
    value = false;
    w["reason"] = "not complete";
  } else {
    value = ConnectedAndNonPlanar(g, k, w);
  }
  v.outcome = value ? Outcome::kTrue : Outcome::kFalse;
  w["method"] = "structural";
  if (cross_check) {
    const RandomOptions opts = Logged(*cross_check, v);
    const bool ght = IsGloballyRigidGHT(g, k + 1, opts);
    w["stress_test"] = ght;
    w["stress_test_agrees"] = ght == value;
  }
  return v;
}

Verdict HendricksonScreen(const Graph& g, int d, const RandomOptions& opts) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  Verdict v;
  v.claim = Claim::kHendricksonScreen;
  json& w = v.witnesses;
  w["dim"] = d;
  const std::size_t n = g.num_vertices();
  if (g.IsComplete() && n <= static_cast<std::size_t>(d) + 1) {
    v.outcome = Outcome::kTrue;
    w["reason"] = "complete on at most d+1 vertices";
    return v;
  }
  const ConnectivityResult conn = VertexConnectivityAtLeast(g, d + 1);
  if (!conn.at_least) {
    v.outcome = Outcome::kFalse;
    w["reason"] = conn.separator ? "separator" : "too few vertices";
    if (conn.separator) w["separator"] = VerticesToJson(*conn.separator);
    return v;
  }
  w["connectivity_at_least"] = d + 1;
  const RandomOptions local = Logged(opts, v);
  if (!IsRigid(g, d, local)) {
    v.outcome = Outcome::kFalse;
    w["reason"] = "not rigid";
    return v;
  }
  for (const auto& [a, b] : g.Edges()) {
    Graph h = g;
    h.RemoveEdge(a, b);
    if (!IsRigid(h, d, local)) {
      v.outcome = Outcome::kFalse;
      w["reason"] = "edge not redundant";
      w["edge"] = EdgeJson({a, b});
      return v;
    }
  }
  v.outcome = Outcome::kTrue;
  w["reason"] = "connected and redundantly rigid";
  return v;
}

Verdict LowerBoundCheck(const SimplicialMulticomplex& s) {
  if (!IsCircuit(s)) throw InvalidInput("input is not a simplicial circuit");
  const int k = s.dim();
  if (k < 2) throw InvalidInput("lower bound check needs k >= 2");
  const Graph g = GraphOf(s);
  const long long n = static_cast<long long>(g.num_vertices());
  const long long edges = static_cast<long long>(g.num_edges());
  const long long bound = LowerBound(n, k + 1);
  if (edges < bound) {
    throw InternalError("circuit graph has " + std::to_string(edges) +
                        " edges, below the bound " + std::to_string(bound));
  }
  Verdict v = MakeVerdict(Claim::kLowerBoundExtremal, edges == bound);
  json& w = v.witnesses;
  w["vertices"] = n;
  w["edges"] = edges;
  w["bound"] = bound;
  if (edges != bound) return v;
  json classes = json::array();
  if (IsStackedSphere(s)) classes.push_back("stacked");
  if (k == 2 && IsPlaneTriangulation(g)) {
    const SimplicialMulticomplex faces = TriangulationFaces(g);
    if (faces != s) throw InternalError("extremal 2-circuit differs from its plane faces");
    classes.push_back("planar");
    w["faces"] = ComplexToJson(faces);
  }
  if (classes.empty()) throw InternalError("extremal circuit is neither stacked nor planar");
  w["classification"] = classes;
  return v;
}

Verdict RedundantEdge(const SimplicialMulticomplex& s, Edge e, const RandomOptions& opts) {
  if (!IsNontrivialCircuit(s)) throw InvalidInput("input is not a nontrivial circuit");
  const int k = s.dim();
  if (k < 2) throw InvalidInput("redundant edge test needs k >= 2");
  const int d = k + 1;
  const Graph g = GraphOf(s);
  e = MakeEdge(e.first, e.second);
  if (!g.HasEdge(e.first, e.second)) throw InvalidInput("edge is not in the circuit graph");
  const BlockTree tree = BuildBlockTree(g, d);
  Verdict v;
  v.claim = Claim::kRedundantEdge;
  json& w = v.witnesses;
  w["edge"] = EdgeJson(e);
  w["dim"] = d;
  w["block_tree"] = BlockTreeToJson(tree);
  bool value = false;
  for (std::size_t i = 0; i < tree.blocks.size() && !value; ++i) {
    const auto& block = tree.blocks[i];
    if (!std::binary_search(block.begin(), block.end(), e.first) ||
        !std::binary_search(block.begin(), block.end(), e.second)) {
      continue;
    }
    if (static_cast<int>(block.size()) <= d + 1) continue;
    if (d == 3 && IsPlanar(g.InducedSubgraph(block))) continue;
    value = true;
    w["block"] = i;
  }
  if (!value) w["reason"] = d == 3 ? "no non-planar 4-block contains the edge"
                                   : "no (d+1)-connected block contains the edge";
  v.outcome = value ? Outcome::kTrue : Outcome::kFalse;
  Graph h = g;
  h.RemoveEdge(e.first, e.second);
  const bool rank_answer = IsRigid(h, d, Logged(opts, v));
  w["rank_test"] = rank_answer;
  w["rank_test_agrees"] = rank_answer == value;
  return v;
}

Verdict StrongCleavage(const Graph& g, int d, const RandomOptions& opts) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  const CleavageReport report = CheckCleavageProperty(g, d);
  if (!report.holds) throw InvalidInput("graph lacks the cleavage property: " + report.reason);
  Verdict v;
  v.claim = Claim::kStrongCleavage;
  const RandomOptions local = Logged(opts, v);
  json& w = v.witnesses;
  w["dim"] = d;
  w["block_tree"] = BlockTreeToJson(*report.tree);
  json blocks = json::array();
  bool all = true;
  for (const auto& block : report.tree->blocks) {
    const Graph h = g.InducedSubgraph(block);
    json entry{{"vertices", VerticesToJson(block)}};
    bool ok;
    if (h.IsComplete()) {
      ok = true;
      entry["reason"] = "complete";
    } else if (d == 3 && IsPlaneTriangulation(h)) {
      ok = true;
      entry["reason"] = "plane triangulation";
    } else {
      ok = IsGloballyRigidGHT(h, d, local);
      entry["reason"] = ok ? "full-rank stress" : "no full-rank stress found";
    }
    entry["ok"] = ok;
    all = all && ok;
    blocks.push_back(std::move(entry));
  }
  w["blocks"] = std::move(blocks);
  v.outcome = all ? Outcome::kTrue : Outcome::kFalse;
  return v;
}

std::vector<std::vector<std::size_t>> MatroidComponents(const SimplicialMulticomplex& s) {
  if (!s.IsComplex()) throw InvalidInput("matroid connectivity needs a complex without repeats");
  const std::vector<Simplex> facets = s.Expanded();
  std::map<Simplex, std::size_t> face_index;
  for (const Simplex& f : facets) {
    for (const Simplex& face : f.Codim1Faces()) face_index.emplace(face, face_index.size());
  }
  Gf2Basis basis(face_index.size(), facets.size());
  DisjointSets sets(facets.size());
  for (std::size_t i = 0; i < facets.size(); ++i) {
    BitVector column(face_index.size());
    for (const Simplex& face : facets[i].Codim1Faces()) column.set(face_index.at(face));
    if (const auto circuit = basis.Insert(i, column)) {
      for (std::size_t j : *circuit) sets.Join(i, j);
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < facets.size(); ++i) groups[sets.Find(i)].push_back(i);
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, members] : groups) out.push_back(std::move(members));
  std::sort(out.begin(), out.end());
  return out;
}

Verdict MConnected(const SimplicialMulticomplex& s) {
  const auto components = MatroidComponents(s);
  Verdict v = MakeVerdict(Claim::kMConnected, components.size() <= 1);
  v.witnesses["facets"] = s.size();
  v.witnesses["components"] = components.size();
  if (components.size() > 1) {
    const std::vector<Simplex> facets = s.Expanded();
    const auto pick = [&](std::size_t c) {
      return VerticesToJson({facets[components[c][0]].begin(), facets[components[c][0]].end()});
    };
    // Two facets in different components lie in no common circuit.
    v.witnesses["separated_facets"] = json::array({pick(0), pick(1)});
  }
  return v;
}

Verdict Algorithm81(const Graph& g, int k, const std::vector<Edge>& braces) {
  Verdict v;
  v.claim = Claim::kGloballyRigid;
  v.outcome = Outcome::kInconclusive;
  json& w = v.witnesses;
  w["k"] = k;
  w["dim"] = k + 1;
  if (k < 2) {
    w["reason"] = "k must be at least 2";
    return v;
  }
  const auto cliques = Cliques(g, k + 1);
  w["cliques"] = cliques.size();
  if (cliques.empty()) {
    w["reason"] = "A_G is empty";
    return v;
  }
  SimplicialMulticomplex a(k);
  for (const auto& c : cliques) a.Add(Simplex(c));
  const std::vector<VertexId> covered = a.Vertices();
  const std::vector<VertexId> all = g.Vertices();
  if (covered != all) {
    std::vector<VertexId> missing;
    std::set_difference(all.begin(), all.end(), covered.begin(), covered.end(),
                        std::back_inserter(missing));
    w["reason"] = "V(A_G) != V(G)";
    w["uncovered"] = VerticesToJson(missing);
    return v;
  }
  const auto components = MatroidComponents(a);
  w["matroid_components"] = components.size();
  if (components.size() > 1) {
    w["reason"] = "A_G is not M-connected";
    return v;
  }
  w["rigid"] = true;
  w["strong_cleavage"] = true;
  Graph h = g;
  for (const auto& [x, y] : braces) {
    if (!g.HasVertex(x) || !g.HasVertex(y)) throw InvalidInput("brace endpoint not in graph");
    h.AddEdge(x, y);
  }
  if (!braces.empty()) w["braces"] = EdgesJson(braces);
  json global;
  bool value;
  if (h.IsComplete()) {
    value = true;
    global["reason"] = "complete";
  } else {
    value = ConnectedAndNonPlanar(h, k, global);
  }
  w["global"] = std::move(global);
  v.outcome = value ? Outcome::kTrue : Outcome::kFalse;
  return v;
}

Verdict StressReconstructCheck(const Framework& p, const Framework& q,
                               const RandomOptions& opts) {
  if (!(p.graph == q.graph) || p.dim != q.dim || p.modulus != q.modulus) {
    throw InvalidInput("frameworks must share graph, dimension and modulus");
  }
  Verdict v;
  v.claim = Claim::kAffineReconstruction;
  json& w = v.witnesses;
  const RandomOptions local = Logged(opts, v);
  const int d = p.dim;
  const PrimeField field(p.modulus);

  const ModMatrix rp = RigidityMatrix(p);
  const ModMatrix rq = RigidityMatrix(q);
  ModMatrix joint(rp.rows(), rp.cols() + rq.cols(), field);
  for (std::size_t r = 0; r < rp.rows(); ++r) {
    for (std::size_t c = 0; c < rp.cols(); ++c) joint.at(r, c) = rp.at(r, c);
    for (std::size_t c = 0; c < rq.cols(); ++c) joint.at(r, rp.cols() + c) = rq.at(r, c);
  }
  const std::size_t rank_p = FrameworkRank(p, local.log);
  const std::size_t rank_q = FrameworkRank(q, local.log);
  const std::size_t rank_joint = joint.Rank();
  v.ranks.push_back(RankRecord{RankRecord::Kind::kJoint, p, q, {}, rank_joint});
  w["rank_p"] = rank_p;
  w["rank_q"] = rank_q;
  w["rank_joint"] = rank_joint;
  if (rank_p != rank_joint || rank_q != rank_joint) {
    v.outcome = Outcome::kFalse;
    w["reason"] = "stress spaces differ";
    return v;
  }
  w["stress_spaces_equal"] = true;

  RandomSource rng(opts.seed);
  const StressCertificate cert = FullRankStressAt(p, rng, opts.trials, local.log);
  w["stress_rank"] = cert.stress_rank;
  w["stress_target"] = cert.target;
  if (!cert.full_rank) {
    v.outcome = Outcome::kInconclusive;
    w["reason"] = "no full-rank stress found";
    return v;
  }
  json stress = json::array();
  for (std::uint64_t x : cert.stress) stress.push_back(x);
  w["stress"] = std::move(stress);

  // Row v of the system is [p(v) 1]; column j of q is solved for separately.
  const std::vector<VertexId> vertices = p.graph.Vertices();
  ModMatrix system(vertices.size(), d + 1, field);
  for (std::size_t r = 0; r < vertices.size(); ++r) {
    const auto& point = p.points.at(vertices[r]);
    for (int c = 0; c < d; ++c) system.at(r, c) = point[c] % p.modulus;
    system.at(r, d) = 1;
  }
  json linear = json::array();
  json translation = json::array();
  for (int j = 0; j < d; ++j) {
    std::vector<std::uint64_t> rhs(vertices.size());
    for (std::size_t r = 0; r < vertices.size(); ++r) {
      rhs[r] = q.points.at(vertices[r])[j] % q.modulus;
    }
    const auto x = system.Solve(rhs);
    if (!x || system.Apply(*x) != rhs) {
      v.outcome = Outcome::kFalse;
      w["reason"] = "no affine map";
      w["coordinate"] = j;
      return v;
    }
    linear.push_back(json(std::vector<std::uint64_t>(x->begin(), x->begin() + d)));
    translation.push_back((*x)[d]);
  }
  w["linear"] = std::move(linear);
  w["translation"] = std::move(translation);
  w["residual_zero"] = true;
  v.outcome = Outcome::kTrue;
  return v;
}

Verdict RigidityVerdict(const Graph& g, int d, const RandomOptions& opts) {
  Verdict v;
  v.claim = Claim::kRigid;
  const std::size_t rank = GenericRank(g, d, Logged(opts, v));
  const std::size_t target = TargetRank(g.num_vertices(), d);
  v.outcome = rank == target ? Outcome::kTrue : Outcome::kFalse;
  v.witnesses = {{"method", "random rank"}, {"dim", d}, {"rank", rank}, {"target", target}};
  return v;
}

Verdict GlobalRigidityVerdict(const Graph& g, int d, const RandomOptions& opts) {
  Verdict v;
  v.claim = Claim::kGloballyRigid;
  const StressCertificate cert = FindFullRankStress(g, d, Logged(opts, v));
  v.outcome = cert.full_rank ? Outcome::kTrue : Outcome::kFalse;
  v.witnesses = {{"method", "random stress"},
                 {"dim", d},
                 {"stress_rank", cert.stress_rank},
                 {"target", cert.target}};
  if (g.num_vertices() <= static_cast<std::size_t>(d) + 1) {
    v.witnesses["method"] = "completeness";
  }
  return v;
}

Verdict CoincidentVerdict(const Graph& g, VertexId u, VertexId v_id, int d,
                          const RandomOptions& opts) {
  Verdict v;
  v.claim = Claim::kCoincidentRigid;
  const bool value = IsUvCoincidentRigid(g, u, v_id, d, Logged(opts, v));
  v.outcome = value ? Outcome::kTrue : Outcome::kFalse;
  v.witnesses = {{"method", "random rank"},
                 {"pair", json::array({u, v_id})},
                 {"dim", d},
                 {"target", TargetRank(g.num_vertices(), d)}};
  return v;
}

bool AuditVerdict(Verdict& v) {
  bool all = true;
  for (const RankRecord& r : v.ranks) all = all && AuditRankRecord(r);
  v.witnesses["audit"] = {{"records", v.ranks.size()}, {"all_match", all}};
  return all;
}

}  // namespace rigicheck
