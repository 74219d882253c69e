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

#include "rigicheck/fogelsanger.h"

#include <algorithm>
#include <set>
#include <string>

#include "rigicheck/error.h"
#include "rigicheck/graph.h"
#include "rigicheck/isomorphism.h"

namespace rigicheck {
namespace {

std::set<Simplex> CodimOneFaces(const SimplicialMulticomplex& s) {
  std::set<Simplex> faces;
  for (const auto& [facet, mult] : s.facets()) {
    for (Simplex& f : facet.Codim1Faces()) faces.insert(std::move(f));
  }
  return faces;
}

// K = F + v over faces F in `faces` containing u but not v, kept when
// K - u is also in `faces`.
SimplicialMulticomplex PairCompletions(int k, const std::set<Simplex>& faces, VertexId u,
                                       VertexId v) {
  SimplicialMulticomplex out(k);
  for (const Simplex& f : faces) {
    if (!f.Contains(u) || f.Contains(v)) continue;
    if (faces.count(f.Without(u).With(v))) out.Add(f.With(v));
  }
  return out;
}

std::set<Edge> EdgeSet(const SimplicialMulticomplex& s) {
  const auto edges = GraphOf(s).Edges();
  return {edges.begin(), edges.end()};
}

std::vector<VertexId> SimplexVertices(const Simplex& s) { return {s.begin(), s.end()}; }

// A non-facial (k+1)-clique through uv lying in both complexes.
std::optional<Simplex> CrossingClique(const SimplicialMulticomplex& left,
                                      const SimplicialMulticomplex& right,
                                      const SimplicialMulticomplex& source, const Graph& g,
                                      VertexId u, VertexId v) {
  for (const auto& [k_simplex, mult] : left.facets()) {
    if (!k_simplex.Contains(u) || !k_simplex.Contains(v)) continue;
    if (source.Contains(k_simplex) || !right.Contains(k_simplex)) continue;
    if (g.IsClique(SimplexVertices(k_simplex))) return k_simplex;
  }
  return std::nullopt;
}

}  // namespace

bool IsSubfamily(const SimplicialMulticomplex& s1, const SimplicialMulticomplex& s) {
  if (s1.dim() != s.dim()) return false;
  for (const auto& [facet, mult] : s1.facets()) {
    if (s.Multiplicity(facet) < mult) return false;
  }
  return true;
}

StarCompletionResult StarCompletion(const SimplicialMulticomplex& s, VertexId u, VertexId v) {
  if (u == v) throw InvalidInput("star completion needs distinct vertices");
  if (s.dim() < 1) throw InvalidInput("star completion needs k >= 1");
  if (!s.IsComplex()) throw InvalidInput("star completion needs a complex without repeats");
  const int k = s.dim();
  StarCompletionResult result{PairCompletions(k, CodimOneFaces(s), u, v), SimplicialMulticomplex(k)};
  const auto boundary = Boundary(s).facets();
  std::set<Simplex> boundary_faces;
  for (const auto& [face, mult] : boundary) boundary_faces.insert(face);
  result.star = PairCompletions(k, boundary_faces, u, v);
  return result;
}

Decomposition Decompose(const SimplicialMulticomplex& s, VertexId u, VertexId v) {
  if (!IsNontrivialCircuit(s)) throw InvalidInput("decomposition needs a nontrivial circuit");
  const Graph g = GraphOf(s);
  if (!g.HasVertex(u) || !g.HasVertex(v) || !g.HasEdge(u, v)) {
    throw InvalidInput("uv is not an edge of the complex");
  }
  const int k = s.dim();
  const ContractionMap map = Contract(s, u, v);
  std::vector<Simplex> images;
  images.reserve(map.gamma.size());
  for (const auto& [source, image] : map.gamma) images.push_back(image);

  std::vector<FogelsangerPart> parts;
  for (const auto& group : PartitionIndicesIntoCircuits(k, images)) {
    FogelsangerPart part{SimplicialMulticomplex(k), SimplicialMulticomplex(k),
                         SimplicialMulticomplex(k), SimplicialMulticomplex(k)};
    for (std::size_t i : group) part.base.Add(map.gamma[i].first);
    // Completion simplices are taken inside V(base).
    const std::vector<VertexId> base_vertices = part.base.Vertices();
    const std::set<VertexId> allowed(base_vertices.begin(), base_vertices.end());
    const StarCompletionResult completion = StarCompletion(part.base, u, v);
    for (const auto& [candidate, mult] : completion.star.facets()) {
      if (std::all_of(candidate.begin(), candidate.end(),
                      [&](VertexId w) { return allowed.count(w) != 0; })) {
        part.star.Add(candidate);
      }
    }
    part.plus = Union(part.base, part.star);
    part.contracted = Contract(part.plus, u, v).image;
    parts.push_back(std::move(part));
  }

  // Greedy order: append the first remaining part that shares a crossing
  // clique with the symmetric difference of the parts placed so far.
  Decomposition dec{s, u, v, {}};
  std::vector<bool> placed(parts.size(), false);
  SimplicialMulticomplex processed(k);
  for (std::size_t step = 0; step < parts.size(); ++step) {
    std::size_t pick = parts.size();
    for (std::size_t j = 0; j < parts.size() && pick == parts.size(); ++j) {
      if (placed[j]) continue;
      if (step == 0 || CrossingClique(processed, parts[j].plus, s, g, u, v)) pick = j;
    }
    if (pick == parts.size()) throw InternalError("no part extends the decomposition order");
    placed[pick] = true;
    processed = SymmetricDifference(processed, parts[pick].plus);
    dec.parts.push_back(std::move(parts[pick]));
  }
  return dec;
}

Verdict VerifyDecomposition(const Decomposition& dec, int exhaustive_limit) {
  const SimplicialMulticomplex& s = dec.source;
  const int k = s.dim();
  const VertexId u = dec.u;
  const VertexId v = dec.v;
  const Graph g = GraphOf(s);
  const std::size_t m = dec.parts.size();
  nlohmann::json checks = nlohmann::json::object();
  bool all = true;
  auto record = [&](const std::string& name, bool ok, nlohmann::json detail) {
    checks[name] = {{"pass", ok}, {"detail", std::move(detail)}};
    all = all && ok;
  };

  // Structure of each part.
  {
    bool ok = m > 0;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
      const FogelsangerPart& p = dec.parts[i];
      const bool disjoint = std::none_of(p.star.facets().begin(), p.star.facets().end(),
                                         [&](const auto& e) { return p.base.Contains(e.first); });
      const bool star_through_uv =
          std::all_of(p.star.facets().begin(), p.star.facets().end(),
                      [&](const auto& e) { return e.first.Contains(u) && e.first.Contains(v); });
      const bool plus_ok = p.plus == Union(p.base, p.star);
      if (!(disjoint && star_through_uv && plus_ok)) {
        ok = false;
        failures.push_back(i);
      }
    }
    record("part_structure", ok, failures);
  }
  // Each contracted part is a circuit.
  {
    bool ok = true;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& p = dec.parts[i];
      if (!IsCircuit(p.contracted) || !(Contract(p.plus, u, v).image == p.contracted)) {
        ok = false;
        failures.push_back(i);
      }
    }
    record("contracted_parts_are_circuits", ok, failures);
  }
  // Each part is a nontrivial circuit; new simplices are cliques through uv.
  {
    bool ok = true;
    nlohmann::json failures = nlohmann::json::array();
    for (std::size_t i = 0; i < m; ++i) {
      const auto& p = dec.parts[i];
      bool part_ok = IsNontrivialCircuit(p.plus);
      for (const auto& [facet, mult] : p.plus.facets()) {
        if (s.Contains(facet)) continue;
        const bool through = facet.Contains(u) && facet.Contains(v);
        if (!through || !g.IsClique(SimplexVertices(facet))) part_ok = false;
      }
      if (!part_ok) {
        ok = false;
        failures.push_back(i);
      }
    }
    record("parts_are_nontrivial_circuits", ok, failures);
  }
  // Unique membership and the symmetric-difference identity.
  {
    bool unique = true;
    nlohmann::json failures = nlohmann::json::array();
    for (const auto& [facet, mult] : s.facets()) {
      if (facet.Contains(u) && facet.Contains(v)) continue;
      int owners = 0;
      for (const auto& p : dec.parts) owners += p.plus.Multiplicity(facet);
      if (owners != 1) {
        unique = false;
        failures.push_back(std::vector<VertexId>(facet.begin(), facet.end()));
      }
    }
    record("unique_membership", unique, failures);
    SimplicialMulticomplex total(k);
    for (const auto& p : dec.parts) total = SymmetricDifference(total, p.plus);
    record("symmetric_difference_is_source", total == s, nullptr);
  }
  // uv in every part and edge cover.
  {
    bool ok = true;
    std::set<Edge> covered;
    for (const auto& p : dec.parts) {
      const std::set<Edge> edges = EdgeSet(p.plus);
      if (!edges.count(MakeEdge(u, v))) ok = false;
      covered.insert(edges.begin(), edges.end());
    }
    record("uv_in_every_part", ok, nullptr);
    record("edge_cover", covered == EdgeSet(s), nullptr);
  }
  // Crossing cliques for index subsets.
  {
    bool ok = true;
    const bool exhaustive = static_cast<int>(m) <= exhaustive_limit;
    nlohmann::json failures = nlohmann::json::array();
    auto check_subset = [&](const std::vector<bool>& in) {
      SimplicialMulticomplex inside(k);
      for (std::size_t i = 0; i < m; ++i) {
        if (in[i]) inside = SymmetricDifference(inside, dec.parts[i].plus);
      }
      for (std::size_t j = 0; j < m; ++j) {
        if (!in[j] && CrossingClique(inside, dec.parts[j].plus, s, g, u, v)) return true;
      }
      return false;
    };
    if (exhaustive) {
      const std::uint64_t full = (std::uint64_t{1} << m) - 1;
      for (std::uint64_t mask = 1; mask < full; ++mask) {
        std::vector<bool> in(m);
        for (std::size_t i = 0; i < m; ++i) in[i] = (mask >> i) & 1;
        if (!check_subset(in)) {
          ok = false;
          failures.push_back(mask);
          break;
        }
      }
    } else {
      std::vector<bool> in(m, false);
      for (std::size_t i = 0; i + 1 < m; ++i) {
        in[i] = true;
        if (!check_subset(in)) {
          ok = false;
          failures.push_back(i);
          break;
        }
      }
    }
    record("crossing_cliques", ok, {{"exhaustive", exhaustive}, {"failures", failures}});
  }
  // Overlap of each base with the earlier bases.
  {
    bool ok = true;
    nlohmann::json overlaps = nlohmann::json::array();
    std::set<VertexId> seen;
    for (std::size_t i = 0; i < m; ++i) {
      const std::vector<VertexId> verts = dec.parts[i].base.Vertices();
      if (i > 0) {
        const auto shared = std::count_if(verts.begin(), verts.end(),
                                          [&](VertexId w) { return seen.count(w) != 0; });
        overlaps.push_back(shared);
        if (shared < k + 1) ok = false;
      }
      seen.insert(verts.begin(), verts.end());
    }
    record("ordered_overlap", ok, overlaps);
  }

  Verdict verdict = MakeVerdict(Claim::kDecomposition, all);
  verdict.witnesses = {{"edge", {u, v}}, {"parts", m}, {"checks", checks}};
  return verdict;
}

nlohmann::json DecompositionToJson(const Decomposition& dec) {
  nlohmann::json parts = nlohmann::json::array();
  for (const auto& p : dec.parts) {
    parts.push_back({{"base", ComplexToJson(p.base)},
                     {"star", ComplexToJson(p.star)},
                     {"plus", ComplexToJson(p.plus)},
                     {"contracted", ComplexToJson(p.contracted)}});
  }
  return {{"dim", dec.source.dim()}, {"edge", {dec.u, dec.v}}, {"parts", parts}};
}

SurgeryResult BoundarySurgeryK1(const SimplicialMulticomplex& s,
                                const SimplicialMulticomplex& s1) {
  if (!IsCircuit(s)) throw InvalidInput("surgery needs a circuit");
  if (!IsSubfamily(s1, s) || s1.size() >= s.size() || s1.empty()) {
    throw InvalidInput("S1 must be a nonempty proper subfamily of S");
  }
  const int k = s.dim();
  const std::vector<VertexId> x = Boundary(s1).Vertices();
  if (static_cast<int>(x.size()) != k + 1) {
    throw InvalidInput("boundary of S1 must span exactly k+1 vertices");
  }
  const Simplex big_x(x);
  SurgeryResult out{false, s1};
  if (s1.size() == 1 && s1.Contains(big_x)) {
    out.degenerate = true;
    return out;
  }
  if (s1.Contains(big_x)) throw InternalError("X lies in S1 although S is a circuit");
  out.result.Add(big_x);
  if (!IsCircuit(out.result)) throw InternalError("surgery output is not a circuit");
  return out;
}

SimplicialMulticomplex BoundarySurgeryK2(const SimplicialMulticomplex& s,
                                         const SimplicialMulticomplex& s1, VertexId w,
                                         VertexId z, VertexId x, VertexId y) {
  const int k = s.dim();
  if (k < 2) throw InvalidInput("surgery on a k+2 boundary needs k >= 2");
  if (MakeEdge(x, y) == MakeEdge(w, z)) throw InvalidInput("{x,y} must differ from {w,z}");
  if (!IsCircuit(s)) throw InvalidInput("surgery needs a circuit");
  if (!IsSubfamily(s1, s) || s1.size() >= s.size() || s1.empty()) {
    throw InvalidInput("S1 must be a nonempty proper subfamily of S");
  }
  if (s1.Vertices() == s.Vertices()) throw InvalidInput("S1 must miss a vertex of S");
  const SimplicialMulticomplex boundary = Boundary(s1);
  const std::vector<VertexId> x_set = boundary.Vertices();
  if (static_cast<int>(x_set.size()) != k + 2) {
    throw InvalidInput("boundary of S1 must span exactly k+2 vertices");
  }
  if (!AreIsomorphic(boundary, CanonicalL(k - 1, x_set))) {
    throw InvalidInput("boundary of S1 is not a copy of L_{k-1}");
  }
  const Graph boundary_graph = GraphOf(boundary);
  if (!boundary_graph.HasVertex(w) || !boundary_graph.HasVertex(z) || w == z ||
      boundary_graph.HasEdge(w, z)) {
    throw InvalidInput("w and z must be distinct non-adjacent boundary vertices");
  }
  const Simplex big_x(x_set);
  if (!big_x.Contains(x) || !big_x.Contains(y) || x == y) {
    throw InvalidInput("x and y must be distinct vertices of X");
  }
  if (!IsCircuit(Contract(s, x, y).image)) throw InvalidInput("S/xy is not a circuit");
  SimplicialMulticomplex toggles(k);
  toggles.Add(big_x.Without(w));
  toggles.Add(big_x.Without(z));
  SimplicialMulticomplex out = SymmetricDifference(s1, toggles);
  if (!IsCircuit(out)) throw InternalError("surgery output is not a circuit");
  return out;
}

}  // namespace rigicheck
