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

#include "rigicheck/simplicial.h"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "rigicheck/error.h"
#include "rigicheck/gf2.h"

namespace rigicheck {

namespace {

// Column vectors of the boundary map restricted to `elements`, indexed by the
// codimension-one faces they touch.
std::vector<BitVector> BoundaryColumns(const std::vector<Simplex>& elements) {
  std::map<Simplex, std::size_t> face_index;
  for (const Simplex& s : elements) {
    for (Simplex& f : s.Codim1Faces()) face_index.emplace(std::move(f), 0);
  }
  std::size_t next = 0;
  for (auto& [face, index] : face_index) index = next++;
  std::vector<BitVector> columns;
  columns.reserve(elements.size());
  for (const Simplex& s : elements) {
    BitVector col(face_index.size());
    for (const Simplex& f : s.Codim1Faces()) col.set(face_index.at(f));
    columns.push_back(std::move(col));
  }
  return columns;
}

bool ColumnsSumToZero(const std::vector<BitVector>& columns) {
  if (columns.empty()) return true;
  BitVector sum(columns.front().size());
  for (const BitVector& c : columns) sum ^= c;
  return !sum.any();
}

}  // namespace

Simplex::Simplex(std::vector<VertexId> vertices) : vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
    throw InvalidInput("simplex has a repeated vertex");
  }
  if (!vertices_.empty() && vertices_.front() < 0) {
    throw InvalidInput("vertex labels must be nonnegative");
  }
}

bool Simplex::Contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Simplex::Contains(const Simplex& face) const {
  return std::includes(vertices_.begin(), vertices_.end(), face.vertices_.begin(),
                       face.vertices_.end());
}

Simplex Simplex::Without(VertexId v) const {
  Simplex out;
  out.vertices_.reserve(vertices_.size());
  for (VertexId w : vertices_) {
    if (w != v) out.vertices_.push_back(w);
  }
  return out;
}

Simplex Simplex::With(VertexId v) const {
  if (Contains(v)) return *this;
  Simplex out = *this;
  out.vertices_.insert(std::upper_bound(out.vertices_.begin(), out.vertices_.end(), v), v);
  return out;
}

std::vector<Simplex> Simplex::Codim1Faces() const {
  std::vector<Simplex> faces;
  faces.reserve(vertices_.size());
  for (VertexId v : vertices_) faces.push_back(Without(v));
  return faces;
}

SimplicialMulticomplex::SimplicialMulticomplex(int dim) : dim_(dim) {
  if (dim < -1) throw InvalidInput("dimension must be at least -1");
}

void SimplicialMulticomplex::Add(const Simplex& facet, int count) {
  if (facet.dimension() != dim_) {
    throw InvalidInput("facet of dimension " + std::to_string(facet.dimension()) +
                       " added to a " + std::to_string(dim_) + "-multicomplex");
  }
  if (count <= 0) return;
  facets_[facet] += count;
  size_ += static_cast<std::size_t>(count);
}

void SimplicialMulticomplex::Remove(const Simplex& facet) {
  auto it = facets_.find(facet);
  if (it == facets_.end()) throw InvalidInput("facet not present");
  if (--it->second == 0) facets_.erase(it);
  --size_;
}

int SimplicialMulticomplex::Multiplicity(const Simplex& facet) const {
  auto it = facets_.find(facet);
  return it == facets_.end() ? 0 : it->second;
}

std::vector<Simplex> SimplicialMulticomplex::Expanded() const {
  std::vector<Simplex> out;
  out.reserve(size_);
  for (const auto& [facet, mult] : facets_) {
    for (int i = 0; i < mult; ++i) out.push_back(facet);
  }
  return out;
}

std::vector<VertexId> SimplicialMulticomplex::Vertices() const {
  std::set<VertexId> vs;
  for (const auto& [facet, mult] : facets_) vs.insert(facet.begin(), facet.end());
  return {vs.begin(), vs.end()};
}

SimplicialMulticomplex MakeComplex(
    int k, const std::vector<std::vector<VertexId>>& facets) {
  if (k < 0) throw InvalidInput("dimension must be nonnegative");
  SimplicialMulticomplex s(k);
  for (const auto& f : facets) {
    if (static_cast<int>(f.size()) != k + 1) {
      throw InvalidInput("wrong-arity facet: expected " + std::to_string(k + 1) +
                         " vertices, got " + std::to_string(f.size()));
    }
    s.Add(Simplex(f));
  }
  return s;
}

SimplicialMulticomplex Boundary(const SimplicialMulticomplex& s) {
  std::map<Simplex, int> parity;
  for (const auto& [facet, mult] : s.facets()) {
    if (mult % 2 == 0) continue;
    for (Simplex& f : facet.Codim1Faces()) parity[std::move(f)] ^= 1;
  }
  SimplicialMulticomplex out(s.dim() - 1 < -1 ? -1 : s.dim() - 1);
  for (const auto& [face, odd] : parity) {
    if (odd) out.Add(face);
  }
  return out;
}

SimplicialMulticomplex Star(const SimplicialMulticomplex& s, const Simplex& face) {
  SimplicialMulticomplex out(s.dim());
  for (const auto& [facet, mult] : s.facets()) {
    if (facet.Contains(face)) out.Add(facet, mult);
  }
  return out;
}

SimplicialMulticomplex Link(const SimplicialMulticomplex& s, const Simplex& face) {
  const int link_dim = s.dim() - static_cast<int>(face.size());
  SimplicialMulticomplex out(std::max(link_dim, -1));
  if (face.empty() || link_dim < 0) return out;
  for (const auto& [facet, mult] : s.facets()) {
    if (!facet.Contains(face)) continue;
    std::vector<VertexId> rest;
    std::set_difference(facet.begin(), facet.end(), face.begin(), face.end(),
                        std::back_inserter(rest));
    out.Add(Simplex(std::move(rest)), mult);
  }
  return out;
}

SimplicialMulticomplex SymmetricDifference(const SimplicialMulticomplex& s,
                                           const SimplicialMulticomplex& t) {
  if (s.dim() != t.dim()) throw InvalidInput("symmetric difference of different dimensions");
  std::map<Simplex, int> parity;
  for (const auto& [facet, mult] : s.facets()) parity[facet] ^= (mult & 1);
  for (const auto& [facet, mult] : t.facets()) parity[facet] ^= (mult & 1);
  SimplicialMulticomplex out(s.dim());
  for (const auto& [facet, odd] : parity) {
    if (odd) out.Add(facet);
  }
  return out;
}

SimplicialMulticomplex Union(const SimplicialMulticomplex& s,
                             const SimplicialMulticomplex& t) {
  if (s.dim() != t.dim()) throw InvalidInput("union of different dimensions");
  SimplicialMulticomplex out = s;
  for (const auto& [facet, mult] : t.facets()) out.Add(facet, mult);
  return out;
}

bool IsCycle(const SimplicialMulticomplex& s) { return Boundary(s).empty(); }

bool IsTrivialCircuit(const SimplicialMulticomplex& s) {
  return s.size() == 2 && s.distinct_size() == 1;
}

bool IsCircuit(const SimplicialMulticomplex& s) {
  if (s.empty() || !IsCycle(s)) return false;
  if (!s.IsComplex()) return IsTrivialCircuit(s);
  std::vector<BitVector> columns = BoundaryColumns(s.Expanded());
  return Gf2Rank(columns) + 1 == columns.size();
}

bool IsNontrivialCircuit(const SimplicialMulticomplex& s) {
  return !IsTrivialCircuit(s) && IsCircuit(s);
}

std::vector<std::vector<std::size_t>> PartitionIndicesIntoCircuits(
    int k, const std::vector<Simplex>& elements) {
  for (const Simplex& e : elements) {
    if (e.dimension() != k) throw InvalidInput("element of wrong dimension");
  }
  std::vector<BitVector> columns = BoundaryColumns(elements);
  if (!ColumnsSumToZero(columns)) throw InvalidInput("not a cycle");

  std::vector<std::size_t> order(elements.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return elements[a] < elements[b];
  });

  std::vector<bool> used(elements.size(), false);
  std::vector<std::vector<std::size_t>> parts;
  const std::size_t dimension = columns.empty() ? 0 : columns.front().size();
  for (std::size_t seed : order) {
    if (used[seed]) continue;
    Gf2Basis basis(dimension, elements.size());
    for (std::size_t i : order) {
      if (i == seed || used[i]) continue;
      basis.Insert(i, columns[i]);
    }
    auto combo = basis.Represent(columns[seed]);
    if (!combo) throw InternalError("remaining elements do not span the seed");
    std::vector<std::size_t> part = *combo;
    part.push_back(seed);
    std::sort(part.begin(), part.end());
    for (std::size_t i : part) used[i] = true;
    parts.push_back(std::move(part));
  }
  return parts;
}

SimplicialMulticomplex ExtractCircuit(const SimplicialMulticomplex& s,
                                      const Simplex& seed) {
  if (!s.Contains(seed)) throw InvalidInput("seed is not a facet of the complex");
  if (!IsCycle(s)) throw InvalidInput("not a cycle");
  std::vector<Simplex> elements = s.Expanded();
  std::size_t seed_index =
      std::lower_bound(elements.begin(), elements.end(), seed) - elements.begin();
  std::vector<BitVector> columns = BoundaryColumns(elements);
  Gf2Basis basis(columns.front().size(), elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (i != seed_index) basis.Insert(i, columns[i]);
  }
  auto combo = basis.Represent(columns[seed_index]);
  if (!combo) throw InternalError("cycle does not span its own seed");
  SimplicialMulticomplex circuit(s.dim());
  circuit.Add(seed);
  for (std::size_t i : *combo) circuit.Add(elements[i]);
  return circuit;
}

std::vector<SimplicialMulticomplex> PartitionIntoCircuits(
    const SimplicialMulticomplex& s) {
  if (s.empty()) throw InvalidInput("cannot partition an empty cycle");
  std::vector<Simplex> elements = s.Expanded();
  std::vector<SimplicialMulticomplex> out;
  for (const auto& part : PartitionIndicesIntoCircuits(s.dim(), elements)) {
    SimplicialMulticomplex c(s.dim());
    for (std::size_t i : part) c.Add(elements[i]);
    out.push_back(std::move(c));
  }
  return out;
}

Simplex ContractSimplex(const Simplex& s, VertexId u, VertexId v) {
  if (!s.Contains(v)) return s;
  return s.Without(v).With(u);
}

ContractionMap Contract(const SimplicialMulticomplex& s, VertexId u, VertexId v) {
  if (u == v) throw InvalidInput("contraction requires distinct vertices");
  const std::vector<VertexId> vs = s.Vertices();
  if (!std::binary_search(vs.begin(), vs.end(), u) ||
      !std::binary_search(vs.begin(), vs.end(), v)) {
    throw InvalidInput("contracted vertex is not in the complex");
  }
  ContractionMap map{s, u, v, SimplicialMulticomplex(s.dim()), {}};
  for (const Simplex& facet : s.Expanded()) {
    if (facet.Contains(u) && facet.Contains(v)) continue;
    Simplex image = ContractSimplex(facet, u, v);
    map.image.Add(image);
    map.gamma.emplace_back(facet, std::move(image));
  }
  return map;
}

bool IsStronglyConnected(const SimplicialMulticomplex& s) {
  if (s.dim() < 1) throw InvalidInput("strong connectivity needs k >= 1");
  const std::vector<Simplex> facets = s.Expanded();
  if (facets.empty()) return true;
  // Facets sharing a (k-1)-face are adjacent; union them through the face.
  std::map<Simplex, std::size_t> first_owner;
  std::vector<std::size_t> parent(facets.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (Simplex& f : facets[i].Codim1Faces()) {
      auto [it, inserted] = first_owner.emplace(std::move(f), i);
      if (!inserted) parent[find(i)] = find(it->second);
    }
  }
  const std::size_t root = find(0);
  for (std::size_t i = 1; i < facets.size(); ++i) {
    if (find(i) != root) return false;
  }
  return true;
}

bool IsPseudomanifold(const SimplicialMulticomplex& s) {
  if (!s.IsComplex()) throw InvalidInput("pseudomanifold test needs a complex without repeats");
  if (s.dim() < 1) throw InvalidInput("pseudomanifold test needs k >= 1");
  if (s.empty()) return false;
  std::map<Simplex, int> face_count;
  for (const auto& [facet, mult] : s.facets()) {
    for (Simplex& f : facet.Codim1Faces()) ++face_count[std::move(f)];
  }
  for (const auto& [face, count] : face_count) {
    if (count != 2) return false;
  }
  return IsStronglyConnected(s);
}

SimplicialMulticomplex CanonicalK(int k, const std::vector<VertexId>& vertices) {
  if (k < 0 || static_cast<int>(vertices.size()) != k + 2) {
    throw InvalidInput("K_k needs exactly k+2 vertices");
  }
  Simplex all(vertices);
  SimplicialMulticomplex out(k);
  for (VertexId v : all) out.Add(all.Without(v));
  return out;
}

SimplicialMulticomplex CanonicalL(int k, const std::vector<VertexId>& vertices) {
  if (k < 0 || static_cast<int>(vertices.size()) != k + 3) {
    throw InvalidInput("L_k needs exactly k+3 vertices");
  }
  static_cast<void>(Simplex(vertices));  // validates distinctness
  std::vector<VertexId> shared(vertices.begin(), vertices.begin() + k + 1);
  SimplicialMulticomplex out(k);
  for (std::size_t extra = k + 1; extra < vertices.size(); ++extra) {
    std::vector<VertexId> block = shared;
    block.push_back(vertices[extra]);
    out = SymmetricDifference(out, CanonicalK(k, block));
  }
  return out;
}

SimplicialMulticomplex InducedSubcomplex(const SimplicialMulticomplex& s,
                                         const std::vector<VertexId>& keep) {
  std::vector<VertexId> sorted = keep;
  std::sort(sorted.begin(), sorted.end());
  SimplicialMulticomplex out(s.dim());
  for (const auto& [facet, mult] : s.facets()) {
    if (std::includes(sorted.begin(), sorted.end(), facet.begin(), facet.end())) {
      out.Add(facet, mult);
    }
  }
  return out;
}

}  // namespace rigicheck
