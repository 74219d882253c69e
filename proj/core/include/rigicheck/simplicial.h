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

// Simplicial k-multicomplexes over Z/2: faces, boundaries, stars, links,
// symmetric difference, cycle and circuit tests, circuit extraction and
// contraction of a vertex pair.

#ifndef RIGICHECK_SIMPLICIAL_H_
#define RIGICHECK_SIMPLICIAL_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace rigicheck {

using VertexId = std::int32_t;

// A finite vertex set kept in strictly increasing order. The empty simplex is
// the (-1)-face; facets of a complex always have at least one vertex.
class Simplex {
 public:
  Simplex() = default;
  // Sorts the input; throws InvalidInput on repeated or negative labels.
  explicit Simplex(std::vector<VertexId> vertices);
  Simplex(std::initializer_list<VertexId> vertices)
      : Simplex(std::vector<VertexId>(vertices)) {}

  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
  std::span<const VertexId> vertices() const { return vertices_; }
  VertexId operator[](std::size_t i) const { return vertices_[i]; }
  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool Contains(VertexId v) const;
  bool Contains(const Simplex& face) const;
  Simplex Without(VertexId v) const;
  Simplex With(VertexId v) const;
  // All faces obtained by deleting one vertex.
  std::vector<Simplex> Codim1Faces() const;

  auto operator<=>(const Simplex&) const = default;
  bool operator==(const Simplex&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

// Multiset of k-simplices. Multiplicities are positive; an entry that drops
// to zero is erased.
class SimplicialMulticomplex {
 public:
  // `dim` may be -1 for the boundary of a 0-dimensional multicomplex.
  explicit SimplicialMulticomplex(int dim = 0);

  int dim() const { return dim_; }
  // Throws InvalidInput unless the simplex has exactly dim()+1 vertices.
  void Add(const Simplex& facet, int count = 1);
  // Removes one copy; throws InvalidInput if absent.
  void Remove(const Simplex& facet);

  int Multiplicity(const Simplex& facet) const;
  bool Contains(const Simplex& facet) const { return Multiplicity(facet) > 0; }
  // Number of facets counted with multiplicity.
  std::size_t size() const { return size_; }
  std::size_t distinct_size() const { return facets_.size(); }
  bool empty() const { return size_ == 0; }
  // True when no facet is repeated.
  bool IsComplex() const { return size_ == facets_.size(); }

  const std::map<Simplex, int>& facets() const { return facets_; }
  // Facets in canonical order, each repeated by its multiplicity.
  std::vector<Simplex> Expanded() const;
  // Sorted union of facet vertices.
  std::vector<VertexId> Vertices() const;

  bool operator==(const SimplicialMulticomplex&) const = default;

 private:
  int dim_;
  std::size_t size_ = 0;
  std::map<Simplex, int> facets_;
};

// Builds a k-multicomplex; repeated facets accumulate multiplicity. Throws
// InvalidInput on a facet of the wrong arity or with a repeated vertex.
SimplicialMulticomplex MakeComplex(
    int k, const std::vector<std::vector<VertexId>>& facets);

// (k-1)-faces lying in an odd number of facets (counted with multiplicity).
// For k = 0 this is {empty simplex} when |S| is odd and empty otherwise.
SimplicialMulticomplex Boundary(const SimplicialMulticomplex& s);

// Facets containing `face` (with multiplicity).
SimplicialMulticomplex Star(const SimplicialMulticomplex& s, const Simplex& face);

// { U \ F : U in Star(S, F) } as a (k - |F|)-multicomplex. Empty unless
// 1 <= |F| <= k and F is a face of S.
SimplicialMulticomplex Link(const SimplicialMulticomplex& s, const Simplex& face);

// Symmetric difference of the mod-2 reductions: a facet survives when its
// combined multiplicity is odd. Throws InvalidInput on a dimension mismatch.
SimplicialMulticomplex SymmetricDifference(const SimplicialMulticomplex& s,
                                           const SimplicialMulticomplex& t);

// Multiset union (multiplicities add).
SimplicialMulticomplex Union(const SimplicialMulticomplex& s,
                             const SimplicialMulticomplex& t);

bool IsCycle(const SimplicialMulticomplex& s);

// Nonempty cycle with no proper nonempty sub-cycle. Two copies of a single
// simplex form the trivial circuit.
bool IsCircuit(const SimplicialMulticomplex& s);
bool IsTrivialCircuit(const SimplicialMulticomplex& s);
bool IsNontrivialCircuit(const SimplicialMulticomplex& s);

// Fundamental circuit of `seed` against a greedy independent subset of the
// remaining facets, taken in canonical order. Throws InvalidInput when `s` is
// not a cycle or does not contain `seed`.
SimplicialMulticomplex ExtractCircuit(const SimplicialMulticomplex& s,
                                      const Simplex& seed);

// Repeatedly extracts the circuit of the smallest remaining facet. The parts
// are pairwise disjoint as multisets and their union is `s`.
std::vector<SimplicialMulticomplex> PartitionIntoCircuits(
    const SimplicialMulticomplex& s);

// Same partition on an explicit element list (duplicates allowed). Returns
// groups of indices into `elements`; every group is a circuit.
std::vector<std::vector<std::size_t>> PartitionIndicesIntoCircuits(
    int k, const std::vector<Simplex>& elements);

// Image of one simplex under contraction of v onto u (assumes not both in it).
Simplex ContractSimplex(const Simplex& s, VertexId u, VertexId v);

struct ContractionMap {
  SimplicialMulticomplex source;
  VertexId u;
  VertexId v;
  SimplicialMulticomplex image;
  // One (source facet, image facet) pair per facet copy of `source` that does
  // not contain {u, v}, in canonical source order.
  std::vector<std::pair<Simplex, Simplex>> gamma;
};

// Deletes facets containing {u, v} and renames v to u elsewhere. Throws
// InvalidInput when u == v or either vertex is absent.
ContractionMap Contract(const SimplicialMulticomplex& s, VertexId u, VertexId v);

// Facets sharing a (k-1)-face are adjacent; true when that adjacency is
// connected. Requires k >= 1.
bool IsStronglyConnected(const SimplicialMulticomplex& s);
// Strongly connected and every (k-1)-face lies in exactly two facets. Throws
// InvalidInput on a multicomplex with repeated facets or k < 1.
bool IsPseudomanifold(const SimplicialMulticomplex& s);

// All (k+1)-subsets of k+2 vertices.
SimplicialMulticomplex CanonicalK(int k, const std::vector<VertexId>& vertices);
// Two copies of K_k on k+3 vertices sharing one facet, with it removed. The
// shared facet is the first k+1 vertices.
SimplicialMulticomplex CanonicalL(int k, const std::vector<VertexId>& vertices);

// Facets whose vertices all lie in `keep`.
SimplicialMulticomplex InducedSubcomplex(const SimplicialMulticomplex& s,
                                         const std::vector<VertexId>& keep);

}  // namespace rigicheck

#endif  // RIGICHECK_SIMPLICIAL_H_
