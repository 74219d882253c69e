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

#ifndef RIGICHECK_GRAPH_H_
#define RIGICHECK_GRAPH_H_

#include <cstddef>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "rigicheck/simplicial.h"

namespace rigicheck {

// Unordered pair stored with first < second.
using Edge = std::pair<VertexId, VertexId>;

inline Edge MakeEdge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

// Simple undirected graph on integer labels.
class Graph {
 public:
  Graph() = default;

  void AddVertex(VertexId v);
  // Adds both endpoints if needed. Throws InvalidInput on a loop; a repeated
  // edge is ignored.
  void AddEdge(VertexId a, VertexId b);
  void RemoveEdge(VertexId a, VertexId b);
  void RemoveVertex(VertexId v);

  bool HasVertex(VertexId v) const { return adjacency_.count(v) != 0; }
  bool HasEdge(VertexId a, VertexId b) const;

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const { return num_edges_; }

  std::vector<VertexId> Vertices() const;
  std::vector<Edge> Edges() const;
  // Throws InvalidInput for an unknown vertex.
  const std::set<VertexId>& Neighbors(VertexId v) const;
  std::size_t Degree(VertexId v) const { return Neighbors(v).size(); }

  Graph InducedSubgraph(const std::vector<VertexId>& keep) const;
  bool IsComplete() const;
  bool IsClique(const std::vector<VertexId>& vertices) const;

  bool operator==(const Graph&) const = default;

 private:
  std::map<VertexId, std::set<VertexId>> adjacency_;
  std::size_t num_edges_ = 0;
};

Graph CompleteGraph(const std::vector<VertexId>& vertices);
Graph CompleteBipartiteGraph(int a, int b);
Graph CycleGraph(int n);

// Skeleton graph of a multicomplex.
Graph GraphOf(const SimplicialMulticomplex& s);

// Contracts v onto u without creating parallel edges. Throws InvalidInput
// when u == v or either is missing.
Graph ContractEdge(const Graph& g, VertexId u, VertexId v);

// Union of vertex and edge sets.
Graph GraphUnion(const Graph& a, const Graph& b);

std::vector<VertexId> CommonNeighbors(const Graph& g, VertexId u, VertexId v);

// Vertex sets of the connected components of g - removed, each sorted.
std::vector<std::vector<VertexId>> ComponentsWithout(
    const Graph& g, const std::vector<VertexId>& removed);

bool IsConnected(const Graph& g);

// All vertex subsets of the given size that induce complete subgraphs,
// returned as sorted vectors in lexicographic order.
std::vector<std::vector<VertexId>> Cliques(const Graph& g, int size);

}  // namespace rigicheck

#endif  // RIGICHECK_GRAPH_H_
