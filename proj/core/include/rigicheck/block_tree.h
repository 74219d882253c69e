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

// t-cleavage property, (t+1)-block trees and stacked-sphere recognition.
//
// A graph has the t-cleavage property when it is t-connected and every
// t-vertex separator induces a clique. A (t+1)-block is a maximal
// (t+1)-connected subgraph or a K_{t+1} not contained in one; blocks and
// separators form a bipartite tree where a block meets a separator iff it
// contains it.

#ifndef RIGICHECK_BLOCK_TREE_H_
#define RIGICHECK_BLOCK_TREE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rigicheck/graph.h"
#include "rigicheck/simplicial.h"

namespace rigicheck {

struct BlockTree {
  int t = 0;
  // Sorted vertex sets, listed in lexicographic order.
  std::vector<std::vector<VertexId>> blocks;
  std::vector<std::vector<VertexId>> separators;
  // (block index, separator index) incidences.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

struct CleavageReport {
  bool holds = false;
  std::optional<BlockTree> tree;
  // On failure: a separator of size < t, or a t-separator that is not a
  // clique. Absent when g simply has too few vertices.
  std::optional<std::vector<VertexId>> witness;
  std::string reason;
};

CleavageReport CheckCleavageProperty(const Graph& g, int t);
bool HasCleavageProperty(const Graph& g, int t);

// Throws InvalidInput when g is not t-connected or a t-separator is not a
// clique.
BlockTree BuildBlockTree(const Graph& g, int t);

// Induced subgraphs on X plus each component of g - X. Throws InvalidInput
// unless X is a clique whose removal disconnects g.
std::vector<Graph> CleavageGraphs(const Graph& g, const std::vector<VertexId>& x);

// Checks that the incidence structure is a tree.
bool IsTree(const BlockTree& tree);

// Nontrivial circuit whose graph has only K_{k+2} as (k+2)-blocks. For k <= 1
// every nontrivial circuit is stacked.
bool IsStackedSphere(const SimplicialMulticomplex& s);

}  // namespace rigicheck

#endif  // RIGICHECK_BLOCK_TREE_H_
