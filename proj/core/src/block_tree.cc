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

#include "rigicheck/block_tree.h"

#include <algorithm>
#include <numeric>
#include <set>

#include "rigicheck/connectivity.h"
#include "rigicheck/error.h"

namespace rigicheck {
namespace {

struct SplitState {
  int t;
  std::set<std::vector<VertexId>> blocks;
  std::set<std::vector<VertexId>> separators;
  std::optional<std::vector<VertexId>> bad_separator;
};

// Splits h on minimum separators until every piece is a block. Returns false
// on the first non-clique t-separator.
bool Split(const Graph& h, SplitState& state) {
  ConnectivityResult r = VertexConnectivityAtLeast(h, state.t + 1);
  if (r.at_least || !r.separator) {
    state.blocks.insert(h.Vertices());
    return true;
  }
  std::vector<VertexId> x = *r.separator;
  if (static_cast<int>(x.size()) != state.t) {
    throw InternalError("cleavage graph lost t-connectivity");
  }
  if (!h.IsClique(x)) {
    state.bad_separator = x;
    return false;
  }
  state.separators.insert(x);
  for (const Graph& piece : CleavageGraphs(h, x)) {
    if (!Split(piece, state)) return false;
  }
  return true;
}

bool Includes(const std::vector<VertexId>& big, const std::vector<VertexId>& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

}  // namespace

std::vector<Graph> CleavageGraphs(const Graph& g, const std::vector<VertexId>& x) {
  if (!g.IsClique(x)) throw InvalidInput("cleavage set is not a clique");
  const auto components = ComponentsWithout(g, x);
  if (components.size() < 2) throw InvalidInput("cleavage set does not separate the graph");
  std::vector<Graph> out;
  for (std::vector<VertexId> part : components) {
    part.insert(part.end(), x.begin(), x.end());
    out.push_back(g.InducedSubgraph(part));
  }
  return out;
}

CleavageReport CheckCleavageProperty(const Graph& g, int t) {
  CleavageReport report;
  ConnectivityResult base = VertexConnectivityAtLeast(g, t);
  if (!base.at_least) {
    report.witness = base.separator;
    report.reason = base.separator ? "separator smaller than t" : "fewer than t+1 vertices";
    return report;
  }
  SplitState state{t, {}, {}, std::nullopt};
  if (!Split(g, state)) {
    report.witness = state.bad_separator;
    report.reason = "t-separator is not a clique";
    return report;
  }
  BlockTree tree;
  tree.t = t;
  tree.blocks.assign(state.blocks.begin(), state.blocks.end());
  tree.separators.assign(state.separators.begin(), state.separators.end());
  for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
    for (std::size_t s = 0; s < tree.separators.size(); ++s) {
      if (Includes(tree.blocks[b], tree.separators[s])) tree.edges.emplace_back(b, s);
    }
  }
  report.holds = true;
  report.tree = std::move(tree);
  return report;
}

bool HasCleavageProperty(const Graph& g, int t) { return CheckCleavageProperty(g, t).holds; }

BlockTree BuildBlockTree(const Graph& g, int t) {
  CleavageReport report = CheckCleavageProperty(g, t);
  if (!report.holds) throw InvalidInput("block tree undefined: " + report.reason);
  return std::move(*report.tree);
}

bool IsTree(const BlockTree& tree) {
  const std::size_t nodes = tree.blocks.size() + tree.separators.size();
  if (nodes == 0 || tree.edges.size() + 1 != nodes) return false;
  std::vector<std::size_t> parent(nodes);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [b, s] : tree.edges) {
    std::size_t rb = find(b);
    std::size_t rs = find(tree.blocks.size() + s);
    if (rb == rs) return false;
    parent[rb] = rs;
  }
  return true;
}

bool IsStackedSphere(const SimplicialMulticomplex& s) {
  if (!IsNontrivialCircuit(s)) return false;
  const int k = s.dim();
  if (k <= 1) return true;
  CleavageReport report = CheckCleavageProperty(GraphOf(s), k + 1);
  if (!report.holds) return false;
  for (const auto& block : report.tree->blocks) {
    if (static_cast<int>(block.size()) != k + 2) return false;
  }
  return true;
}

}  // namespace rigicheck
