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

#include "rigicheck/graph.h"

#include <algorithm>
#include <functional>

#include "rigicheck/error.h"

namespace rigicheck {

void Graph::AddVertex(VertexId v) {
  if (v < 0) throw InvalidInput("vertex labels must be nonnegative");
  adjacency_[v];
}

void Graph::AddEdge(VertexId a, VertexId b) {
  if (a == b) throw InvalidInput("loops are not allowed in a simple graph");
  AddVertex(a);
  AddVertex(b);
  if (adjacency_[a].insert(b).second) {
    adjacency_[b].insert(a);
    ++num_edges_;
  }
}

void Graph::RemoveEdge(VertexId a, VertexId b) {
  auto it = adjacency_.find(a);
  if (it == adjacency_.end() || it->second.erase(b) == 0) {
    throw InvalidInput("edge not present");
  }
  adjacency_[b].erase(a);
  --num_edges_;
}

void Graph::RemoveVertex(VertexId v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw InvalidInput("vertex not present");
  for (VertexId w : it->second) adjacency_[w].erase(v);
  num_edges_ -= it->second.size();
  adjacency_.erase(it);
}

bool Graph::HasEdge(VertexId a, VertexId b) const {
  auto it = adjacency_.find(a);
  return it != adjacency_.end() && it->second.count(b) != 0;
}

std::vector<VertexId> Graph::Vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, nbrs] : adjacency_) out.push_back(v);
  return out;
}

std::vector<Edge> Graph::Edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges_);
  for (const auto& [v, nbrs] : adjacency_) {
    for (auto it = nbrs.upper_bound(v); it != nbrs.end(); ++it) out.emplace_back(v, *it);
  }
  return out;
}

const std::set<VertexId>& Graph::Neighbors(VertexId v) const {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) throw InvalidInput("vertex not present");
  return it->second;
}

Graph Graph::InducedSubgraph(const std::vector<VertexId>& keep) const {
  std::set<VertexId> kept(keep.begin(), keep.end());
  Graph out;
  for (VertexId v : kept) {
    if (!HasVertex(v)) throw InvalidInput("vertex not present");
    out.AddVertex(v);
  }
  for (VertexId v : kept) {
    for (VertexId w : Neighbors(v)) {
      if (v < w && kept.count(w)) out.AddEdge(v, w);
    }
  }
  return out;
}

bool Graph::IsComplete() const {
  const std::size_t n = adjacency_.size();
  return num_edges_ == n * (n - 1) / 2;
}

bool Graph::IsClique(const std::vector<VertexId>& vertices) const {
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (!HasEdge(vertices[i], vertices[j])) return false;
    }
  }
  return true;
}

Graph CompleteGraph(const std::vector<VertexId>& vertices) {
  Graph g;
  for (VertexId v : vertices) g.AddVertex(v);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) g.AddEdge(vertices[i], vertices[j]);
  }
  return g;
}

Graph CompleteBipartiteGraph(int a, int b) {
  Graph g;
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) g.AddEdge(i, a + j);
  }
  return g;
}

Graph CycleGraph(int n) {
  Graph g;
  for (int i = 0; i < n; ++i) g.AddEdge(i, (i + 1) % n);
  return g;
}

Graph GraphOf(const SimplicialMulticomplex& s) {
  Graph g;
  for (const auto& [facet, mult] : s.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      g.AddVertex(facet[i]);
      for (std::size_t j = i + 1; j < facet.size(); ++j) g.AddEdge(facet[i], facet[j]);
    }
  }
  return g;
}

Graph ContractEdge(const Graph& g, VertexId u, VertexId v) {
  if (u == v) throw InvalidInput("contraction requires distinct vertices");
  if (!g.HasVertex(u) || !g.HasVertex(v)) throw InvalidInput("vertex not present");
  Graph out = g;
  out.RemoveVertex(v);
  for (VertexId w : g.Neighbors(v)) {
    if (w != u) out.AddEdge(u, w);
  }
  return out;
}

Graph GraphUnion(const Graph& a, const Graph& b) {
  Graph out = a;
  for (VertexId v : b.Vertices()) out.AddVertex(v);
  for (const auto& [x, y] : b.Edges()) out.AddEdge(x, y);
  return out;
}

std::vector<VertexId> CommonNeighbors(const Graph& g, VertexId u, VertexId v) {
  const auto& nu = g.Neighbors(u);
  const auto& nv = g.Neighbors(v);
  std::vector<VertexId> out;
  std::set_intersection(nu.begin(), nu.end(), nv.begin(), nv.end(), std::back_inserter(out));
  return out;
}

std::vector<std::vector<VertexId>> ComponentsWithout(
    const Graph& g, const std::vector<VertexId>& removed) {
  std::set<VertexId> gone(removed.begin(), removed.end());
  std::set<VertexId> seen;
  std::vector<std::vector<VertexId>> components;
  for (VertexId start : g.Vertices()) {
    if (gone.count(start) || seen.count(start)) continue;
    std::vector<VertexId> comp;
    std::vector<VertexId> stack{start};
    seen.insert(start);
    while (!stack.empty()) {
      VertexId x = stack.back();
      stack.pop_back();
      comp.push_back(x);
      for (VertexId y : g.Neighbors(x)) {
        if (!gone.count(y) && seen.insert(y).second) stack.push_back(y);
      }
    }
    std::sort(comp.begin(), comp.end());
    components.push_back(std::move(comp));
  }
  return components;
}

bool IsConnected(const Graph& g) { return ComponentsWithout(g, {}).size() <= 1; }

std::vector<std::vector<VertexId>> Cliques(const Graph& g, int size) {
  std::vector<std::vector<VertexId>> out;
  if (size <= 0) return out;
  std::vector<VertexId> current;
  // Extend with larger labels only, so each clique appears once, in order.
  std::function<void(const std::vector<VertexId>&)> grow =
      [&](const std::vector<VertexId>& candidates) {
        if (static_cast<int>(current.size()) == size) {
          out.push_back(current);
          return;
        }
        for (std::size_t i = 0; i < candidates.size(); ++i) {
          VertexId v = candidates[i];
          std::vector<VertexId> next;
          const auto& nv = g.Neighbors(v);
          for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (nv.count(candidates[j])) next.push_back(candidates[j]);
          }
          if (current.size() + 1 + next.size() < static_cast<std::size_t>(size)) continue;
          current.push_back(v);
          grow(next);
          current.pop_back();
        }
      };
  grow(g.Vertices());
  return out;
}

}  // namespace rigicheck
