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

#include "rigicheck/connectivity.h"

#include <algorithm>
#include <map>

#include "rigicheck/error.h"
#include "rigicheck/max_flow.h"

namespace rigicheck {

int LocalVertexConnectivity(const Graph& g, VertexId a, VertexId b, int cap,
                            std::vector<VertexId>* separator) {
  if (a == b || g.HasEdge(a, b)) {
    throw InvalidInput("local connectivity needs distinct non-adjacent vertices");
  }
  const std::vector<VertexId> vertices = g.Vertices();
  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) index[vertices[i]] = i;
  // Vertex i splits into in-node 2i and out-node 2i+1.
  MaxFlow network(2 * static_cast<int>(vertices.size()));
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    const bool terminal = vertices[i] == a || vertices[i] == b;
    network.AddArc(2 * i, 2 * i + 1, terminal ? MaxFlow::kInfinity : 1);
  }
  for (const auto& [x, y] : g.Edges()) {
    network.AddArc(2 * index[x] + 1, 2 * index[y], MaxFlow::kInfinity);
    network.AddArc(2 * index[y] + 1, 2 * index[x], MaxFlow::kInfinity);
  }
  const int source = 2 * index[a] + 1;
  const int sink = 2 * index[b];
  const int value = static_cast<int>(network.Run(source, sink, cap));
  if (value < cap && separator != nullptr) {
    const std::vector<bool> side = network.SourceSide(source);
    separator->clear();
    for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
      if (side[2 * i] && !side[2 * i + 1]) separator->push_back(vertices[i]);
    }
  }
  return value;
}

ConnectivityResult VertexConnectivityAtLeast(const Graph& g, int t) {
  if (t < 1) throw InvalidInput("connectivity threshold must be positive");
  ConnectivityResult result;
  const std::vector<std::vector<VertexId>> components = ComponentsWithout(g, {});
  if (components.size() > 1) {
    result.separator = std::vector<VertexId>{};
    return result;
  }
  const std::vector<VertexId> vertices = g.Vertices();
  std::optional<std::vector<VertexId>> best;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < vertices.size(); ++j) {
      if (g.HasEdge(vertices[i], vertices[j])) continue;
      const int cap = best ? static_cast<int>(best->size()) : t;
      std::vector<VertexId> cut;
      if (LocalVertexConnectivity(g, vertices[i], vertices[j], cap, &cut) < cap) {
        best = std::move(cut);
      }
    }
  }
  if (best) {
    result.separator = std::move(best);
    return result;
  }
  result.at_least = static_cast<int>(vertices.size()) >= t + 1;
  return result;
}

int VertexConnectivity(const Graph& g) {
  const int n = static_cast<int>(g.num_vertices());
  if (n == 0) return 0;
  ConnectivityResult r = VertexConnectivityAtLeast(g, n);
  if (r.separator) return static_cast<int>(r.separator->size());
  return n - 1;
}

bool IsSeparator(const Graph& g, const std::vector<VertexId>& x) {
  return ComponentsWithout(g, x).size() > 1;
}

}  // namespace rigicheck
