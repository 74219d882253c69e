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

// Vertex connectivity by unit vertex-capacity max-flow.
//
// A graph is t-connected when it has at least t+1 vertices and deleting any
// t-1 vertices leaves it connected.

#ifndef RIGICHECK_CONNECTIVITY_H_
#define RIGICHECK_CONNECTIVITY_H_

#include <optional>
#include <vector>

#include "rigicheck/graph.h"

namespace rigicheck {

struct ConnectivityResult {
  bool at_least = false;
  // On failure: a minimum vertex separator (size < t), or nullopt when the
  // only obstruction is having at most t vertices.
  std::optional<std::vector<VertexId>> separator;
};

// Throws InvalidInput for t < 1.
ConnectivityResult VertexConnectivityAtLeast(const Graph& g, int t);

// Exact vertex connectivity; a complete graph on n vertices has n - 1.
int VertexConnectivity(const Graph& g);

// Minimum a-b vertex separator size for non-adjacent a, b, capped at `cap`.
// When the value is below `cap`, `separator` receives a minimum separator.
int LocalVertexConnectivity(const Graph& g, VertexId a, VertexId b, int cap,
                            std::vector<VertexId>* separator = nullptr);

// True when removing `x` disconnects g.
bool IsSeparator(const Graph& g, const std::vector<VertexId>& x);

}  // namespace rigicheck

#endif  // RIGICHECK_CONNECTIVITY_H_
