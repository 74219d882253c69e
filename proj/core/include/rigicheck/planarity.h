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

#ifndef RIGICHECK_PLANARITY_H_
#define RIGICHECK_PLANARITY_H_

#include <vector>

#include "rigicheck/graph.h"

namespace rigicheck {

struct PlanarityResult {
  bool planar = false;
  // Boundary walks of the faces of one combinatorial embedding, each starting
  // at its smallest vertex. Filled only when planar.
  std::vector<std::vector<VertexId>> faces;
  // Edges of a Kuratowski subgraph. Filled only when not planar.
  std::vector<Edge> kuratowski_edges;
};

PlanarityResult TestPlanarity(const Graph& g);
bool IsPlanar(const Graph& g);

// Planar, either K3 or 3-connected, and |E| = 3|V| - 6.
bool IsPlaneTriangulation(const Graph& g);

// Faces of a plane triangulation as vertex triples (unique embedding).
// Throws InvalidInput when g is not a plane triangulation.
SimplicialMulticomplex TriangulationFaces(const Graph& g);

}  // namespace rigicheck

#endif  // RIGICHECK_PLANARITY_H_
