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

// Named complexes and graphs used as fixtures by the tests, the benchmarks
// and the `examples` export of the command-line tool.

#ifndef RIGICHECK_NAMED_H_
#define RIGICHECK_NAMED_H_

#include <cstdint>
#include <string>
#include <vector>

#include "rigicheck/graph.h"
#include "rigicheck/simplicial.h"

namespace rigicheck {

// Poles 0 and 1, equator cycle 2-3-4-5.
SimplicialMulticomplex Octahedron();
// Apex 0, upper ring 1-5, lower ring 6-10, apex 11.
SimplicialMulticomplex Icosahedron();
// Seven-vertex torus with triangles {i,i+1,i+3} and {i,i+2,i+3} mod 7.
SimplicialMulticomplex SevenVertexTorus();
// Boundary of the cyclic polytope C(n, 4) by Gale evenness.
SimplicialMulticomplex CyclicPolytopeBoundary(int n);
// Triangulated torus on an a-by-b grid (a, b >= 3), vertex i*b + j.
SimplicialMulticomplex GridTorus(int a, int b);

// Start from K_k on 0..k+1 and subdivide random facets until n vertices.
SimplicialMulticomplex StackedSphere(int k, int n, std::uint64_t seed = 1);
// Replaces `facet` by the cone over its boundary from `apex`.
SimplicialMulticomplex SubdivideFacet(const SimplicialMulticomplex& s, const Simplex& facet,
                                      VertexId apex);
// Copy of `piece` glued to `s` along the facet `target`: the facet `along` of
// `piece` is mapped onto `target`, other vertices get fresh labels, and the
// shared facet is removed from both.
SimplicialMulticomplex GlueAlongFacet(const SimplicialMulticomplex& s, const Simplex& target,
                                      const SimplicialMulticomplex& piece, const Simplex& along);

// Two octahedra sharing one triangle, with it removed.
SimplicialMulticomplex TwoOctahedraGlued();
// A chain of `count` octahedra, each glued to the previous along a triangle.
SimplicialMulticomplex OctahedronChain(int count);
// Seven-vertex torus with a stacked cap of `depth` cone vertices on one face.
SimplicialMulticomplex TorusWithStackedAppendage(int depth = 2);
// Seven-vertex torus where edge {0,1} is replaced by a degree-4 vertex 7, so
// {0,1,c,d} is a non-clique 4-separator.
SimplicialMulticomplex TorusWithFlippedEdge();

// Labels of the two-sphere on u=0, v=1, y=2, z=3, a=4, b=5 whose contraction
// along uv gives three doubled triangles.
struct FigureOneLabels {
  static constexpr VertexId u = 0, v = 1, y = 2, z = 3, a = 4, b = 5;
};
SimplicialMulticomplex FigureOneSphere();
// Facets S1..S8 of FigureOneSphere() in order.
std::vector<Simplex> FigureOneFacets();

// A triangulated sphere with two vertices identified: a circuit but not a
// pseudomanifold.
SimplicialMulticomplex PinchedSphere();
// GridTorus(3, 5) with vertex 2 renamed to 0. Contracting edge {0,6} gives a
// doubled triangle and a three-part decomposition.
SimplicialMulticomplex PinchedTorus();

Graph OctahedralGraph();

// Named complex lookup used by the command-line tool; throws InvalidInput
// for an unknown name.
SimplicialMulticomplex NamedComplex(const std::string& name);
std::vector<std::string> NamedComplexNames();

}  // namespace rigicheck

#endif  // RIGICHECK_NAMED_H_
