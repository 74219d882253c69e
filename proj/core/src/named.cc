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

#include "rigicheck/named.h"

#include <algorithm>
#include <functional>
#include <map>

#include "rigicheck/error.h"
#include "rigicheck/field.h"

namespace rigicheck {
namespace {

int Mod(int a, int m) { return ((a % m) + m) % m; }

}  // namespace

SimplicialMulticomplex Octahedron() {
  return MakeComplex(2, {{0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 2, 5},
                         {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 2, 5}});
}

SimplicialMulticomplex Icosahedron() {
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < 5; ++i) {
    const int u0 = 1 + i, u1 = 1 + (i + 1) % 5;
    const int l0 = 6 + i, l1 = 6 + (i + 1) % 5;
    faces.push_back({0, u0, u1});
    faces.push_back({u0, u1, l0});
    faces.push_back({u1, l0, l1});
    faces.push_back({11, l0, l1});
  }
  return MakeComplex(2, faces);
}

SimplicialMulticomplex SevenVertexTorus() {
  std::vector<std::vector<VertexId>> faces;
  for (int i = 0; i < 7; ++i) {
    faces.push_back({i, (i + 1) % 7, (i + 3) % 7});
    faces.push_back({i, (i + 2) % 7, (i + 3) % 7});
  }
  return MakeComplex(2, faces);
}

SimplicialMulticomplex CyclicPolytopeBoundary(int n) {
  if (n < 6) throw InvalidInput("cyclic 4-polytope needs at least 6 vertices");
  SimplicialMulticomplex s(3);
  std::vector<int> pick(4);
  std::function<void(int, int)> choose = [&](int start, int depth) {
    if (depth == 4) {
      // Gale evenness: between any two non-chosen vertices an even number of
      // chosen ones.
      for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
          if (std::count(pick.begin(), pick.end(), a) || std::count(pick.begin(), pick.end(), b)) {
            continue;
          }
          const auto between = std::count_if(pick.begin(), pick.end(),
                                             [&](int x) { return a < x && x < b; });
          if (between % 2 != 0) return;
        }
      }
      s.Add(Simplex(std::vector<VertexId>(pick.begin(), pick.end())));
      return;
    }
    for (int x = start; x < n; ++x) {
      pick[depth] = x;
      choose(x + 1, depth + 1);
    }
  };
  choose(0, 0);
  return s;
}

SimplicialMulticomplex GridTorus(int a, int b) {
  if (a < 3 || b < 3) throw InvalidInput("grid torus needs both sides at least 3");
  std::vector<std::vector<VertexId>> faces;
  auto at = [&](int i, int j) { return Mod(i, a) * b + Mod(j, b); };
  for (int i = 0; i < a; ++i) {
    for (int j = 0; j < b; ++j) {
      faces.push_back({at(i, j), at(i + 1, j), at(i + 1, j + 1)});
      faces.push_back({at(i, j), at(i, j + 1), at(i + 1, j + 1)});
    }
  }
  return MakeComplex(2, faces);
}

SimplicialMulticomplex SubdivideFacet(const SimplicialMulticomplex& s, const Simplex& facet,
                                      VertexId apex) {
  SimplicialMulticomplex out = s;
  out.Remove(facet);
  for (const Simplex& face : facet.Codim1Faces()) out.Add(face.With(apex));
  return out;
}

SimplicialMulticomplex StackedSphere(int k, int n, std::uint64_t seed) {
  if (n < k + 2) throw InvalidInput("stacked sphere needs at least k+2 vertices");
  std::vector<VertexId> base(k + 2);
  for (int i = 0; i < k + 2; ++i) base[i] = i;
  SimplicialMulticomplex s = CanonicalK(k, base);
  RandomSource rng(seed);
  for (VertexId next = k + 2; next < n; ++next) {
    const std::vector<Simplex> facets = s.Expanded();
    s = SubdivideFacet(s, facets[rng.Uniform(facets.size())], next);
  }
  return s;
}

SimplicialMulticomplex GlueAlongFacet(const SimplicialMulticomplex& s, const Simplex& target,
                                      const SimplicialMulticomplex& piece, const Simplex& along) {
  if (!s.Contains(target) || !piece.Contains(along)) {
    throw InvalidInput("gluing facets must belong to their complexes");
  }
  std::map<VertexId, VertexId> relabel;
  for (std::size_t i = 0; i < along.size(); ++i) relabel[along[i]] = target[i];
  const std::vector<VertexId> existing = s.Vertices();
  VertexId fresh = existing.empty() ? 0 : existing.back() + 1;
  for (VertexId w : piece.Vertices()) {
    if (!relabel.count(w)) relabel[w] = fresh++;
  }
  SimplicialMulticomplex moved(piece.dim());
  for (const auto& [facet, mult] : piece.facets()) {
    std::vector<VertexId> image;
    for (VertexId w : facet) image.push_back(relabel.at(w));
    moved.Add(Simplex(image), mult);
  }
  return SymmetricDifference(s, moved);
}

SimplicialMulticomplex TwoOctahedraGlued() { return OctahedronChain(2); }

SimplicialMulticomplex OctahedronChain(int count) {
  if (count < 1) throw InvalidInput("chain needs at least one octahedron");
  SimplicialMulticomplex s = Octahedron();
  Simplex last_face{1, 4, 5};
  for (int i = 1; i < count; ++i) {
    const VertexId before = s.Vertices().back();
    // The copy's vertices 1, 4, 5 become before+1..before+3, spanning a face
    // disjoint from the glued one.
    s = GlueAlongFacet(s, last_face, Octahedron(), Simplex{0, 2, 3});
    last_face = Simplex{before + 1, before + 2, before + 3};
  }
  return s;
}

SimplicialMulticomplex TorusWithStackedAppendage(int depth) {
  SimplicialMulticomplex s = SevenVertexTorus();
  Simplex face{0, 1, 3};
  for (int i = 0; i < depth; ++i) {
    const VertexId apex = 7 + i;
    s = SubdivideFacet(s, face, apex);
    face = Simplex{face[0], face[1], apex};
  }
  return s;
}

SimplicialMulticomplex TorusWithFlippedEdge() {
  SimplicialMulticomplex s = SevenVertexTorus();
  // The two triangles on edge {0,1} have apexes c and d.
  std::vector<VertexId> apexes;
  for (const auto& [facet, mult] : s.facets()) {
    if (facet.Contains(0) && facet.Contains(1)) {
      for (VertexId w : facet) {
        if (w != 0 && w != 1) apexes.push_back(w);
      }
    }
  }
  if (apexes.size() != 2) throw InternalError("torus edge is not in two triangles");
  const VertexId c = apexes[0], d = apexes[1], n = 7;
  s.Remove(Simplex{0, 1, c});
  s.Remove(Simplex{0, 1, d});
  s.Add(Simplex{n, 0, c});
  s.Add(Simplex{n, c, 1});
  s.Add(Simplex{n, 1, d});
  s.Add(Simplex{n, d, 0});
  return s;
}

std::vector<Simplex> FigureOneFacets() {
  using L = FigureOneLabels;
  return {Simplex{L::u, L::z, L::a}, Simplex{L::v, L::z, L::a}, Simplex{L::u, L::y, L::z},
          Simplex{L::v, L::y, L::z}, Simplex{L::u, L::y, L::b}, Simplex{L::v, L::y, L::b},
          Simplex{L::u, L::v, L::b}, Simplex{L::u, L::v, L::a}};
}

SimplicialMulticomplex FigureOneSphere() {
  SimplicialMulticomplex s(2);
  for (const Simplex& f : FigureOneFacets()) s.Add(f);
  return s;
}

SimplicialMulticomplex PinchedSphere() {
  // Octahedron with faces {N,0,1} and {S,1,2} subdivided by a and b, whose
  // only common neighbour is 1; then b is renamed to a.
  const VertexId north = 0, south = 1, e0 = 2, e1 = 3, e2 = 4, a = 6, b = 7;
  SimplicialMulticomplex s = Octahedron();
  s = SubdivideFacet(s, Simplex{north, e0, e1}, a);
  s = SubdivideFacet(s, Simplex{south, e1, e2}, b);
  SimplicialMulticomplex out(2);
  for (const auto& [facet, mult] : s.facets()) {
    out.Add(facet.Contains(b) ? facet.Without(b).With(a) : facet, mult);
  }
  return out;
}

SimplicialMulticomplex PinchedTorus() {
  const SimplicialMulticomplex torus = GridTorus(3, 5);
  const VertexId keep = 0;   // grid (0,0)
  const VertexId merge = 2;  // grid (0,2)
  SimplicialMulticomplex out(2);
  for (const auto& [facet, mult] : torus.facets()) {
    out.Add(facet.Contains(merge) ? facet.Without(merge).With(keep) : facet, mult);
  }
  return out;
}

Graph OctahedralGraph() { return GraphOf(Octahedron()); }

std::vector<std::string> NamedComplexNames() {
  return {"octahedron",        "icosahedron",      "torus7",         "cyclic7",
          "stacked2-6",        "two-octahedra",    "octahedron-chain", "torus-appendage",
          "torus-flipped-edge", "figure-one",      "pinched-sphere", "pinched-torus",
          "k2",                "l2"};
}

SimplicialMulticomplex NamedComplex(const std::string& name) {
  if (name == "octahedron") return Octahedron();
  if (name == "icosahedron") return Icosahedron();
  if (name == "torus7") return SevenVertexTorus();
  if (name == "cyclic7") return CyclicPolytopeBoundary(7);
  if (name == "stacked2-6") return StackedSphere(2, 6);
  if (name == "two-octahedra") return TwoOctahedraGlued();
  if (name == "octahedron-chain") return OctahedronChain(3);
  if (name == "torus-appendage") return TorusWithStackedAppendage();
  if (name == "torus-flipped-edge") return TorusWithFlippedEdge();
  if (name == "figure-one") return FigureOneSphere();
  if (name == "pinched-sphere") return PinchedSphere();
  if (name == "pinched-torus") return PinchedTorus();
  if (name == "k2") return CanonicalK(2, {0, 1, 2, 3});
  if (name == "l2") return CanonicalL(2, {0, 1, 2, 3, 4});
  throw InvalidInput("unknown named complex '" + name + "'");
}

}  // namespace rigicheck
