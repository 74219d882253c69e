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

#include "rigicheck/planarity.h"

#include <algorithm>
#include <map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/graph_traits.hpp>
#include <boost/graph/planar_face_traversal.hpp>
#include <boost/property_map/property_map.hpp>

#include "rigicheck/connectivity.h"
#include "rigicheck/error.h"

namespace rigicheck {
namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;
using Embedding = std::vector<std::vector<BoostEdge>>;

struct FaceCollector : public boost::planar_face_traversal_visitor {
  explicit FaceCollector(const std::vector<VertexId>& labels) : labels(labels) {}
  void begin_face() { current.clear(); }
  template <typename V>
  void next_vertex(V v) {
    current.push_back(labels[v]);
  }
  void end_face() {
    auto smallest = std::min_element(current.begin(), current.end());
    std::rotate(current.begin(), smallest, current.end());
    faces.push_back(current);
  }

  const std::vector<VertexId>& labels;
  std::vector<VertexId> current;
  std::vector<std::vector<VertexId>> faces;
};

}  // namespace

PlanarityResult TestPlanarity(const Graph& g) {
  const std::vector<VertexId> labels = g.Vertices();
  std::map<VertexId, int> index;
  for (int i = 0; i < static_cast<int>(labels.size()); ++i) index[labels[i]] = i;
  BoostGraph bg(labels.size());
  int edge_count = 0;
  for (const auto& [a, b] : g.Edges()) {
    boost::add_edge(index[a], index[b], edge_count++, bg);
  }

  PlanarityResult result;
  Embedding embedding(labels.size());
  std::vector<BoostEdge> kuratowski;
  result.planar = boost::boyer_myrvold_planarity_test(
      boost::boyer_myrvold_params::graph = bg,
      boost::boyer_myrvold_params::embedding =
          boost::make_iterator_property_map(embedding.begin(),
                                            boost::get(boost::vertex_index, bg)),
      boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));

  if (!result.planar) {
    for (const BoostEdge& e : kuratowski) {
      result.kuratowski_edges.push_back(
          MakeEdge(labels[boost::source(e, bg)], labels[boost::target(e, bg)]));
    }
    std::sort(result.kuratowski_edges.begin(), result.kuratowski_edges.end());
    return result;
  }
  if (edge_count > 0) {
    FaceCollector collector(labels);
    boost::planar_face_traversal(
        bg,
        boost::make_iterator_property_map(embedding.begin(),
                                          boost::get(boost::vertex_index, bg)),
        collector);
    result.faces = std::move(collector.faces);
    std::sort(result.faces.begin(), result.faces.end());
  }
  return result;
}

bool IsPlanar(const Graph& g) { return TestPlanarity(g).planar; }

bool IsPlaneTriangulation(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3 || g.num_edges() != 3 * n - 6) return false;
  if (n > 3 && !VertexConnectivityAtLeast(g, 3).at_least) return false;
  return IsPlanar(g);
}

SimplicialMulticomplex TriangulationFaces(const Graph& g) {
  if (!IsPlaneTriangulation(g)) throw InvalidInput("graph is not a plane triangulation");
  SimplicialMulticomplex faces(2);
  for (const std::vector<VertexId>& walk : TestPlanarity(g).faces) {
    if (walk.size() != 3) throw InternalError("triangulation face is not a triangle");
    faces.Add(Simplex(walk));
  }
  return faces;
}

}  // namespace rigicheck
