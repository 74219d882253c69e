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

#include "rigicheck/isomorphism.h"

#include <algorithm>
#include <bit>
#include <map>
#include <optional>

#include "rigicheck/error.h"

namespace rigicheck {

namespace {

struct Hypergraph {
  int n = 0;
  std::vector<std::pair<std::uint64_t, int>> edges;  // facet mask, multiplicity
  std::vector<std::vector<int>> incident;            // vertex -> edge indices
};

// Replaces colours by the rank of (old colour, signature) so the partition
// only gets finer. Returns the number of colours.
int RefineOnce(const Hypergraph& h, std::vector<int>& colour) {
  using Signature = std::pair<int, std::vector<std::pair<int, std::vector<int>>>>;
  std::vector<Signature> sig(h.n);
  for (int v = 0; v < h.n; ++v) {
    sig[v].first = colour[v];
    for (int e : h.incident[v]) {
      std::vector<int> others;
      std::uint64_t mask = h.edges[e].first & ~(std::uint64_t{1} << v);
      while (mask) {
        others.push_back(colour[std::countr_zero(mask)]);
        mask &= mask - 1;
      }
      std::sort(others.begin(), others.end());
      sig[v].second.emplace_back(h.edges[e].second, std::move(others));
    }
    std::sort(sig[v].second.begin(), sig[v].second.end());
  }
  std::vector<int> order(h.n);
  for (int v = 0; v < h.n; ++v) order[v] = v;
  std::sort(order.begin(), order.end(), [&](int a, int b) { return sig[a] < sig[b]; });
  int next = -1;
  for (int i = 0; i < h.n; ++i) {
    if (i == 0 || sig[order[i]] != sig[order[i - 1]]) ++next;
    colour[order[i]] = next;
  }
  return next + 1;
}

int Refine(const Hypergraph& h, std::vector<int>& colour) {
  int count = -1;
  while (true) {
    int updated = RefineOnce(h, colour);
    if (updated == count) return count;
    count = updated;
  }
}

std::vector<std::pair<std::uint64_t, int>> Relabelled(const Hypergraph& h,
                                                      const std::vector<int>& colour) {
  std::vector<std::pair<std::uint64_t, int>> out;
  out.reserve(h.edges.size());
  for (const auto& [mask, mult] : h.edges) {
    std::uint64_t image = 0;
    std::uint64_t m = mask;
    while (m) {
      image |= std::uint64_t{1} << colour[std::countr_zero(m)];
      m &= m - 1;
    }
    out.emplace_back(image, mult);
  }
  std::sort(out.begin(), out.end());
  return out;
}

void Search(const Hypergraph& h, std::vector<int> colour,
            std::optional<std::vector<std::pair<std::uint64_t, int>>>& best,
            std::vector<int>& best_colour) {
  const int cells = Refine(h, colour);
  if (cells == h.n) {
    auto form = Relabelled(h, colour);
    if (!best || form < *best) {
      best = std::move(form);
      best_colour = colour;
    }
    return;
  }
  // First colour class with more than one vertex.
  std::vector<int> size(cells, 0);
  for (int c : colour) ++size[c];
  int target = 0;
  while (size[target] == 1) ++target;
  for (int w = 0; w < h.n; ++w) {
    if (colour[w] != target) continue;
    std::vector<int> split(h.n);
    for (int x = 0; x < h.n; ++x) {
      split[x] = 2 * colour[x] + ((colour[x] == target && x != w) ? 1 : 0);
    }
    Search(h, std::move(split), best, best_colour);
  }
}

struct Labelling {
  std::vector<VertexId> vertices;  // index -> original label
  std::vector<int> colour;         // index -> canonical position
  CanonicalForm form;
};

Labelling Label(const SimplicialMulticomplex& s) {
  Labelling out;
  out.vertices = s.Vertices();
  const int n = static_cast<int>(out.vertices.size());
  if (n > 64) throw BudgetExceeded("canonical form supports at most 64 vertices");
  Hypergraph h;
  h.n = n;
  h.incident.resize(n);
  auto index = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(out.vertices.begin(), out.vertices.end(), v) -
                            out.vertices.begin());
  };
  for (const auto& [facet, mult] : s.facets()) {
    std::uint64_t mask = 0;
    for (VertexId v : facet) mask |= std::uint64_t{1} << index(v);
    const int e = static_cast<int>(h.edges.size());
    h.edges.emplace_back(mask, mult);
    for (VertexId v : facet) h.incident[index(v)].push_back(e);
  }
  std::optional<std::vector<std::pair<std::uint64_t, int>>> best;
  std::vector<int> colour(n, 0);
  Search(h, colour, best, out.colour);
  out.form.dim = s.dim();
  out.form.num_vertices = n;
  out.form.facets = best ? *best : std::vector<std::pair<std::uint64_t, int>>{};
  return out;
}

}  // namespace

CanonicalForm Canonicalize(const SimplicialMulticomplex& s) { return Label(s).form; }

SimplicialMulticomplex CanonicalRelabel(const SimplicialMulticomplex& s) {
  Labelling l = Label(s);
  SimplicialMulticomplex out(s.dim());
  for (const auto& [mask, mult] : l.form.facets) {
    std::vector<VertexId> vs;
    for (int i = 0; i < 64; ++i) {
      if ((mask >> i) & 1u) vs.push_back(i);
    }
    out.Add(Simplex(std::move(vs)), mult);
  }
  return out;
}

bool AreIsomorphic(const SimplicialMulticomplex& a, const SimplicialMulticomplex& b) {
  if (a.dim() != b.dim() || a.size() != b.size() ||
      a.distinct_size() != b.distinct_size()) {
    return false;
  }
  return Canonicalize(a) == Canonicalize(b);
}

}  // namespace rigicheck
