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

#include "rigicheck/oracle.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "rigicheck/block_tree.h"
#include "rigicheck/decision.h"
#include "rigicheck/error.h"
#include "rigicheck/gf2.h"
#include "rigicheck/io.h"
#include "rigicheck/isomorphism.h"

namespace rigicheck {
namespace {

using Mask = std::uint64_t;

// All size-element subsets of {0..n-1}, n < 64, in increasing order.
std::vector<Mask> SubsetMasks(int n, int size) {
  std::vector<Mask> out;
  if (size < 0 || size > n) return out;
  if (size == 0) return {0};
  const Mask limit = Mask{1} << n;
  for (Mask m = (Mask{1} << size) - 1; m < limit;) {
    out.push_back(m);
    // Gosper's hack: next mask with the same popcount.
    const Mask c = m & -m;
    const Mask r = m + c;
    m = (((r ^ m) >> 2) / c) | r;
  }
  return out;
}

// XOR basis keyed by the highest set bit, with the facet combination of each
// stored row.
class XorBasis {
 public:
  // Returns true when `vec` was independent and has been added.
  bool Insert(Mask vec, Mask combo, Mask* dependency) {
    while (vec != 0) {
      const int top = 63 - std::countl_zero(vec);
      if (rows_[top] == 0) {
        rows_[top] = vec;
        combos_[top] = combo;
        return true;
      }
      vec ^= rows_[top];
      combo ^= combos_[top];
    }
    if (dependency) *dependency = combo;
    return false;
  }

 private:
  Mask rows_[64] = {};
  Mask combos_[64] = {};
};

int MaskRank(const std::vector<Mask>& columns, Mask selection) {
  Mask rows[64] = {};
  int rank = 0;
  while (selection != 0) {
    const int i = std::countr_zero(selection);
    selection &= selection - 1;
    Mask vec = columns[i];
    while (vec != 0) {
      const int top = 63 - std::countl_zero(vec);
      if (rows[top] == 0) {
        rows[top] = vec;
        ++rank;
        break;
      }
      vec ^= rows[top];
    }
  }
  return rank;
}

Simplex SimplexOf(Mask m) {
  std::vector<VertexId> vs;
  while (m != 0) {
    vs.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return Simplex(std::move(vs));
}

// Boundary columns of an explicit facet list, one BitVector per facet.
std::vector<BitVector> BoundaryColumns(const std::vector<Simplex>& facets) {
  std::map<Simplex, std::size_t> index;
  for (const Simplex& f : facets) {
    for (const Simplex& face : f.Codim1Faces()) index.emplace(face, index.size());
  }
  std::vector<BitVector> columns;
  for (const Simplex& f : facets) {
    BitVector col(index.size());
    for (const Simplex& face : f.Codim1Faces()) col.flip(index.at(face));
    columns.push_back(std::move(col));
  }
  return columns;
}

// Bitmask of every nonempty facet subset whose boundary vanishes.
std::vector<Mask> SubCycles(const std::vector<Simplex>& facets) {
  const std::vector<BitVector> columns = BoundaryColumns(facets);
  const std::size_t m = facets.size();
  std::vector<Mask> out;
  if (m == 0) return out;
  BitVector sum(columns.front().size());
  Mask current = 0;
  for (Mask step = 1; step < (Mask{1} << m); ++step) {
    const int bit = std::countr_zero(step);
    current ^= Mask{1} << bit;
    sum ^= columns[bit];
    if (!sum.any()) out.push_back(current);
  }
  return out;
}

bool ConnectedWithout(const Graph& g, const std::vector<VertexId>& vertices, Mask removed,
                      const std::map<VertexId, int>& index) {
  const int n = static_cast<int>(vertices.size());
  int start = -1;
  int remaining = 0;
  for (int i = 0; i < n; ++i) {
    if (!((removed >> i) & 1u)) {
      ++remaining;
      if (start < 0) start = i;
    }
  }
  if (remaining <= 1) return true;
  Mask seen = Mask{1} << start;
  std::vector<int> stack{start};
  int count = 1;
  while (!stack.empty()) {
    const int x = stack.back();
    stack.pop_back();
    for (VertexId w : g.Neighbors(vertices[x])) {
      const int j = index.at(w);
      if (((removed | seen) >> j) & 1u) continue;
      seen |= Mask{1} << j;
      ++count;
      stack.push_back(j);
    }
  }
  return count == remaining;
}

bool StackedSearch(const SimplicialMulticomplex& s, std::set<CanonicalForm>& failed) {
  const int k = s.dim();
  const std::vector<VertexId> vertices = s.Vertices();
  if (static_cast<int>(vertices.size()) == k + 2) {
    return s == CanonicalK(k, vertices);
  }
  const CanonicalForm form = Canonicalize(s);
  if (failed.count(form)) return false;
  for (VertexId v : vertices) {
    const SimplicialMulticomplex star = Star(s, Simplex{v});
    if (static_cast<int>(star.size()) != k + 1) continue;
    std::set<VertexId> around;
    for (const Simplex& f : star.Expanded()) around.insert(f.begin(), f.end());
    around.erase(v);
    if (static_cast<int>(around.size()) != k + 1) continue;
    const Simplex filled(std::vector<VertexId>(around.begin(), around.end()));
    if (s.Contains(filled)) continue;
    SimplicialMulticomplex reduced = s;
    for (const Simplex& f : star.Expanded()) reduced.Remove(f);
    reduced.Add(filled);
    if (StackedSearch(reduced, failed)) return true;
  }
  failed.insert(form);
  return false;
}

}  // namespace

std::vector<SimplicialMulticomplex> EnumerateCircuits(const EnumerationSpec& spec) {
  const int k = spec.k;
  const int n = spec.num_vertices;
  if (k < 0 || n < 1) throw InvalidInput("enumeration needs k >= 0 and n >= 1");
  if (n >= 64) throw BudgetExceeded("too many vertices");
  const std::vector<Mask> facets = SubsetMasks(n, k + 1);
  const std::vector<Mask> faces = SubsetMasks(n, k);
  if (facets.size() > 64 || faces.size() > 64) {
    throw BudgetExceeded("complete complex too large to enumerate");
  }
  std::map<Mask, int> face_index;
  for (std::size_t i = 0; i < faces.size(); ++i) face_index[faces[i]] = static_cast<int>(i);
  std::vector<Mask> columns(facets.size(), 0);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    for (Mask rest = facets[i]; rest != 0; rest &= rest - 1) {
      const Mask face = facets[i] & ~(rest & -rest);
      columns[i] |= Mask{1} << face_index.at(face);
    }
  }
  XorBasis basis;
  std::vector<Mask> cycle_basis;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    Mask dependency = 0;
    if (!basis.Insert(columns[i], Mask{1} << i, &dependency)) {
      cycle_basis.push_back(dependency | (Mask{1} << i));
    }
  }
  const int dim = static_cast<int>(cycle_basis.size());
  if (dim > spec.max_cycle_space_dim) {
    throw BudgetExceeded("cycle space of dimension " + std::to_string(dim) +
                         " exceeds the cap " + std::to_string(spec.max_cycle_space_dim));
  }
  const Mask all_vertices = (Mask{1} << n) - 1;
  std::map<CanonicalForm, SimplicialMulticomplex> classes;
  Mask cycle = 0;
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << dim); ++step) {
    cycle ^= cycle_basis[std::countr_zero(step)];
    Mask covered = 0;
    for (Mask rest = cycle; rest != 0; rest &= rest - 1) covered |= facets[std::countr_zero(rest)];
    if (covered != all_vertices) continue;
    if (MaskRank(columns, cycle) != std::popcount(cycle) - 1) continue;
    SimplicialMulticomplex s(k);
    for (Mask rest = cycle; rest != 0; rest &= rest - 1) s.Add(SimplexOf(facets[std::countr_zero(rest)]));
    CanonicalForm form = Canonicalize(s);
    if (!classes.count(form)) classes.emplace(std::move(form), CanonicalRelabel(s));
  }
  std::vector<SimplicialMulticomplex> out;
  for (auto& [form, s] : classes) out.push_back(std::move(s));
  return out;
}

std::vector<SimplicialMulticomplex> EnumerateCircuitsUpTo(int k, int max_vertices) {
  std::vector<SimplicialMulticomplex> out;
  for (int n = k + 2; n <= max_vertices; ++n) {
    auto batch = EnumerateCircuits({k, n});
    out.insert(out.end(), batch.begin(), batch.end());
  }
  return out;
}

bool BruteIsCircuit(const SimplicialMulticomplex& s) {
  if (s.size() > 20) throw BudgetExceeded("brute circuit test limited to 20 facets");
  if (s.empty()) return false;
  const std::vector<Mask> cycles = SubCycles(s.Expanded());
  const Mask full = (Mask{1} << s.size()) - 1;
  return cycles.size() == 1 && cycles.front() == full;
}

bool BruteMConnected(const SimplicialMulticomplex& s) {
  if (!s.IsComplex()) throw InvalidInput("matroid test needs a complex without repeats");
  if (s.size() > 12) throw BudgetExceeded("brute matroid test limited to 12 facets");
  const std::size_t m = s.size();
  const std::vector<Mask> cycles = SubCycles(s.Expanded());
  std::vector<Mask> circuits;
  for (Mask c : cycles) {
    bool minimal = true;
    for (Mask other : cycles) {
      if (other != c && (other & c) == other) {
        minimal = false;
        break;
      }
    }
    if (minimal) circuits.push_back(c);
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const Mask pair = (Mask{1} << a) | (Mask{1} << b);
      if (std::none_of(circuits.begin(), circuits.end(),
                       [&](Mask c) { return (c & pair) == pair; })) {
        return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<VertexId>> BruteMinSeparators(const Graph& g) {
  const std::vector<VertexId> vertices = g.Vertices();
  const int n = static_cast<int>(vertices.size());
  if (n > 12) throw BudgetExceeded("brute separator search limited to 12 vertices");
  std::map<VertexId, int> index;
  for (int i = 0; i < n; ++i) index[vertices[i]] = i;
  for (int t = 0; t <= n - 2; ++t) {
    std::vector<std::vector<VertexId>> found;
    for (Mask removed : SubsetMasks(n, t)) {
      if (ConnectedWithout(g, vertices, removed, index)) continue;
      std::vector<VertexId> sep;
      for (int i = 0; i < n; ++i) {
        if ((removed >> i) & 1u) sep.push_back(vertices[i]);
      }
      found.push_back(std::move(sep));
    }
    if (!found.empty()) {
      std::sort(found.begin(), found.end());
      return found;
    }
  }
  return {};
}

int BruteVertexConnectivity(const Graph& g) {
  const auto seps = BruteMinSeparators(g);
  if (seps.empty()) return std::max(0, static_cast<int>(g.num_vertices()) - 1);
  return static_cast<int>(seps.front().size());
}

bool IsStackedBySubdivision(const SimplicialMulticomplex& s) {
  if (!s.IsComplex() || !IsCircuit(s)) return false;
  std::set<CanonicalForm> failed;
  return StackedSearch(s, failed);
}

bool RationalRankAudit(const Verdict& v) {
  return std::all_of(v.ranks.begin(), v.ranks.end(),
                     [](const RankRecord& r) { return AuditRankRecord(r); });
}

void WriteAtlas(const std::string& directory, const std::vector<SimplicialMulticomplex>& atlas) {
  namespace fs = std::filesystem;
  fs::create_directories(directory);
  nlohmann::json index = nlohmann::json::array();
  for (std::size_t i = 0; i < atlas.size(); ++i) {
    const SimplicialMulticomplex& s = atlas[i];
    std::ostringstream name;
    name << "circuit_" << std::setw(4) << std::setfill('0') << i << ".fct";
    std::ofstream out(fs::path(directory) / name.str());
    if (!out) throw InvalidInput("cannot write " + name.str());
    WriteFacets(out, s);
    const Graph g = GraphOf(s);
    const long long n = static_cast<long long>(g.num_vertices());
    const long long d = s.dim() + 1;
    nlohmann::json entry{{"file", name.str()},
                         {"k", s.dim()},
                         {"vertices", n},
                         {"facets", s.size()},
                         {"edges", g.num_edges()},
                         {"globally_rigid", GloballyRigidCircuit(s).value()}};
    if (s.dim() >= 2) {
      entry["lower_bound_equality"] =
          static_cast<long long>(g.num_edges()) == d * n - d * (d + 1) / 2;
      entry["stacked"] = IsStackedSphere(s);
    }
    index.push_back(std::move(entry));
  }
  std::ofstream out(fs::path(directory) / "index.json");
  out << index.dump(2) << "\n";
}

}  // namespace rigicheck
