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

#include "rigicheck/rigidity.h"

#include <algorithm>
#include <set>
#include <string>

#include "rational.h"
#include "rigicheck/error.h"
#include "rigicheck/max_flow.h"

namespace rigicheck {
namespace {

std::size_t Choose2(std::size_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

std::map<VertexId, std::size_t> VertexIndex(const Graph& g) {
  std::map<VertexId, std::size_t> index;
  for (VertexId v : g.Vertices()) index.emplace(v, index.size());
  return index;
}

void CheckPoints(const Framework& f) {
  for (VertexId v : f.graph.Vertices()) {
    auto it = f.points.find(v);
    if (it == f.points.end() || static_cast<int>(it->second.size()) != f.dim) {
      throw InvalidInput("vertex " + std::to_string(v) + " lacks a " + std::to_string(f.dim) +
                         "-dimensional point");
    }
  }
}

void Log(RankLog* log, RankRecord record) {
  if (log != nullptr) log->push_back(std::move(record));
}

// Rational rigidity matrix with the point coordinates read as integers.
RationalRows RationalRigidityMatrix(const Framework& f) {
  CheckPoints(f);
  const auto index = VertexIndex(f.graph);
  const std::size_t d = static_cast<std::size_t>(f.dim);
  const std::vector<Edge> edges = f.graph.Edges();
  RationalRows rows(edges.size(), std::vector<mpq_class>(d * index.size(), 0));
  for (std::size_t r = 0; r < edges.size(); ++r) {
    const auto& [a, b] = edges[r];
    const auto& pa = f.points.at(a);
    const auto& pb = f.points.at(b);
    for (std::size_t i = 0; i < d; ++i) {
      mpq_class diff = mpq_class(mpz_class(std::to_string(pa[i]))) -
                       mpq_class(mpz_class(std::to_string(pb[i])));
      rows[r][d * index.at(a) + i] = diff;
      rows[r][d * index.at(b) + i] = -diff;
    }
  }
  return rows;
}

IntegerRows ToIntegerRows(const RationalRows& rows) {
  IntegerRows out;
  out.reserve(rows.size());
  for (const auto& row : rows) {
    std::vector<mpz_class> z;
    z.reserve(row.size());
    for (const mpq_class& q : row) z.push_back(q.get_num());
    out.push_back(std::move(z));
  }
  return out;
}

// Laplacian weighted by `stress` on the sorted vertex order.
template <typename T, typename Add, typename Neg>
std::vector<std::vector<T>> Laplacian(const Graph& g, const std::vector<T>& stress, T zero,
                                      Add add, Neg neg) {
  const auto index = VertexIndex(g);
  std::vector<std::vector<T>> omega(index.size(), std::vector<T>(index.size(), zero));
  const std::vector<Edge> edges = g.Edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const std::size_t a = index.at(edges[e].first);
    const std::size_t b = index.at(edges[e].second);
    omega[a][b] = add(omega[a][b], neg(stress[e]));
    omega[b][a] = add(omega[b][a], neg(stress[e]));
    omega[a][a] = add(omega[a][a], stress[e]);
    omega[b][b] = add(omega[b][b], stress[e]);
  }
  return omega;
}

}  // namespace

std::size_t TargetRank(std::size_t n, int d) {
  const std::size_t dd = static_cast<std::size_t>(d);
  if (n >= dd) return dd * n - dd * (dd + 1) / 2;
  return Choose2(n);
}

Framework RandomFramework(const Graph& g, int d, RandomSource& rng, std::uint64_t modulus) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  Framework f{g, d, {}, modulus};
  for (VertexId v : g.Vertices()) {
    std::vector<std::uint64_t> point(d);
    for (auto& x : point) x = rng.Uniform(modulus);
    f.points.emplace(v, std::move(point));
  }
  return f;
}

Framework CoincidentFramework(const Graph& g, int d, VertexId u, VertexId v, RandomSource& rng,
                              std::uint64_t modulus) {
  if (u == v) throw InvalidInput("coincident pair must be distinct");
  if (!g.HasVertex(u) || !g.HasVertex(v)) throw InvalidInput("vertex not present");
  Framework f = RandomFramework(g, d, rng, modulus);
  f.points[v] = f.points[u];
  return f;
}

ModMatrix RigidityMatrix(const Framework& f) {
  CheckPoints(f);
  const PrimeField field(f.modulus);
  const auto index = VertexIndex(f.graph);
  const std::size_t d = static_cast<std::size_t>(f.dim);
  const std::vector<Edge> edges = f.graph.Edges();
  ModMatrix r(edges.size(), d * index.size(), field);
  for (std::size_t row = 0; row < edges.size(); ++row) {
    const auto& [a, b] = edges[row];
    const auto& pa = f.points.at(a);
    const auto& pb = f.points.at(b);
    for (std::size_t i = 0; i < d; ++i) {
      const std::uint64_t diff = field.Sub(pa[i] % f.modulus, pb[i] % f.modulus);
      r.at(row, d * index.at(a) + i) = diff;
      r.at(row, d * index.at(b) + i) = field.Neg(diff);
    }
  }
  return r;
}

std::size_t FrameworkRank(const Framework& f, RankLog* log) {
  const std::size_t rank = RigidityMatrix(f).Rank();
  Log(log, RankRecord{RankRecord::Kind::kRigidity, f, std::nullopt, {}, rank});
  return rank;
}

std::size_t GenericRank(const Graph& g, int d, const RandomOptions& opts) {
  if (opts.trials < 1) throw InvalidInput("trials must be positive");
  const std::size_t ceiling = std::min(g.num_edges(), TargetRank(g.num_vertices(), d));
  RandomSource rng(opts.seed);
  std::size_t best = 0;
  for (int trial = 0; trial < opts.trials && (trial == 0 || best < ceiling); ++trial) {
    best = std::max(best, FrameworkRank(RandomFramework(g, d, rng, opts.modulus), opts.log));
  }
  return best;
}

bool IsRigid(const Graph& g, int d, const RandomOptions& opts) {
  return GenericRank(g, d, opts) == TargetRank(g.num_vertices(), d);
}

std::vector<Edge> RedundantEdges(const Graph& g, int d, const RandomOptions& opts) {
  std::vector<Edge> out;
  if (!IsRigid(g, d, opts)) return out;
  for (const auto& [a, b] : g.Edges()) {
    Graph h = g;
    h.RemoveEdge(a, b);
    if (IsRigid(h, d, opts)) out.emplace_back(a, b);
  }
  return out;
}

bool IsRedundantlyRigid(const Graph& g, int d, const RandomOptions& opts) {
  if (!IsRigid(g, d, opts)) return false;
  return RedundantEdges(g, d, opts).size() == g.num_edges();
}

bool IsMinRigid(const Graph& g, int d, const RandomOptions& opts) {
  return g.num_edges() == TargetRank(g.num_vertices(), d) && IsRigid(g, d, opts);
}

std::pair<long long, std::vector<VertexId>> MaxSparsityExcess(const Graph& g, int d) {
  if (d < 1) throw InvalidInput("dimension must be positive");
  const std::vector<VertexId> vertices = g.Vertices();
  const std::vector<Edge> edges = g.Edges();
  const int n = static_cast<int>(vertices.size());
  if (n < d) throw InvalidInput("graph has fewer than d vertices");
  const auto index = VertexIndex(g);
  long long best = std::numeric_limits<long long>::min();
  std::vector<VertexId> best_set;
  // Node layout: source, sink, one node per edge, one per vertex.
  const int source = 0;
  const int sink = 1;
  const int edge_base = 2;
  const int vertex_base = edge_base + static_cast<int>(edges.size());
  std::vector<int> seed(d);
  for (int i = 0; i < d; ++i) seed[i] = i;
  while (true) {
    MaxFlow network(vertex_base + n);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int node = edge_base + static_cast<int>(e);
      network.AddArc(source, node, 1);
      network.AddArc(node, vertex_base + static_cast<int>(index.at(edges[e].first)),
                     MaxFlow::kInfinity);
      network.AddArc(node, vertex_base + static_cast<int>(index.at(edges[e].second)),
                     MaxFlow::kInfinity);
    }
    for (int i = 0; i < n; ++i) network.AddArc(vertex_base + i, sink, d);
    for (int i : seed) network.AddArc(source, vertex_base + i, MaxFlow::kInfinity);
    const long long cut = network.Run(source, sink);
    const long long value = static_cast<long long>(edges.size()) - cut;
    if (value > best) {
      best = value;
      const std::vector<bool> side = network.SourceSide(source);
      best_set.clear();
      for (int i = 0; i < n; ++i) {
        if (side[vertex_base + i]) best_set.push_back(vertices[i]);
      }
    }
    int pos = d - 1;
    while (pos >= 0 && seed[pos] == n - d + pos) --pos;
    if (pos < 0) break;
    ++seed[pos];
    for (int i = pos + 1; i < d; ++i) seed[i] = seed[i - 1] + 1;
  }
  return {best, best_set};
}

bool IsSparse(const Graph& g, int d) {
  if (static_cast<int>(g.num_vertices()) < d) return true;
  const long long bound = -static_cast<long long>(d) * (d + 1) / 2;
  return MaxSparsityExcess(g, d).first <= bound;
}

std::vector<std::vector<std::uint64_t>> StressSpace(const Framework& f) {
  return RigidityMatrix(f).LeftKernel();
}

ModMatrix StressMatrix(const Framework& f, const std::vector<std::uint64_t>& stress) {
  if (stress.size() != f.graph.num_edges()) throw InvalidInput("stress length mismatch");
  const PrimeField field(f.modulus);
  const auto omega = Laplacian<std::uint64_t>(
      f.graph, stress, 0, [&](std::uint64_t a, std::uint64_t b) { return field.Add(a, b); },
      [&](std::uint64_t a) { return field.Neg(a % f.modulus); });
  const std::size_t n = omega.size();
  ModMatrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m.at(i, j) = omega[i][j] % f.modulus;
  }
  return m;
}

StressCertificate FullRankStressAt(const Framework& f, RandomSource& rng, int trials,
                                   RankLog* log) {
  const PrimeField field(f.modulus);
  const std::size_t n = f.graph.num_vertices();
  StressCertificate best;
  best.framework = f;
  best.target = n >= static_cast<std::size_t>(f.dim) + 1 ? n - f.dim - 1 : 0;
  const auto basis = StressSpace(f);
  for (int trial = 0; trial < trials; ++trial) {
    std::vector<std::uint64_t> coefficients(basis.size());
    for (auto& c : coefficients) c = rng.Uniform(f.modulus);
    std::vector<std::uint64_t> stress(f.graph.num_edges(), 0);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t e = 0; e < stress.size(); ++e) {
        stress[e] = field.Add(stress[e], field.Mul(coefficients[i], basis[i][e]));
      }
    }
    const std::size_t rank = StressMatrix(f, stress).Rank();
    Log(log, RankRecord{RankRecord::Kind::kStress, f, std::nullopt, coefficients, rank});
    if (trial == 0 || rank > best.stress_rank) {
      best.stress_rank = rank;
      best.coefficients = std::move(coefficients);
      best.stress = std::move(stress);
    }
    if (best.stress_rank >= best.target) break;
  }
  best.full_rank = best.stress_rank == best.target;
  return best;
}

StressCertificate FindFullRankStress(const Graph& g, int d, const RandomOptions& opts) {
  if (opts.trials < 1) throw InvalidInput("trials must be positive");
  const std::size_t n = g.num_vertices();
  if (n <= static_cast<std::size_t>(d) + 1) {
    StressCertificate small;
    small.full_rank = g.IsComplete();
    return small;
  }
  RandomSource rng(opts.seed);
  StressCertificate best;
  for (int trial = 0; trial < opts.trials; ++trial) {
    Framework f = RandomFramework(g, d, rng, opts.modulus);
    StressCertificate cert = FullRankStressAt(f, rng, 1, opts.log);
    if (trial == 0 || cert.stress_rank > best.stress_rank) best = std::move(cert);
    if (best.full_rank) break;
  }
  return best;
}

bool IsGloballyRigidGHT(const Graph& g, int d, const RandomOptions& opts) {
  return FindFullRankStress(g, d, opts).full_rank;
}

bool IsUvCoincidentRigid(const Graph& g, VertexId u, VertexId v, int d,
                         const RandomOptions& opts) {
  if (opts.trials < 1) throw InvalidInput("trials must be positive");
  const std::size_t target = TargetRank(g.num_vertices(), d);
  RandomSource rng(opts.seed);
  for (int trial = 0; trial < opts.trials; ++trial) {
    Framework f = CoincidentFramework(g, d, u, v, rng, opts.modulus);
    if (FrameworkRank(f, opts.log) == target) return true;
  }
  return false;
}

Graph VertexSplit(const Graph& g, VertexId v, const std::vector<VertexId>& to_vprime,
                  const std::vector<VertexId>& shared, int d) {
  const std::set<VertexId>& nbrs = g.Neighbors(v);
  for (const auto* set : {&to_vprime, &shared}) {
    for (VertexId w : *set) {
      if (!nbrs.count(w)) throw InvalidInput("split set contains a non-neighbour");
    }
  }
  const std::set<VertexId> shared_set(shared.begin(), shared.end());
  if (static_cast<int>(shared_set.size()) < d - 1) {
    throw InvalidInput("vertex split needs at least d-1 shared neighbours");
  }
  const std::set<VertexId> keep(to_vprime.begin(), to_vprime.end());
  const VertexId fresh = g.Vertices().back() + 1;
  Graph out = g;
  for (VertexId w : nbrs) {
    if (!keep.count(w) && !shared_set.count(w)) out.RemoveEdge(v, w);
    if (!keep.count(w) || shared_set.count(w)) out.AddEdge(fresh, w);
  }
  out.AddEdge(v, fresh);
  return out;
}

Graph ZeroExtension(const Graph& g, VertexId v_new, const std::vector<VertexId>& attach, int d) {
  const std::set<VertexId> targets(attach.begin(), attach.end());
  if (static_cast<int>(targets.size()) != d || attach.size() != targets.size()) {
    throw InvalidInput("0-extension attaches to exactly d distinct vertices");
  }
  if (g.HasVertex(v_new)) throw InvalidInput("new vertex already present");
  Graph out = g;
  for (VertexId w : targets) {
    if (!g.HasVertex(w)) throw InvalidInput("attachment vertex not present");
    out.AddEdge(v_new, w);
  }
  return out;
}

bool IsNormalEdge(const Graph& g, VertexId u, VertexId v, VertexId x, VertexId y) {
  if (!g.HasEdge(x, y)) throw InvalidInput("f is not an edge");
  if (x == u || x == v || y == u || y == v) return false;
  const std::vector<VertexId> quad{u, v, x, y};
  std::map<VertexId, int> degree;
  int edges = 0;
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = i + 1; j < 4; ++j) {
      const bool adjacent = (i == 0 && j == 1) || g.HasEdge(quad[i], quad[j]);
      if (!adjacent) continue;
      ++edges;
      ++degree[quad[i]];
      ++degree[quad[j]];
    }
  }
  if (edges == 6) return false;
  if (edges == 4 && std::all_of(quad.begin(), quad.end(), [&](VertexId w) {
        return degree[w] == 2;
      })) {
    return false;
  }
  return true;
}

bool IsUvAdmissible(const Graph& g, VertexId u, VertexId v, VertexId x, VertexId y, int d) {
  if (!g.HasEdge(x, y)) throw InvalidInput("f is not an edge");
  const std::vector<VertexId> common = CommonNeighbors(g, x, y);
  const std::set<VertexId> ends{x, y};
  auto count_without = [&](VertexId w) {
    return static_cast<int>(common.size()) -
           static_cast<int>(std::count(common.begin(), common.end(), w));
  };
  const bool has_u = ends.count(u) != 0;
  const bool has_v = ends.count(v) != 0;
  if (has_u && has_v) return false;
  if (has_u) return count_without(v) >= d - 1;
  if (has_v) return count_without(u) >= d - 1;
  return std::max(count_without(u), count_without(v)) >= d - 1;
}

std::size_t RationalRankOf(const RankRecord& record) {
  switch (record.kind) {
    case RankRecord::Kind::kRigidity:
      return IntegerRank(ToIntegerRows(RationalRigidityMatrix(record.framework)));
    case RankRecord::Kind::kJoint: {
      if (!record.other) throw InvalidInput("joint record lacks a second framework");
      RationalRows rows = RationalRigidityMatrix(record.framework);
      RationalRows more = RationalRigidityMatrix(*record.other);
      if (rows.size() != more.size()) throw InvalidInput("joint frameworks differ in edges");
      for (std::size_t r = 0; r < rows.size(); ++r) {
        rows[r].insert(rows[r].end(), more[r].begin(), more[r].end());
      }
      return IntegerRank(ToIntegerRows(rows));
    }
    case RankRecord::Kind::kStress: {
      const RationalRows r = RationalRigidityMatrix(record.framework);
      const std::size_t m = r.size();
      const std::size_t cols = r.empty() ? 0 : r.front().size();
      RationalRows transposed(cols, std::vector<mpq_class>(m));
      for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < cols; ++j) transposed[j][i] = r[i][j];
      }
      const RationalRows basis = RationalRightKernel(transposed, m);
      if (basis.size() != record.coefficients.size()) {
        // Kernel dimensions differ between F_p and Q; the rank cannot match.
        return std::numeric_limits<std::size_t>::max();
      }
      std::vector<mpq_class> stress(m, 0);
      for (std::size_t i = 0; i < basis.size(); ++i) {
        const mpq_class c(mpz_class(std::to_string(record.coefficients[i])));
        for (std::size_t e = 0; e < m; ++e) stress[e] += c * basis[i][e];
      }
      const auto omega = Laplacian<mpq_class>(
          record.framework.graph, stress, mpq_class(0),
          [](const mpq_class& a, const mpq_class& b) { return mpq_class(a + b); },
          [](const mpq_class& a) { return mpq_class(-a); });
      return RationalRank(omega);
    }
  }
  throw InternalError("unknown rank record kind");
}

bool AuditRankRecord(const RankRecord& record) { return RationalRankOf(record) == record.rank; }

nlohmann::json FrameworkToJson(const Framework& f) {
  nlohmann::json points = nlohmann::json::object();
  for (const auto& [v, p] : f.points) points[std::to_string(v)] = p;
  return {{"dim", f.dim}, {"points", points}, {"modulus", f.modulus}};
}

Framework FrameworkFromJson(const nlohmann::json& j, const Graph& g) {
  try {
    Framework f;
    f.graph = g;
    f.dim = j.at("dim").get<int>();
    f.modulus = j.value("modulus", kMersenne61);
    const PrimeField field(f.modulus);
    for (const auto& [key, value] : j.at("points").items()) {
      std::vector<std::uint64_t> point;
      for (const auto& x : value) point.push_back(field.FromSigned(x.get<std::int64_t>()));
      f.points.emplace(std::stoi(key), std::move(point));
    }
    CheckPoints(f);
    return f;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(std::string("bad framework JSON: ") + e.what());
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const InvalidInput*>(&e)) throw;
    throw InvalidInput(std::string("bad framework JSON: ") + e.what());
  }
}

nlohmann::json RankRecordToJson(const RankRecord& r) {
  static const char* kKinds[] = {"rigidity", "stress", "joint"};
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& [a, b] : r.framework.graph.Edges()) edges.push_back({a, b});
  nlohmann::json j = {{"kind", kKinds[static_cast<int>(r.kind)]},
                      {"rank", r.rank},
                      {"vertices", r.framework.graph.Vertices()},
                      {"edges", edges},
                      {"framework", FrameworkToJson(r.framework)}};
  if (r.other) j["other_framework"] = FrameworkToJson(*r.other);
  if (r.kind == RankRecord::Kind::kStress) j["coefficients"] = r.coefficients;
  return j;
}

}  // namespace rigicheck
