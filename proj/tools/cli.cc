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

#include "cli.h"

#include <chrono>
#include <fstream>
#include <iomanip>
#include <memory>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "rigicheck/block_tree.h"
#include "rigicheck/decision.h"
#include "rigicheck/error.h"
#include "rigicheck/fogelsanger.h"
#include "rigicheck/io.h"
#include "rigicheck/named.h"
#include "rigicheck/oracle.h"
#include "rigicheck/rigidity.h"
#include "rigicheck/verdict.h"

namespace rigicheck::cli {
namespace {

using nlohmann::json;

constexpr int kErrorExit = 3;

struct Options {
  std::string complex_path;
  std::string named;
  std::string graph_path;
  int k = -1;
  int dim = -1;
  int t = -1;
  std::optional<std::uint64_t> seed;
  int trials = 3;
  bool audit = false;
  bool full_ranks = false;
  bool timings = false;
  std::string output;
  std::vector<VertexId> pair;
  std::vector<VertexId> edge;
  std::string braces_path;
  std::string p_path;
  std::string q_path;
  int n = -1;
  int max_n = -1;
  std::string atlas;
};

bool HasComplex(const Options& o) { return !o.complex_path.empty() || !o.named.empty(); }

SimplicialMulticomplex LoadComplex(const Options& o) {
  if (!o.complex_path.empty() && !o.named.empty()) {
    throw InvalidInput("give either --complex or --named, not both");
  }
  if (!o.named.empty()) return NamedComplex(o.named);
  if (o.complex_path.empty()) throw InvalidInput("this command needs --complex or --named");
  return ReadFacetFile(o.complex_path);
}

// A graph input, or the graph of a complex input.
Graph LoadGraph(const Options& o) {
  if (!o.graph_path.empty()) {
    if (HasComplex(o)) throw InvalidInput("give either a graph or a complex, not both");
    return ReadEdgeFile(o.graph_path);
  }
  if (HasComplex(o)) return GraphOf(LoadComplex(o));
  throw InvalidInput("this command needs --graph, --complex or --named");
}

// --dim, else k+1 for a complex input.
int Dimension(const Options& o) {
  if (o.dim >= 1) return o.dim;
  if (o.graph_path.empty() && HasComplex(o)) return LoadComplex(o).dim() + 1;
  throw InvalidInput("this command needs --dim");
}

RandomOptions Random(const Options& o) {
  if (o.trials < 1) throw InvalidInput("--trials must be positive");
  RandomOptions r;
  r.seed = *o.seed;
  r.trials = o.trials;
  return r;
}

json ReadJsonFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw InvalidInput(path + ": " + e.what());
  }
}

std::vector<Edge> ReadBraces(const std::string& path) {
  if (path.empty()) return {};
  return ReadEdgeFile(path).Edges();
}

Edge PairOf(const std::vector<VertexId>& values, const char* flag) {
  if (values.size() != 2) throw InvalidInput(std::string(flag) + " needs two vertices");
  return {values[0], values[1]};
}

Verdict Dispatch(const std::string& command, const Options& o) {
  if (command == "circuit-check") return CircuitCheck(LoadComplex(o));
  if (command == "decompose" || command == "fogelsanger-verify") {
    const SimplicialMulticomplex s = LoadComplex(o);
    const auto [u, v] = PairOf(o.edge, "--edge");
    const Decomposition dec = Decompose(s, u, v);
    if (command == "decompose") {
      Verdict out = MakeVerdict(Claim::kDecomposition, true);
      out.witnesses = DecompositionToJson(dec);
      return out;
    }
    Verdict out = VerifyDecomposition(dec);
    RandomOptions r = Random(o);
    r.log = &out.ranks;
    out.seed = r.seed;
    out.trials = r.trials;
    json rigid = json::array();
    bool all = true;
    for (const FogelsangerPart& part : dec.parts) {
      const bool ok = IsRigid(GraphOf(part.plus), s.dim() + 1, r);
      rigid.push_back(ok);
      all = all && ok;
    }
    out.witnesses["parts_rigid"] = std::move(rigid);
    out.witnesses["decomposition"] = DecompositionToJson(dec);
    if (!all) out.outcome = Outcome::kFalse;
    return out;
  }
  if (command == "blocks") {
    const Graph g = LoadGraph(o);
    int t = o.t;
    if (t < 1) {
      if (!o.graph_path.empty()) throw InvalidInput("blocks on a graph needs --t");
      t = LoadComplex(o).dim() + 1;
    }
    const CleavageReport report = CheckCleavageProperty(g, t);
    Verdict out = MakeVerdict(Claim::kBlockTree, report.holds);
    out.witnesses["t"] = t;
    out.witnesses["reason"] = report.reason;
    if (report.tree) out.witnesses["tree"] = BlockTreeToJson(*report.tree);
    if (report.witness) out.witnesses["separator"] = VerticesToJson(*report.witness);
    return out;
  }
  if (command == "rigidity") return RigidityVerdict(LoadGraph(o), Dimension(o), Random(o));
  if (command == "global-rigidity") {
    if (o.graph_path.empty() && HasComplex(o)) {
      const RandomOptions r = Random(o);
      return GloballyRigidCircuit(LoadComplex(o), o.audit ? &r : nullptr);
    }
    return GlobalRigidityVerdict(LoadGraph(o), Dimension(o), Random(o));
  }
  if (command == "coincident") {
    const auto [u, v] = PairOf(o.pair, "--pair");
    return CoincidentVerdict(LoadGraph(o), u, v, Dimension(o), Random(o));
  }
  if (command == "redundant") {
    return RedundantEdge(LoadComplex(o), PairOf(o.edge, "--edge"), Random(o));
  }
  if (command == "lbt") return LowerBoundCheck(LoadComplex(o));
  if (command == "m-connected") return MConnected(LoadComplex(o));
  if (command == "alg81") {
    int k = o.k;
    if (k < 0) {
      if (!o.graph_path.empty()) throw InvalidInput("alg81 on a graph needs --k");
      k = LoadComplex(o).dim();
    }
    return Algorithm81(LoadGraph(o), k, ReadBraces(o.braces_path));
  }
  if (command == "stress") {
    const Graph g = LoadGraph(o);
    const int d = Dimension(o);
    Verdict out;
    out.claim = Claim::kGloballyRigid;
    RandomOptions r = Random(o);
    r.log = &out.ranks;
    out.seed = r.seed;
    out.trials = r.trials;
    const StressCertificate cert = FindFullRankStress(g, d, r);
    out.outcome = cert.full_rank ? Outcome::kTrue : Outcome::kFalse;
    out.witnesses = {{"method", "random stress"},
                     {"dim", d},
                     {"stress_rank", cert.stress_rank},
                     {"target", cert.target}};
    if (!cert.stress.empty()) {
      out.witnesses["framework"] = FrameworkToJson(cert.framework);
      out.witnesses["stress"] = cert.stress;
    }
    return out;
  }
  if (command == "reconstruct") {
    const Graph g = LoadGraph(o);
    if (o.p_path.empty() || o.q_path.empty()) throw InvalidInput("reconstruct needs --p and --q");
    const Framework p = FrameworkFromJson(ReadJsonFile(o.p_path), g);
    const Framework q = FrameworkFromJson(ReadJsonFile(o.q_path), g);
    return StressReconstructCheck(p, q, Random(o));
  }
  if (command == "enumerate") {
    if (o.k < 0) throw InvalidInput("enumerate needs --k");
    if (o.n < 1 && o.max_n < 1) throw InvalidInput("enumerate needs --n or --max-n");
    const std::vector<SimplicialMulticomplex> atlas =
        o.n >= 1 ? EnumerateCircuits({o.k, o.n}) : EnumerateCircuitsUpTo(o.k, o.max_n);
    Verdict out = MakeVerdict(Claim::kEnumeration, true);
    out.witnesses["k"] = o.k;
    out.witnesses["count"] = atlas.size();
    json sizes = json::array();
    for (const auto& s : atlas) {
      sizes.push_back({{"vertices", s.Vertices().size()}, {"facets", s.size()}});
    }
    out.witnesses["complexes"] = std::move(sizes);
    if (!o.atlas.empty()) {
      WriteAtlas(o.atlas, atlas);
      out.witnesses["atlas"] = o.atlas;
    }
    return out;
  }
  throw InvalidInput("unknown command " + command);
}

void PrintSummary(std::ostream& os, const std::string& command, const Verdict& v) {
  static const char* kOutcomes[] = {"true", "false", "inconclusive"};
  os << std::left << std::setw(12) << "command" << command << "\n"
     << std::setw(12) << "claim" << ClaimName(v.claim) << "\n"
     << std::setw(12) << "verdict" << kOutcomes[static_cast<int>(v.outcome)] << "\n";
  if (v.witnesses.is_object() && v.witnesses.contains("reason")) {
    os << std::setw(12) << "reason" << v.witnesses["reason"].get<std::string>() << "\n";
  }
  if (v.seed) os << std::setw(12) << "seed" << *v.seed << "\n";
  if (!v.ranks.empty()) os << std::setw(12) << "ranks" << v.ranks.size() << "\n";
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rigidity of graphs of simplicial circuits", "rigicheck"};
  app.require_subcommand(1);
  Options o;
  std::uint64_t seed = 0;

  struct Command {
    const char* name;
    const char* help;
  };
  const Command commands[] = {
      {"circuit-check", "Test whether a multicomplex is a simplicial circuit"},
      {"decompose", "Decompose a circuit along an edge"},
      {"fogelsanger-verify", "Decompose along an edge and verify every guarantee"},
      {"blocks", "Check the cleavage property and build the block tree"},
      {"rigidity", "Randomized rigidity test"},
      {"global-rigidity", "Global rigidity (structural for circuits, stress test for graphs)"},
      {"coincident", "Rigidity with two vertices placed at the same point"},
      {"redundant", "Whether an edge of a circuit graph is redundant"},
      {"lbt", "Lower bound on edges and its equality cases"},
      {"m-connected", "Connectivity of the simplicial matroid"},
      {"alg81", "Clique-complex verification of rigidity and global rigidity"},
      {"stress", "Search for a full-rank equilibrium stress"},
      {"reconstruct", "Check that q is an affine image of p via stresses"},
      {"enumerate", "Enumerate small circuits up to isomorphism"},
  };
  for (const Command& c : commands) {
    CLI::App* sub = app.add_subcommand(c.name, c.help);
    sub->add_option("--complex", o.complex_path, "Facet file")->check(CLI::ExistingFile);
    sub->add_option("--named", o.named, "Built-in complex");
    sub->add_option("--graph", o.graph_path, "Edge-list file")->check(CLI::ExistingFile);
    sub->add_option("--k", o.k, "Simplex dimension k");
    sub->add_option("--dim", o.dim, "Ambient dimension d");
    sub->add_option("--t", o.t, "Cleavage order t");
    sub->add_option("--seed", seed, "Random seed (default: drawn and echoed)");
    sub->add_option("--trials", o.trials, "Random trials")->capture_default_str();
    sub->add_flag("--audit", o.audit, "Recompute every rank over the rationals");
    sub->add_flag("--full-ranks", o.full_ranks, "Include full rank records in the JSON");
    sub->add_flag("--timings", o.timings, "Include wall-clock timings");
    sub->add_option("--output", o.output, "Write the JSON verdict here");
    sub->add_option("--pair", o.pair, "Vertex pair u v")->expected(2);
    sub->add_option("--edge", o.edge, "Edge u v")->expected(2);
    sub->add_option("--braces", o.braces_path, "Edge file of braces")->check(CLI::ExistingFile);
    sub->add_option("--p", o.p_path, "Framework JSON")->check(CLI::ExistingFile);
    sub->add_option("--q", o.q_path, "Framework JSON")->check(CLI::ExistingFile);
    sub->add_option("--n", o.n, "Number of vertices");
    sub->add_option("--max-n", o.max_n, "Enumerate all sizes up to this");
    sub->add_option("--atlas", o.atlas, "Directory for atlas output");
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    for (const CLI::App* sub : app.get_subcommands()) out << sub->help();
    return 0;
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return kErrorExit;
  }
  const std::string command = app.get_subcommands().front()->get_name();
  const CLI::App* sub = app.get_subcommands().front();
  if (sub->count("--seed") > 0) {
    o.seed = seed;
  } else {
    std::random_device device;
    o.seed = (static_cast<std::uint64_t>(device()) << 32) | device();
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Verdict v = Dispatch(command, o);
    if (o.audit && !v.ranks.empty() && !AuditVerdict(v)) {
      throw InternalError("a modular rank differs from its rational value");
    }
    json j = VerdictToJson(v, o.full_ranks);
    j["command"] = command;
    if (!v.seed) j["seed"] = *o.seed;
    if (o.timings) {
      const auto elapsed = std::chrono::steady_clock::now() - start;
      j["timings"] = {
          {"total_ms", std::chrono::duration<double, std::milli>(elapsed).count()}};
    }
    if (o.output.empty()) {
      out << j.dump(2) << "\n";
      PrintSummary(err, command, v);
    } else {
      std::ofstream file(o.output);
      if (!file) throw InvalidInput("cannot write " + o.output);
      file << j.dump(2) << "\n";
      PrintSummary(out, command, v);
    }
    return ExitCode(v);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
  } catch (const BudgetExceeded& e) {
    err << "error: budget exceeded: " << e.what() << "\n";
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
  }
  return kErrorExit;
}

}  // namespace rigicheck::cli
