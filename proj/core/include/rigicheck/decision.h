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

// Decision procedures that return verdicts with their evidence: global
// rigidity of circuit graphs, Hendrickson's necessary conditions, lower bound
// extremality, redundant edges via block trees, the strong cleavage property,
// matroid connectivity of simplicial complexes, the clique-complex
// verification algorithm, and affine reconstruction from stresses.
//
// Procedures that use random points record every rank they rely on in the
// verdict, along with the seed and trial count.

#ifndef RIGICHECK_DECISION_H_
#define RIGICHECK_DECISION_H_

#include <optional>
#include <vector>

#include "rigicheck/graph.h"
#include "rigicheck/rigidity.h"
#include "rigicheck/simplicial.h"
#include "rigicheck/verdict.h"

namespace rigicheck {

// Circuit, cycle, nontriviality and pseudomanifold status of S.
Verdict CircuitCheck(const SimplicialMulticomplex& s);

// Structural answer for the graph of a circuit. When `cross_check` is set,
// also runs the stress test and records whether it agrees. Throws
// InvalidInput unless S is a circuit.
Verdict GloballyRigidCircuit(const SimplicialMulticomplex& s,
                             const RandomOptions* cross_check = nullptr);

// Complete on at most d+1 vertices, or (d+1)-connected and redundantly rigid.
Verdict HendricksonScreen(const Graph& g, int d, const RandomOptions& opts);

// |E| against d|V| - C(d+1,2) for d = k+1 >= 3, classifying equality as a
// stacked sphere or (k = 2) a plane triangulation whose faces are S. Throws
// InvalidInput for non-circuits or k < 2, and InternalError if the bound or
// the classification fails.
Verdict LowerBoundCheck(const SimplicialMulticomplex& s);

// Whether G - e stays rigid in R^{k+1}, read off the (k+2)-block tree, with
// the direct rank answer attached. Throws InvalidInput if e is not an edge,
// S is not a nontrivial circuit, or k < 2.
Verdict RedundantEdge(const SimplicialMulticomplex& s, Edge e, const RandomOptions& opts);

// Every (d+1)-block is a plane triangulation (d = 3) or globally rigid.
// Throws InvalidInput without the d-cleavage property.
Verdict StrongCleavage(const Graph& g, int d, const RandomOptions& opts);

// Connectivity of the Z/2 matroid of S. Throws InvalidInput on repeated
// facets.
Verdict MConnected(const SimplicialMulticomplex& s);
// Connected components of the matroid, as index groups into s.Expanded().
std::vector<std::vector<std::size_t>> MatroidComponents(const SimplicialMulticomplex& s);

// Clique-complex verification for rigidity in R^{k+1}. Gate failures give an
// inconclusive verdict, never a negative one. Braces are extra edges added
// before the global rigidity test.
Verdict Algorithm81(const Graph& g, int k, const std::vector<Edge>& braces = {});

// Checks that (G,q) has the same stresses as (G,p), finds a full-rank stress
// of (G,p), and solves q = A p + b exactly.
Verdict StressReconstructCheck(const Framework& p, const Framework& q,
                               const RandomOptions& opts);

// Randomized verdicts for arbitrary graphs, labelled by method.
Verdict RigidityVerdict(const Graph& g, int d, const RandomOptions& opts);
Verdict GlobalRigidityVerdict(const Graph& g, int d, const RandomOptions& opts);
Verdict CoincidentVerdict(const Graph& g, VertexId u, VertexId v, int d,
                          const RandomOptions& opts);

// Recomputes every rank in the verdict over the rationals; records the result
// under witnesses["audit"].
bool AuditVerdict(Verdict& v);

}  // namespace rigicheck

#endif  // RIGICHECK_DECISION_H_
