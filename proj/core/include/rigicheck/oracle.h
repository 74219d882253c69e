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

// Brute-force ground truth: exhaustive enumeration of small simplicial
// circuits up to isomorphism, subset-based circuit and matroid tests,
// exhaustive separator search, stacked-sphere recognition by undoing
// subdivisions, and exact recomputation of recorded ranks.
//
// Nothing here uses random points or modular arithmetic.

#ifndef RIGICHECK_ORACLE_H_
#define RIGICHECK_ORACLE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "rigicheck/graph.h"
#include "rigicheck/simplicial.h"
#include "rigicheck/verdict.h"

namespace rigicheck {

struct EnumerationSpec {
  int k = 2;
  int num_vertices = 4;
  // Cycles of the complete k-complex are visited one by one; the dimension
  // of that cycle space is capped here.
  int max_cycle_space_dim = 22;
};

// Nontrivial simplicial k-circuits using exactly n vertices, one per
// isomorphism class, relabelled canonically and sorted. Throws
// BudgetExceeded past the cap and InvalidInput for k < 0 or n < 1.
std::vector<SimplicialMulticomplex> EnumerateCircuits(const EnumerationSpec& spec);

// Every class on k+2 .. max_vertices vertices.
std::vector<SimplicialMulticomplex> EnumerateCircuitsUpTo(int k, int max_vertices);

// Checks every nonempty subset for a vanishing boundary. At most 20 facets
// counted with multiplicity.
bool BruteIsCircuit(const SimplicialMulticomplex& s);

// Every pair of facets lies in a common circuit, found by listing all
// sub-cycles. At most 12 facets, no repeats.
bool BruteMConnected(const SimplicialMulticomplex& s);

// All minimum vertex separators by subset search; empty for complete
// graphs. At most 12 vertices.
std::vector<std::vector<VertexId>> BruteMinSeparators(const Graph& g);
// n - 1 for complete graphs. At most 12 vertices.
int BruteVertexConnectivity(const Graph& g);

// Repeatedly replaces the star of a vertex whose link is the boundary of a
// simplex by that simplex, searching all orders, until K_k remains.
bool IsStackedBySubdivision(const SimplicialMulticomplex& s);

// True when every rank in the verdict matches its exact rational value.
bool RationalRankAudit(const Verdict& v);

// Writes one facet file per complex into `directory` plus index.json with
// vertex, facet and edge counts and the structural verdicts.
void WriteAtlas(const std::string& directory, const std::vector<SimplicialMulticomplex>& atlas);

}  // namespace rigicheck

#endif  // RIGICHECK_ORACLE_H_
