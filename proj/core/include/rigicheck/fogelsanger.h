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

// Star completion of a subfamily at a vertex pair, Fogelsanger
// decompositions of a circuit along an edge with a checker for their
// guarantees, and surgery on subfamilies whose boundary spans few vertices.

#ifndef RIGICHECK_FOGELSANGER_H_
#define RIGICHECK_FOGELSANGER_H_

#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "rigicheck/simplicial.h"
#include "rigicheck/verdict.h"

namespace rigicheck {

struct StarCompletionResult {
  // K containing {u,v} with K-u and K-v both (k-1)-faces of S.
  SimplicialMulticomplex dagger;
  // Those K with K-u and K-v in the boundary of S.
  SimplicialMulticomplex star;
};

// Throws InvalidInput when u == v, S has repeated facets, or k < 1.
StarCompletionResult StarCompletion(const SimplicialMulticomplex& s, VertexId u, VertexId v);

struct FogelsangerPart {
  SimplicialMulticomplex base;        // preimage of one circuit of S/uv
  SimplicialMulticomplex star;        // completion simplices, all containing {u,v}
  SimplicialMulticomplex plus;        // base together with star
  SimplicialMulticomplex contracted;  // plus / uv
};

struct Decomposition {
  SimplicialMulticomplex source;
  VertexId u = 0;
  VertexId v = 0;
  // Each part after the first shares a non-facial (k+1)-clique through uv
  // with the symmetric difference of the earlier parts.
  std::vector<FogelsangerPart> parts;
};

// Throws InvalidInput unless S is a nontrivial circuit and uv is an edge of
// G(S).
Decomposition Decompose(const SimplicialMulticomplex& s, VertexId u, VertexId v);

// Checks every guarantee and the overlap count of consecutive parts. The
// crossing-clique check runs over all index subsets when there are at most
// `exhaustive_limit` parts and over prefixes of the order otherwise.
Verdict VerifyDecomposition(const Decomposition& dec, int exhaustive_limit = 20);

nlohmann::json DecompositionToJson(const Decomposition& dec);

struct SurgeryResult {
  // True when S1 is the single simplex X itself.
  bool degenerate = false;
  SimplicialMulticomplex result;
};

// For S1 a proper subfamily of the circuit S whose boundary spans a set X of
// k+1 vertices, returns S1 with X added. Throws InvalidInput on a violated
// precondition and InternalError if the output is not a circuit.
SurgeryResult BoundarySurgeryK1(const SimplicialMulticomplex& s,
                                const SimplicialMulticomplex& s1);

// For |V(boundary S1)| = k+2 with boundary isomorphic to L_{k-1}, w and z
// non-adjacent in its graph and S/xy a circuit, returns S1 with X-w and X-z
// toggled. Rejects {x,y} = {w,z}.
SimplicialMulticomplex BoundarySurgeryK2(const SimplicialMulticomplex& s,
                                         const SimplicialMulticomplex& s1, VertexId w,
                                         VertexId z, VertexId x, VertexId y);

// True when S1 is a sub-multiset of S.
bool IsSubfamily(const SimplicialMulticomplex& s1, const SimplicialMulticomplex& s);

}  // namespace rigicheck

#endif  // RIGICHECK_FOGELSANGER_H_
