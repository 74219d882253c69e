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

// Text formats: facet files (.fct) and edge lists (.edg).
//
// Facet file: one facet per line as whitespace-separated labels. Lines whose
// first non-blank character is '#' are comments, blank lines are ignored. The
// first content line may read `dim k`; otherwise k is the arity minus one and
// every line must agree.
//
// Edge list: one `u v` pair per line with the same comment rules. A line with
// a single label declares an isolated vertex.

#ifndef RIGICHECK_IO_H_
#define RIGICHECK_IO_H_

#include <iosfwd>
#include <string>

#include "rigicheck/graph.h"
#include "rigicheck/simplicial.h"

namespace rigicheck {

// All readers throw InvalidInput with a line number on malformed input.
SimplicialMulticomplex ParseFacets(std::istream& in);
SimplicialMulticomplex ReadFacetFile(const std::string& path);
// Writes `dim k` followed by each facet copy in canonical order.
void WriteFacets(std::ostream& out, const SimplicialMulticomplex& s);
std::string FacetsToString(const SimplicialMulticomplex& s);

Graph ParseEdgeList(std::istream& in);
Graph ReadEdgeFile(const std::string& path);
// Edges in sorted order, then any isolated vertices.
void WriteEdgeList(std::ostream& out, const Graph& g);

}  // namespace rigicheck

#endif  // RIGICHECK_IO_H_
