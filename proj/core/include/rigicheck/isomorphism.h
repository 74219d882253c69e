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

// Canonical labelling of simplicial multicomplexes by colour refinement and
// individualisation, used for isomorphism tests and enumeration dedup.

#ifndef RIGICHECK_ISOMORPHISM_H_
#define RIGICHECK_ISOMORPHISM_H_

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

#include "rigicheck/simplicial.h"

namespace rigicheck {

// Facets relabelled onto 0..n-1 as bitmasks, with multiplicities, sorted.
// Two multicomplexes are isomorphic iff their canonical forms are equal.
struct CanonicalForm {
  int dim = 0;
  int num_vertices = 0;
  std::vector<std::pair<std::uint64_t, int>> facets;

  auto operator<=>(const CanonicalForm&) const = default;
  bool operator==(const CanonicalForm&) const = default;
};

// Supports up to 64 vertices; intended for small complexes.
CanonicalForm Canonicalize(const SimplicialMulticomplex& s);

// Relabelled copy of `s` on vertices 0..n-1 in canonical order.
SimplicialMulticomplex CanonicalRelabel(const SimplicialMulticomplex& s);

bool AreIsomorphic(const SimplicialMulticomplex& a, const SimplicialMulticomplex& b);

}  // namespace rigicheck

#endif  // RIGICHECK_ISOMORPHISM_H_
