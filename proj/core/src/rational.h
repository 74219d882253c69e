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

// Exact rational elimination on GMP types, used to audit modular ranks.

#ifndef RIGICHECK_SRC_RATIONAL_H_
#define RIGICHECK_SRC_RATIONAL_H_

#include <gmpxx.h>

#include <cstddef>
#include <vector>

namespace rigicheck {

using IntegerRows = std::vector<std::vector<mpz_class>>;
using RationalRows = std::vector<std::vector<mpq_class>>;

// Fraction-free Bareiss elimination.
std::size_t IntegerRank(IntegerRows rows);

// Reduced row echelon basis of the right kernel, one vector per free column
// with a 1 there and zeros in the other free columns.
RationalRows RationalRightKernel(RationalRows rows, std::size_t cols);

std::size_t RationalRank(const RationalRows& rows);

}  // namespace rigicheck

#endif  // RIGICHECK_SRC_RATIONAL_H_
