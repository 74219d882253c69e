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

#include "rational.h"

#include <utility>

namespace rigicheck {

std::size_t IntegerRank(IntegerRows rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  mpz_class previous = 1;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pick = rank;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[rank]);
    const mpz_class& pivot = rows[rank][col];
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      for (std::size_t c = col + 1; c < cols; ++c) {
        rows[r][c] = (pivot * rows[r][c] - rows[r][col] * rows[rank][c]);
        mpz_divexact(rows[r][c].get_mpz_t(), rows[r][c].get_mpz_t(), previous.get_mpz_t());
      }
      rows[r][col] = 0;
    }
    previous = pivot;
    ++rank;
  }
  return rank;
}

namespace {

std::vector<std::size_t> Reduce(RationalRows& rows, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows.size(); ++col) {
    std::size_t pick = row;
    while (pick < rows.size() && rows[pick][col] == 0) ++pick;
    if (pick == rows.size()) continue;
    std::swap(rows[pick], rows[row]);
    const mpq_class inv = 1 / rows[row][col];
    for (std::size_t c = col; c < cols; ++c) rows[row][c] *= inv;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == row || rows[r][col] == 0) continue;
      const mpq_class factor = rows[r][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= factor * rows[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

RationalRows RationalRightKernel(RationalRows rows, std::size_t cols) {
  const std::vector<std::size_t> pivots = Reduce(rows, cols);
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  RationalRows basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<mpq_class> x(cols, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = -rows[i][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::size_t RationalRank(const RationalRows& rows) {
  if (rows.empty()) return 0;
  RationalRows work = rows;
  return Reduce(work, work.front().size()).size();
}

}  // namespace rigicheck
