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

#include "rigicheck/field.h"

#include <utility>

#include "rigicheck/error.h"

namespace rigicheck {
namespace {

std::uint64_t MulMod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t PowMod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) result = MulMod(result, a, m);
    a = MulMod(a, a, m);
    e >>= 1;
  }
  return result;
}

}  // namespace

bool IsPrime64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % q == 0) return n == q;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = PowMod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s && composite; ++r) {
      x = MulMod(x, x, n);
      if (x == n - 1) composite = false;
    }
    if (composite) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p >= (std::uint64_t{1} << 62) || !IsPrime64(p)) {
    throw InvalidInput("modulus must be a prime below 2^62");
  }
}

std::uint64_t PrimeField::Pow(std::uint64_t a, std::uint64_t e) const { return PowMod(a, e, p_); }

std::uint64_t PrimeField::Inv(std::uint64_t a) const {
  if (a % p_ == 0) throw InvalidInput("inverse of zero");
  return PowMod(a, p_ - 2, p_);
}

std::uint64_t PrimeField::FromSigned(std::int64_t a) const {
  const std::int64_t p = static_cast<std::int64_t>(p_);
  std::int64_t r = a % p;
  return static_cast<std::uint64_t>(r < 0 ? r + p : r);
}

std::uint64_t RandomSource::Uniform(std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("empty sampling range");
  // Values below `threshold` are rejected; the rest cover each residue
  // equally often.
  const std::uint64_t threshold = (std::uint64_t{0} - bound) % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x < threshold);
  return x % bound;
}

ModMatrix::ModMatrix(std::size_t rows, std::size_t cols, const PrimeField& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, 0) {}

ModMatrix ModMatrix::Transpose() const {
  ModMatrix t(cols_, rows_, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  }
  return t;
}

std::vector<std::uint64_t> ModMatrix::Apply(const std::vector<std::uint64_t>& x) const {
  if (x.size() != cols_) throw InvalidInput("dimension mismatch");
  std::vector<std::uint64_t> y(rows_, 0);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) y[r] = field_.Add(y[r], field_.Mul(at(r, c), x[c]));
  }
  return y;
}

std::vector<std::size_t> ModMatrix::ReduceRowEchelon() {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
    std::size_t pick = row;
    while (pick < rows_ && at(pick, col) == 0) ++pick;
    if (pick == rows_) continue;
    if (pick != row) {
      for (std::size_t c = 0; c < cols_; ++c) std::swap(at(pick, c), at(row, c));
    }
    const std::uint64_t inv = field_.Inv(at(row, col));
    for (std::size_t c = col; c < cols_; ++c) at(row, c) = field_.Mul(at(row, c), inv);
    for (std::size_t r = 0; r < rows_; ++r) {
      const std::uint64_t factor = at(r, col);
      if (r == row || factor == 0) continue;
      for (std::size_t c = col; c < cols_; ++c) {
        at(r, c) = field_.Sub(at(r, c), field_.Mul(factor, at(row, c)));
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t ModMatrix::Rank() const {
  // Forward elimination only.
  ModMatrix work = *this;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
    std::size_t pick = rank;
    while (pick < rows_ && work.at(pick, col) == 0) ++pick;
    if (pick == rows_) continue;
    if (pick != rank) {
      for (std::size_t c = col; c < cols_; ++c) std::swap(work.at(pick, c), work.at(rank, c));
    }
    const std::uint64_t inv = field_.Inv(work.at(rank, col));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (work.at(r, col) == 0) continue;
      const std::uint64_t factor = field_.Mul(work.at(r, col), inv);
      for (std::size_t c = col; c < cols_; ++c) {
        work.at(r, c) = field_.Sub(work.at(r, c), field_.Mul(factor, work.at(rank, c)));
      }
    }
    ++rank;
  }
  return rank;
}

std::vector<std::vector<std::uint64_t>> ModMatrix::RightKernel() const {
  ModMatrix reduced = *this;
  const std::vector<std::size_t> pivots = reduced.ReduceRowEchelon();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : pivots) is_pivot[c] = true;
  std::vector<std::vector<std::uint64_t>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint64_t> x(cols_, 0);
    x[free] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = field_.Neg(reduced.at(i, free));
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<std::vector<std::uint64_t>> ModMatrix::LeftKernel() const {
  return Transpose().RightKernel();
}

std::optional<std::vector<std::uint64_t>> ModMatrix::Solve(
    const std::vector<std::uint64_t>& b) const {
  if (b.size() != rows_) throw InvalidInput("dimension mismatch");
  ModMatrix augmented(rows_, cols_ + 1, field_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) augmented.at(r, c) = at(r, c);
    augmented.at(r, cols_) = b[r] % field_.modulus();
  }
  const std::vector<std::size_t> pivots = augmented.ReduceRowEchelon();
  if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
  std::vector<std::uint64_t> x(cols_, 0);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = augmented.at(i, cols_);
  return x;
}

std::size_t RankOfRows(const std::vector<std::vector<std::uint64_t>>& rows,
                       std::size_t cols, const PrimeField& field) {
  ModMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m.Rank();
}

}  // namespace rigicheck
