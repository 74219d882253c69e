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

// Prime-field arithmetic, a portable seeded random source, and dense matrices
// over F_p with elimination-based rank, kernels and solves.

#ifndef RIGICHECK_FIELD_H_
#define RIGICHECK_FIELD_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

namespace rigicheck {

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

// Deterministic Miller-Rabin for 64-bit inputs.
bool IsPrime64(std::uint64_t n);

class PrimeField {
 public:
  // Throws InvalidInput unless p is a prime below 2^62.
  explicit PrimeField(std::uint64_t p = kMersenne61);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t Add(std::uint64_t a, std::uint64_t b) const {
    std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t Sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint64_t Neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % p_);
  }
  std::uint64_t Pow(std::uint64_t a, std::uint64_t e) const;
  // Throws InvalidInput on zero.
  std::uint64_t Inv(std::uint64_t a) const;
  std::uint64_t FromSigned(std::int64_t a) const;

 private:
  std::uint64_t p_;
};

// mt19937_64 with an explicit rejection step, so draws are identical on
// every platform (std::uniform_int_distribution is not).
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);
  std::uint64_t Next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Row-major dense matrix over a prime field.
class ModMatrix {
 public:
  ModMatrix(std::size_t rows, std::size_t cols, const PrimeField& field);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PrimeField& field() const { return field_; }
  std::uint64_t& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::uint64_t at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  ModMatrix Transpose() const;
  std::vector<std::uint64_t> Apply(const std::vector<std::uint64_t>& x) const;

  // In-place reduced row echelon form; returns the pivot columns.
  std::vector<std::size_t> ReduceRowEchelon();
  std::size_t Rank() const;
  // Basis of {x : A x = 0}: one vector per free column, with a 1 in that
  // column and zeros in the other free columns.
  std::vector<std::vector<std::uint64_t>> RightKernel() const;
  // Basis of {y : y^T A = 0}, built the same way on the transpose.
  std::vector<std::vector<std::uint64_t>> LeftKernel() const;
  // Some x with A x = b, or nullopt when inconsistent.
  std::optional<std::vector<std::uint64_t>> Solve(const std::vector<std::uint64_t>& b) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  PrimeField field_;
  std::vector<std::uint64_t> data_;
};

// Rank of the matrix whose rows are the given vectors.
std::size_t RankOfRows(const std::vector<std::vector<std::uint64_t>>& rows,
                       std::size_t cols, const PrimeField& field);

}  // namespace rigicheck

#endif  // RIGICHECK_FIELD_H_
