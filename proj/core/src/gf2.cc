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

#include "rigicheck/gf2.h"

#include <bit>
#include <utility>

namespace rigicheck {

BitVector& BitVector::operator^=(const BitVector& other) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
  return *this;
}

bool BitVector::any() const {
  for (std::uint64_t w : words_) {
    if (w != 0) return true;
  }
  return false;
}

std::size_t BitVector::count() const {
  std::size_t total = 0;
  for (std::uint64_t w : words_) total += std::popcount(w);
  return total;
}

std::size_t BitVector::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return i * 64 + std::countr_zero(words_[i]);
  }
  return size_;
}

std::vector<std::size_t> BitVector::ones() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w != 0) {
      out.push_back(i * 64 + std::countr_zero(w));
      w &= w - 1;
    }
  }
  return out;
}

Gf2Basis::Gf2Basis(std::size_t dimension, std::size_t capacity)
    : dimension_(dimension), capacity_(capacity) {}

BitVector Gf2Basis::Reduce(BitVector& vec) const {
  BitVector combo(capacity_);
  // Rows are kept with distinct pivots and each row is zero at the pivots of
  // earlier rows, so one forward pass suffices.
  for (const Row& row : rows_) {
    if (vec.test(row.pivot)) {
      vec ^= row.vec;
      combo ^= row.combo;
    }
  }
  return combo;
}

std::optional<std::vector<std::size_t>> Gf2Basis::Insert(std::size_t element,
                                                         const BitVector& vec) {
  BitVector work = vec;
  BitVector combo = Reduce(work);
  if (!work.any()) return combo.ones();
  combo.set(element);
  std::size_t pivot = work.first();
  // Keep rows reduced with respect to the new pivot.
  for (Row& row : rows_) {
    if (row.vec.test(pivot)) {
      row.vec ^= work;
      row.combo ^= combo;
    }
  }
  rows_.push_back(Row{pivot, std::move(work), std::move(combo)});
  accepted_.push_back(element);
  return std::nullopt;
}

std::optional<std::vector<std::size_t>> Gf2Basis::Represent(
    const BitVector& vec) const {
  BitVector work = vec;
  BitVector combo = Reduce(work);
  if (work.any()) return std::nullopt;
  return combo.ones();
}

std::size_t Gf2Rank(const std::vector<BitVector>& vectors) {
  if (vectors.empty()) return 0;
  Gf2Basis basis(vectors.front().size(), vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) basis.Insert(i, vectors[i]);
  return basis.rank();
}

}  // namespace rigicheck
