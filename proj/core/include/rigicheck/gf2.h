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

// Dense bit vectors and incremental Gaussian elimination over Z/2.

#ifndef RIGICHECK_GF2_H_
#define RIGICHECK_GF2_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace rigicheck {

class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  BitVector& operator^=(const BitVector& other);
  bool operator==(const BitVector& other) const = default;

  bool any() const;
  std::size_t count() const;
  // Index of the lowest set bit, or size() when the vector is zero.
  std::size_t first() const;
  std::vector<std::size_t> ones() const;

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

// Row-echelon basis built one vector at a time. Every stored row remembers
// which inserted elements it is the sum of, so a dependent insertion yields
// the unique circuit it closes against the elements accepted so far.
class Gf2Basis {
 public:
  // `dimension` is the length of the vectors; `capacity` bounds the element
  // indices passed to Insert/Reduce.
  Gf2Basis(std::size_t dimension, std::size_t capacity);

  // Inserts `vec` as element `element`. Returns std::nullopt when it was
  // independent of the accepted elements, otherwise the set of accepted
  // elements whose sum equals `vec`.
  std::optional<std::vector<std::size_t>> Insert(std::size_t element,
                                                 const BitVector& vec);

  // Expresses `vec` in terms of accepted elements without modifying the
  // basis; std::nullopt when `vec` is outside their span.
  std::optional<std::vector<std::size_t>> Represent(const BitVector& vec) const;

  std::size_t rank() const { return rows_.size(); }
  const std::vector<std::size_t>& accepted() const { return accepted_; }

 private:
  struct Row {
    std::size_t pivot;
    BitVector vec;
    BitVector combo;
  };
  // Reduces in place; returns the accumulated combination.
  BitVector Reduce(BitVector& vec) const;

  std::size_t dimension_;
  std::size_t capacity_;
  std::vector<Row> rows_;
  std::vector<std::size_t> accepted_;
};

// Rank of the given vectors (all of equal length).
std::size_t Gf2Rank(const std::vector<BitVector>& vectors);

}  // namespace rigicheck

#endif  // RIGICHECK_GF2_H_
