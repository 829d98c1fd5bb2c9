// Copyright 2026 The cpstar Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace cpstar {

/**
 * A finite set, identified with {0, ..., size-1}. Labels are cosmetic and
 * never take part in equality of morphisms.
 **/
class FinSet {
 public:
  FinSet() = default;
  explicit FinSet(std::size_t size) : size_(size) {}
  FinSet(std::size_t size, std::vector<std::string> labels);

  std::size_t size() const { return size_; }
  const std::optional<std::vector<std::string>>& labels() const {
    return labels_;
  }

  bool operator==(const FinSet& other) const { return size_ == other.size_; }

 private:
  std::size_t size_ = 0;
  std::optional<std::vector<std::string>> labels_;
};

using IndexPair = std::pair<std::size_t, std::size_t>;

/**
 * A binary relation src -> dst between finite sets, stored as a bit matrix
 * with one row per source element.
 *
 * Pairs of elements of A x B are encoded row-major as a * |B| + b. This is
 * the encoding used by tensor, cup and cap, and by every module above.
 **/
class Relation {
 public:
  Relation() = default;
  Relation(std::size_t src, std::size_t dst);
  Relation(FinSet src, FinSet dst);
  Relation(std::size_t src, std::size_t dst,
           const std::vector<IndexPair>& pairs);

  static Relation identity(std::size_t n);
  static Relation empty(std::size_t src, std::size_t dst) {
    return Relation(src, dst);
  }
  // Graph of a function given as a lookup table into {0, ..., dst-1}.
  static Relation graph(const std::vector<std::size_t>& f, std::size_t dst);

  const FinSet& src_set() const { return src_; }
  const FinSet& dst_set() const { return dst_; }
  std::size_t src() const { return src_.size(); }
  std::size_t dst() const { return dst_.size(); }

  bool contains(std::size_t i, std::size_t j) const {
    return (bits_[i * words_ + j / 64] >> (j % 64)) & 1U;
  }
  void insert(std::size_t i, std::size_t j);
  void erase(std::size_t i, std::size_t j);

  // Sorted, duplicate-free list of related pairs.
  std::vector<IndexPair> pairs() const;
  std::size_t count() const;
  bool is_empty() const { return count() == 0; }

  // Elements of dst related to i.
  std::vector<std::size_t> image(std::size_t i) const;

  bool operator==(const Relation& other) const;
  bool operator!=(const Relation& other) const { return !(*this == other); }

  // Inclusion of pair sets; shapes must agree.
  bool subset_of(const Relation& other) const;

 private:
  friend Relation compose(const Relation& after, const Relation& before);
  friend Relation unite(const Relation& a, const Relation& b);

  const std::uint64_t* row(std::size_t i) const {
    return bits_.data() + i * words_;
  }
  std::uint64_t* row(std::size_t i) { return bits_.data() + i * words_; }
  void check_index(std::size_t i, std::size_t j) const;

  FinSet src_;
  FinSet dst_;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

/// Relational composition `after ∘ before`: (a,c) iff some b has a before b
/// and b after c. Argument order follows function composition.
Relation compose(const Relation& after, const Relation& before);

/// Converse relation.
Relation dagger(const Relation& r);

/// Cartesian product of relations, row-major pair encoding.
Relation tensor(const Relation& r, const Relation& s);

/// Union; this is the sum of the commutative-monoid enrichment.
Relation unite(const Relation& a, const Relation& b);
inline Relation add(const Relation& a, const Relation& b) {
  return unite(a, b);
}

/// Relations have no complex structure, so the conjugate f_* is f itself.
inline Relation conjugate(const Relation& r) { return r; }

/// Transpose f^*: B* -> A*; with self-dual objects it is the converse.
inline Relation transpose(const Relation& r) { return dagger(r); }

/// Cup I -> A*⊗A, {(0, i·|A|+i)}.
Relation rel_cup(std::size_t n);

/// Cap A⊗A* -> I, the converse of the cup.
Relation rel_cap(std::size_t n);

/// Symmetry A⊗B -> B⊗A.
Relation rel_swap(std::size_t a, std::size_t b);

}  // namespace cpstar
