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

#include "cpstar/relation.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <string>

#include "cpstar/errors.hpp"

namespace cpstar {

FinSet::FinSet(std::size_t size, std::vector<std::string> labels)
    : size_(size) {
  if (labels.size() != size) {
    throw DimensionError("FinSet: label count " +
                         std::to_string(labels.size()) + " != size " +
                         std::to_string(size));
  }
  std::set<std::string> seen(labels.begin(), labels.end());
  if (seen.size() != labels.size()) {
    throw PreconditionError("FinSet: labels must be distinct");
  }
  labels_ = std::move(labels);
}

Relation::Relation(std::size_t src, std::size_t dst)
    : Relation(FinSet(src), FinSet(dst)) {}

Relation::Relation(FinSet src, FinSet dst)
    : src_(std::move(src)),
      dst_(std::move(dst)),
      words_((dst_.size() + 63) / 64),
      bits_(src_.size() * words_, 0) {}

Relation::Relation(std::size_t src, std::size_t dst,
                   const std::vector<IndexPair>& pairs)
    : Relation(src, dst) {
  for (const auto& [i, j] : pairs) insert(i, j);
}

Relation Relation::identity(std::size_t n) {
  Relation r(n, n);
  for (std::size_t i = 0; i < n; ++i) r.insert(i, i);
  return r;
}

Relation Relation::graph(const std::vector<std::size_t>& f, std::size_t dst) {
  Relation r(f.size(), dst);
  for (std::size_t i = 0; i < f.size(); ++i) r.insert(i, f[i]);
  return r;
}

void Relation::check_index(std::size_t i, std::size_t j) const {
  if (i >= src() || j >= dst()) {
    throw DimensionError("Relation: pair (" + std::to_string(i) + "," +
                         std::to_string(j) + ") outside " +
                         std::to_string(src()) + "x" + std::to_string(dst()));
  }
}

void Relation::insert(std::size_t i, std::size_t j) {
  check_index(i, j);
  row(i)[j / 64] |= std::uint64_t{1} << (j % 64);
}

void Relation::erase(std::size_t i, std::size_t j) {
  check_index(i, j);
  row(i)[j / 64] &= ~(std::uint64_t{1} << (j % 64));
}

std::vector<IndexPair> Relation::pairs() const {
  std::vector<IndexPair> out;
  for (std::size_t i = 0; i < src(); ++i) {
    for (std::size_t j : image(i)) out.emplace_back(i, j);
  }
  return out;
}

std::size_t Relation::count() const {
  std::size_t n = 0;
  for (std::uint64_t w : bits_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

std::vector<std::size_t> Relation::image(std::size_t i) const {
  std::vector<std::size_t> out;
  const std::uint64_t* r = row(i);
  for (std::size_t w = 0; w < words_; ++w) {
    std::uint64_t word = r[w];
    while (word != 0) {
      out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
      word &= word - 1;
    }
  }
  return out;
}

bool Relation::operator==(const Relation& other) const {
  return src() == other.src() && dst() == other.dst() && bits_ == other.bits_;
}

bool Relation::subset_of(const Relation& other) const {
  if (src() != other.src() || dst() != other.dst()) {
    throw DimensionError("Relation::subset_of: shape mismatch");
  }
  for (std::size_t k = 0; k < bits_.size(); ++k) {
    if ((bits_[k] & ~other.bits_[k]) != 0) return false;
  }
  return true;
}

Relation compose(const Relation& after, const Relation& before) {
  if (before.dst() != after.src()) {
    throw DimensionError("compose: " + std::to_string(before.src()) + "->" +
                         std::to_string(before.dst()) + " then " +
                         std::to_string(after.src()) + "->" +
                         std::to_string(after.dst()));
  }
  Relation out(before.src_set(), after.dst_set());
  for (std::size_t a = 0; a < before.src(); ++a) {
    std::uint64_t* dst_row = out.row(a);
    const std::uint64_t* mid = before.row(a);
    for (std::size_t w = 0; w < before.words_; ++w) {
      std::uint64_t word = mid[w];
      while (word != 0) {
        std::size_t b = w * 64 + static_cast<std::size_t>(std::countr_zero(word));
        word &= word - 1;
        const std::uint64_t* src_row = after.row(b);
        for (std::size_t k = 0; k < out.words_; ++k) dst_row[k] |= src_row[k];
      }
    }
  }
  return out;
}

Relation dagger(const Relation& r) {
  Relation out(r.dst_set(), r.src_set());
  for (std::size_t i = 0; i < r.src(); ++i) {
    for (std::size_t j : r.image(i)) out.insert(j, i);
  }
  return out;
}

Relation tensor(const Relation& r, const Relation& s) {
  Relation out(r.src() * s.src(), r.dst() * s.dst());
  const auto rp = r.pairs();
  const auto sp = s.pairs();
  for (const auto& [a, b] : rp) {
    for (const auto& [c, d] : sp) {
      out.insert(a * s.src() + c, b * s.dst() + d);
    }
  }
  return out;
}

Relation unite(const Relation& a, const Relation& b) {
  if (a.src() != b.src() || a.dst() != b.dst()) {
    throw DimensionError("unite: shape mismatch");
  }
  Relation out = a;
  for (std::size_t k = 0; k < out.bits_.size(); ++k) out.bits_[k] |= b.bits_[k];
  return out;
}

Relation rel_cup(std::size_t n) {
  Relation out(1, n * n);
  for (std::size_t i = 0; i < n; ++i) out.insert(0, i * n + i);
  return out;
}

Relation rel_cap(std::size_t n) { return dagger(rel_cup(n)); }

Relation rel_swap(std::size_t a, std::size_t b) {
  Relation out(a * b, b * a);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) out.insert(i * b + j, j * a + i);
  }
  return out;
}

}  // namespace cpstar
