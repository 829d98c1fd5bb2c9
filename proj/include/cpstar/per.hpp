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
#include <optional>
#include <vector>

#include "cpstar/groupoid.hpp"
#include "cpstar/relation.hpp"

namespace cpstar {

/// Symmetric and transitive; these are exactly the dagger idempotents of Rel.
bool per_check(const Relation& r);

/**
 * A partial equivalence relation on {0, ..., base-1}.
 **/
class Per {
 public:
  /// Throws PreconditionError unless `r` is a PER.
  explicit Per(Relation r);

  std::size_t base() const { return rel_.src(); }
  const Relation& relation() const { return rel_; }
  bool related(std::size_t x, std::size_t y) const {
    return rel_.contains(x, y);
  }
  bool in_domain(std::size_t x) const { return rel_.contains(x, x); }

 private:
  Relation rel_;
};

/// Equivalence classes of Dom(~), each sorted, ordered by least element.
std::vector<std::vector<std::size_t>> quotient(const Per& per);

/// class_index[x] for x ∈ Dom(~), kNoClass elsewhere.
inline constexpr std::size_t kNoClass = static_cast<std::size_t>(-1);
std::vector<std::size_t> class_index(const Per& per);

/// R : Dom(~)/~ -> X with R = {([x], x)}. Then R∘R† = ~ and R†∘R = id.
Relation per_split(const Per& per);

/// Isomorphism in Split†[Rel]: the quotients have the same size.
bool split_iso_rel(const Per& a, const Per& b);

/**
 * A PER on X×X (pairs encoded x·|X|+x') closed under the swap and diagonal
 * conditions (x,x')~(y,y') ⇒ (x',x)~(y',y) ∧ (x,x)~(y,y). These are the
 * objects of Split†[CPM[Rel]].
 **/
class CpmPer {
 public:
  /// Throws PreconditionError unless `r` passes cpm_per_check.
  CpmPer(std::size_t x_size, Relation r);

  std::size_t x_size() const { return x_size_; }
  const Per& per() const { return per_; }
  std::size_t pair(std::size_t x, std::size_t y) const {
    return x * x_size_ + y;
  }

 private:
  std::size_t x_size_;
  Per per_;
};

bool cpm_per_check(std::size_t x_size, const Relation& r);

/// (x,x) ∈ Dom(~) for every x.
bool cpm_per_is_unital(const CpmPer& c);

/**
 * Searches for a bijection α : Dom(~)/~ -> Dom(≈)/≈ with
 * α[a,a'] = [b,b'] ⇒ α[a',a] = [b',b] ∧ α[a,a] = [b,b].
 * Returns α as a table of class indices (see quotient()).
 **/
std::optional<std::vector<std::size_t>> split_iso_cpm_rel(const CpmPer& a,
                                                          const CpmPer& b);

/// Checks the α condition above for a given bijection, over all
/// representatives of every class.
bool satisfies_quotient_condition(const CpmPer& a, const CpmPer& b,
                                  const std::vector<std::size_t>& alpha);

/**
 * Searches for a bijection β : Mor(G) -> Dom(~)/~ with
 * β(g) = [x,x'] ⇒ β(g⁻¹) = [x',x] ∧ β(id_dom(g)) = [x,x].
 * Such a β exists iff (X,~) ≅ F(G).
 **/
std::optional<std::vector<std::size_t>> f_image_test(const CpmPer& c,
                                                     const Groupoid& g);

bool satisfies_image_condition(const CpmPer& c, const Groupoid& g,
                               const std::vector<std::size_t>& beta);

/// The unital object of Split†[CPM[Rel]] on X = {0,1,2} with exactly the
/// pairs (x,x')~(x,x') for (x,x') ∉ {(0,2),(2,0)}; no groupoid has it as F-image.
CpmPer per_counterexample();

}  // namespace cpstar
