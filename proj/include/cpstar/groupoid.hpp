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
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "cpstar/frobenius.hpp"
#include "cpstar/relation.hpp"
#include "cpstar/report.hpp"

namespace cpstar {

/**
 * A finite group given by its multiplication table; element 0 is the
 * identity and table[a * order + b] = a·b.
 **/
struct Group {
  std::string name;
  std::size_t order = 0;
  std::vector<std::size_t> table;

  std::size_t mul(std::size_t a, std::size_t b) const {
    return table[a * order + b];
  }
};

Group cyclic_group(std::size_t n);
Group dihedral_group(std::size_t n);  // order 2n
Group dicyclic_group(std::size_t n);  // order 4n; Q8 for n = 2
Group direct_product(const Group& a, const Group& b);

/// Every group of the given order up to isomorphism. Orders 1 to 11 are
/// tabulated; larger orders throw std::out_of_range.
const std::vector<Group>& groups_of_order(std::size_t order);
constexpr std::size_t kMaxTabulatedGroupOrder = 11;

/**
 * A finite groupoid. comp[g * n + h] is g∘h ("g after h"), defined exactly
 * when dom(g) = cod(h); undefined entries hold kUndefined.
 **/
struct Groupoid {
  static constexpr std::size_t kUndefined =
      std::numeric_limits<std::size_t>::max();

  std::size_t objects = 0;
  std::vector<std::size_t> dom;
  std::vector<std::size_t> cod;
  std::vector<std::size_t> comp;
  std::vector<std::size_t> ids;
  std::vector<std::size_t> inv;
  std::vector<std::string> morphism_labels;  // optional, empty if unlabelled
  std::string name;                          // cosmetic, e.g. "I2 + Z2"

  std::size_t morphisms() const { return dom.size(); }
  std::size_t then(std::size_t g, std::size_t h) const {
    return comp[g * morphisms() + h];
  }
  bool composable(std::size_t g, std::size_t h) const {
    return dom[g] == cod[h];
  }
  bool is_identity(std::size_t g) const { return ids[dom[g]] == g; }
};

/// Category laws, identities, inverses and the definedness pattern of comp.
Report groupoid_check(const Groupoid& g);

Groupoid trivial_groupoid();
Groupoid group_groupoid(const Group& group);
/// One morphism between each ordered pair of k objects; morphism a*k+b has
/// codomain a and domain b.
Groupoid indiscrete_groupoid(std::size_t k);
Groupoid discrete_groupoid(std::size_t k);
Groupoid product_groupoid(const Groupoid& a, const Groupoid& b);
/// Morphisms of `b` are offset by |Mor(a)|, objects by |Ob(a)|.
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);
/// Renames morphism i to perm[i]; objects keep their order of appearance.
Groupoid relabel(const Groupoid& g, const std::vector<std::size_t>& perm);

/// Morphism-level isomorphism search; returns the bijection if one exists.
std::optional<std::vector<std::size_t>> find_isomorphism(const Groupoid& a,
                                                         const Groupoid& b);

/// The groupoid's algebra in Rel: m = {((g,h), g∘h)}, u = {(0, id_x)}.
FrobeniusAlgebra<Relation> groupoid_to_algebra(const Groupoid& g);

/**
 * All groupoids with n morphisms, one per isomorphism class. Each is a
 * disjoint union of connected components indiscrete(k) × group, listed in a
 * canonical order.
 **/
std::vector<Groupoid> enumerate_groupoids(std::size_t n);

/// Disjoint unions of indiscrete groupoids with n morphisms in total.
std::vector<Groupoid> indiscrete_unions(std::size_t n);

/// The connected groupoid with objects a, b, c and morphisms, in order,
/// id_a, id_b, id_c, f, f⁻¹, g, g⁻¹, h, h⁻¹ where f : a→b, g : b→c, h : a→c.
Groupoid nine_morphism_groupoid();

/// {(x,x) : x ∉ {h, h⁻¹}} on the morphisms of nine_morphism_groupoid().
Relation counterexample_R();

struct SplittingSearch {
  bool found = false;
  std::size_t groupoids_searched = 0;
  // Size of the search space: groupoids × (number of classes)!.
  std::size_t candidate_bijections = 0;
  std::optional<Groupoid> target;
  std::optional<Relation> splitting;
};

enum class SearchMode {
  kPruned,      // backtracking on the inverse and identity constraints
  kExhaustive,  // every bijection is built and checked in full
};

/**
 * Searches for a dagger splitting S : G -> H in CP*[Rel] of the dagger
 * idempotent R, over every groupoid H up to isomorphism and every bijection
 * between Dom(R)/R and Mor(H).
 **/
SplittingSearch search_dagger_splitting(const Relation& r, const Groupoid& g,
                                        SearchMode mode = SearchMode::kPruned);

/// True iff no splitting exists.
bool verify_no_dagger_splitting(const Relation& r, const Groupoid& g,
                                SearchMode mode = SearchMode::kPruned);

}  // namespace cpstar
