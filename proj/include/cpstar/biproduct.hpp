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
#include <numeric>
#include <utility>
#include <vector>

#include "cpstar/category.hpp"
#include "cpstar/errors.hpp"
#include "cpstar/frobenius.hpp"

namespace cpstar {

/**
 * An ordered direct sum of objects. Summand i occupies the index range
 * [offset(i), offset(i) + summands[i]).
 **/
struct SumObject {
  std::vector<std::size_t> summands;

  std::size_t total() const {
    return std::accumulate(summands.begin(), summands.end(), std::size_t{0});
  }
  std::size_t offset(std::size_t i) const {
    if (i >= summands.size()) throw DimensionError("SumObject: no summand");
    return std::accumulate(summands.begin(), summands.begin() + i,
                           std::size_t{0});
  }
};

namespace detail {

inline void set_unit_entry(Relation& r, std::size_t cod_index,
                           std::size_t dom_index) {
  r.insert(dom_index, cod_index);
}
inline void set_unit_entry(Matrix& m, std::size_t cod_index,
                           std::size_t dom_index) {
  m(cod_index, dom_index) = 1.0;
}

}  // namespace detail

/// i_k : summands[k] -> total.
template <class M>
M injection(const SumObject& s, std::size_t k) {
  const std::size_t off = s.offset(k);
  M out = Category<M>::zero(s.summands[k], s.total());
  for (std::size_t i = 0; i < s.summands[k]; ++i) {
    detail::set_unit_entry(out, off + i, i);
  }
  return out;
}

/// p_k = i_k†.
template <class M>
M projection(const SumObject& s, std::size_t k) {
  return dagger(injection<M>(s, k));
}

/// Block-diagonal f ⊕ g.
template <class M>
M dsum(const M& f, const M& g) {
  const SumObject src{{dom(f), dom(g)}}, dst{{cod(f), cod(g)}};
  return add(chain(injection<M>(dst, 0), f, projection<M>(src, 0)),
             chain(injection<M>(dst, 1), g, projection<M>(src, 1)));
}

/// ⟨id, id⟩ : A -> A⊕A.
template <class M>
M diagonal_map(std::size_t a) {
  const SumObject s{{a, a}};
  return add(injection<M>(s, 0), injection<M>(s, 1));
}

/// [id, id] : A⊕A -> A.
template <class M>
M codiagonal_map(std::size_t a) {
  return dagger(diagonal_map<M>(a));
}

/// f + g = [id, id]∘(f ⊕ g)∘⟨id, id⟩.
template <class M>
M biproduct_add(const M& f, const M& g) {
  if (dom(f) != dom(g) || cod(f) != cod(g)) {
    throw DimensionError("biproduct_add: shape mismatch");
  }
  return chain(codiagonal_map<M>(cod(f)), dsum(f, g), diagonal_map<M>(dom(f)));
}

/// The normal algebra on the zero object; every structure map is zero.
template <class M>
FrobeniusAlgebra<M> zero_algebra() {
  using C = Category<M>;
  return {0, C::zero(0, 0), C::zero(1, 0), C::identity(0)};
}

/**
 * The normal algebra on A⊕B with m = i_A∘m_A∘(p_A⊗p_A) + i_B∘m_B∘(p_B⊗p_B)
 * and u = i_A∘u_A + i_B∘u_B. Both inputs must be normal.
 **/
template <class M>
FrobeniusAlgebra<M> oplus_algebra(const FrobeniusAlgebra<M>& a,
                                  const FrobeniusAlgebra<M>& b,
                                  Tolerance tol = {}) {
  using C = Category<M>;
  if (!is_normal(a, tol) || !is_normal(b, tol)) {
    throw PreconditionError("oplus_algebra: summands must be normal");
  }
  const SumObject s{{a.carrier, b.carrier}};
  const M ia = injection<M>(s, 0), ib = injection<M>(s, 1);
  const M pa = dagger(ia), pb = dagger(ib);
  M mult = add(chain(ia, a.mult, tensor(pa, pa)),
               chain(ib, b.mult, tensor(pb, pb)));
  M unit = add(compose(ia, a.unit), compose(ib, b.unit));
  return {s.total(), std::move(mult), std::move(unit), C::identity(s.total())};
}

/// Maps from the biproduct structure of CP*: each is a *-homomorphism.
template <class M>
struct StructuralMorphisms {
  M zero;        // A -> 0
  M inj_zero;    // A -> A⊕0
  M proj_zero;   // A⊕0 -> A
  M diag;        // A -> A⊕A
  M codiag;      // A⊕A -> A
  M inj_a;       // A -> A⊕B
  M inj_b;       // B -> A⊕B
  M proj_a;      // A⊕B -> A
  M proj_b;      // A⊕B -> B
};

template <class M>
StructuralMorphisms<M> structural_morphisms(const FrobeniusAlgebra<M>& a,
                                            const FrobeniusAlgebra<M>& b) {
  using C = Category<M>;
  const std::size_t na = a.carrier, nb = b.carrier;
  const SumObject az{{na, 0}}, ab{{na, nb}};
  return {C::zero(na, 0),
          injection<M>(az, 0),
          projection<M>(az, 0),
          diagonal_map<M>(na),
          codiagonal_map<M>(na),
          injection<M>(ab, 0),
          injection<M>(ab, 1),
          projection<M>(ab, 0),
          projection<M>(ab, 1)};
}

/// Unit η : I -> (A⊕B)*⊗(A⊕B) and counit ε = η†, built from the summands'
/// cups through the injections.
template <class M>
std::pair<M, M> dual_of_sum(std::size_t a, std::size_t b) {
  using C = Category<M>;
  const SumObject s{{a, b}};
  const M ia = injection<M>(s, 0), ib = injection<M>(s, 1);
  M unit = add(compose(tensor(ia, ia), C::cup(a)),
               compose(tensor(ib, ib), C::cup(b)));
  M counit = dagger(unit);
  return {std::move(unit), std::move(counit)};
}

/**
 * (A⊕B)⊗(C⊕D) -> (A⊗C)⊕(A⊗D)⊕(B⊗C)⊕(B⊗D) and its inverse. The forward map
 * is Σ i_{XY}∘(p_X⊗p_Y).
 **/
template <class M>
std::pair<M, M> distributivity_iso(std::size_t a, std::size_t b, std::size_t c,
                                   std::size_t d) {
  using C = Category<M>;
  const SumObject left{{a, b}}, right{{c, d}};
  const SumObject out{{a * c, a * d, b * c, b * d}};
  M forward = C::zero(left.total() * right.total(), out.total());
  std::size_t k = 0;
  for (std::size_t x = 0; x < 2; ++x) {
    for (std::size_t y = 0; y < 2; ++y, ++k) {
      forward = add(forward, compose(injection<M>(out, k),
                                     tensor(projection<M>(left, x),
                                            projection<M>(right, y))));
    }
  }
  M backward = dagger(forward);
  return {std::move(forward), std::move(backward)};
}

}  // namespace cpstar
