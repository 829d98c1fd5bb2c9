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

#include "cpstar/category.hpp"
#include "cpstar/frobenius.hpp"
#include "cpstar/groupoid.hpp"
#include "cpstar/matrix.hpp"
#include "cpstar/relation.hpp"

namespace cpstar {

/// Column vector of X, Σ X_ij e_i⊗e_j.
Matrix vec(const Matrix& x);
/// Inverse of vec for an n×n matrix.
Matrix unvec(const Matrix& v, std::size_t n);
/// Applies h : A*⊗A -> B*⊗B to an a×a matrix, returning a b×b matrix.
Matrix apply_map(const Matrix& h, const Matrix& x);

/// Σ_ij h(E_ij)⊗E_ij for h of shape (b², a²); size (b·a)×(b·a).
Matrix choi_matrix(const Matrix& h, std::size_t a, std::size_t b);

/// Choi matrix is PSD within tol.
bool is_cp_fhilb(const Matrix& h, std::size_t a, std::size_t b,
                 Tolerance tol = {});

/// (x,x')R(y,y') ⇒ (x',x)R(y',y) ∧ (x,x)R(y,y), for R : X×X -> Y×Y.
bool is_cp_rel(const Relation& r, std::size_t x, std::size_t y);
/// Infers |X| and |Y| from the shape; throws DimensionError on non-squares.
bool is_cp_rel(const Relation& r);

inline bool is_cp(const Matrix& h, std::size_t a, std::size_t b,
                  Tolerance tol = {}) {
  return is_cp_fhilb(h, a, b, tol);
}
inline bool is_cp(const Relation& h, std::size_t a, std::size_t b,
                  Tolerance = {}) {
  return is_cp_rel(h, a, b);
}

/// The doubled map (g_* ⊗ g) with C contracted, for g : A -> C⊗B.
Matrix kraus_to_map(const Matrix& g, std::size_t a, std::size_t b,
                    std::size_t c);
Relation kraus_to_map(const Relation& g, std::size_t a, std::size_t b,
                      std::size_t c);

/// α_B∘f∘κ_A is completely positive.
template <class M>
bool is_cpstar_morphism(const M& f, const FrobeniusAlgebra<M>& a,
                        const FrobeniusAlgebra<M>& b, Tolerance tol = {}) {
  if (dom(f) != a.carrier || cod(f) != b.carrier) {
    throw DimensionError("is_cpstar_morphism: map not typed A -> B");
  }
  return is_cp(chain(action(b), f, coaction(a)), a.carrier, b.carrier, tol);
}

/// gRh ⇒ g⁻¹Rh⁻¹ ∧ id_dom(g) R id_dom(h), for R : Mor(G) -> Mor(H).
bool is_cpstar_rel_groupoid(const Relation& r, const Groupoid& g,
                            const Groupoid& h);

/// h∘cup_A = cup_B.
template <class M>
bool is_unital(const M& h, std::size_t a, std::size_t b, Tolerance tol = {}) {
  using C = Category<M>;
  if (dom(h) != a * a || cod(h) != b * b) {
    throw DimensionError("is_unital: shape");
  }
  return C::equal(compose(h, C::cup(a)), C::cup(b), tol);
}

template <class M>
bool is_dagger_idempotent(const M& p, Tolerance tol = {}) {
  using C = Category<M>;
  if (dom(p) != cod(p)) return false;
  return C::equal(dagger(p), p, tol) && C::equal(compose(p, p), p, tol);
}

/// f = q∘f∘p.
template <class M>
bool split_morphism_check(const M& f, const M& p, const M& q,
                          Tolerance tol = {}) {
  using C = Category<M>;
  if (dom(f) != cod(p) || cod(f) != dom(q)) {
    throw DimensionError("split_morphism_check: shape");
  }
  return C::equal(chain(q, f, p), f, tol);
}

/// The diagonal matrix a = diag(1/2+√2/2, 1/2) used below.
Matrix noncontractive_weight();

/// x ↦ Tr(ρx)·a on M₂ with ρ = a/Tr(a): a CP projection with ‖p(1)‖ > 1.
Matrix noncontractive_projection();

}  // namespace cpstar
