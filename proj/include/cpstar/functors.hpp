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

#include "cpstar/biproduct.hpp"
#include "cpstar/cp.hpp"
#include "cpstar/frobenius.hpp"
#include "cpstar/groupoid.hpp"

namespace cpstar {

/**
 * F(A) = (A, p) with p = α∘z∘z∘κ : A*⊗A -> A*⊗A.
 **/
template <class M>
struct FImage {
  FrobeniusAlgebra<M> algebra;
  M projection;
};

template <class M>
M f_projection(const FrobeniusAlgebra<M>& alg) {
  return chain(action(alg), alg.normaliser, alg.normaliser, coaction(alg));
}

/// Throws PreconditionError if the algebra is not a normalisable dagger
/// Frobenius algebra.
template <class M>
FImage<M> functor_F_object(const FrobeniusAlgebra<M>& alg, Tolerance tol = {}) {
  if (!check_dagger_frobenius(alg, tol) || !check_normalisable(alg, tol)) {
    throw PreconditionError("functor F: algebra is not normalisable");
  }
  return {alg, f_projection(alg)};
}

/// F(f) = α_B∘z_B∘f∘z_A∘κ_A, defined for CP* morphisms f : A -> B.
template <class M>
M functor_F_morphism(const M& f, const FrobeniusAlgebra<M>& a,
                     const FrobeniusAlgebra<M>& b, Tolerance tol = {}) {
  if (!is_cpstar_morphism(f, a, b, tol)) {
    throw PreconditionError("functor F: not a CP* morphism");
  }
  return chain(action(b), b.normaliser, f, a.normaliser, coaction(a));
}

/// The inverse on hom-sets: f = z_B∘κ_B∘h∘α_A∘z_A.
template <class M>
M reconstruct(const M& h, const FrobeniusAlgebra<M>& a,
              const FrobeniusAlgebra<M>& b) {
  if (dom(h) != a.carrier * a.carrier || cod(h) != b.carrier * b.carrier) {
    throw DimensionError("reconstruct: h must be A*⊗A -> B*⊗B");
  }
  return chain(b.normaliser, coaction(b), h, action(a), a.normaliser);
}

/// Reorders A*⊗A⊗B*⊗B into (A⊗B)*⊗(A⊗B), i.e. id ⊗ σ ⊗ id.
template <class M>
M monoidal_shuffle(std::size_t a, std::size_t b) {
  using C = Category<M>;
  return tensor(tensor(C::identity(a), C::swap(a, b)), C::identity(b));
}

/// The range of a unital CP projection, with its Choi–Effros product.
struct GImage {
  FrobeniusAlgebra<Matrix> algebra;
  Matrix isometry;  // T : r -> m², with T∘T† = p and T†∘T = id
};

/// Throws PreconditionError unless p is a CP, unital dagger idempotent on
/// M_m, or if its spectrum is not {0, 1} within tol.
GImage functor_G_fhilb(const Matrix& p, std::size_t m, Tolerance tol = {});

struct RoundTrip {
  GImage image;
  Matrix f;  // (M_m, p) -> F(G(p))
  Matrix g;  // F(G(p)) -> (M_m, p)
  Matrix fg_projection;  // the projection of F(G(p))
};

/// f = α∘z∘T† and g = T∘z∘κ, so g∘f = p and f∘g = F(G(p)).
RoundTrip round_trip_witnesses(const Matrix& p, std::size_t m,
                               Tolerance tol = {});

/// Conditional expectations used as fixtures: the identity on M_m, the
/// diagonal part on M_m, and the block-diagonal part for block sizes.
Matrix identity_expectation(std::size_t m);
Matrix diagonal_expectation(std::size_t m);
Matrix block_expectation(const std::vector<std::size_t>& blocks);

template <class M>
FrobeniusAlgebra<M> cpm_embedding(std::size_t n, Tolerance tol = {}) {
  return pair_of_pants<M>(n, tol);
}

/// ⊕ of the normalised pair-of-pants algebras, folded from the left.
template <class M>
FrobeniusAlgebra<M> cpm_biproduct_embedding(const std::vector<std::size_t>& objs,
                                            Tolerance tol = {}) {
  FrobeniusAlgebra<M> acc = zero_algebra<M>();
  bool first = true;
  for (std::size_t n : objs) {
    FrobeniusAlgebra<M> next = normalise(pair_of_pants<M>(n, tol), tol).first;
    acc = first ? std::move(next) : oplus_algebra(acc, next, tol);
    first = false;
  }
  return acc;
}

/// A relation R : Mor(G) -> Mor(H) with R†R = id, RR† = id and both R, R†
/// satisfying the CP* condition, if one exists. Exhaustive over all
/// 2^(|Mor G|·|Mor H|) relations; intended for tiny groupoids.
std::optional<Relation> find_unitary_cpstar_iso(const Groupoid& g,
                                                const Groupoid& h);

struct EssentialImageCheck {
  bool holds = false;
  std::size_t candidates_examined = 0;
  std::size_t targets = 0;
};

/// No disjoint union of indiscrete groupoids with two morphisms is unitarily
/// isomorphic to Z₂ in CP*[Rel].
EssentialImageCheck z2_essential_image_report();
bool z2_essential_image_check();

}  // namespace cpstar
