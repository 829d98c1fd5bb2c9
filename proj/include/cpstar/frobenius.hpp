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
#include <string>
#include <utility>
#include <vector>

#include "cpstar/category.hpp"
#include "cpstar/errors.hpp"
#include "cpstar/report.hpp"

namespace cpstar {

/**
 * A dagger Frobenius algebra (A, m, u) with a normaliser z, over either
 * backend. Comultiplication and counit are the daggers of m and u.
 *
 * The plain aggregate does not validate; use `validated` when the data comes
 * from outside.
 **/
template <class M>
struct FrobeniusAlgebra {
  std::size_t carrier = 0;
  M mult;        // A⊗A -> A
  M unit;        // I -> A
  M normaliser;  // A -> A

  static FrobeniusAlgebra validated(std::size_t carrier, M mult, M unit,
                                    std::optional<M> normaliser,
                                    Tolerance tol = {});
};

// ---------------------------------------------------------------------------
// Backend-specific pieces, defined in frobenius.cpp.

/// The unique candidate z = (m∘m†)^{-1/2}, when m∘m† is an invertible
/// positive central map. In Rel the only candidate is the identity.
std::optional<Relation> find_normaliser(const Relation& mult, std::size_t n,
                                        Tolerance tol = {});
std::optional<Matrix> find_normaliser(const Matrix& mult, std::size_t n,
                                      Tolerance tol = {});

/// Positive in the sense g = h†∘h. In Rel only identities are positive
/// isomorphisms, so this is tested as equality with the identity.
bool is_positive_iso(const Relation& z, Tolerance tol = {});
bool is_positive_iso(const Matrix& z, Tolerance tol = {});

Relation inverse_normaliser(const Relation& z, Tolerance tol = {});
Matrix inverse_normaliser(const Matrix& z, Tolerance tol = {});

/// Copying structure on the standard basis: e_i⊗e_j ↦ δ_ij e_i, u = Σ e_i.
FrobeniusAlgebra<Matrix> classical_structure(std::size_t n);
FrobeniusAlgebra<Relation> classical_relation_structure(std::size_t n);

// ---------------------------------------------------------------------------

template <class M>
void check_shapes(const FrobeniusAlgebra<M>& alg) {
  using C = Category<M>;
  const std::size_t n = alg.carrier;
  auto fail = [](const std::string& what) {
    throw DimensionError("FrobeniusAlgebra: " + what);
  };
  if (C::dom(alg.mult) != n * n || C::cod(alg.mult) != n) fail("mult shape");
  if (C::dom(alg.unit) != 1 || C::cod(alg.unit) != n) fail("unit shape");
  if (C::dom(alg.normaliser) != n || C::cod(alg.normaliser) != n) {
    fail("normaliser shape");
  }
}

template <class M>
M comult(const FrobeniusAlgebra<M>& alg) {
  return dagger(alg.mult);
}

/// Checks associativity, both unit laws and both halves of the Frobenius law.
template <class M>
Report check_dagger_frobenius(const FrobeniusAlgebra<M>& alg,
                              Tolerance tol = {}) {
  using C = Category<M>;
  check_shapes(alg);
  const std::size_t n = alg.carrier;
  const M id = C::identity(n);
  const M& m = alg.mult;
  const M d = dagger(m);
  Report r;
  auto record = [&](const char* name, const M& lhs, const M& rhs) {
    const double res = C::residual(lhs, rhs);
    r.add(name, C::equal(lhs, rhs, tol), res);
  };
  record("associativity", compose(m, tensor(m, id)), compose(m, tensor(id, m)));
  record("left-unit", compose(m, tensor(alg.unit, id)), id);
  record("right-unit", compose(m, tensor(id, alg.unit)), id);
  const M middle = compose(d, m);
  record("frobenius-left", compose(tensor(id, m), tensor(d, id)), middle);
  record("frobenius-right", compose(tensor(m, id), tensor(id, d)), middle);
  return r;
}

/// Checks that the normaliser z is central, positive and invertible and that
/// m∘m†∘z∘z = id.
template <class M>
Report check_normalisable(const FrobeniusAlgebra<M>& alg, Tolerance tol = {}) {
  using C = Category<M>;
  check_shapes(alg);
  const std::size_t n = alg.carrier;
  const M id = C::identity(n);
  const M& m = alg.mult;
  const M& z = alg.normaliser;
  Report r;
  const M zm = compose(z, m);
  const M mz1 = compose(m, tensor(z, id));
  const M mz2 = compose(m, tensor(id, z));
  r.add("central-left", C::equal(zm, mz1, tol), C::residual(zm, mz1));
  r.add("central-right", C::equal(zm, mz2, tol), C::residual(zm, mz2));
  r.add("positive", is_positive_iso(z, tol));
  bool invertible = true;
  try {
    (void)inverse_normaliser(z, tol);
  } catch (const PreconditionError&) {
    invertible = false;
  }
  r.add("invertible", invertible);
  const M loop = chain(m, dagger(m), z, z);
  r.add("normalisation", C::equal(loop, id, tol), C::residual(loop, id));
  return r;
}

template <class M>
bool is_normal(const FrobeniusAlgebra<M>& alg, Tolerance tol = {}) {
  using C = Category<M>;
  return C::equal(alg.normaliser, C::identity(alg.carrier), tol) &&
         check_normalisable(alg, tol).pass();
}

/// The normal algebra (A, z∘m, z⁻¹∘u, id), together with the identity map
/// on A, which is a unitary CP* isomorphism from the input to the output.
template <class M>
std::pair<FrobeniusAlgebra<M>, M> normalise(const FrobeniusAlgebra<M>& alg,
                                            Tolerance tol = {}) {
  using C = Category<M>;
  check_shapes(alg);
  const M zinv = inverse_normaliser(alg.normaliser, tol);
  FrobeniusAlgebra<M> out{alg.carrier, compose(alg.normaliser, alg.mult),
                          compose(zinv, alg.unit), C::identity(alg.carrier)};
  return {std::move(out), C::identity(alg.carrier)};
}

/// A -> A*⊗A, (id ⊗ m)∘(cup ⊗ id).
template <class M>
M action(const FrobeniusAlgebra<M>& alg) {
  using C = Category<M>;
  const std::size_t n = alg.carrier;
  return compose(tensor(C::identity(n), alg.mult),
                 tensor(C::cup(n), C::identity(n)));
}

/// A*⊗A -> A, the dagger of the action.
template <class M>
M coaction(const FrobeniusAlgebra<M>& alg) {
  return dagger(action(alg));
}

/// The involution s : A* -> A, (cap ⊗ id)∘(id ⊗ m†)∘(id ⊗ u).
template <class M>
M involution(const FrobeniusAlgebra<M>& alg) {
  using C = Category<M>;
  const std::size_t n = alg.carrier;
  const M id = C::identity(n);
  return chain(tensor(C::cap(n), id), tensor(id, dagger(alg.mult)),
               tensor(id, alg.unit));
}

/// Pair-of-pants multiplication on A*⊗A, id ⊗ cap ⊗ id.
template <class M>
M pants_mult(std::size_t n) {
  using C = Category<M>;
  return tensor(tensor(C::identity(n), C::cap(n)), C::identity(n));
}

/**
 * Checks the action/coaction forms of the Frobenius and normalisation laws:
 * the action is multiplicative and unital into the pair-of-pants algebra on
 * A*⊗A, and coaction∘action∘z∘z = id.
 **/
template <class M>
Report check_alternative_forms(const FrobeniusAlgebra<M>& alg,
                               Tolerance tol = {}) {
  using C = Category<M>;
  const std::size_t n = alg.carrier;
  const M a = action(alg);
  const M k = dagger(a);
  Report r;
  const M lhs = compose(pants_mult<M>(n), tensor(a, a));
  const M rhs = compose(a, alg.mult);
  r.add("action-multiplicative", C::equal(lhs, rhs, tol),
        C::residual(lhs, rhs));
  const M au = compose(a, alg.unit);
  r.add("action-unit", C::equal(au, C::cup(n), tol),
        C::residual(au, C::cup(n)));
  const M loop = chain(k, a, alg.normaliser, alg.normaliser);
  r.add("coaction-action-normalised", C::equal(loop, C::identity(n), tol),
        C::residual(loop, C::identity(n)));
  return r;
}

/// f : A -> B preserves multiplication and involution:
/// f∘m_A = m_B∘(f⊗f) and f∘s_A = s_B∘f_*.
template <class M>
Report star_homomorphism_report(const M& f, const FrobeniusAlgebra<M>& a,
                                const FrobeniusAlgebra<M>& b,
                                Tolerance tol = {}) {
  using C = Category<M>;
  if (C::dom(f) != a.carrier || C::cod(f) != b.carrier) {
    throw DimensionError("check_star_homomorphism: map not typed A -> B");
  }
  Report r;
  const M lhs = compose(f, a.mult);
  const M rhs = compose(b.mult, tensor(f, f));
  r.add("multiplicative", C::equal(lhs, rhs, tol), C::residual(lhs, rhs));
  const M ls = compose(f, involution(a));
  const M rs = compose(involution(b), conjugate(f));
  r.add("involutive", C::equal(ls, rs, tol), C::residual(ls, rs));
  return r;
}

template <class M>
bool check_star_homomorphism(const M& f, const FrobeniusAlgebra<M>& a,
                             const FrobeniusAlgebra<M>& b, Tolerance tol = {}) {
  return star_homomorphism_report(f, a, b, tol).pass();
}

/// The algebra on A*⊗A with multiplication id ⊗ cap ⊗ id and unit the cup.
template <class M>
FrobeniusAlgebra<M> pair_of_pants(std::size_t n, Tolerance tol = {}) {
  using C = Category<M>;
  FrobeniusAlgebra<M> alg{n * n, pants_mult<M>(n), C::cup(n),
                          C::identity(n * n)};
  auto z = find_normaliser(alg.mult, alg.carrier, tol);
  if (!z) throw PreconditionError("pair_of_pants: no normaliser");
  alg.normaliser = std::move(*z);
  return alg;
}

/// A⊗B with multiplication (m_A ⊗ m_B)∘(id ⊗ σ ⊗ id).
template <class M>
FrobeniusAlgebra<M> tensor_algebra(const FrobeniusAlgebra<M>& a,
                                   const FrobeniusAlgebra<M>& b) {
  using C = Category<M>;
  const M shuffle =
      tensor(tensor(C::identity(a.carrier), C::swap(b.carrier, a.carrier)),
             C::identity(b.carrier));
  return {a.carrier * b.carrier, compose(tensor(a.mult, b.mult), shuffle),
          tensor(a.unit, b.unit), tensor(a.normaliser, b.normaliser)};
}

template <class M>
FrobeniusAlgebra<M> FrobeniusAlgebra<M>::validated(std::size_t carrier, M mult,
                                                   M unit,
                                                   std::optional<M> normaliser,
                                                   Tolerance tol) {
  using C = Category<M>;
  FrobeniusAlgebra alg{carrier, std::move(mult), std::move(unit),
                       normaliser ? std::move(*normaliser)
                                  : C::identity(carrier)};
  check_shapes(alg);
  Report axioms = check_dagger_frobenius(alg, tol);
  if (!axioms) throw PreconditionError("not a dagger Frobenius algebra");
  if (!check_normalisable(alg, tol)) {
    throw PreconditionError("algebra is not normalisable by this normaliser");
  }
  return alg;
}

}  // namespace cpstar
