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

#include "cpstar/functors.hpp"

#include <cmath>
#include <string>

namespace cpstar {

GImage functor_G_fhilb(const Matrix& p, std::size_t m, Tolerance tol) {
  const std::size_t n = m * m;
  if (p.rows() != n || p.cols() != n) {
    throw DimensionError("functor G: p must act on M_m");
  }
  if (!is_dagger_idempotent(p, tol)) {
    throw PreconditionError("functor G: p is not a dagger idempotent");
  }
  if (!is_cp_fhilb(p, m, m, tol)) {
    throw PreconditionError("functor G: p is not completely positive");
  }
  if (!is_unital(p, m, m, tol)) {
    throw PreconditionError("functor G: p is not unital");
  }

  const HermitianEigen eig = hermitian_eigen(p);
  std::vector<std::size_t> keep;
  for (std::size_t k = 0; k < n; ++k) {
    const double v = eig.values[k];
    if (std::abs(v - 1.0) <= tol.eps()) {
      keep.push_back(k);
    } else if (std::abs(v) > tol.eps()) {
      throw PreconditionError("functor G: eigenvalue " + std::to_string(v) +
                              " is neither 0 nor 1");
    }
  }
  const std::size_t r = keep.size();
  Matrix t(n, r);
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < n; ++i) t(i, j) = eig.vectors(i, keep[j]);
  }
  const Matrix td = dagger(t);

  FrobeniusAlgebra<Matrix> alg{r,
                               chain(td, pants_mult<Matrix>(m), tensor(t, t)),
                               compose(td, mat_cup(m)), Matrix::identity(r)};
  auto z = find_normaliser(alg.mult, r, tol);
  if (!z) throw PreconditionError("functor G: range is not normalisable");
  alg.normaliser = std::move(*z);
  return {std::move(alg), t};
}

RoundTrip round_trip_witnesses(const Matrix& p, std::size_t m, Tolerance tol) {
  GImage img = functor_G_fhilb(p, m, tol);
  const FrobeniusAlgebra<Matrix>& b = img.algebra;
  const Matrix td = dagger(img.isometry);
  Matrix f = chain(action(b), b.normaliser, td);
  Matrix g = chain(img.isometry, b.normaliser, coaction(b));
  Matrix q = f_projection(b);
  return {std::move(img), std::move(f), std::move(g), std::move(q)};
}

Matrix identity_expectation(std::size_t m) {
  return Matrix::identity(m * m);
}

Matrix diagonal_expectation(std::size_t m) {
  Matrix p(m * m, m * m);
  for (std::size_t i = 0; i < m; ++i) p(i * m + i, i * m + i) = 1.0;
  return p;
}

Matrix block_expectation(const std::vector<std::size_t>& blocks) {
  std::size_t m = 0;
  std::vector<std::size_t> block_of;
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (std::size_t i = 0; i < blocks[b]; ++i) block_of.push_back(b);
    m += blocks[b];
  }
  Matrix p(m * m, m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (block_of[i] == block_of[j]) p(i * m + j, i * m + j) = 1.0;
    }
  }
  return p;
}

std::optional<Relation> find_unitary_cpstar_iso(const Groupoid& g,
                                                const Groupoid& h) {
  const std::size_t a = g.morphisms(), b = h.morphisms();
  const std::size_t bits = a * b;
  if (bits >= 8 * sizeof(std::size_t) || bits > 24) {
    throw std::invalid_argument("find_unitary_cpstar_iso: groupoids too large");
  }
  const Relation ida = Relation::identity(a), idb = Relation::identity(b);
  for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
    Relation r(a, b);
    for (std::size_t k = 0; k < bits; ++k) {
      if (mask >> k & 1) r.insert(k / b, k % b);
    }
    const Relation rd = dagger(r);
    if (compose(rd, r) == ida && compose(r, rd) == idb &&
        is_cpstar_rel_groupoid(r, g, h) && is_cpstar_rel_groupoid(rd, h, g)) {
      return r;
    }
  }
  return std::nullopt;
}

EssentialImageCheck z2_essential_image_report() {
  const Groupoid z2 = group_groupoid(cyclic_group(2));
  EssentialImageCheck out;
  out.holds = true;
  for (const Groupoid& h : indiscrete_unions(2)) {
    ++out.targets;
    out.candidates_examined += std::size_t{1} << (2 * h.morphisms());
    if (find_unitary_cpstar_iso(z2, h)) out.holds = false;
  }
  return out;
}

bool z2_essential_image_check() { return z2_essential_image_report().holds; }

}  // namespace cpstar
