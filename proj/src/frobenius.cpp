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

#include "cpstar/frobenius.hpp"

#include <cmath>

namespace cpstar {

std::optional<Relation> find_normaliser(const Relation& mult, std::size_t n,
                                        Tolerance) {
  const Relation id = Relation::identity(n);
  if (compose(mult, dagger(mult)) != id) return std::nullopt;
  return id;
}

std::optional<Matrix> find_normaliser(const Matrix& mult, std::size_t n,
                                      Tolerance tol) {
  const Matrix loop = compose(mult, dagger(mult));
  if (loop.rows() != n) throw DimensionError("find_normaliser: carrier");
  if (n == 0) return Matrix(0, 0);
  if (!is_psd(loop, tol)) return std::nullopt;
  if (min_eigenvalue(loop) <= tol.eps()) return std::nullopt;
  Matrix z = hermitian_function(loop, [](double x) { return 1.0 / std::sqrt(x); });
  const Matrix id = Matrix::identity(n);
  const Matrix zm = compose(z, mult);
  if (!approx_equal(zm, compose(mult, tensor(z, id)), tol) ||
      !approx_equal(zm, compose(mult, tensor(id, z)), tol)) {
    return std::nullopt;
  }
  return z;
}

bool is_positive_iso(const Relation& z, Tolerance) {
  return z == Relation::identity(z.src());
}

bool is_positive_iso(const Matrix& z, Tolerance tol) {
  if (!is_psd(z, tol)) return false;
  return z.rows() == 0 || min_eigenvalue(z) > tol.eps();
}

Relation inverse_normaliser(const Relation& z, Tolerance) {
  // Isomorphisms in Rel are graphs of bijections; the inverse is the converse.
  const Relation inv = dagger(z);
  if (compose(inv, z) != Relation::identity(z.src()) ||
      compose(z, inv) != Relation::identity(z.dst())) {
    throw PreconditionError("normaliser is not invertible");
  }
  return inv;
}

Matrix inverse_normaliser(const Matrix& z, Tolerance tol) {
  if (!z.square()) throw DimensionError("inverse_normaliser: non-square");
  if (z.rows() == 0) return z;
  if (!approx_equal(z, dagger(z), tol)) {
    throw PreconditionError("normaliser is not self-adjoint");
  }
  const HermitianEigen eig = hermitian_eigen(z);
  for (double v : eig.values) {
    if (std::abs(v) <= tol.eps()) {
      throw PreconditionError("normaliser is not invertible");
    }
  }
  return hermitian_function(z, [](double x) { return 1.0 / x; });
}

FrobeniusAlgebra<Matrix> classical_structure(std::size_t n) {
  Matrix mult(n, n * n);
  Matrix unit(n, 1);
  for (std::size_t i = 0; i < n; ++i) {
    mult(i, i * n + i) = 1.0;
    unit(i, 0) = 1.0;
  }
  return {n, std::move(mult), std::move(unit), Matrix::identity(n)};
}

FrobeniusAlgebra<Relation> classical_relation_structure(std::size_t n) {
  Relation mult(n * n, n);
  Relation unit(1, n);
  for (std::size_t i = 0; i < n; ++i) {
    mult.insert(i * n + i, i);
    unit.insert(0, i);
  }
  return {n, std::move(mult), std::move(unit), Relation::identity(n)};
}

}  // namespace cpstar
