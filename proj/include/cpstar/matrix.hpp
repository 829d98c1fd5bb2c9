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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace cpstar {

using Complex = std::complex<double>;

/**
 * Absolute tolerance for every numeric comparison in the FHilb backend.
 **/
class Tolerance {
 public:
  constexpr Tolerance() = default;
  explicit Tolerance(double eps);
  constexpr double eps() const { return eps_; }

 private:
  double eps_ = 1e-9;
};

/**
 * A linear map C^cols -> C^rows, stored densely in row-major order.
 *
 * Zero dimensions are allowed; they represent maps into or out of the zero
 * object used by the biproduct structure.
 **/
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static Matrix identity(std::size_t n);
  static Matrix zero(std::size_t rows, std::size_t cols) {
    return Matrix(rows, cols);
  }
  static Matrix diagonal(std::span<const Complex> diag);
  static Matrix diagonal(std::span<const double> diag);
  // Column vector with the given entries.
  static Matrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const Complex& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }
  std::span<const Complex> entries() const { return data_; }

  Matrix col(std::size_t c) const;

  Matrix& operator+=(const Matrix& other);
  Matrix& operator-=(const Matrix& other);
  Matrix& operator*=(Complex s);

  Complex trace() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator*(Complex s, Matrix a);
/// Matrix product; same as compose(a, b).
Matrix operator*(const Matrix& a, const Matrix& b);

/// `after ∘ before` as a matrix product.
Matrix compose(const Matrix& after, const Matrix& before);
/// Conjugate transpose.
Matrix dagger(const Matrix& m);
/// Kronecker product, row-major consistent with the relation encoding.
Matrix tensor(const Matrix& a, const Matrix& b);
inline Matrix add(const Matrix& a, const Matrix& b) { return a + b; }
/// Entrywise conjugate: the lower-star f_* : A* -> B* of f : A -> B.
Matrix conjugate(const Matrix& m);
/// Plain transpose: the upper-star f^* : B* -> A*.
Matrix transpose(const Matrix& m);

/// Unnormalised maximally entangled column vector, sum_i e_i ⊗ e_i.
Matrix mat_cup(std::size_t n);
/// The row vector dual to mat_cup.
Matrix mat_cap(std::size_t n);
/// Symmetry C^a ⊗ C^b -> C^b ⊗ C^a.
Matrix mat_swap(std::size_t a, std::size_t b);

/// Entrywise max-abs difference. Shapes must agree.
double max_abs_diff(const Matrix& a, const Matrix& b);
bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol = {});

double frobenius_norm(const Matrix& m);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  Matrix vectors;              // columns, matching `values`
};

/**
 * Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
 * rotations. Only the Hermitian part (M + M†)/2 is used.
 **/
HermitianEigen hermitian_eigen(const Matrix& m);

/// True iff ‖M − M†‖_max ≤ eps and the smallest eigenvalue is ≥ −eps.
bool is_psd(const Matrix& m, Tolerance tol = {});
double min_eigenvalue(const Matrix& m);

/// Largest singular value.
double operator_norm(const Matrix& m);

/// Apply a real function to the spectrum of a Hermitian matrix.
template <class F>
Matrix hermitian_function(const Matrix& m, F&& f) {
  HermitianEigen eig = hermitian_eigen(m);
  const std::size_t n = m.rows();
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double fk = f(eig.values[k]);
    for (std::size_t i = 0; i < n; ++i) {
      const Complex vik = eig.vectors(i, k) * fk;
      for (std::size_t j = 0; j < n; ++j) {
        out(i, j) += vik * std::conj(eig.vectors(j, k));
      }
    }
  }
  return out;
}

}  // namespace cpstar
