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

#include "cpstar/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "cpstar/errors.hpp"

namespace cpstar {

namespace {

std::string shape(const Matrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const Matrix& a, const Matrix& b, const char* what) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(what) + ": shape " + shape(a) + " vs " +
                         shape(b));
  }
}

}  // namespace

Tolerance::Tolerance(double eps) : eps_(eps) {
  if (!(eps >= 0.0)) throw PreconditionError("Tolerance must be >= 0");
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Complex{0.0, 0.0}) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("Matrix: " + std::to_string(data_.size()) +
                         " entries for shape " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  for (const Complex& z : data_) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw PreconditionError("Matrix: entries must be finite");
    }
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const Complex> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::column(std::span<const Complex> v) {
  return Matrix(v.size(), 1, std::vector<Complex>(v.begin(), v.end()));
}

Matrix Matrix::col(std::size_t c) const {
  Matrix out(rows_, 1);
  for (std::size_t r = 0; r < rows_; ++r) out(r, 0) = (*this)(r, c);
  return out;
}

Matrix& Matrix::operator+=(const Matrix& other) {
  require_same_shape(*this, other, "operator+");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += other.data_[k];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& other) {
  require_same_shape(*this, other, "operator-");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= other.data_[k];
  return *this;
}

Matrix& Matrix::operator*=(Complex s) {
  for (Complex& z : data_) z *= s;
  return *this;
}

Complex Matrix::trace() const {
  if (!square()) throw DimensionError("trace of non-square " + shape(*this));
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator*(Complex s, Matrix a) { return a *= s; }
Matrix operator*(const Matrix& a, const Matrix& b) { return compose(a, b); }

Matrix compose(const Matrix& after, const Matrix& before) {
  if (after.cols() != before.rows()) {
    throw DimensionError("compose: " + shape(after) + " after " +
                         shape(before));
  }
  Matrix out(after.rows(), before.cols());
  for (std::size_t i = 0; i < after.rows(); ++i) {
    for (std::size_t k = 0; k < after.cols(); ++k) {
      const Complex a = after(i, k);
      if (a == Complex{0.0, 0.0}) continue;
      for (std::size_t j = 0; j < before.cols(); ++j) {
        out(i, j) += a * before(k, j);
      }
    }
  }
  return out;
}

Matrix dagger(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = std::conj(m(i, j));
  }
  return out;
}

Matrix conjugate(const Matrix& m) {
  Matrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = std::conj(m(i, j));
  }
  return out;
}

Matrix transpose(const Matrix& m) {
  Matrix out(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return out;
}

Matrix tensor(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i1 = 0; i1 < a.rows(); ++i1) {
    for (std::size_t j1 = 0; j1 < a.cols(); ++j1) {
      const Complex x = a(i1, j1);
      if (x == Complex{0.0, 0.0}) continue;
      for (std::size_t i2 = 0; i2 < b.rows(); ++i2) {
        for (std::size_t j2 = 0; j2 < b.cols(); ++j2) {
          out(i1 * b.rows() + i2, j1 * b.cols() + j2) = x * b(i2, j2);
        }
      }
    }
  }
  return out;
}

Matrix mat_cup(std::size_t n) {
  Matrix out(n * n, 1);
  for (std::size_t i = 0; i < n; ++i) out(i * n + i, 0) = 1.0;
  return out;
}

Matrix mat_cap(std::size_t n) { return dagger(mat_cup(n)); }

Matrix mat_swap(std::size_t a, std::size_t b) {
  Matrix out(a * b, a * b);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < b; ++j) out(j * a + i, i * b + j) = 1.0;
  }
  return out;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  require_same_shape(a, b, "max_abs_diff");
  double d = 0.0;
  for (std::size_t k = 0; k < a.entries().size(); ++k) {
    d = std::max(d, std::abs(a.entries()[k] - b.entries()[k]));
  }
  return d;
}

bool approx_equal(const Matrix& a, const Matrix& b, Tolerance tol) {
  return max_abs_diff(a, b) <= tol.eps();
}

double frobenius_norm(const Matrix& m) {
  double s = 0.0;
  for (const Complex& z : m.entries()) s += std::norm(z);
  return std::sqrt(s);
}

HermitianEigen hermitian_eigen(const Matrix& m) {
  if (!m.square()) throw DimensionError("hermitian_eigen: " + shape(m));
  const std::size_t n = m.rows();
  Matrix a = 0.5 * (m + dagger(m));
  Matrix v = Matrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (i != j) s += std::norm(a(i, j));
      }
    }
    return s;
  };
  const double scale = std::max(frobenius_norm(a), 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= 1e-30 * scale * scale) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double mag = std::abs(a(p, q));
        if (mag <= 1e-300) continue;
        // Phase-reduce the 2x2 block to a real symmetric one, then apply the
        // classical real rotation.
        const Complex phase = a(p, q) / mag;
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // U restricted to {p, q}: [[phase*c, phase*s], [-s, c]]
        const Complex upp = phase * c;
        const Complex upq = phase * s;
        const Complex uqp = -s;
        const Complex uqq = c;
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const Complex vkp = v(k, p);
          const Complex vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return a(i, i).real() < a(j, j).real();
  });
  HermitianEigen out{std::vector<double>(n), Matrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

double min_eigenvalue(const Matrix& m) {
  if (m.rows() == 0) return 0.0;
  return hermitian_eigen(m).values.front();
}

bool is_psd(const Matrix& m, Tolerance tol) {
  if (!m.square()) throw DimensionError("is_psd: non-square " + shape(m));
  if (m.rows() == 0) return true;
  if (max_abs_diff(m, dagger(m)) > tol.eps()) return false;
  return min_eigenvalue(m) >= -tol.eps();
}

double operator_norm(const Matrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0.0;
  const Matrix gram = compose(dagger(m), m);
  const double top = hermitian_eigen(gram).values.back();
  return std::sqrt(std::max(top, 0.0));
}

}  // namespace cpstar
