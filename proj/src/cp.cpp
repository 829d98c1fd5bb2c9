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

#include "cpstar/cp.hpp"

#include <cmath>

#include "cpstar/errors.hpp"

namespace cpstar {

namespace {

std::size_t exact_sqrt(std::size_t n) {
  std::size_t r = static_cast<std::size_t>(std::llround(std::sqrt(double(n))));
  if (r * r != n) throw DimensionError("expected a square dimension");
  return r;
}

}  // namespace

Matrix vec(const Matrix& x) {
  return Matrix(x.rows() * x.cols(), 1,
                std::vector<Complex>(x.entries().begin(), x.entries().end()));
}

Matrix unvec(const Matrix& v, std::size_t n) {
  if (v.cols() != 1 || v.rows() != n * n) throw DimensionError("unvec: shape");
  return Matrix(n, n,
                std::vector<Complex>(v.entries().begin(), v.entries().end()));
}

Matrix apply_map(const Matrix& h, const Matrix& x) {
  if (!x.square() || h.cols() != x.rows() * x.rows()) {
    throw DimensionError("apply_map: shape");
  }
  return unvec(compose(h, vec(x)), exact_sqrt(h.rows()));
}

Matrix choi_matrix(const Matrix& h, std::size_t a, std::size_t b) {
  if (h.rows() != b * b || h.cols() != a * a) {
    throw DimensionError("choi_matrix: h must have shape (b², a²)");
  }
  Matrix c(b * a, b * a);
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) {
      for (std::size_t k = 0; k < b; ++k) {
        for (std::size_t l = 0; l < b; ++l) {
          c(k * a + i, l * a + j) = h(k * b + l, i * a + j);
        }
      }
    }
  }
  return c;
}

bool is_cp_fhilb(const Matrix& h, std::size_t a, std::size_t b,
                 Tolerance tol) {
  return is_psd(choi_matrix(h, a, b), tol);
}

bool is_cp_rel(const Relation& r, std::size_t x, std::size_t y) {
  if (r.src() != x * x || r.dst() != y * y) {
    throw DimensionError("is_cp_rel: relation must be X×X -> Y×Y");
  }
  for (const auto& [p, q] : r.pairs()) {
    const std::size_t x0 = p / x, x1 = p % x;
    const std::size_t y0 = q / y, y1 = q % y;
    if (!r.contains(x1 * x + x0, y1 * y + y0)) return false;
    if (!r.contains(x0 * x + x0, y0 * y + y0)) return false;
  }
  return true;
}

bool is_cp_rel(const Relation& r) {
  return is_cp_rel(r, exact_sqrt(r.src()), exact_sqrt(r.dst()));
}

Matrix kraus_to_map(const Matrix& g, std::size_t a, std::size_t b,
                    std::size_t c) {
  if (g.cols() != a || g.rows() != c * b) {
    throw DimensionError("kraus_to_map: g must be A -> C⊗B");
  }
  Matrix h(b * b, a * a);
  for (std::size_t k = 0; k < c; ++k) {
    for (std::size_t b0 = 0; b0 < b; ++b0) {
      for (std::size_t a0 = 0; a0 < a; ++a0) {
        const Complex left = std::conj(g(k * b + b0, a0));
        if (left == Complex(0.0)) continue;
        for (std::size_t b1 = 0; b1 < b; ++b1) {
          for (std::size_t a1 = 0; a1 < a; ++a1) {
            h(b0 * b + b1, a0 * a + a1) += left * g(k * b + b1, a1);
          }
        }
      }
    }
  }
  return h;
}

Relation kraus_to_map(const Relation& g, std::size_t a, std::size_t b,
                      std::size_t c) {
  if (g.src() != a || g.dst() != c * b) {
    throw DimensionError("kraus_to_map: g must be A -> C⊗B");
  }
  Relation h(a * a, b * b);
  for (std::size_t a0 = 0; a0 < a; ++a0) {
    for (std::size_t a1 = 0; a1 < a; ++a1) {
      for (std::size_t k = 0; k < c; ++k) {
        for (std::size_t b0 = 0; b0 < b; ++b0) {
          if (!g.contains(a0, k * b + b0)) continue;
          for (std::size_t b1 = 0; b1 < b; ++b1) {
            if (g.contains(a1, k * b + b1)) {
              h.insert(a0 * a + a1, b0 * b + b1);
            }
          }
        }
      }
    }
  }
  return h;
}

bool is_cpstar_rel_groupoid(const Relation& r, const Groupoid& g,
                            const Groupoid& h) {
  if (r.src() != g.morphisms() || r.dst() != h.morphisms()) {
    throw DimensionError("is_cpstar_rel_groupoid: relation not Mor(G)->Mor(H)");
  }
  for (const auto& [x, y] : r.pairs()) {
    if (!r.contains(g.inv[x], h.inv[y])) return false;
    if (!r.contains(g.ids[g.dom[x]], h.ids[h.dom[y]])) return false;
  }
  return true;
}

Matrix noncontractive_weight() {
  const double big = 0.5 + std::sqrt(2.0) / 2.0;
  const double d[] = {big, 0.5};
  return Matrix::diagonal(std::span<const double>(d));
}

Matrix noncontractive_projection() {
  const Matrix a = noncontractive_weight();
  const Matrix v = vec(a);
  // ρ is real diagonal, so Tr(ρx) = vec(ρ)ᵀ vec(x).
  Matrix p = compose(v, transpose(v));
  p *= Complex(1.0 / a.trace().real());
  return p;
}

}  // namespace cpstar
