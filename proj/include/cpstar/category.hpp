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
#include <string_view>

#include "cpstar/matrix.hpp"
#include "cpstar/relation.hpp"

namespace cpstar {

enum class Backend { Rel, FHilb };

/**
 * Uniform access to the dagger compact structure of the two backends.
 * Objects of both categories are identified with their size/dimension.
 *
 * compose, dagger, tensor, add, conjugate and transpose are found by
 * overload resolution; this trait supplies the constants.
 **/
template <class M>
struct Category;

template <>
struct Category<Relation> {
  static constexpr Backend backend = Backend::Rel;
  static constexpr std::string_view name = "rel";

  static Relation identity(std::size_t n) { return Relation::identity(n); }
  static Relation zero(std::size_t dom, std::size_t cod) {
    return Relation(dom, cod);
  }
  static Relation cup(std::size_t n) { return rel_cup(n); }
  static Relation cap(std::size_t n) { return rel_cap(n); }
  static Relation swap(std::size_t a, std::size_t b) { return rel_swap(a, b); }

  static std::size_t dom(const Relation& r) { return r.src(); }
  static std::size_t cod(const Relation& r) { return r.dst(); }

  // Exact comparison; the tolerance is ignored.
  static bool equal(const Relation& a, const Relation& b, Tolerance = {}) {
    return a == b;
  }
  static double residual(const Relation& a, const Relation& b) {
    return a == b ? 0.0 : 1.0;
  }
};

template <>
struct Category<Matrix> {
  static constexpr Backend backend = Backend::FHilb;
  static constexpr std::string_view name = "fhilb";

  static Matrix identity(std::size_t n) { return Matrix::identity(n); }
  static Matrix zero(std::size_t dom, std::size_t cod) {
    return Matrix(cod, dom);
  }
  static Matrix cup(std::size_t n) { return mat_cup(n); }
  static Matrix cap(std::size_t n) { return mat_cap(n); }
  static Matrix swap(std::size_t a, std::size_t b) { return mat_swap(a, b); }

  static std::size_t dom(const Matrix& m) { return m.cols(); }
  static std::size_t cod(const Matrix& m) { return m.rows(); }

  static bool equal(const Matrix& a, const Matrix& b, Tolerance tol = {}) {
    return approx_equal(a, b, tol);
  }
  static double residual(const Matrix& a, const Matrix& b) {
    return max_abs_diff(a, b);
  }
};

template <class M>
std::size_t dom(const M& f) {
  return Category<M>::dom(f);
}

template <class M>
std::size_t cod(const M& f) {
  return Category<M>::cod(f);
}

/// Composite of a chain written right-to-left: chain(h, g, f) = h∘g∘f.
template <class M>
M chain(const M& f) {
  return f;
}

template <class M, class... Rest>
M chain(const M& first, const M& second, const Rest&... rest) {
  return compose(first, chain(second, rest...));
}

}  // namespace cpstar
