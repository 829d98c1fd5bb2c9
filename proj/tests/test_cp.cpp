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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <set>

#include "cpstar/cp.hpp"
#include "cpstar/functors.hpp"
#include "cpstar/groupoid.hpp"
#include "support/generators.hpp"

using namespace cpstar;
using cpstar::testing::Rng;

namespace {

Eigen::VectorXd eigenvalues(const Matrix& m) {
  Eigen::MatrixXcd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  }
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(e).eigenvalues();
}

// The map X ↦ Xᵀ on M_n.
Matrix transpose_map(std::size_t n) {
  Matrix h(n * n, n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) h(j * n + i, i * n + j) = 1.0;
  }
  return h;
}

// Tensor of CPM morphisms, reordered to act on (A⊗C)*⊗(A⊗C).
template <class M>
M cpm_tensor(const M& h1, std::size_t a, std::size_t b, const M& h2,
             std::size_t c, std::size_t d) {
  return chain(monoidal_shuffle<M>(b, d), tensor(h1, h2),
               dagger(monoidal_shuffle<M>(a, c)));
}

// Choi-matrix oracle for the CP decision: PSD by Eigen's solver.
bool cp_oracle(const Matrix& h, std::size_t a, std::size_t b) {
  const Matrix c = choi_matrix(h, a, b);
  if (max_abs_diff(c, dagger(c)) > 1e-9) return false;
  return eigenvalues(c).minCoeff() >= -1e-9;
}

}  // namespace

TEST_CASE("vec, unvec and apply_map") {
  Rng rng(1);
  const Matrix x = testing::random_matrix(rng, 3, 3);
  CHECK(approx_equal(unvec(vec(x), 3), x, Tolerance(0.0)));
  CHECK(approx_equal(apply_map(Matrix::identity(9), x), x, Tolerance(0.0)));
  CHECK(approx_equal(apply_map(transpose_map(3), x), transpose(x),
                     Tolerance(0.0)));
}

TEST_CASE("Choi matrix of the identity and transpose maps") {
  const Matrix id_choi = choi_matrix(Matrix::identity(4), 2, 2);
  const Eigen::VectorXd ev = eigenvalues(id_choi);
  CHECK(ev(0) == doctest::Approx(0.0));
  CHECK(ev(2) == doctest::Approx(0.0));
  CHECK(ev(3) == doctest::Approx(2.0));
  CHECK(is_cp_fhilb(Matrix::identity(4), 2, 2));

  const Eigen::VectorXd tv = eigenvalues(choi_matrix(transpose_map(2), 2, 2));
  CHECK(tv(0) == doctest::Approx(-1.0));
  CHECK_FALSE(is_cp_fhilb(transpose_map(2), 2, 2));
  CHECK_THROWS_AS(is_cp_fhilb(Matrix(4, 9), 2, 2), DimensionError);
}

TEST_CASE("Choi decision agrees with the Eigen oracle") {
  Rng rng(2);
  int cp = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t a = testing::uniform(rng, 1, 3);
    const std::size_t b = testing::uniform(rng, 1, 3);
    Matrix h;
    switch (trial % 3) {
      case 0:
        h = testing::random_cp_map(rng, a, b);
        break;
      case 1:
        h = testing::random_cp_map(rng, a, b) -
            Complex(0.3) * testing::random_cp_map(rng, a, b);
        break;
      default:
        h = testing::random_matrix(rng, b * b, a * a);
    }
    const bool mine = is_cp_fhilb(h, a, b);
    CHECK(mine == cp_oracle(h, a, b));
    cp += mine;
  }
  CHECK(cp >= 67);
}

TEST_CASE("Kraus examples") {
  CHECK(approx_equal(kraus_to_map(Matrix::identity(2), 2, 2, 1),
                     Matrix::identity(4)));
  // e₀ ↦ e₀⊗e₀, e₁ ↦ e₁⊗e₁ : the completely dephasing channel.
  Matrix g(4, 2);
  g(0, 0) = g(3, 1) = 1.0;
  const Matrix h = kraus_to_map(g, 2, 2, 2);
  CHECK(is_cp_fhilb(h, 2, 2));
  CHECK(approx_equal(h, diagonal_expectation(2)));
  CHECK(kraus_to_map(Relation::identity(3), 3, 3, 1) == Relation::identity(9));
}

TEST_CASE("Kraus soundness in both backends") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t a = testing::uniform(rng, 1, 3);
    const std::size_t b = testing::uniform(rng, 1, 3);
    CHECK(is_cp_fhilb(testing::random_cp_map(rng, a, b), a, b));
    CHECK(is_cp_rel(testing::random_cp_relation(rng, a, b), a, b));
  }
}

TEST_CASE("is_cp_rel examples") {
  CHECK(is_cp_rel(Relation::identity(4), 2, 2));
  CHECK(is_cp_rel(Relation::identity(9)));
  CHECK_FALSE(is_cp_rel(Relation(4, 4, {{1, 1}}), 2, 2));
  CHECK(is_cp_rel(Relation(4, 4, {{1, 1}, {2, 2}, {0, 0}, {3, 3}}), 2, 2));
  CHECK_THROWS_AS(is_cp_rel(Relation(3, 4)), DimensionError);
  for (const Groupoid& g : testing::small_groupoids(4)) {
    const auto alg = groupoid_to_algebra(g);
    CHECK(is_cp_rel(f_projection(alg)));
  }
}

TEST_CASE("CP* condition on Z2") {
  const Groupoid z2 = group_groupoid(cyclic_group(2));
  const auto alg = groupoid_to_algebra(z2);
  const Relation swap_only(2, 2, {{1, 1}});
  CHECK_FALSE(is_cpstar_rel_groupoid(swap_only, z2, z2));
  CHECK_FALSE(is_cpstar_morphism(swap_only, alg, alg));
  CHECK(is_cpstar_rel_groupoid(Relation::identity(2), z2, z2));
  CHECK(is_cpstar_morphism(Relation::identity(2), alg, alg));
  const Groupoid nine = nine_morphism_groupoid();
  CHECK(is_cpstar_rel_groupoid(counterexample_R(), nine, nine));
  CHECK(is_cpstar_morphism(counterexample_R(), groupoid_to_algebra(nine),
                           groupoid_to_algebra(nine)));
}

TEST_CASE("groupoid CP* condition equals the doubled CP condition") {
  // Exhaustive over all relations between groupoids with at most 4 morphisms.
  const auto groupoids = testing::small_groupoids(4);
  std::size_t checked = 0, positive = 0;
  for (const Groupoid& g : groupoids) {
    const auto ga = groupoid_to_algebra(g);
    for (const Groupoid& h : groupoids) {
      const auto ha = groupoid_to_algebra(h);
      const std::size_t bits = g.morphisms() * h.morphisms();
      for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
        Relation r(g.morphisms(), h.morphisms());
        for (std::size_t k = 0; k < bits; ++k) {
          if (mask >> k & 1) r.insert(k / h.morphisms(), k % h.morphisms());
        }
        const bool lhs = is_cpstar_rel_groupoid(r, g, h);
        if (lhs != is_cpstar_morphism(r, ga, ha)) {
          FAIL("mismatch on " << g.name << " -> " << h.name << " mask "
                              << mask);
        }
        ++checked;
        positive += lhs;
      }
    }
  }
  MESSAGE("relations checked: " << checked << ", CP*: " << positive);
  CHECK(positive > 0);
}

TEST_CASE("unitality") {
  CHECK(is_unital(Matrix::identity(4), 2, 2));
  CHECK(is_unital(diagonal_expectation(2), 2, 2));
  CHECK(is_unital(block_expectation({2, 1}), 3, 3));
  CHECK_FALSE(is_unital(noncontractive_projection(), 2, 2));
  CHECK(is_unital(Relation::identity(4), 2, 2));
  CHECK_FALSE(is_unital(Relation(4, 4), 2, 2));
  CHECK_THROWS_AS(is_unital(Matrix::identity(4), 2, 3), DimensionError);
}

TEST_CASE("dagger idempotents and the Split morphism condition") {
  const Matrix id = Matrix::identity(4);
  CHECK(is_dagger_idempotent(id));
  Rng rng(4);
  const Matrix f = testing::random_cp_map(rng, 2, 2);
  CHECK(split_morphism_check(f, id, id));
  const Matrix p = diagonal_expectation(2);
  CHECK(is_dagger_idempotent(p));
  CHECK(split_morphism_check(chain(p, f, p), p, p));
  CHECK_FALSE(split_morphism_check(f, p, p));
  for (const auto& alg : testing::sample_fhilb_algebras()) {
    const Matrix fp = f_projection(alg);
    CHECK(is_dagger_idempotent(fp, Tolerance(1e-9)));
    CHECK(is_cp_fhilb(fp, alg.carrier, alg.carrier));
  }
  CHECK_FALSE(is_dagger_idempotent(Matrix(2, 3)));
}

TEST_CASE("non-contractive projection") {
  const double half_root2 = std::sqrt(2.0) / 2.0;
  const Matrix a = noncontractive_weight();
  CHECK(a.trace().real() == doctest::Approx(1.0 + half_root2).epsilon(1e-12));
  CHECK(compose(a, a).trace().real() ==
        doctest::Approx(1.0 + half_root2).epsilon(1e-12));
  // f(a) = Tr(ρa) = Tr(a²)/Tr(a) = 1.
  CHECK((compose(a, a).trace() / a.trace()).real() == doctest::Approx(1.0));

  const Matrix p = noncontractive_projection();
  CHECK(approx_equal(dagger(p), p, Tolerance(1e-12)));
  CHECK(approx_equal(compose(p, p), p, Tolerance(1e-12)));
  CHECK(is_cp_fhilb(p, 2, 2));
  CHECK(eigenvalues(choi_matrix(p, 2, 2)).minCoeff() >= -1e-9);
  const double norm = operator_norm(apply_map(p, Matrix::identity(2)));
  CHECK(norm == doctest::Approx(0.5 + half_root2).epsilon(1e-12));
  CHECK(norm > 1.0);
  CHECK(approx_equal(apply_map(p, a), a, Tolerance(1e-12)));
}

TEST_CASE("CP maps are closed under composition and tensor") {
  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t a = testing::uniform(rng, 1, 2);
    const std::size_t b = testing::uniform(rng, 1, 2);
    const std::size_t c = testing::uniform(rng, 1, 2);
    const Matrix f = testing::random_cp_map(rng, a, b);
    const Matrix g = testing::random_cp_map(rng, b, c);
    CHECK(is_cp_fhilb(compose(g, f), a, c, Tolerance(1e-8)));
    CHECK(is_cp_fhilb(cpm_tensor(f, a, b, g, b, c), a * b, b * c,
                      Tolerance(1e-8)));
    const Relation r = testing::random_cp_relation(rng, a, b);
    const Relation s = testing::random_cp_relation(rng, b, c);
    CHECK(is_cp_rel(compose(s, r), a, c));
    CHECK(is_cp_rel(cpm_tensor(r, a, b, s, b, c), a * b, b * c));
  }
  // Tensor of dagger idempotents is a dagger idempotent.
  const Matrix p = cpm_tensor(diagonal_expectation(2), 2, 2,
                              noncontractive_projection(), 2, 2);
  CHECK(is_dagger_idempotent(p, Tolerance(1e-12)));
  CHECK(is_cp_fhilb(p, 4, 4));
}

TEST_CASE("CP* morphisms are closed under composition and dagger") {
  Rng rng(6);
  const auto algs = testing::sample_fhilb_algebras();
  for (int trial = 0; trial < 30; ++trial) {
    const auto& a = algs[testing::uniform(rng, 0, algs.size() - 1)];
    const auto& b = algs[testing::uniform(rng, 0, algs.size() - 1)];
    const auto& c = algs[testing::uniform(rng, 0, algs.size() - 1)];
    const Matrix f = testing::random_cpstar_matrix(rng, a, b);
    const Matrix g = testing::random_cpstar_matrix(rng, b, c);
    const Tolerance tol(1e-8);
    CHECK(is_cpstar_morphism(f, a, b, tol));
    CHECK(is_cpstar_morphism(compose(g, f), a, c, tol));
    CHECK(is_cpstar_morphism(dagger(f), b, a, tol));
  }
  const auto groupoids = testing::small_groupoids(4);
  for (int trial = 0; trial < 100; ++trial) {
    const Groupoid& g = groupoids[testing::uniform(rng, 0, groupoids.size() - 1)];
    const Groupoid& h = groupoids[testing::uniform(rng, 0, groupoids.size() - 1)];
    const Groupoid& k = groupoids[testing::uniform(rng, 0, groupoids.size() - 1)];
    const Relation r = testing::random_cpstar_relation(rng, g, h);
    const Relation s = testing::random_cpstar_relation(rng, h, k);
    CHECK(is_cpstar_rel_groupoid(r, g, h));
    CHECK(is_cpstar_rel_groupoid(compose(s, r), g, k));
    CHECK(is_cpstar_rel_groupoid(dagger(r), h, g));
  }
}

TEST_CASE("exploratory: bounded Kraus search against the Rel CP decider") {
  // Every relation g : A -> C⊗B with |C| ≤ |A|·|B|, for |A| = |B| = 2.
  const std::size_t a = 2, b = 2;
  std::set<std::vector<IndexPair>> kraus_images;
  for (std::size_t c = 1; c <= a * b; ++c) {
    const std::size_t bits = a * c * b;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
      Relation g(a, c * b);
      for (std::size_t k = 0; k < bits; ++k) {
        if (mask >> k & 1) g.insert(k / (c * b), k % (c * b));
      }
      kraus_images.insert(kraus_to_map(g, a, b, c).pairs());
    }
  }
  std::size_t cp = 0, matched = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << 16); ++mask) {
    Relation r(4, 4);
    for (std::size_t k = 0; k < 16; ++k) {
      if (mask >> k & 1) r.insert(k / 4, k % 4);
    }
    if (!is_cp_rel(r, a, b)) continue;
    ++cp;
    matched += kraus_images.count(r.pairs());
  }
  MESSAGE("CP relations on 2x2: " << cp << ", with a Kraus form (|C| <= 4): "
                                  << matched);
  CHECK(matched <= cp);
}
