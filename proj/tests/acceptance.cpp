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

// Acceptance gate: one PASS/FAIL line per criterion. Exit status is 0 iff
// every criterion passes.

#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>

#include "cpstar/biproduct.hpp"
#include "cpstar/cp.hpp"
#include "cpstar/frobenius.hpp"
#include "cpstar/functors.hpp"
#include "cpstar/groupoid.hpp"
#include "cpstar/per.hpp"
#include "support/generators.hpp"

using namespace cpstar;
using cpstar::testing::Rng;

namespace {

// Pinned tolerances and budgets.
constexpr double kPantsTol = 1e-9;
constexpr double kIdempotentTol = 1e-12;
constexpr double kChoiTol = 1e-9;
constexpr double kNormTol = 1e-9;
constexpr double kRoundTripTol = 1e-8;
constexpr double kFunctorTol = 1e-8;
constexpr double kAlgebraTol = 1e-9;
constexpr double kAxiomBudgetSeconds = 10.0;
constexpr double kSearchBudgetSeconds = 60.0;
constexpr std::size_t kRelFunctorPairs = 100;
constexpr std::size_t kFhilbFunctorPairs = 50;
constexpr std::size_t kPerSamples = 100;
constexpr std::size_t kKrausSamples = 200;

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << "first failure: " << what << "; ";
    pass = pass && ok;
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

template <class M>
bool all_algebra_checks(const FrobeniusAlgebra<M>& alg, Tolerance tol) {
  return check_dagger_frobenius(alg, tol).pass() &&
         check_normalisable(alg, tol).pass() &&
         check_alternative_forms(alg, tol).pass();
}

template <class M>
M monoidal_image(const M& fa, std::size_t a, std::size_t b, const M& fb,
                 std::size_t c, std::size_t d) {
  return chain(monoidal_shuffle<M>(b, d), tensor(fa, fb),
               dagger(monoidal_shuffle<M>(a, c)));
}

template <class T>
const T& pick(Rng& rng, const std::vector<T>& xs) {
  return xs[testing::uniform(rng, 0, xs.size() - 1)];
}

void criterion_1(Verdict& v) {
  const auto start = Clock::now();
  std::size_t count = 0;
  for (const Groupoid& g : testing::small_groupoids(6)) {
    // Exact: the Rel equality ignores the tolerance.
    v.require(all_algebra_checks(groupoid_to_algebra(g), Tolerance(0.0)),
              "groupoid " + g.name);
    ++count;
  }
  double worst = 0.0;
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto pants = pair_of_pants<Matrix>(n);
    Report r = check_dagger_frobenius(pants, Tolerance(kPantsTol));
    r.append(check_normalisable(pants, Tolerance(kPantsTol)));
    r.append(check_alternative_forms(pants, Tolerance(kPantsTol)));
    v.require(r.pass(), "pair_of_pants(" + std::to_string(n) + ")");
    worst = std::max(worst, r.max_residual());
  }
  const double t = seconds_since(start);
  v.require(t < kAxiomBudgetSeconds, "runtime");
  v.detail << count << " groupoids, pants residual " << worst << ", " << t
           << " s";
}

void criterion_2(Verdict& v) {
  const Matrix p = noncontractive_projection();
  const double idem = std::max(max_abs_diff(dagger(p), p),
                               max_abs_diff(compose(p, p), p));
  v.require(idem <= kIdempotentTol, "p† = p = p²");
  const double min_ev = min_eigenvalue(choi_matrix(p, 2, 2));
  v.require(min_ev >= -kChoiTol, "Choi PSD");
  const double norm = operator_norm(apply_map(p, Matrix::identity(2)));
  const double expected = 0.5 + std::sqrt(2.0) / 2.0;
  v.require(std::abs(norm - expected) <= kNormTol, "norm value");
  v.require(norm > 1.0, "norm > 1");
  v.detail << "idempotence residual " << idem << ", Choi min eigenvalue "
           << min_ev << ", ||p(1)|| = " << std::setprecision(12) << norm;
}

void criterion_3(Verdict& v) {
  const auto start = Clock::now();
  const Groupoid g = nine_morphism_groupoid();
  const Relation r = counterexample_R();
  const SplittingSearch s =
      search_dagger_splitting(r, g, SearchMode::kExhaustive);
  const std::size_t groupoids = enumerate_groupoids(7).size();
  v.require(!s.found, "no splitting");
  v.require(verify_no_dagger_splitting(r, g, SearchMode::kExhaustive),
            "verify_no_dagger_splitting");
  v.require(s.groupoids_searched == groupoids, "all 7-morphism groupoids");
  v.require(s.candidate_bijections == groupoids * 5040, "5040 per groupoid");
  const double t = seconds_since(start);
  v.require(t < kSearchBudgetSeconds, "runtime");
  v.detail << s.groupoids_searched << " groupoids x 5040 = "
           << s.candidate_bijections << " bijections checked in full, " << t
           << " s";
}

void criterion_4(Verdict& v) {
  const auto start = Clock::now();
  const CpmPer c = per_counterexample();
  v.require(cpm_per_is_unital(c), "unital");
  v.require(cpm_per_check(c.x_size(), c.per().relation()), "split condition");
  std::size_t tested = 0;
  for (const Groupoid& g : enumerate_groupoids(7)) {
    v.require(!f_image_test(c, g).has_value(), "f_image_test vs " + g.name);
    ++tested;
  }
  const double t = seconds_since(start);
  v.require(t < kSearchBudgetSeconds, "runtime");
  v.detail << "no F-image among " << tested << " groupoids, " << t << " s";
}

void criterion_5(Verdict& v) {
  const Tolerance tol(kRoundTripTol);
  const std::vector<std::pair<Matrix, std::size_t>> cases = {
      {identity_expectation(2), 2},
      {diagonal_expectation(2), 2},
      {block_expectation({2, 1}), 3},
  };
  double worst = 0.0;
  for (const auto& [p, m] : cases) {
    const RoundTrip rt = round_trip_witnesses(p, m, tol);
    const Matrix fgp = f_projection(rt.image.algebra);
    const double e1 = max_abs_diff(compose(rt.g, rt.f), p);
    const double e2 = max_abs_diff(compose(rt.f, rt.g), fgp);
    v.require(e1 <= kRoundTripTol, "g∘f = p");
    v.require(e2 <= kRoundTripTol, "f∘g = F(G(p))");
    v.require(all_algebra_checks(rt.image.algebra, tol), "G(p) checks");
    worst = std::max({worst, e1, e2});
    v.detail << "r=" << rt.image.algebra.carrier << " ";
  }
  v.detail << "worst residual " << worst;
}

void criterion_6(Verdict& v) {
  Rng rng(6006);
  for (std::size_t i = 0; i < kPerSamples; ++i) {
    const Per p(testing::random_per(rng, testing::uniform(rng, 0, 8)));
    const Relation r = per_split(p);
    v.require(compose(dagger(r), r) == Relation::identity(r.src()), "R†∘R = id");
    v.require(compose(r, dagger(r)) == p.relation(), "R∘R† = ~");
  }
  v.detail << kPerSamples << " random PERs, exact";
}

// Shared by criteria 7 and 8.
struct FunctorSamples {
  std::size_t rel_faithful = 0, fhilb_faithful = 0;
  bool rel_faithful_ok = true, fhilb_faithful_ok = true;
};
FunctorSamples g_samples;

void criterion_7(Verdict& v) {
  Rng rng(7007);
  const auto groupoids = testing::small_groupoids(4);
  for (std::size_t i = 0; i < kRelFunctorPairs; ++i) {
    const Groupoid &a = pick(rng, groupoids), &b = pick(rng, groupoids),
                   &c = pick(rng, groupoids);
    const auto aa = groupoid_to_algebra(a), ba = groupoid_to_algebra(b),
               ca = groupoid_to_algebra(c);
    const Relation f = testing::random_cpstar_relation(rng, a, b);
    const Relation g = testing::random_cpstar_relation(rng, b, c);
    const Relation ff = functor_F_morphism(f, aa, ba);
    const Relation fg = functor_F_morphism(g, ba, ca);
    v.require(functor_F_morphism(compose(g, f), aa, ca) == compose(fg, ff),
              "Rel composition");
    v.require(functor_F_morphism(dagger(f), ba, aa) == dagger(ff), "Rel dagger");
    const std::size_t na = aa.carrier, nb = ba.carrier, nc = ca.carrier;
    v.require(f_projection(tensor_algebra(aa, ba)) ==
                  monoidal_image(f_projection(aa), na, na, f_projection(ba), nb,
                                 nb),
              "Rel monoidal objects");
    v.require(functor_F_morphism(tensor(f, g), tensor_algebra(aa, ba),
                                 tensor_algebra(ba, ca)) ==
                  monoidal_image(ff, na, nb, fg, nb, nc),
              "Rel monoidal morphisms");
    g_samples.rel_faithful_ok =
        g_samples.rel_faithful_ok && reconstruct(ff, aa, ba) == f &&
        reconstruct(fg, ba, ca) == g;
    g_samples.rel_faithful += 2;
  }

  const Tolerance tol(kFunctorTol);
  std::vector<FrobeniusAlgebra<Matrix>> algs;
  for (auto& alg : testing::sample_fhilb_algebras()) {
    if (alg.carrier <= 4) algs.push_back(std::move(alg));
  }
  double worst = 0.0;
  for (std::size_t i = 0; i < kFhilbFunctorPairs; ++i) {
    const auto &a = pick(rng, algs), &b = pick(rng, algs), &c = pick(rng, algs);
    const Matrix f = testing::random_cpstar_matrix(rng, a, b);
    const Matrix g = testing::random_cpstar_matrix(rng, b, c);
    const Matrix ff = functor_F_morphism(f, a, b, tol);
    const Matrix fg = functor_F_morphism(g, b, c, tol);
    const double e1 =
        max_abs_diff(functor_F_morphism(compose(g, f), a, c, tol), compose(fg, ff));
    const double e2 =
        max_abs_diff(functor_F_morphism(dagger(f), b, a, tol), dagger(ff));
    const double e3 = max_abs_diff(
        f_projection(tensor_algebra(a, b)),
        monoidal_image(f_projection(a), a.carrier, a.carrier, f_projection(b),
                       b.carrier, b.carrier));
    const double e4 = max_abs_diff(
        functor_F_morphism(tensor(f, g), tensor_algebra(a, b),
                           tensor_algebra(b, c), tol),
        monoidal_image(ff, a.carrier, b.carrier, fg, b.carrier, c.carrier));
    worst = std::max({worst, e1, e2, e3, e4});
    g_samples.fhilb_faithful_ok =
        g_samples.fhilb_faithful_ok &&
        approx_equal(reconstruct(ff, a, b), f, tol) &&
        approx_equal(reconstruct(fg, b, c), g, tol);
    g_samples.fhilb_faithful += 2;
  }
  v.require(worst <= kFunctorTol, "FHilb functor laws");
  v.detail << kRelFunctorPairs << " Rel pairs exact, " << kFhilbFunctorPairs
           << " FHilb pairs, worst residual " << worst;
}

void criterion_8(Verdict& v) {
  v.require(g_samples.rel_faithful > 0 && g_samples.rel_faithful_ok,
            "Rel reconstruction");
  v.require(g_samples.fhilb_faithful > 0 && g_samples.fhilb_faithful_ok,
            "FHilb reconstruction");
  Rng rng(8008);
  const Tolerance tol(kFunctorTol);
  const auto algs = testing::sample_fhilb_algebras();
  std::size_t full = 0;
  for (std::size_t i = 0; i < 50; ++i) {
    const auto &a = pick(rng, algs), &b = pick(rng, algs);
    const Matrix h = chain(f_projection(b),
                           testing::random_cp_map(rng, a.carrier, b.carrier),
                           f_projection(a));
    const Matrix f = reconstruct(h, a, b);
    v.require(is_cpstar_morphism(f, a, b, tol), "FHilb fullness");
    v.require(approx_equal(functor_F_morphism(f, a, b, tol), h, tol),
              "FHilb F(reconstruct h) = h");
    ++full;
  }
  const auto groupoids = testing::small_groupoids(4);
  for (std::size_t i = 0; i < 100; ++i) {
    const Groupoid &g = pick(rng, groupoids), &k = pick(rng, groupoids);
    const auto ga = groupoid_to_algebra(g), ka = groupoid_to_algebra(k);
    const Relation h =
        chain(f_projection(ka),
              testing::random_cp_relation(rng, g.morphisms(), k.morphisms()),
              f_projection(ga));
    const Relation f = reconstruct(h, ga, ka);
    v.require(is_cpstar_morphism(f, ga, ka), "Rel fullness");
    v.require(functor_F_morphism(f, ga, ka) == h, "Rel F(reconstruct h) = h");
    ++full;
  }
  v.detail << g_samples.rel_faithful + g_samples.fhilb_faithful
           << " reconstructions, " << full << " absorbed CP maps";
}

template <class M>
void check_biproduct_sample(Verdict& v, const FrobeniusAlgebra<M>& a,
                            const FrobeniusAlgebra<M>& b) {
  const Tolerance tol(kAlgebraTol);
  const auto zero = zero_algebra<M>();
  const auto ab = oplus_algebra(a, b, tol);
  const auto aa = oplus_algebra(a, a, tol);
  v.require(all_algebra_checks(ab, tol) && is_normal(ab, tol), "oplus checks");
  const auto s = structural_morphisms(a, b);
  auto both = [&](const M& f, const auto& x, const auto& y, const char* what) {
    v.require(check_star_homomorphism(f, x, y, tol), std::string(what) + " *-hom");
    v.require(is_cpstar_morphism(f, x, y, tol), std::string(what) + " CP*");
  };
  both(s.inj_a, a, ab, "i_A");
  both(s.proj_a, ab, a, "p_A");
  both(s.diag, a, aa, "Δ_A");
  both(s.zero, a, zero, "0");
}

void criterion_9(Verdict& v) {
  const auto fh = testing::sample_fhilb_algebras();
  for (std::size_t i = 0; i < fh.size(); ++i) {
    check_biproduct_sample(v, fh[i], fh[(i + 1) % fh.size()]);
  }
  std::vector<FrobeniusAlgebra<Relation>> rel;
  for (const Groupoid& g : testing::small_groupoids(4)) {
    if (rel.size() < 10) rel.push_back(groupoid_to_algebra(g));
  }
  for (std::size_t i = 0; i < rel.size(); ++i) {
    check_biproduct_sample(v, rel[i], rel[(i + 1) % rel.size()]);
  }
  v.detail << fh.size() << " FHilb and " << rel.size() << " Rel algebras";
}

void criterion_10(Verdict& v) {
  const EssentialImageCheck r = z2_essential_image_report();
  v.require(r.holds, "no unitary iso");
  v.require(r.candidates_examined == 16, "16 candidates");
  v.detail << r.candidates_examined << " candidate relations, " << r.targets
           << " target groupoid(s)";
}

void criterion_11(Verdict& v) {
  std::size_t count = 0;
  for (const Groupoid& g : testing::small_groupoids(6)) {
    const Per p(f_projection(groupoid_to_algebra(g)));
    v.require(quotient(p).size() == g.morphisms(), "quotient size " + g.name);
    ++count;
  }
  v.detail << count << " groupoids";
}

void criterion_12(Verdict& v) {
  Rng rng(1212);
  for (std::size_t i = 0; i < kKrausSamples; ++i) {
    const std::size_t a = testing::uniform(rng, 1, 3);
    const std::size_t b = testing::uniform(rng, 1, 3);
    v.require(is_cp_fhilb(testing::random_cp_map(rng, a, b), a, b), "FHilb");
    v.require(is_cp_rel(testing::random_cp_relation(rng, a, b), a, b), "Rel");
  }
  v.detail << kKrausSamples << " samples per backend";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>>
      criteria = {
          {"axiom suite", criterion_1},
          {"non-contractive projection", criterion_2},
          {"Rel non-splitting", criterion_3},
          {"unital-image counterexample", criterion_4},
          {"FHilb round trip", criterion_5},
          {"PER splitting", criterion_6},
          {"functoriality and monoidality of F", criterion_7},
          {"faithfulness and fullness", criterion_8},
          {"biproducts", criterion_9},
          {"Rel biproduct-embedding gap", criterion_10},
          {"quotient-size law", criterion_11},
          {"Kraus soundness", criterion_12},
      };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      criteria[i].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << "  " << std::setw(2) << i + 1
              << "  " << criteria[i].first << " (" << v.detail.str() << ")"
              << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
