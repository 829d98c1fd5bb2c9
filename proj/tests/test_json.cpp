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

#include "cpstar/functors.hpp"
#include "cpstar/json_io.hpp"
#include "support/generators.hpp"

using namespace cpstar;
using cpstar::testing::Rng;

TEST_CASE("relations round-trip") {
  Rng rng(41);
  for (int trial = 0; trial < 50; ++trial) {
    const Relation r = testing::random_relation(rng, testing::uniform(rng, 0, 5),
                                                testing::uniform(rng, 0, 5));
    CHECK(relation_from_json(Json::parse(to_json(r).dump())) == r);
  }
  const Relation labelled = relation_from_json(Json::parse(
      R"({"src": {"size": 2, "labels": ["a", "b"]}, "dst": 1, "pairs": [[1, 0]]})"));
  CHECK(labelled.pairs() == std::vector<IndexPair>{{1, 0}});
}

TEST_CASE("matrices round-trip") {
  Rng rng(42);
  const Matrix m = testing::random_matrix(rng, 3, 2);
  CHECK(approx_equal(matrix_from_json(Json::parse(to_json(m).dump())), m,
                     Tolerance(0.0)));
  const Matrix plain = matrix_from_json(
      Json::parse(R"({"rows": 1, "cols": 2, "entries": [1.5, [0, 2]]})"));
  CHECK(plain(0, 0) == Complex(1.5));
  CHECK(plain(0, 1) == Complex(0, 2));
}

TEST_CASE("algebras round-trip") {
  const auto z2 = groupoid_to_algebra(group_groupoid(cyclic_group(2)));
  const AnyAlgebra back = algebra_from_json(to_json(z2));
  REQUIRE(std::holds_alternative<FrobeniusAlgebra<Relation>>(back));
  CHECK(std::get<FrobeniusAlgebra<Relation>>(back).mult == z2.mult);

  const auto pants = pair_of_pants<Matrix>(2);
  const AnyAlgebra fb = algebra_from_json(to_json(pants));
  REQUIRE(std::holds_alternative<FrobeniusAlgebra<Matrix>>(fb));
  const auto& fa = std::get<FrobeniusAlgebra<Matrix>>(fb);
  CHECK(approx_equal(fa.normaliser, pants.normaliser, Tolerance(0.0)));
  CHECK(to_json(z2)["backend"] == "rel");
  CHECK(to_json(pants)["backend"] == "fhilb");

  Json no_norm = to_json(z2);
  no_norm["normaliser"] = nullptr;
  CHECK(std::get<FrobeniusAlgebra<Relation>>(algebra_from_json(no_norm))
            .normaliser == Relation::identity(2));
}

TEST_CASE("PERs, sum objects and groupoids round-trip") {
  const Per p(Relation(3, 3, {{0, 0}, {0, 2}, {2, 0}, {2, 2}}));
  CHECK(per_from_json(to_json(p)).relation() == p.relation());
  const CpmPer c = per_counterexample();
  const CpmPer cb = cpm_per_from_json(to_json(c));
  CHECK(cb.x_size() == 3);
  CHECK(cb.per().relation() == c.per().relation());
  const SumObject s{{2, 0, 3}};
  CHECK(sum_object_from_json(to_json(s)).summands == s.summands);
  for (const Groupoid& g : testing::small_groupoids(5)) {
    const Groupoid back = groupoid_from_json(to_json(g));
    CHECK(back.comp == g.comp);
    CHECK(back.inv == g.inv);
    CHECK(back.ids == g.ids);
  }
  CHECK(to_json(nine_morphism_groupoid())["comp"][0][3] == -1);
}

TEST_CASE("reports serialise") {
  Report r;
  r.add("a", true, 0.5);
  r.add("b", false);
  const Json j = to_json(r);
  CHECK(j["pass"] == false);
  CHECK(j["details"].size() == 2);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(relation_from_json(Json::parse(R"({"src": 2, "dst": 2})")),
                  JsonFormatError);
  CHECK_THROWS_AS(
      relation_from_json(Json::parse(R"({"src": 2, "dst": 2, "pairs": [[0, 5]]})")),
      JsonFormatError);
  CHECK_THROWS_AS(
      matrix_from_json(Json::parse(R"({"rows": 2, "cols": 2, "entries": [[1]]})")),
      JsonFormatError);
  CHECK_THROWS_AS(algebra_from_json(Json::parse(R"({"backend": "qubits"})")),
                  JsonFormatError);
  Json wrong_shape = to_json(classical_structure(2));
  wrong_shape["carrier"] = 3;
  CHECK_THROWS(algebra_from_json(wrong_shape));
  CHECK_THROWS_AS(per_from_json(Json::parse(R"({"base": 2, "pairs": [[0, 1]]})")),
                  JsonFormatError);
  Json bad_groupoid = to_json(group_groupoid(cyclic_group(2)));
  bad_groupoid["comp"][1][1] = 1;
  CHECK_THROWS(groupoid_from_json(bad_groupoid));
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), JsonFormatError);
}
