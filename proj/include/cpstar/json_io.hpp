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

#include <stdexcept>
#include <string>
#include <variant>

#include <json.hpp>

#include "cpstar/biproduct.hpp"
#include "cpstar/frobenius.hpp"
#include "cpstar/groupoid.hpp"
#include "cpstar/matrix.hpp"
#include "cpstar/per.hpp"
#include "cpstar/relation.hpp"
#include "cpstar/report.hpp"

namespace cpstar {

using Json = nlohmann::json;

/// Malformed or ill-typed JSON input.
class JsonFormatError : public std::invalid_argument {
 public:
  explicit JsonFormatError(const std::string& message)
      : std::invalid_argument(message) {}
};

using AnyAlgebra =
    std::variant<FrobeniusAlgebra<Relation>, FrobeniusAlgebra<Matrix>>;

Json to_json(const FinSet& s);
Json to_json(const Relation& r);
Json to_json(const Matrix& m);
Json to_json(const FrobeniusAlgebra<Relation>& alg);
Json to_json(const FrobeniusAlgebra<Matrix>& alg);
Json to_json(const AnyAlgebra& alg);
Json to_json(const Per& per);
Json to_json(const CpmPer& per);
Json to_json(const SumObject& s);
Json to_json(const Groupoid& g);
Json to_json(const Report& r);

FinSet finset_from_json(const Json& j);
Relation relation_from_json(const Json& j);
Matrix matrix_from_json(const Json& j);
/// Shapes are checked; the axioms are not (see FrobeniusAlgebra::validated).
/// A null or missing normaliser means the identity.
AnyAlgebra algebra_from_json(const Json& j);
Per per_from_json(const Json& j);
CpmPer cpm_per_from_json(const Json& j);
SumObject sum_object_from_json(const Json& j);
Groupoid groupoid_from_json(const Json& j);

/// Reads and parses a file; throws JsonFormatError on I/O or syntax errors.
Json read_json_file(const std::string& path);

}  // namespace cpstar
