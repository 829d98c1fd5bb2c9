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

namespace cpstar {

/**
 * Raised when morphisms are not composable, or a shape does not match
 * the object it is declared on.
 **/
class DimensionError : public std::invalid_argument {
 public:
  explicit DimensionError(const std::string& message)
      : std::invalid_argument(message) {}
};

/**
 * Raised when an input violates a structural precondition: an algebra that
 * is not normalisable, a projection that is not unital, a relation that is
 * not a partial equivalence, and so on.
 **/
class PreconditionError : public std::domain_error {
 public:
  explicit PreconditionError(const std::string& message)
      : std::domain_error(message) {}
};

}  // namespace cpstar
