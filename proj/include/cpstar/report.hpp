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

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace cpstar {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::optional<double> residual;
};

/**
 * A list of named checks; passes iff every check passes.
 **/
class Report {
 public:
  void add(std::string name, bool pass,
           std::optional<double> residual = std::nullopt) {
    checks_.push_back({std::move(name), pass, residual});
  }
  void append(const Report& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  bool pass() const {
    return std::all_of(checks_.begin(), checks_.end(),
                       [](const CheckResult& c) { return c.pass; });
  }
  explicit operator bool() const { return pass(); }

  const std::vector<CheckResult>& checks() const { return checks_; }
  const CheckResult* find(const std::string& name) const {
    for (const auto& c : checks_) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
  double max_residual() const {
    double r = 0.0;
    for (const auto& c : checks_) {
      if (c.residual) r = std::max(r, *c.residual);
    }
    return r;
  }

 private:
  std::vector<CheckResult> checks_;
};

using AlgebraReport = Report;

}  // namespace cpstar
