// Copyright 2026 The latext Authors. All Rights Reserved.
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
// ==============================================================================

#pragma once

#include <string>
#include <utility>
#include <vector>

namespace latext {

/// One failed rule, with the element names that witness the failure.
struct Violation {
  std::string rule;
  std::vector<std::string> witness;
  std::string message;

  bool operator==(const Violation&) const = default;
};

/// Outcome of a structural check. `ok()` holds exactly when nothing was
/// recorded.
class ValidationReport {
 public:
  ValidationReport() = default;

  bool ok() const { return violations_.empty(); }
  const std::vector<Violation>& violations() const { return violations_; }

  void add(std::string rule, std::vector<std::string> witness,
           std::string message) {
    violations_.push_back(
        {std::move(rule), std::move(witness), std::move(message)});
  }

  void merge(const ValidationReport& other) {
    violations_.insert(violations_.end(), other.violations_.begin(),
                       other.violations_.end());
  }

  // First violation of `rule`, or nullptr.
  const Violation* find(const std::string& rule) const {
    for (const auto& v : violations_) {
      if (v.rule == rule) return &v;
    }
    return nullptr;
  }

 private:
  std::vector<Violation> violations_;
};

// "(a, b, c)"
std::string format_tuple(const std::vector<std::string>& names);

}  // namespace latext
