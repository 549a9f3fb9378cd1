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

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "latext/report.hpp"

namespace latext {

enum class ErrorKind {
  kNotAPartialOrder,
  kNotBounded,
  kNotALattice,
  kUnknownElement,
  kDuplicateElement,
  kSizeLimitExceeded,
  kNotTotal,
  kNotMonotone,
  kNotARetraction,
  kDomainMismatch,
  kSyntaxError,
  kUnknownReference,
  kDuplicateEntry,
};

std::string_view to_string(ErrorKind kind);

/// The single exception type thrown by the library. Construction failures
/// carry the report that rejected the input; parse failures carry a line.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        ValidationReport report = {}, std::optional<std::size_t> line = {});

  ErrorKind kind() const { return kind_; }
  const ValidationReport& report() const { return report_; }
  std::optional<std::size_t> line() const { return line_; }

 private:
  ErrorKind kind_;
  ValidationReport report_;
  std::optional<std::size_t> line_;
};

}  // namespace latext
