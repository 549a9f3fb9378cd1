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

#include "latext/error.hpp"
#include "latext/report.hpp"

namespace latext {

std::string format_tuple(const std::vector<std::string>& names) {
  std::string out = "(";
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += ", ";
    out += names[i];
  }
  return out + ")";
}

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kNotAPartialOrder: return "NotAPartialOrder";
    case ErrorKind::kNotBounded: return "NotBounded";
    case ErrorKind::kNotALattice: return "NotALattice";
    case ErrorKind::kUnknownElement: return "UnknownElement";
    case ErrorKind::kDuplicateElement: return "DuplicateElement";
    case ErrorKind::kSizeLimitExceeded: return "SizeLimitExceeded";
    case ErrorKind::kNotTotal: return "NotTotal";
    case ErrorKind::kNotMonotone: return "NotMonotone";
    case ErrorKind::kNotARetraction: return "NotARetraction";
    case ErrorKind::kDomainMismatch: return "DomainMismatch";
    case ErrorKind::kSyntaxError: return "SyntaxError";
    case ErrorKind::kUnknownReference: return "UnknownReference";
    case ErrorKind::kDuplicateEntry: return "DuplicateEntry";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             ValidationReport report, std::optional<std::size_t> line)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message),
      kind_(kind),
      report_(std::move(report)),
      line_(line) {}

}  // namespace latext
