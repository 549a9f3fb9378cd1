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

#include "latext/extension.hpp"

#include "latext/error.hpp"

namespace latext {

namespace {

bool same_lattice(const Lattice& a, const Lattice& b) {
  return &a == &b || a == b;
}

void require_shape(const Map& r, const Map& s, const OperatorTable& source) {
  if (!same_lattice(r.domain(), s.codomain()) ||
      !same_lattice(r.codomain(), s.domain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "r and s do not form maps L -> M and M -> L");
  }
  if (!same_lattice(source.lattice(), r.codomain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "operator " + source.name() + " is on " +
                    source.lattice().name() + ", expected " +
                    r.codomain().name());
  }
}

}  // namespace

OperatorTable extend_operator(const Map& r, const Map& s,
                              const OperatorTable& source) {
  require_shape(r, s, source);
  const std::size_t n = r.domain().size();
  std::vector<Element> cells(n * n);
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) cells[x * n + y] = s(source(r(x), r(y)));
  }
  return OperatorTable(source.name() + "^E", r.domain_ptr(), std::move(cells));
}

ValidationReport verify_extension_identity(const Map& s,
                                           const OperatorTable& source,
                                           const OperatorTable& extended) {
  if (!same_lattice(source.lattice(), s.domain()) ||
      !same_lattice(extended.lattice(), s.codomain())) {
    throw Error(ErrorKind::kDomainMismatch,
                "identity check needs source on " + s.domain().name() +
                    " and extension on " + s.codomain().name());
  }
  ValidationReport report;
  const Lattice& small = s.domain();
  const Lattice& big = s.codomain();
  for (Element x = 0; x < small.size(); ++x) {
    for (Element y = 0; y < small.size(); ++y) {
      Element lhs = extended(s(x), s(y));
      Element rhs = s(source(x, y));
      if (lhs == rhs) continue;
      const auto& xn = small.element_name(x);
      const auto& yn = small.element_name(y);
      report.add("extension-identity", {xn, yn},
                 extended.name() + "(s(" + xn + "), s(" + yn + ")) = " +
                     big.element_name(lhs) + " but s(" + source.name() + "(" +
                     xn + ", " + yn + ")) = " + big.element_name(rhs));
    }
  }
  return report;
}

std::string_view to_string(TheoremOutcome outcome) {
  switch (outcome) {
    case TheoremOutcome::kHolds: return "holds";
    case TheoremOutcome::kPreconditionsUnmet: return "preconditions-unmet";
    case TheoremOutcome::kTheoremViolation: return "TheoremViolation";
  }
  return "unknown";
}

TheoremOutcome ExtensionResult::outcome() const {
  if (!preconditions_ok()) return TheoremOutcome::kPreconditionsUnmet;
  return conclusions_ok() ? TheoremOutcome::kHolds
                          : TheoremOutcome::kTheoremViolation;
}

ExtensionResult verify_theorem(const Map& r, const Map& s,
                               const OperatorTable& source,
                               OperatorKind kind) {
  require_shape(r, s, source);
  auto retraction = check_retraction_pair(r, s);
  auto boundary = check_boundary_conditions(r);
  auto source_axioms = check_axioms(source, kind);
  auto extended = extend_operator(r, s, source);
  auto extension_axioms = check_axioms(extended, kind);
  auto identity = verify_extension_identity(s, source, extended);
  return ExtensionResult{kind,
                         std::move(extended),
                         {source.name(), r.name(), s.name()},
                         std::move(retraction),
                         std::move(boundary),
                         std::move(source_axioms),
                         std::move(extension_axioms),
                         std::move(identity)};
}

}  // namespace latext
