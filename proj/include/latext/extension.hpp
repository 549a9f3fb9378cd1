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
#include <string_view>

#include "latext/maps.hpp"
#include "latext/operators.hpp"
#include "latext/report.hpp"

namespace latext {

/// Lifts an operator on M to L through a retraction r : L -> M and its
/// pseudo-inverse s : M -> L:
///
///   extended(x, y) = s(source(r(x), r(y)))
///
/// The pair is not required to be valid and the source is not required to
/// satisfy any axiom; the formula is evaluated as given. The result is named
/// "<source>^E". Throws kDomainMismatch when the shapes do not line up.
OperatorTable extend_operator(const Map& r, const Map& s,
                              const OperatorTable& source);

inline OperatorTable extend_overlap(const Map& r, const Map& s,
                                    const OperatorTable& source) {
  return extend_operator(r, s, source);
}
inline OperatorTable extend_grouping(const Map& r, const Map& s,
                                     const OperatorTable& source) {
  return extend_operator(r, s, source);
}
inline OperatorTable extend_overlap(const RetractionPair& pair,
                                    const OperatorTable& source) {
  return extend_operator(pair.r(), pair.s(), source);
}
inline OperatorTable extend_grouping(const RetractionPair& pair,
                                     const OperatorTable& source) {
  return extend_operator(pair.r(), pair.s(), source);
}

// Rule "extension-identity": for every (x, y) in M^2,
// extended(s(x), s(y)) = s(source(x, y)). Witnesses are (x, y) in M^2.
ValidationReport verify_extension_identity(const Map& s,
                                           const OperatorTable& source,
                                           const OperatorTable& extended);

enum class TheoremOutcome {
  kHolds,               // hypotheses and conclusions all verified
  kPreconditionsUnmet,  // some hypothesis failed; conclusions still reported
  kTheoremViolation,    // hypotheses hold but a conclusion failed
};

std::string_view to_string(TheoremOutcome outcome);

struct Provenance {
  std::string source;
  std::string r;
  std::string s;
};

/// Every verdict of one run of the extension pipeline, referring to the
/// `extended` table it carries.
struct ExtensionResult {
  OperatorKind kind;
  OperatorTable extended;
  Provenance provenance;
  ValidationReport retraction;
  ValidationReport boundary;
  AxiomReport source_axioms;
  AxiomReport extension_axioms;
  ValidationReport identity;

  bool identity_ok() const { return identity.ok(); }
  bool preconditions_ok() const {
    return retraction.ok() && boundary.ok() && source_axioms.all_pass();
  }
  bool conclusions_ok() const {
    return extension_axioms.all_pass() && identity.ok();
  }
  TheoremOutcome outcome() const;
};

/// Runs, in order: the retraction check, the boundary check, the source
/// axiom check, the extension, the extension's axiom check and the identity
/// check. Throws only on shape errors (kDomainMismatch).
ExtensionResult verify_theorem(const Map& r, const Map& s,
                               const OperatorTable& source, OperatorKind kind);

}  // namespace latext
