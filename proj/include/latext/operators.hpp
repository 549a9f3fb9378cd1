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

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <vector>

#include "latext/lattice.hpp"

namespace latext {

enum class OperatorKind { kQuasiOverlap, kQuasiGrouping };

std::string_view to_string(OperatorKind kind);
// Accepts "quasi-overlap" / "quasi-grouping" (also "overlap" / "grouping").
std::optional<OperatorKind> parse_operator_kind(std::string_view text);

/// A total binary operation on one lattice, stored row-major.
class OperatorTable {
 public:
  // Throws kNotTotal when `cells` is not |L|^2 long or leaves the lattice.
  OperatorTable(std::string name, LatticePtr lattice,
                std::vector<Element> cells);

  // Every ordered pair must appear exactly once. Throws kUnknownElement,
  // kDuplicateEntry, or kNotTotal naming the first missing pair.
  static OperatorTable from_names(
      std::string name, LatticePtr lattice,
      const std::vector<std::tuple<std::string, std::string, std::string>>&
          entries);

  const std::string& name() const { return name_; }
  const Lattice& lattice() const { return *lattice_; }
  const LatticePtr& lattice_ptr() const { return lattice_; }
  const std::vector<Element>& cells() const { return cells_; }

  Element operator()(Element x, Element y) const {
    return cells_[x * lattice_->size() + y];
  }
  const std::string& operator()(std::string_view x, std::string_view y) const;

  OperatorTable with_cell(Element x, Element y, Element value) const;
  OperatorTable renamed(std::string name) const;

 private:
  std::string name_;
  LatticePtr lattice_;
  std::vector<Element> cells_;
};

// Table of meet (resp. join), named "meet" (resp. "join").
OperatorTable canonical_meet(const LatticePtr& lattice);
OperatorTable canonical_join(const LatticePtr& lattice);

struct AxiomWitness {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  // "=>" or "<=" for the biconditional axioms, empty otherwise.
  std::string direction;
  std::string relation;
};

struct AxiomVerdict {
  std::string axiom;
  bool pass = true;
  std::optional<AxiomWitness> witness;
};

/// Verdicts for axioms 1..4 of one kind. Each failed axiom carries the
/// lexicographically smallest witness in element declaration order.
struct AxiomReport {
  OperatorKind kind = OperatorKind::kQuasiOverlap;
  std::array<AxiomVerdict, 4> verdicts;
  // Set only when axiom 1 passes: monotonicity in the first argument, which
  // then follows from axioms 1 and 4.
  std::optional<bool> first_argument_monotone;

  bool all_pass() const;
  // index is 1-based, matching the axiom label.
  const AxiomVerdict& axiom(std::size_t index) const {
    return verdicts.at(index - 1);
  }
};

AxiomReport check_quasi_overlap(const OperatorTable& op);
AxiomReport check_quasi_grouping(const OperatorTable& op);
AxiomReport check_axioms(const OperatorTable& op, OperatorKind kind);

inline constexpr std::size_t kMaxOperatorSearchElements = 5;

/// All quasi-overlap (resp. quasi-grouping) tables on `lattice`, sorted by
/// row-major cell sequence. May be empty. Throws kSizeLimitExceeded above
/// kMaxOperatorSearchElements.
std::vector<OperatorTable> enumerate_quasi_overlaps(const LatticePtr& lattice);
std::vector<OperatorTable> enumerate_quasi_groupings(const LatticePtr& lattice);
std::vector<OperatorTable> enumerate_operators(const LatticePtr& lattice,
                                               OperatorKind kind);

}  // namespace latext
