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
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latext/report.hpp"

namespace latext {

/// Index of an element in its lattice's declaration order.
using Element = std::size_t;

inline constexpr std::size_t kDefaultMaxElements = 64;

/// A validated finite bounded lattice.
///
/// Elements are identified by name within one lattice and addressed by their
/// declaration index. The order is held twice: as the Hasse cover list (the
/// canonical input form) and as a dense `leq` table. Meet and join are derived
/// once at construction. Instances are immutable.
class Lattice {
 public:
  const std::string& name() const { return name_; }
  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& element_name(Element x) const { return names_.at(x); }

  Element bottom() const { return bottom_; }
  Element top() const { return top_; }

  // Transitive reduction of the order, sorted by (lower, upper) index.
  const std::vector<std::pair<Element, Element>>& covers() const {
    return covers_;
  }

  // Throws Error(kUnknownElement).
  Element index_of(std::string_view name) const;
  bool contains(std::string_view name) const;

  bool leq(Element x, Element y) const { return leq_[x * size() + y] != 0; }
  bool leq(std::string_view x, std::string_view y) const {
    return leq(index_of(x), index_of(y));
  }
  Element meet(Element x, Element y) const { return meet_[x * size() + y]; }
  Element join(Element x, Element y) const { return join_[x * size() + y]; }
  const std::string& meet(std::string_view x, std::string_view y) const {
    return element_name(meet(index_of(x), index_of(y)));
  }
  const std::string& join(std::string_view x, std::string_view y) const {
    return element_name(join(index_of(x), index_of(y)));
  }

  bool operator==(const Lattice& other) const;

 private:
  friend Lattice build_lattice(std::string, std::vector<std::string>,
                               std::string_view, std::string_view,
                               const std::vector<std::pair<std::string, std::string>>&,
                               std::size_t);
  Lattice() = default;

  std::string name_;
  std::vector<std::string> names_;
  Element bottom_ = 0;
  Element top_ = 0;
  std::vector<std::pair<Element, Element>> covers_;
  std::vector<unsigned char> leq_;
  std::vector<Element> meet_;
  std::vector<Element> join_;
};

using LatticePtr = std::shared_ptr<const Lattice>;

/// Builds a lattice whose order is the reflexive-transitive closure of
/// `covers`. Redundant (non-cover) pairs in the input are accepted and
/// dropped from the stored cover list.
///
/// Throws Error with kind kDuplicateElement, kUnknownElement,
/// kSizeLimitExceeded, kNotAPartialOrder, kNotBounded or kNotALattice; the
/// attached report names the first offending rule and its witnesses.
Lattice build_lattice(
    std::string name, std::vector<std::string> elements,
    std::string_view bottom, std::string_view top,
    const std::vector<std::pair<std::string, std::string>>& covers,
    std::size_t max_elements = kDefaultMaxElements);

inline LatticePtr share(Lattice lattice) {
  return std::make_shared<const Lattice>(std::move(lattice));
}

// Covers of `lattice` as name pairs, in stored order.
std::vector<std::pair<std::string, std::string>> cover_names(
    const Lattice& lattice);

}  // namespace latext
