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
#include <string>
#include <utility>
#include <vector>

#include "latext/lattice.hpp"
#include "latext/report.hpp"

namespace latext {

/// A total function between two lattices, stored as an image table indexed
/// by domain element. Order preservation is not implied; see MonotoneMap.
class Map {
 public:
  // Throws kNotTotal when `image` does not cover the domain exactly or names
  // an element outside the codomain.
  Map(std::string name, LatticePtr domain, LatticePtr codomain,
      std::vector<Element> image);

  // Builds from (x, f(x)) name pairs. Every domain element must appear
  // exactly once: throws kUnknownElement, kDuplicateEntry or kNotTotal.
  static Map from_names(
      std::string name, LatticePtr domain, LatticePtr codomain,
      const std::vector<std::pair<std::string, std::string>>& entries);

  static Map identity(LatticePtr lattice, std::string name = "id");
  static Map constant(LatticePtr domain, LatticePtr codomain, Element value,
                      std::string name = "const");

  const std::string& name() const { return name_; }
  const Lattice& domain() const { return *domain_; }
  const Lattice& codomain() const { return *codomain_; }
  const LatticePtr& domain_ptr() const { return domain_; }
  const LatticePtr& codomain_ptr() const { return codomain_; }
  const std::vector<Element>& image() const { return image_; }

  Element operator()(Element x) const { return image_[x]; }

  // Same lattices and same table; names are ignored.
  bool same_function(const Map& other) const;

 private:
  std::string name_;
  LatticePtr domain_;
  LatticePtr codomain_;
  std::vector<Element> image_;
};

/// A Map certified order-preserving at construction.
class MonotoneMap {
 public:
  // Throws Error(kNotMonotone) carrying the check_monotone report.
  static MonotoneMap certify(Map map);

  const Map& map() const { return map_; }
  const std::string& name() const { return map_.name(); }
  Element operator()(Element x) const { return map_(x); }

 private:
  explicit MonotoneMap(Map map) : map_(std::move(map)) {}
  Map map_;
};

// Violation "monotone" for every x <= y with f(x) not <= f(y), in
// lexicographic (x, y) order.
ValidationReport check_monotone(const Map& f);

// "f then g": (g . f)(x) = g(f(x)). Throws kDomainMismatch unless
// f.codomain == g.domain.
Map compose(const Map& f, const Map& g);
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

// Rules: "r-monotone", "s-monotone", "retraction" (witness m with
// r(s(m)) != m). Throws kDomainMismatch when r : L -> M, s : M -> L does not
// hold.
ValidationReport check_retraction_pair(const Map& r, const Map& s);

// Rules "boundary-zero" (r(x) = 0_M iff x = 0_L) and "boundary-one"
// (r(x) = 1_M iff x = 1_L), each reported at most once with the first
// offending x. The message names the failed direction.
ValidationReport check_boundary_conditions(const Map& r);

// Rules "homomorphism-meet" and "homomorphism-join": first pair (x, y) where
// f does not preserve the operation.
ValidationReport check_homomorphism(const Map& f);

/// A validated retraction r : L -> M with pseudo-inverse s : M -> L
/// (both monotone, r . s = id on M), plus the two boundary verdicts.
class RetractionPair {
 public:
  // Throws kDomainMismatch, or kNotARetraction with the failing report.
  static RetractionPair make(Map r, Map s);

  const Map& r() const { return r_; }
  const Map& s() const { return s_; }
  const Lattice& big() const { return r_.domain(); }
  const Lattice& small() const { return r_.codomain(); }
  bool boundary_zero_ok() const { return boundary_zero_ok_; }
  bool boundary_one_ok() const { return boundary_one_ok_; }
  bool boundary_ok() const { return boundary_zero_ok_ && boundary_one_ok_; }

 private:
  RetractionPair(Map r, Map s, bool zero_ok, bool one_ok)
      : r_(std::move(r)), s_(std::move(s)),
        boundary_zero_ok_(zero_ok), boundary_one_ok_(one_ok) {}

  Map r_;
  Map s_;
  bool boundary_zero_ok_;
  bool boundary_one_ok_;
};

/// Every (r, s) with s an order-embedding M -> L, r : L -> M monotone and
/// r . s = id on M; with `require_boundary`, only pairs satisfying both
/// boundary conditions. Sorted by (s table, r table).
///
/// Throws kSizeLimitExceeded when either lattice exceeds `max_elements`.
std::vector<RetractionPair> enumerate_retraction_pairs(
    const LatticePtr& big, const LatticePtr& small, bool require_boundary,
    std::size_t max_elements = kDefaultMaxElements);

}  // namespace latext
