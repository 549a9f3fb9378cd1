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

#include "latext/standard_lattices.hpp"

#include <string>
#include <utility>
#include <vector>

#include "latext/error.hpp"

namespace latext {

namespace {

using NamePairs = std::vector<std::pair<std::string, std::string>>;

[[noreturn]] void too_large(const std::string& what) {
  throw Error(ErrorKind::kSizeLimitExceeded, what);
}

}  // namespace

Lattice make_chain(std::size_t n, std::size_t max_elements) {
  if (n < 2) too_large("chain length must be at least 2");
  if (n > max_elements) {
    too_large("chain of length " + std::to_string(n) + " exceeds limit " +
              std::to_string(max_elements));
  }
  std::vector<std::string> names;
  NamePairs covers;
  for (std::size_t i = 0; i < n; ++i) {
    names.push_back("e" + std::to_string(i));
    if (i) covers.emplace_back(names[i - 1], names[i]);
  }
  auto bottom = names.front();
  auto top = names.back();
  return build_lattice("C" + std::to_string(n), std::move(names), bottom, top,
                       covers, max_elements);
}

Lattice make_boolean(std::size_t k) {
  if (k < 1 || k > 4) too_large("Boolean lattice needs 1 to 4 atoms");
  const std::size_t n = std::size_t{1} << k;
  auto bits = [k](std::size_t v) {
    std::string s(k, '0');
    for (std::size_t i = 0; i < k; ++i) {
      if (v & (std::size_t{1} << i)) s[k - 1 - i] = '1';
    }
    return s;
  };
  std::vector<std::string> names;
  NamePairs covers;
  for (std::size_t v = 0; v < n; ++v) {
    names.push_back(bits(v));
    for (std::size_t i = 0; i < k; ++i) {
      if (!(v & (std::size_t{1} << i))) {
        covers.emplace_back(bits(v), bits(v | (std::size_t{1} << i)));
      }
    }
  }
  return build_lattice("B" + std::to_string(k), std::move(names), bits(0),
                       bits(n - 1), covers);
}

Lattice make_diamond_M3() {
  return build_lattice("M3", {"0", "p", "q", "r", "1"}, "0", "1",
                       {{"0", "p"}, {"0", "q"}, {"0", "r"},
                        {"p", "1"}, {"q", "1"}, {"r", "1"}});
}

Lattice make_pentagon_N5() {
  return build_lattice("N5", {"0", "a", "b", "c", "1"}, "0", "1",
                       {{"0", "a"}, {"a", "b"}, {"b", "1"},
                        {"0", "c"}, {"c", "1"}});
}

Lattice make_product(const Lattice& a, const Lattice& b,
                     std::size_t max_elements) {
  const std::size_t n = a.size() * b.size();
  if (n > max_elements) {
    too_large("product " + a.name() + "x" + b.name() + " has " +
              std::to_string(n) + " elements, limit is " +
              std::to_string(max_elements));
  }
  auto pair_name = [&](Element x, Element y) {
    return "(" + a.element_name(x) + "," + b.element_name(y) + ")";
  };
  std::vector<std::string> names;
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < b.size(); ++y) names.push_back(pair_name(x, y));
  }
  NamePairs covers;
  for (auto [lo, hi] : a.covers()) {
    for (Element y = 0; y < b.size(); ++y) {
      covers.emplace_back(pair_name(lo, y), pair_name(hi, y));
    }
  }
  for (auto [lo, hi] : b.covers()) {
    for (Element x = 0; x < a.size(); ++x) {
      covers.emplace_back(pair_name(x, lo), pair_name(x, hi));
    }
  }
  return build_lattice(a.name() + "x" + b.name(), std::move(names),
                       pair_name(a.bottom(), b.bottom()),
                       pair_name(a.top(), b.top()), covers, max_elements);
}

}  // namespace latext
