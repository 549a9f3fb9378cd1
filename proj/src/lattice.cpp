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

#include "latext/lattice.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "latext/error.hpp"

namespace latext {

namespace {

[[noreturn]] void reject(ErrorKind kind, std::string rule,
                         std::vector<std::string> witness,
                         const std::string& message) {
  ValidationReport report;
  report.add(std::move(rule), std::move(witness), message);
  throw Error(kind, message, std::move(report));
}

// Greatest element of `candidates` under `below`, if one exists.
template <typename Below>
std::optional<Element> greatest(const std::vector<Element>& candidates,
                                 Below below) {
  for (Element g : candidates) {
    if (std::all_of(candidates.begin(), candidates.end(),
                    [&](Element c) { return below(c, g); })) {
      return g;
    }
  }
  return std::nullopt;
}

}  // namespace

Element Lattice::index_of(std::string_view name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) {
    throw Error(ErrorKind::kUnknownElement,
                "unknown element '" + std::string(name) + "' in lattice " +
                    name_);
  }
  return static_cast<Element>(it - names_.begin());
}

bool Lattice::contains(std::string_view name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

bool Lattice::operator==(const Lattice& other) const {
  return name_ == other.name_ && names_ == other.names_ &&
         bottom_ == other.bottom_ && top_ == other.top_ &&
         covers_ == other.covers_;
}

Lattice build_lattice(
    std::string name, std::vector<std::string> elements,
    std::string_view bottom, std::string_view top,
    const std::vector<std::pair<std::string, std::string>>& covers,
    std::size_t max_elements) {
  if (elements.empty()) {
    reject(ErrorKind::kNotBounded, "non-empty", {},
           "lattice " + name + " has no elements");
  }
  if (elements.size() > max_elements) {
    reject(ErrorKind::kSizeLimitExceeded, "size-limit", {},
           "lattice " + name + " has " + std::to_string(elements.size()) +
               " elements, limit is " + std::to_string(max_elements));
  }

  std::unordered_map<std::string, Element> index;
  for (Element i = 0; i < elements.size(); ++i) {
    if (!index.emplace(elements[i], i).second) {
      reject(ErrorKind::kDuplicateElement, "duplicate-element", {elements[i]},
             "element '" + elements[i] + "' declared twice");
    }
  }
  auto lookup = [&](std::string_view e) {
    auto it = index.find(std::string(e));
    if (it == index.end()) {
      reject(ErrorKind::kUnknownElement, "unknown-element", {std::string(e)},
             "element '" + std::string(e) + "' is not declared");
    }
    return it->second;
  };

  Lattice lat;
  lat.name_ = std::move(name);
  lat.bottom_ = lookup(bottom);
  lat.top_ = lookup(top);
  const std::size_t n = elements.size();
  lat.names_ = std::move(elements);

  auto& leq = lat.leq_;
  leq.assign(n * n, 0);
  for (Element i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (const auto& [lo, hi] : covers) {
    Element a = lookup(lo);
    Element b = lookup(hi);
    if (a == b) {
      reject(ErrorKind::kNotAPartialOrder, "antisymmetry", {lo, hi},
             "cover " + lo + " < " + hi + " relates an element to itself");
    }
    leq[a * n + b] = 1;
  }
  // Warshall closure.
  for (Element k = 0; k < n; ++k) {
    for (Element i = 0; i < n; ++i) {
      if (!leq[i * n + k]) continue;
      for (Element j = 0; j < n; ++j) {
        if (leq[k * n + j]) leq[i * n + j] = 1;
      }
    }
  }

  const auto& names = lat.names_;
  for (Element i = 0; i < n; ++i) {
    for (Element j = i + 1; j < n; ++j) {
      if (leq[i * n + j] && leq[j * n + i]) {
        reject(ErrorKind::kNotAPartialOrder, "antisymmetry",
               {names[i], names[j]},
               "covers contain a cycle through " + names[i] + " and " +
                   names[j]);
      }
    }
  }

  for (Element x = 0; x < n; ++x) {
    if (!leq[lat.bottom_ * n + x]) {
      reject(ErrorKind::kNotBounded, "bottom", {names[lat.bottom_], names[x]},
             names[lat.bottom_] + " is not below " + names[x]);
    }
  }
  for (Element x = 0; x < n; ++x) {
    if (!leq[x * n + lat.top_]) {
      reject(ErrorKind::kNotBounded, "top", {names[x], names[lat.top_]},
             names[x] + " is not below " + names[lat.top_]);
    }
  }

  auto below = [&](Element a, Element b) { return leq[a * n + b] != 0; };
  auto above = [&](Element a, Element b) { return leq[b * n + a] != 0; };
  lat.meet_.assign(n * n, 0);
  lat.join_.assign(n * n, 0);
  std::vector<Element> bounds;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      bounds.clear();
      for (Element z = 0; z < n; ++z) {
        if (below(z, x) && below(z, y)) bounds.push_back(z);
      }
      auto m = greatest(bounds, below);
      if (!m) {
        reject(ErrorKind::kNotALattice, "meet", {names[x], names[y]},
               names[x] + " and " + names[y] + " have no greatest lower bound");
      }
      lat.meet_[x * n + y] = *m;

      bounds.clear();
      for (Element z = 0; z < n; ++z) {
        if (below(x, z) && below(y, z)) bounds.push_back(z);
      }
      auto j = greatest(bounds, above);
      if (!j) {
        reject(ErrorKind::kNotALattice, "join", {names[x], names[y]},
               names[x] + " and " + names[y] + " have no least upper bound");
      }
      lat.join_[x * n + y] = *j;
    }
  }

  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a == b || !below(a, b)) continue;
      bool covered = true;
      for (Element k = 0; k < n && covered; ++k) {
        if (k != a && k != b && below(a, k) && below(k, b)) covered = false;
      }
      if (covered) lat.covers_.emplace_back(a, b);
    }
  }
  return lat;
}

std::vector<std::pair<std::string, std::string>> cover_names(
    const Lattice& lattice) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(lattice.covers().size());
  for (auto [a, b] : lattice.covers()) {
    out.emplace_back(lattice.element_name(a), lattice.element_name(b));
  }
  return out;
}

}  // namespace latext
