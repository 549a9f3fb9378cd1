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

// Test-only brute-force oracles. These use nothing from the library except
// element names and the order relation `leq`, so they stay independent of
// the pruned searches and cached tables they are compared against.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "latext/lattice.hpp"

namespace latext::oracle {

using Table = std::vector<Element>;

// Meet by scanning all lower bounds for one that dominates the rest.
inline std::optional<Element> glb(const Lattice& l, Element x, Element y) {
  for (Element g = 0; g < l.size(); ++g) {
    if (!l.leq(g, x) || !l.leq(g, y)) continue;
    bool greatest = true;
    for (Element z = 0; z < l.size(); ++z) {
      if (l.leq(z, x) && l.leq(z, y) && !l.leq(z, g)) greatest = false;
    }
    if (greatest) return g;
  }
  return std::nullopt;
}

inline std::optional<Element> lub(const Lattice& l, Element x, Element y) {
  for (Element g = 0; g < l.size(); ++g) {
    if (!l.leq(x, g) || !l.leq(y, g)) continue;
    bool least = true;
    for (Element z = 0; z < l.size(); ++z) {
      if (l.leq(x, z) && l.leq(y, z) && !l.leq(g, z)) least = false;
    }
    if (least) return g;
  }
  return std::nullopt;
}

// Calls `visit` with every table of `length` cells over `base` values, in
// lexicographic order. Cells with a value in `fixed` are not varied.
inline void for_each_table(std::size_t length, std::size_t base,
                           const std::vector<std::optional<Element>>& fixed,
                           const std::function<void(const Table&)>& visit) {
  Table t(length, 0);
  std::vector<std::size_t> free;
  for (std::size_t i = 0; i < length; ++i) {
    if (i < fixed.size() && fixed[i]) {
      t[i] = *fixed[i];
    } else {
      free.push_back(i);
    }
  }
  while (true) {
    visit(t);
    std::size_t k = free.size();
    while (k > 0) {
      std::size_t i = free[--k];
      if (++t[i] < base) break;
      t[i] = 0;
      if (k == 0) return;
    }
    if (free.empty()) return;
  }
}

// Definition-level predicates on a row-major table.
inline bool is_quasi_overlap(const Lattice& l, const Table& t) {
  const std::size_t n = l.size();
  const Element zero = l.bottom();
  const Element one = l.top();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element v = t[x * n + y];
      if (v != t[y * n + x]) return false;
      if ((v == zero) != (x == zero || y == zero)) return false;
      if ((v == one) != (x == one && y == one)) return false;
      for (Element z = 0; z < n; ++z) {
        if (l.leq(y, z) && !l.leq(v, t[x * n + z])) return false;
      }
    }
  }
  return true;
}

inline bool is_quasi_grouping(const Lattice& l, const Table& t) {
  const std::size_t n = l.size();
  const Element zero = l.bottom();
  const Element one = l.top();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      Element v = t[x * n + y];
      if (v != t[y * n + x]) return false;
      if ((v == zero) != (x == zero && y == zero)) return false;
      if ((v == one) != (x == one || y == one)) return false;
      for (Element z = 0; z < n; ++z) {
        if (l.leq(y, z) && !l.leq(v, t[x * n + z])) return false;
      }
    }
  }
  return true;
}

inline bool is_monotone(const Lattice& a, const Lattice& b, const Table& f) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) && !b.leq(f[x], f[y])) return false;
    }
  }
  return true;
}

inline bool is_order_embedding(const Lattice& a, const Lattice& b,
                               const Table& f) {
  for (Element x = 0; x < a.size(); ++x) {
    for (Element y = 0; y < a.size(); ++y) {
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
    }
  }
  return true;
}

// Every (s, r) table pair, unpruned, filtered by the enumerator's contract.
// Sorted by (s, r) as a consequence of lexicographic generation.
inline std::vector<std::pair<Table, Table>> brute_force_retractions(
    const Lattice& big, const Lattice& small, bool require_boundary) {
  std::vector<std::pair<Table, Table>> out;
  for_each_table(small.size(), big.size(), {}, [&](const Table& s) {
    if (!is_order_embedding(small, big, s)) return;
    for_each_table(big.size(), small.size(), {}, [&](const Table& r) {
      if (!is_monotone(big, small, r)) return;
      for (Element m = 0; m < small.size(); ++m) {
        if (r[s[m]] != m) return;
      }
      if (require_boundary) {
        for (Element x = 0; x < big.size(); ++x) {
          if ((r[x] == small.bottom()) != (x == big.bottom())) return;
          if ((r[x] == small.top()) != (x == big.top())) return;
        }
      }
      out.emplace_back(s, r);
    });
  });
  return out;
}

}  // namespace latext::oracle
