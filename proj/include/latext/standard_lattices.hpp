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

#include "latext/lattice.hpp"

namespace latext {

// Chain e0 < e1 < ... < e{n-1}, named "C<n>". Requires n >= 2.
Lattice make_chain(std::size_t n, std::size_t max_elements = kDefaultMaxElements);

// Boolean lattice with k atoms (1 <= k <= 4), named "B<k>". Elements are
// k-digit bit strings, most significant bit first, declared in numeric order.
Lattice make_boolean(std::size_t k);

// 0 < p, q, r < 1, named "M3".
Lattice make_diamond_M3();

// 0 < a < b < 1 and 0 < c < 1, named "N5".
Lattice make_pentagon_N5();

// Componentwise product, named "<A>x<B>", elements "(a,b)" in row-major
// order. Throws kSizeLimitExceeded past `max_elements`.
Lattice make_product(const Lattice& a, const Lattice& b,
                     std::size_t max_elements = kDefaultMaxElements);

}  // namespace latext
