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

#include "latext/io.hpp"
#include "latext/maps.hpp"
#include "latext/operators.hpp"

#ifndef LATEXT_FIXTURE_DIR
#error "LATEXT_FIXTURE_DIR must point at tests/fixtures"
#endif

namespace latext::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(LATEXT_FIXTURE_DIR) + "/" + name;
}

inline std::string fixture_text(const std::string& name) {
  return read_text_file(fixture_path(name));
}

/// C4 = {0 < a < b < 1}, C3 = {0 < m < 1}, r = {0->0, a->m, b->m, 1->1},
/// s = {0->0, m->a, 1->1}, with min and max on C3.
struct CanonicalSetup {
  Workspace ws;
  LatticePtr c4;
  LatticePtr c3;
  Map r;
  Map s;
  OperatorTable min;
  OperatorTable max;

  CanonicalSetup()
      : c4(ws.add_lattice(parse_lattice(fixture_text("C4.lat")))),
        c3(ws.add_lattice(parse_lattice(fixture_text("C3.lat")))),
        r(parse_map(fixture_text("r_C4_C3.map"), ws)),
        s(parse_map(fixture_text("s_C3_C4.map"), ws)),
        min(parse_operator(fixture_text("min_C3.op"), ws)),
        max(parse_operator(fixture_text("max_C3.op"), ws)) {}

  Element big(const char* name) const { return c4->index_of(name); }
  Element small(const char* name) const { return c3->index_of(name); }

  // r with r(b) = 1_M: still a monotone retraction for s, but 1_M is hit
  // below 1_L.
  Map r_top_early() const {
    return Map("r", c4, c3,
               {small("0"), small("m"), small("1"), small("1")});
  }
};

}  // namespace latext::testing
