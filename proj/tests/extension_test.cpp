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

#include <doctest.h>

#include <random>

#include "fixtures.hpp"
#include "latext/error.hpp"
#include "latext/extension.hpp"
#include "latext/standard_lattices.hpp"

namespace latext {
namespace {

using Names = std::vector<std::string>;
using testing::CanonicalSetup;

TEST_CASE("extended overlap on the canonical setup") {
  CanonicalSetup f;
  auto ext = extend_overlap(f.r, f.s, f.min);
  CHECK(ext.name() == "min^E");
  CHECK(&ext.lattice() == f.c4.get());
  CHECK(ext("b", "b") == "a");
  CHECK(ext("b", "1") == "a");
  CHECK(ext("1", "1") == "1");
  for (const char* y : {"0", "a", "b", "1"}) CHECK(ext("0", y) == "0");
}

TEST_CASE("extended grouping on the canonical setup") {
  CanonicalSetup f;
  auto ext = extend_grouping(f.r, f.s, f.max);
  CHECK(ext("b", "b") == "a");
  CHECK(ext("b", "1") == "1");
  CHECK(ext("0", "0") == "0");
}

TEST_CASE("identity pair gives back the source") {
  auto b2 = share(make_boolean(2));
  auto id = Map::identity(b2);
  for (const auto& op : {canonical_meet(b2), canonical_join(b2)}) {
    CHECK(extend_operator(id, id, op).cells() == op.cells());
  }
  std::mt19937 rng(7);
  std::uniform_int_distribution<Element> pick(0, 3);
  std::vector<Element> cells(16);
  for (auto& c : cells) c = pick(rng);
  OperatorTable arbitrary("t", b2, cells);
  CHECK(extend_operator(id, id, arbitrary).cells() == cells);
}

TEST_CASE("shape errors") {
  CanonicalSetup f;
  CHECK_THROWS_AS(extend_operator(f.s, f.r, f.min), Error);
  auto c4_meet = canonical_meet(f.c4);
  CHECK_THROWS_AS(extend_operator(f.r, f.s, c4_meet), Error);
  CHECK_THROWS_AS(verify_extension_identity(f.s, c4_meet, c4_meet), Error);
}

TEST_CASE("extension identity") {
  CanonicalSetup f;
  auto ext = extend_overlap(f.r, f.s, f.min);
  CHECK(verify_extension_identity(f.s, f.min, ext).ok());

  auto id = Map::identity(f.c3);
  CHECK(verify_extension_identity(id, f.min, f.min).ok());

  // Corrupt (s(m), s(m)) = (a, a).
  auto broken = ext.with_cell(f.big("a"), f.big("a"), f.big("1"));
  auto report = verify_extension_identity(f.s, f.min, broken);
  REQUIRE_FALSE(report.ok());
  REQUIRE(report.violations().size() == 1);
  CHECK(report.violations()[0].witness == Names{"m", "m"});
}

TEST_CASE("verify_theorem on the canonical setup") {
  CanonicalSetup f;
  auto over = verify_theorem(f.r, f.s, f.min, OperatorKind::kQuasiOverlap);
  CHECK(over.preconditions_ok());
  CHECK(over.conclusions_ok());
  CHECK(over.identity_ok());
  CHECK(over.outcome() == TheoremOutcome::kHolds);
  CHECK(over.provenance.source == "min");
  CHECK(over.extended.cells() == extend_overlap(f.r, f.s, f.min).cells());

  auto group = verify_theorem(f.r, f.s, f.max, OperatorKind::kQuasiGrouping);
  CHECK(group.outcome() == TheoremOutcome::kHolds);
}

TEST_CASE("dropping the top boundary condition breaks QO3 at (b, b)") {
  CanonicalSetup f;
  auto res = verify_theorem(f.r_top_early(), f.s, f.min,
                            OperatorKind::kQuasiOverlap);
  CHECK(res.retraction.ok());
  CHECK(res.boundary.find("boundary-one"));
  CHECK_FALSE(res.boundary.find("boundary-zero"));
  CHECK(res.outcome() == TheoremOutcome::kPreconditionsUnmet);
  const auto& qo3 = res.extension_axioms.axiom(3);
  REQUIRE_FALSE(qo3.pass);
  CHECK(qo3.witness->inputs == Names{"b", "b"});
  CHECK(qo3.witness->outputs == Names{"1"});
  CHECK(res.extension_axioms.axiom(1).pass);
  CHECK(res.extension_axioms.axiom(2).pass);
  CHECK(res.extension_axioms.axiom(4).pass);
  CHECK(res.identity_ok());
}

TEST_CASE("dropping the bottom boundary condition breaks QO2") {
  CanonicalSetup f;
  // s(m) = b, r(a) = 0: r . s = id, but r hits 0_M above 0_L.
  Map s("s", f.c3, f.c4, {f.big("0"), f.big("b"), f.big("1")});
  Map r("r", f.c4, f.c3,
        {f.small("0"), f.small("0"), f.small("m"), f.small("1")});
  auto res = verify_theorem(r, s, f.min, OperatorKind::kQuasiOverlap);
  CHECK(res.retraction.ok());
  CHECK(res.boundary.find("boundary-zero"));
  CHECK_FALSE(res.boundary.find("boundary-one"));
  const auto& qo2 = res.extension_axioms.axiom(2);
  REQUIRE_FALSE(qo2.pass);
  CHECK(qo2.witness->inputs == Names{"a", "a"});

  // The grouping mirror fails QG2 at the same place.
  auto g = verify_theorem(r, s, f.max, OperatorKind::kQuasiGrouping);
  REQUIRE_FALSE(g.extension_axioms.axiom(2).pass);
  CHECK(g.extension_axioms.axiom(2).witness->inputs == Names{"0", "a"});
}

TEST_CASE("a failing source is reported as an unmet precondition") {
  CanonicalSetup f;
  auto res = verify_theorem(f.r, f.s, f.max, OperatorKind::kQuasiOverlap);
  CHECK_FALSE(res.source_axioms.all_pass());
  CHECK(res.outcome() == TheoremOutcome::kPreconditionsUnmet);
}

TEST_CASE("invalid pairs still extend") {
  CanonicalSetup f;
  Map r("r", f.c4, f.c3,
        {f.small("1"), f.small("0"), f.small("0"), f.small("0")});
  auto res = verify_theorem(r, f.s, f.min, OperatorKind::kQuasiOverlap);
  CHECK_FALSE(res.retraction.ok());
  CHECK(res.outcome() == TheoremOutcome::kPreconditionsUnmet);
  CHECK(res.extended.cells().size() == 16);
}

struct Instance {
  LatticePtr big;
  LatticePtr small;
};

std::vector<Instance> instances() {
  return {{share(make_chain(4)), share(make_chain(3))},
          {share(make_chain(5)), share(make_chain(3))},
          {share(make_boolean(2)), share(make_chain(2))},
          {share(make_diamond_M3()), share(make_chain(2))},
          {share(make_pentagon_N5()), share(make_chain(3))},
          {share(make_boolean(3)), share(make_boolean(2))}};
}

TEST_CASE("properties that need only r . s = id or monotonicity") {
  std::mt19937 rng(42);
  for (const auto& [big, small] : instances()) {
    CAPTURE(big->name());
    auto pairs = enumerate_retraction_pairs(big, small, false);
    REQUIRE_FALSE(pairs.empty());
    const std::size_t m = small->size();
    std::uniform_int_distribution<Element> pick(0, m - 1);
    for (const auto& pair : pairs) {
      for (auto kind : {OperatorKind::kQuasiOverlap, OperatorKind::kQuasiGrouping}) {
        for (const auto& op : enumerate_operators(small, kind)) {
          auto ext = extend_operator(pair.r(), pair.s(), op);
          auto report = check_axioms(ext, kind);
          CHECK(verify_extension_identity(pair.s(), op, ext).ok());
          CHECK(report.axiom(1).pass);
          CHECK(report.axiom(4).pass);
          if (pair.boundary_ok()) CHECK(report.all_pass());
        }
      }
      // Arbitrary, possibly non-commutative, sources: the identity still
      // holds, and commutativity carries over when present.
      std::vector<Element> cells(m * m);
      for (auto& c : cells) c = pick(rng);
      OperatorTable arbitrary("t", small, cells);
      auto ext = extend_operator(pair.r(), pair.s(), arbitrary);
      CHECK(verify_extension_identity(pair.s(), arbitrary, ext).ok());
      if (check_quasi_overlap(arbitrary).axiom(1).pass) {
        CHECK(check_quasi_overlap(ext).axiom(1).pass);
      }
      auto sym = arbitrary;
      for (Element x = 0; x < m; ++x) {
        for (Element y = x + 1; y < m; ++y) {
          sym = sym.with_cell(y, x, sym(x, y));
        }
      }
      CHECK(check_quasi_overlap(extend_operator(pair.r(), pair.s(), sym))
                .axiom(1)
                .pass);
    }
  }
}

}  // namespace
}  // namespace latext
