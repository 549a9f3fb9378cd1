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

#include <algorithm>
#include <set>

#include "fixtures.hpp"
#include "latext/error.hpp"
#include "latext/maps.hpp"
#include "latext/standard_lattices.hpp"
#include "oracles.hpp"

namespace latext {
namespace {

using testing::CanonicalSetup;

TEST_CASE("check_monotone") {
  CanonicalSetup f;
  CHECK(check_monotone(f.r).ok());
  CHECK(check_monotone(f.s).ok());
  CHECK(check_monotone(Map::identity(f.c4)).ok());

  // {0->m, a->0, b->m, 1->1}: 0 <= a but m is not <= 0.
  Map bad("f", f.c4, f.c3,
          {f.small("m"), f.small("0"), f.small("m"), f.small("1")});
  auto report = check_monotone(bad);
  REQUIRE_FALSE(report.ok());
  CHECK(report.violations().front().witness ==
        std::vector<std::string>{"0", "a"});
  CHECK_THROWS_AS(MonotoneMap::certify(bad), Error);
}

TEST_CASE("maps must be total") {
  CanonicalSetup f;
  CHECK_THROWS_AS(Map("f", f.c4, f.c3, {0, 1, 2}), Error);
  CHECK_THROWS_AS(Map("f", f.c4, f.c3, {0, 1, 2, 3}), Error);
  try {
    Map::from_names("f", f.c4, f.c3, {{"0", "0"}, {"a", "m"}, {"1", "1"}});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kNotTotal);
  }
  try {
    Map::from_names("f", f.c4, f.c3, {{"0", "0"}, {"0", "m"}});
    FAIL("no throw");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kDuplicateEntry);
  }
  CHECK_THROWS_AS(Map::from_names("f", f.c4, f.c3, {{"zz", "0"}}), Error);
}

TEST_CASE("compose applies f then g") {
  CanonicalSetup f;
  auto rs = compose(f.s, f.r);
  CHECK(rs.same_function(Map::identity(f.c3)));
  CHECK(compose(Map::identity(f.c4), f.r).same_function(f.r));
  auto top = Map::constant(f.c3, f.c3, f.c3->top());
  CHECK(compose(f.r, top).same_function(
      Map::constant(f.c4, f.c3, f.c3->top())));
  CHECK_THROWS_AS(compose(f.r, f.r), Error);

  auto mono = compose(MonotoneMap::certify(f.s), MonotoneMap::certify(f.r));
  CHECK(mono.map().same_function(Map::identity(f.c3)));
}

TEST_CASE("check_retraction_pair") {
  CanonicalSetup f;
  CHECK(check_retraction_pair(f.r, f.s).ok());
  CHECK(check_retraction_pair(Map::identity(f.c4), Map::identity(f.c4)).ok());

  Map r_bad("r", f.c4, f.c3,
            {f.small("0"), f.small("0"), f.small("m"), f.small("1")});
  auto report = check_retraction_pair(r_bad, f.s);
  const auto* v = report.find("retraction");
  REQUIRE(v);
  CHECK(v->witness == std::vector<std::string>{"m"});
  CHECK(v->message == "r(s(m)) = 0 != m");

  // Swapped roles type-check as C4 retracting onto C3 the other way round.
  CHECK_FALSE(check_retraction_pair(f.s, f.r).ok());
  CHECK_THROWS_AS(check_retraction_pair(f.r, f.r), Error);
  CHECK_THROWS_AS(RetractionPair::make(r_bad, f.s), Error);
}

TEST_CASE("check_boundary_conditions") {
  CanonicalSetup f;
  CHECK(check_boundary_conditions(f.r).ok());
  CHECK(check_boundary_conditions(Map::identity(f.c4)).ok());

  auto report = check_boundary_conditions(f.r_top_early());
  CHECK(report.find("boundary-zero") == nullptr);
  const auto* one = report.find("boundary-one");
  REQUIRE(one);
  CHECK(one->witness == std::vector<std::string>{"b"});

  auto pair = RetractionPair::make(f.r_top_early(), f.s);
  CHECK(pair.boundary_zero_ok());
  CHECK_FALSE(pair.boundary_one_ok());

  // The "<=" direction: 1_L not sent to 1_M.
  Map low("r", f.c4, f.c3,
          {f.small("0"), f.small("m"), f.small("m"), f.small("m")});
  auto low_report = check_boundary_conditions(low);
  const auto* v = low_report.find("boundary-one");
  REQUIRE(v);
  CHECK(v->witness == std::vector<std::string>{"1"});
  CHECK(v->message.rfind("[<=]", 0) == 0);
}

TEST_CASE("check_homomorphism") {
  auto b2 = share(make_boolean(2));
  auto c2 = share(make_chain(2));
  CHECK(check_homomorphism(Map::identity(b2)).ok());
  // Sends 01 and 10 to the top of C2: meet is not preserved.
  Map f("f", b2, c2, {0, 1, 1, 1});
  auto report = check_homomorphism(f);
  CHECK(report.find("homomorphism-meet"));
  CHECK(report.find("homomorphism-join") == nullptr);
}

TEST_CASE("enumerate C4 -> C3 with boundary gives two pairs") {
  CanonicalSetup f;
  auto pairs = enumerate_retraction_pairs(f.c4, f.c3, true);
  REQUIRE(pairs.size() == 2);
  CHECK(pairs[0].s().same_function(f.s));
  CHECK(pairs[0].r().same_function(f.r));
  CHECK(pairs[1].s()(f.small("m")) == f.big("b"));
  CHECK(pairs[1].r().same_function(f.r));
}

TEST_CASE("enumerate C2 -> C2 with boundary gives the identities") {
  auto c2 = share(make_chain(2));
  auto pairs = enumerate_retraction_pairs(c2, c2, true);
  REQUIRE(pairs.size() == 1);
  CHECK(pairs[0].r().same_function(Map::identity(c2)));
  CHECK(pairs[0].s().same_function(Map::identity(c2)));
}

TEST_CASE("enumerate C4 -> C4 contains the identity pair") {
  auto c4 = share(make_chain(4));
  auto pairs = enumerate_retraction_pairs(c4, c4, true);
  auto id = Map::identity(c4);
  CHECK(std::any_of(pairs.begin(), pairs.end(), [&](const auto& p) {
    return p.r().same_function(id) && p.s().same_function(id);
  }));
}

TEST_CASE("enumerator size cap") {
  auto c4 = share(make_chain(4));
  auto c3 = share(make_chain(3));
  CHECK_THROWS_AS(enumerate_retraction_pairs(c4, c3, false, 3), Error);
}

std::vector<LatticePtr> small_lattices() {
  return {share(make_chain(2)), share(make_chain(3)), share(make_chain(4)),
          share(make_boolean(2))};
}

TEST_CASE("enumerator agrees with unpruned brute force") {
  for (const auto& big : small_lattices()) {
    for (const auto& small : small_lattices()) {
      if (small->size() > 3) continue;
      for (bool boundary : {false, true}) {
        CAPTURE(big->name());
        CAPTURE(small->name());
        CAPTURE(boundary);
        auto pairs = enumerate_retraction_pairs(big, small, boundary);
        auto expected =
            oracle::brute_force_retractions(*big, *small, boundary);
        REQUIRE(pairs.size() == expected.size());
        for (std::size_t i = 0; i < pairs.size(); ++i) {
          CHECK(pairs[i].s().image() == expected[i].first);
          CHECK(pairs[i].r().image() == expected[i].second);
        }
      }
    }
  }
}

TEST_CASE("enumerated pairs are valid, sorted and have injective s") {
  std::vector<std::pair<LatticePtr, LatticePtr>> cases = {
      {share(make_chain(5)), share(make_chain(3))},
      {share(make_diamond_M3()), share(make_chain(2))},
      {share(make_pentagon_N5()), share(make_chain(3))},
      {share(make_product(make_chain(3), make_chain(3))),
       share(make_chain(3))},
      {share(make_boolean(3)), share(make_boolean(2))},
  };
  for (const auto& [big, small] : cases) {
    for (bool boundary : {false, true}) {
      CAPTURE(big->name());
      CAPTURE(boundary);
      auto pairs = enumerate_retraction_pairs(big, small, boundary);
      for (std::size_t i = 0; i < pairs.size(); ++i) {
        const auto& p = pairs[i];
        CHECK(check_retraction_pair(p.r(), p.s()).ok());
        if (boundary) {
          CHECK(check_boundary_conditions(p.r()).ok());
          CHECK(p.s()(small->bottom()) == big->bottom());
          CHECK(p.s()(small->top()) == big->top());
        }
        std::set<Element> image(p.s().image().begin(), p.s().image().end());
        CHECK(image.size() == small->size());
        if (i) {
          const auto& q = pairs[i - 1];
          CHECK(std::tie(q.s().image(), q.r().image()) <
                std::tie(p.s().image(), p.r().image()));
        }
      }
    }
  }
}

}  // namespace
}  // namespace latext
