// Copyright 2026 The twistcube authors
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

#include <catch2/catch.hpp>

#include "twistcube/pospace.hpp"
#include "twistcube/shapes.hpp"

using namespace twistcube;

namespace {

RationalPoint pt(std::initializer_list<long> xs) {
  std::vector<Rational> coords;
  for (long x : xs) coords.push_back(Rational(x));
  return RationalPoint(std::move(coords));
}

}  // namespace

TEST_CASE("rank functions") {
  CHECK(rank_standard(pt({0, 0, 0})) == 0);
  CHECK(rank_standard(pt({1, 2, 3})) == 6);

  CHECK(rank_twisted(pt({-1})) == -1);
  CHECK(rank_twisted(pt({1})) == 1);
  CHECK(rank_twisted(pt({-1, 1})) == -3);
  CHECK(rank_twisted(pt({-1, -1})) == -1);
  CHECK(rank_twisted(pt({1, -1})) == 1);
  CHECK(rank_twisted(pt({1, 1})) == 3);

  // Rational interior points, evaluated by hand:
  // rank_tw(1/2, 1/3) = (1/2)*2 + (1/3)*(1/2) = 7/6.
  const RationalPoint interior(
      std::vector<Rational>{make_rational(1, 2), make_rational(1, 3)});
  CHECK(rank_twisted(interior) == make_rational(7, 6));
  CHECK(rank_twisted_recursive(interior) == make_rational(7, 6));
}

TEST_CASE("below decides the metric inequality exactly") {
  const RankedSpace std2 = cube_pospace(2);
  CHECK(below(std2, pt({0, 0}), pt({0, 0})));
  CHECK(below(std2, pt({0, 0}), pt({1, 1})));   // d^2 = 2 <= 4
  CHECK_FALSE(below(std2, pt({0, 1}), pt({1, 0})));  // rank gap 0
  CHECK_THROWS_AS(below(std2, pt({0, 0}), pt({2, 0})), OutsideBox);

  const RankedSpace tw1 = twisted_pospace(1);
  CHECK(below(tw1, pt({-1}), pt({1})));
  CHECK_FALSE(below(tw1, pt({1}), pt({-1})));
}

TEST_CASE("product order") {
  CHECK(product_leq(pt({0, 0}), pt({1, 1})));
  CHECK(product_leq(pt({1, 1}), pt({1, 1})));
  CHECK_FALSE(product_leq(pt({0, 1}), pt({1, 0})));
  CHECK_THROWS_AS(product_leq(pt({0}), pt({0, 0})), Error);
}

TEST_CASE("corner embeddings") {
  CHECK(emb(RankKind::standard, BinaryWord::parse("01")) == pt({0, 1}));
  CHECK(emb(RankKind::twisted, BinaryWord::parse("01")) == pt({-1, 1}));
  // Coordinatewise assembly of single digits.
  const BinaryWord b = BinaryWord::parse("0110");
  const RationalPoint p = emb(RankKind::standard, b);
  for (int i = 0; i < b.length(); ++i) {
    REQUIRE(p[i] == emb(RankKind::standard,
                        BinaryWord(std::vector<std::uint8_t>{b[i]}))[0]);
  }
}

TEST_CASE("the generated order exceeds the product order from dim 3") {
  const RankedSpace space =
      boxed_space(RankKind::standard, 3, Rational(-16), Rational(16));
  const RationalPoint x = pt({0, 0, 0});
  const RationalPoint y = pt({4, 4, -1});
  Rational dist2 = 0;
  for (int i = 0; i < 3; ++i) dist2 += (y[i] - x[i]) * (y[i] - x[i]);
  const Rational delta = rank_standard(y) - rank_standard(x);
  CHECK(dist2 == 33);
  CHECK(delta * delta == 49);
  CHECK(below(space, x, y));
  CHECK_FALSE(product_leq(x, y));
}

TEST_CASE("rank/sort identity at the corners") {
  CHECK(rank_twisted(emb(RankKind::twisted, BinaryWord::parse(""))) == 0);
  CHECK(rank_twisted(emb(RankKind::twisted, BinaryWord::parse("0"))) == -1);
  CHECK(rank_twisted(emb(RankKind::twisted, BinaryWord::parse("011"))) == -7);
  for (int n = 0; n <= 10; ++n) {
    REQUIRE(rank_sort_identity(n).pass);
  }
}

TEST_CASE("embedding checks") {
  for (int n = 0; n <= 4; ++n) {
    CHECK(can_embed(shape_graph({ShapeKind::cube, Flavor::face, n}),
                    cube_pospace(n),
                    [](const std::string& label) {
                      return emb(RankKind::standard, BinaryWord::parse(label));
                    })
              .pass);
    CHECK(can_embed(shape_graph({ShapeKind::twisted, Flavor::face, n}),
                    twisted_pospace(n),
                    [](const std::string& label) {
                      return emb(RankKind::twisted, BinaryWord::parse(label));
                    })
              .pass);
  }

  const auto negative = can_embed(
      shape_graph({ShapeKind::twisted, Flavor::face, 2}), cube_pospace(2),
      [](const std::string& label) {
        return emb(RankKind::standard, BinaryWord::parse(label));
      });
  REQUIRE_FALSE(negative.pass);
  REQUIRE(negative.witness);
  CHECK(negative.witness->first == "01");
  CHECK(negative.witness->second == "00");

  const Graph cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK_THROWS_AS(
      can_embed(cyc, cube_pospace(1),
                [](const std::string&) { return pt({0}); }),
      CyclicInput);
}

TEST_CASE("simplex coordinates") {
  const RationalPoint x = pt({1, 2, 3});
  CHECK(simplex_coords(SimplexCoordMap::phi, x) == pt({1, 3, 6}));
  CHECK(simplex_coords(SimplexCoordMap::psi,
                       simplex_coords(SimplexCoordMap::phi, x)) == x);

  CHECK(simplex_extreme_point(3, 0) == pt({0, 0, 0}));
  CHECK(simplex_extreme_point(3, 3) == pt({1, 1, 1}));
  CHECK(simplex_extreme_point(3, 1) == pt({0, 0, 1}));
  CHECK_THROWS_AS(simplex_extreme_point(3, 4), IndexOutOfRange);
}

TEST_CASE("rational parsing and rendering") {
  CHECK(rational_str(make_rational(-7, 1)) == "-7");
  CHECK(rational_str(make_rational(2, 4)) == "1/2");
  CHECK(parse_rational("-3/9") == make_rational(-1, 3));
  CHECK_THROWS_AS(make_rational(1, 0), Error);
}
