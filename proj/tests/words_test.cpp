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

#include "twistcube/graph.hpp"
#include "twistcube/shapes.hpp"
#include "twistcube/words.hpp"

using namespace twistcube;

namespace {

Arrow make_arrow(const std::string& text) {
  return Arrow{TernaryWord::parse(text)};
}

}  // namespace

TEST_CASE("reversal_stats counts missing ones in the prefix") {
  CHECK(reversal_stats(BinaryWord::parse("")).num_rev == 0);
  CHECK(reversal_stats(BinaryWord::parse("")).parity == 0);
  CHECK(reversal_stats(BinaryWord::parse("0")).num_rev == 1);
  CHECK(reversal_stats(BinaryWord::parse("0")).parity == 1);
  CHECK(reversal_stats(BinaryWord::parse("01")).num_rev == 1);
  CHECK(reversal_stats(BinaryWord::parse("01")).parity == 1);
}

TEST_CASE("arrow_stats reads the prefix before the star") {
  // Dimension-0 arrows are never reversed.
  for (const std::string& word : {"*00", "*01", "*10", "*11"}) {
    CHECK(arrow_stats(make_arrow(word)).parity == 0);
  }
  CHECK(arrow_stats(make_arrow("0*")).num_rev == 1);
  CHECK(arrow_stats(make_arrow("0*")).parity == 1);
  CHECK(arrow_stats(make_arrow("01*")).num_rev == 1);
  CHECK(arrow_stats(make_arrow("01*")).parity == 1);
}

TEST_CASE("simulate_reversals replays the twisting process") {
  CHECK(simulate_reversals(make_arrow("*")) == 0);
  CHECK(simulate_reversals(make_arrow("0*")) == 1);

  // Exhaustive agreement with the closed form for every arrow length <= 6.
  for (int n = 1; n <= 6; ++n) {
    for (int d = 0; d < n; ++d) {
      for (const auto& rest : BinaryWord::all(n - 1)) {
        std::vector<std::uint8_t> digits;
        for (int i = 0, r = 0; i < n; ++i) {
          digits.push_back(i == d ? kTernaryStar : rest[r]);
          if (i != d) ++r;
        }
        const Arrow a{TernaryWord(digits)};
        REQUIRE(arrow_stats(a).num_rev == simulate_reversals(a));
      }
    }
  }
}

TEST_CASE("arrow_endpoints substitute the star by b xor parity") {
  {
    const auto [src, tgt] = arrow_endpoints(make_arrow("*0"));
    CHECK(src == BinaryWord::parse("00"));
    CHECK(tgt == BinaryWord::parse("10"));
  }
  {
    // The twisted square's reversed left edge.
    const auto [src, tgt] = arrow_endpoints(make_arrow("0*"));
    CHECK(src == BinaryWord::parse("01"));
    CHECK(tgt == BinaryWord::parse("00"));
  }
}

TEST_CASE("arrow endpoints trace edges of the twisted face graph") {
  for (int n = 1; n <= 5; ++n) {
    const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
    for (int d = 0; d < n; ++d) {
      for (const auto& rest : BinaryWord::all(n - 1)) {
        std::vector<std::uint8_t> digits;
        for (int i = 0, r = 0; i < n; ++i) {
          digits.push_back(i == d ? kTernaryStar : rest[r]);
          if (i != d) ++r;
        }
        const auto [src, tgt] = arrow_endpoints(Arrow{TernaryWord(digits)});
        REQUIRE(tw.is_edge(src.str(), tgt.str()));
      }
    }
  }
}

TEST_CASE("ternary composition substitutes at star positions") {
  CHECK(ternary_compose(TernaryWord::parse("1*"), TernaryWord::parse("*0*")) ==
        TernaryWord::parse("10*"));
  CHECK(ternary_compose(TernaryWord::all_stars(3),
                        TernaryWord::parse("*1*0*")) ==
        TernaryWord::parse("*1*0*"));
  CHECK_THROWS_AS(
      ternary_compose(TernaryWord::parse("0"), TernaryWord::parse("*0*")),
      ArityMismatch);
}

TEST_CASE("binary simplex composition substitutes at one positions") {
  CHECK(binary_simplex_compose(BinaryWord::parse("01"),
                               BinaryWord::parse("101")) ==
        BinaryWord::parse("001"));
  CHECK(binary_simplex_compose(BinaryWord::parse("111"),
                               BinaryWord::parse("111")) ==
        BinaryWord::parse("111"));
  CHECK_THROWS_AS(binary_simplex_compose(BinaryWord::parse("0"),
                                         BinaryWord::parse("11")),
                  ArityMismatch);
}

TEST_CASE("sort_num follows the Hamiltonian path oracle") {
  // Oracle chain: exhaustive backtracking certifies the constructive
  // path for n <= 4; the construction then pins the sort semantics up
  // to n = 8.
  for (int n = 0; n <= 4; ++n) {
    const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
    const auto paths = hamiltonian_paths_backtracking(tw);
    REQUIRE(paths.size() == 1);
    REQUIRE(paths.front() == twisted_hamiltonian(n));
  }
  for (int n = 0; n <= 8; ++n) {
    const auto labels = twisted_hamiltonian(n).labels();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      REQUIRE(sort_num(BinaryWord::parse(labels[i])) == i);
      REQUIRE(unsort_num(n, i).str() == labels[i]);
    }
  }
}

TEST_CASE("sort_num frozen examples") {
  CHECK(sort_num(BinaryWord::parse("")) == 0);

  CHECK(sort_num(BinaryWord::parse("01")) == 0);
  CHECK(sort_num(BinaryWord::parse("00")) == 1);
  CHECK(sort_num(BinaryWord::parse("10")) == 2);
  CHECK(sort_num(BinaryWord::parse("11")) == 3);

  const std::vector<std::string> order{"011", "010", "000", "001",
                                       "101", "100", "110", "111"};
  for (std::size_t i = 0; i < order.size(); ++i) {
    CHECK(sort_num(BinaryWord::parse(order[i])) == i);
  }

  CHECK_THROWS_AS(unsort_num(2, 4), IndexOutOfRange);
}

TEST_CASE("sort_bin agrees with sort_num and inverts") {
  CHECK(sort_bin(BinaryWord::parse("00")) == BinaryWord::parse("01"));
  CHECK(sort_bin(BinaryWord::parse("11")) == BinaryWord::parse("11"));
  for (int n = 0; n <= 12; ++n) {
    for (const auto& b : BinaryWord::all(n)) {
      REQUIRE(sort_bin(b).to_index() == sort_num(b));
      REQUIRE(unsort_bin(sort_bin(b)) == b);
    }
  }
}

TEST_CASE("gray code fixed points and round trips") {
  CHECK(gray_encode(BinaryWord::parse("000")) == BinaryWord::parse("000"));
  CHECK(gray_encode(BinaryWord::parse("011")) == BinaryWord::parse("010"));
  for (int n = 0; n <= 12; ++n) {
    for (const auto& b : BinaryWord::all(n)) {
      REQUIRE(gray_decode(gray_encode(b)) == b);
    }
  }
}

TEST_CASE("words reject malformed input") {
  CHECK_THROWS_AS(BinaryWord::parse("012"), Error);
  CHECK_THROWS_AS(TernaryWord::parse("0x1"), Error);
  CHECK_THROWS_AS(Arrow{TernaryWord::parse("01")}, Error);
  CHECK_THROWS_AS(Arrow{TernaryWord::parse("*0*")}, Error);
  CHECK_THROWS_AS(BinaryWord::all(25), BudgetExceeded);
}
