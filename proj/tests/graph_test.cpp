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

using namespace twistcube;

TEST_CASE("linear graphs unroll the edge schema") {
  const Graph l0 = linear_graph(0);
  CHECK(l0.node_count() == 1);
  CHECK(l0.edge_count() == 0);

  const Graph l1 = linear_graph(1);
  CHECK(l1.nodes() == std::vector<std::string>{"0", "1"});
  CHECK(l1.edge_labels() ==
        std::vector<std::pair<std::string, std::string>>{{"0", "1"}});

  const Graph l3 = linear_graph(3);
  CHECK(l3.node_count() == 4);
  CHECK(l3.edge_labels() ==
        std::vector<std::pair<std::string, std::string>>{
            {"0", "1"}, {"1", "2"}, {"2", "3"}});
}

TEST_CASE("predicates evaluate the quantified formulas exhaustively") {
  const Graph empty({}, {});
  const auto p = predicates(empty);
  CHECK(p.is_refl);
  CHECK(p.is_tran);
  CHECK(p.is_irrefl);
  CHECK(p.is_intran);

  // Neither reflexive nor irreflexive: one loop out of two nodes.
  const Graph mixed({"0", "1"}, {{"0", "1"}, {"1", "1"}});
  CHECK_FALSE(predicates(mixed).is_refl);
  CHECK_FALSE(predicates(mixed).is_irrefl);

  const auto line2 = predicates(linear_graph(2));
  CHECK(line2.is_irrefl);
  CHECK_FALSE(line2.is_tran);
}

TEST_CASE("closures") {
  const Graph trivial({"0"}, {});
  const Graph unit = reflexive_closure(trivial);
  CHECK(unit.edge_count() == 1);
  CHECK(unit.is_edge("0", "0"));
  CHECK(reflexive_closure(unit) == unit);

  CHECK(reflexive_closure(linear_graph(1)).edge_labels() ==
        std::vector<std::pair<std::string, std::string>>{
            {"0", "0"}, {"0", "1"}, {"1", "1"}});

  const Graph line2 = linear_graph(2);
  const Graph t = transitive_closure(line2);
  CHECK(t.is_edge("0", "2"));
  CHECK(predicates(t).is_irrefl);  // a DAG closure gains no loops
  CHECK(transitive_closure(t) == t);
  CHECK(reflexive_closure(transitive_closure(line2)) ==
        transitive_closure(reflexive_closure(line2)));

  // A cycle puts loops on exactly the nodes it reaches.
  const Graph cycle({"0", "1", "2"}, {{"0", "1"}, {"1", "0"}, {"1", "2"}});
  const Graph tc = transitive_closure(cycle);
  CHECK(tc.is_edge("0", "0"));
  CHECK(tc.is_edge("1", "1"));
  CHECK_FALSE(tc.is_edge("2", "2"));
}

TEST_CASE("morphism validation reports the first violation") {
  const Graph line1 = linear_graph(1);
  const Graph loopy({"x"}, {{"x", "x"}});
  const Graph bare({"x"}, {});

  CHECK_NOTHROW(GraphMorphism::validate(line1, loopy, {0, 0}));
  CHECK_THROWS_AS(GraphMorphism::validate(line1, bare, {0, 0}),
                  EdgeNotPreserved);
  CHECK_THROWS_AS(GraphMorphism::validate(line1, bare, {0, 7}),
                  NodeOutOfRange);
  CHECK(identity(line1).is_identity());

  std::string error;
  CHECK_FALSE(GraphMorphism::try_validate(line1, bare, {0, 0}, &error));
  CHECK(error.find("<0, 1>") != std::string::npos);
}

TEST_CASE("composition and lifting") {
  const Graph line1 = linear_graph(1);
  const Graph line2 = linear_graph(2);
  const GraphMorphism f = GraphMorphism::validate(line1, line2, {0, 1});
  const GraphMorphism g =
      lift_through_closure(f, ClosureKind::transitive);
  CHECK(g.node_map() == f.node_map());
  CHECK(g.target().is_edge("0", "2"));

  CHECK(compose(identity(line1), f) == f);
  CHECK(compose(f, identity(line2)) == f);
  CHECK_THROWS_AS(compose(f, f), ComposeMismatch);

  // Transitive lifting keeps morphisms valid on a map that needs the
  // new edges: collapse the three-node line onto a two-node line.
  const GraphMorphism h = GraphMorphism::validate(
      linear_graph(1), transitive_closure(line2), {0, 2});
  CHECK(h.target().is_edge("0", "2"));
}

TEST_CASE("closure lifting is functorial on enumerated morphisms") {
  const Graph a = random_graph(3, 0.4, 21);
  const Graph b = random_graph(3, 0.6, 22);
  const Graph c = random_graph(2, 0.8, 23);
  for (ClosureKind kind :
       {ClosureKind::reflexive, ClosureKind::transitive}) {
    for (const auto& f : enumerate_homs(a, b)) {
      for (const auto& g : enumerate_homs(b, c)) {
        REQUIRE(lift_through_closure(compose(f, g), kind) ==
                compose(lift_through_closure(f, kind),
                        lift_through_closure(g, kind)));
      }
    }
  }
}

TEST_CASE("edge pickers compose through a path picker") {
  // A 2-edge path in the twisted square, restricted to its two edges by
  // precomposition with the line inclusions.
  const Graph line1 = linear_graph(1);
  const Graph line2 = linear_graph(2);
  const Graph tw2 = shape_graph({ShapeKind::twisted, Flavor::face, 2});
  const GraphMorphism path = GraphMorphism::validate_labels(
      line2, tw2, {{"0", "01"}, {"1", "00"}, {"2", "10"}});
  const GraphMorphism first =
      GraphMorphism::validate(line1, line2, {0, 1});
  const GraphMorphism second =
      GraphMorphism::validate(line1, line2, {1, 2});
  CHECK(compose(first, path).apply("0") == "01");
  CHECK(compose(first, path).apply("1") == "00");
  CHECK(compose(second, path).apply("0") == "00");
  CHECK(compose(second, path).apply("1") == "10");
}

TEST_CASE("hom enumeration matches hand counts") {
  const Graph line1 = linear_graph(1);
  const Graph tw2 = shape_graph({ShapeKind::twisted, Flavor::face, 2});

  // An edge graph maps onto each of the four edges.
  const auto homs = enumerate_homs(line1, tw2);
  REQUIRE(homs.size() == 4);
  for (const auto& f : homs) {
    CHECK(tw2.is_edge(f.apply("0"), f.apply("1")));
  }
  // Lexicographic node-map order.
  CHECK(homs.front().apply("0") == "00");

  const Graph s1 = shape_graph({ShapeKind::simplex, Flavor::face, 1});
  const Graph s2 = shape_graph({ShapeKind::simplex, Flavor::face, 2});
  CHECK(enumerate_homs(s1, s2).size() == 3);

  const auto endo = enumerate_homs(tw2, tw2);
  REQUIRE(endo.size() == 1);
  CHECK(endo.front().is_identity());

  Budget tiny;
  tiny.hom_candidates = 10;
  CHECK_THROWS_AS(enumerate_homs(tw2, tw2, tiny), BudgetExceeded);
}

TEST_CASE("isomorphism search") {
  const Graph g = linear_graph(3);
  const auto self = find_isomorphism(g, g);
  REQUIRE(self);
  CHECK(self->forward.is_identity());

  const Graph tw1 = shape_graph({ShapeKind::twisted, Flavor::face, 1});
  CHECK(find_isomorphism(linear_graph(1), tw1));

  // The standard and twisted squares orient their edges differently.
  const Graph sq = shape_graph({ShapeKind::cube, Flavor::face, 2});
  const Graph tw2 = shape_graph({ShapeKind::twisted, Flavor::face, 2});
  CHECK_FALSE(find_isomorphism(sq, tw2));
}

TEST_CASE("hamiltonian paths") {
  const Graph tw3 = shape_graph({ShapeKind::twisted, Flavor::face, 3});
  const auto paths = hamiltonian_paths(tw3);
  REQUIRE(paths.size() == 1);
  CHECK(paths.front().labels() ==
        std::vector<std::string>{"011", "010", "000", "001", "101", "100",
                                 "110", "111"});

  const Graph sq = shape_graph({ShapeKind::cube, Flavor::face, 2});
  CHECK(hamiltonian_paths(sq).empty());
  CHECK(hamiltonian_paths_backtracking(sq).empty());

  // A cyclic graph takes the backtracking route.
  const Graph cyc({"a", "b"}, {{"a", "b"}, {"b", "a"}});
  CHECK(hamiltonian_paths(cyc).size() == 2);
}

TEST_CASE("reachability is reflexive") {
  const Graph tw2 = shape_graph({ShapeKind::twisted, Flavor::face, 2});
  CHECK(reachable(tw2, "01", "01"));
  CHECK(reachable(tw2, "01", "10"));  // via 01 -> 00 -> 10
  const Graph sq = shape_graph({ShapeKind::cube, Flavor::face, 2});
  CHECK_FALSE(reachable(sq, "01", "10"));
  CHECK_THROWS_AS(reachable(sq, "01", "99"), UnknownNode);
}

TEST_CASE("random graphs are deterministic in the seed") {
  CHECK(random_graph(4, 0.0, 7).edge_count() == 0);
  CHECK(random_graph(4, 1.0, 7).edge_count() == 16);
  CHECK(random_graph(6, 0.4, 99) == random_graph(6, 0.4, 99));
  CHECK(random_graph(6, 0.4, 99) != random_graph(6, 0.4, 100));
}

TEST_CASE("graphs keep canonical order and reject bad input") {
  const Graph g({"10", "2", "0"}, {{"0", "10"}});
  CHECK(g.nodes() == std::vector<std::string>{"0", "2", "10"});
  CHECK(g.is_edge("0", "10"));
  CHECK_THROWS_AS(Graph({"a", "a"}, {}), Error);
  CHECK_THROWS_AS(Graph({"a"}, {{"a", "b"}}), UnknownNode);
}
