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

#include "twistcube/categories.hpp"
#include "twistcube/graph.hpp"
#include "twistcube/shapes.hpp"
#include "twistcube/words.hpp"

using namespace twistcube;

namespace {

bool has_edge(const Graph& g, const std::string& s, const std::string& t) {
  return g.is_edge(s, t);
}

}  // namespace

TEST_CASE("closed-form families at small dimensions") {
  const Graph s2 = shape_graph({ShapeKind::simplex, Flavor::face, 2});
  CHECK(s2.node_count() == 3);
  CHECK(s2.edge_labels() ==
        std::vector<std::pair<std::string, std::string>>{
            {"0", "1"}, {"0", "2"}, {"1", "2"}});

  const Graph tw2 = shape_graph({ShapeKind::twisted, Flavor::face, 2});
  CHECK(tw2.edge_count() == 4);
  CHECK(has_edge(tw2, "01", "00"));
  CHECK(has_edge(tw2, "00", "10"));
  CHECK(has_edge(tw2, "10", "11"));
  CHECK(has_edge(tw2, "01", "11"));

  const Graph tw3 = shape_graph({ShapeKind::twisted, Flavor::face, 3});
  CHECK(tw3.edge_count() == 12);
  CHECK(has_edge(tw3, "011", "010"));
  CHECK(has_edge(tw3, "010", "110"));
  CHECK(has_edge(tw3, "110", "111"));

  CHECK_THROWS_AS(
      shape_graph({ShapeKind::twisted_sorted, Flavor::reflexive, 2}), Error);
  CHECK_THROWS_AS(shape_graph({ShapeKind::cube, Flavor::face, 20}),
                  BudgetExceeded);
}

TEST_CASE("reflexive families carry one loop per node at every dimension") {
  for (int n = 0; n <= 4; ++n) {
    for (ShapeKind kind :
         {ShapeKind::simplex, ShapeKind::cube, ShapeKind::twisted}) {
      const Graph f = shape_graph({kind, Flavor::face, n});
      const Graph g = shape_graph({kind, Flavor::reflexive, n});
      CHECK(g.edge_count() == f.edge_count() + f.node_count());
      CHECK(predicates(g).is_refl);
    }
  }
}

TEST_CASE("cone adds an apex and tracks reflexivity") {
  const Graph trivial({"0"}, {});
  const Graph c = cone(trivial);
  CHECK(find_isomorphism(c, shape_graph({ShapeKind::simplex, Flavor::face, 1})));
  CHECK_FALSE(c.is_edge("0", "0"));

  const Graph unit({"0"}, {{"0", "0"}});
  const Graph cu = cone(unit);
  CHECK(cu.is_edge("0", "0"));  // loop lands on the apex

  // The empty graph is vacuously reflexive, so its cone is the unit.
  const Graph from_empty = cone(Graph({}, {}));
  CHECK(from_empty.node_count() == 1);
  CHECK(from_empty.edge_count() == 1);
}

TEST_CASE("prism duplicates, links, and twists") {
  const Graph trivial({""}, {});
  const Graph p = prism(trivial, PrismVariant::std);
  CHECK(find_isomorphism(p, shape_graph({ShapeKind::cube, Flavor::face, 1})));

  const Graph tw1 = shape_graph({ShapeKind::twisted, Flavor::face, 1});
  const Graph tw2 = shape_graph({ShapeKind::twisted, Flavor::face, 2});
  CHECK(prism(tw1, PrismVariant::tw) == tw2);

  for (PrismVariant v : {PrismVariant::std, PrismVariant::tw}) {
    const Graph g = random_graph(5, 0.4, 11);
    CHECK(prism(g, v).edge_count() == 2 * g.edge_count() + g.node_count());
  }
}

TEST_CASE("prism morphisms act as <b, v> -> <b, f(v)>") {
  const Graph tw1 = shape_graph({ShapeKind::twisted, Flavor::face, 1});
  CHECK(prism_morphism(identity(tw1), PrismVariant::tw).is_identity());
  CHECK(prism_morphism(identity(tw1), PrismVariant::std).is_identity());

  const Graph a = random_graph(3, 0.5, 3);
  const Graph b = random_graph(3, 0.7, 4);
  const Graph c = random_graph(2, 1.0, 5);
  for (PrismVariant v : {PrismVariant::std, PrismVariant::tw}) {
    for (const auto& f : enumerate_homs(a, b)) {
      for (const auto& g : enumerate_homs(b, c)) {
        REQUIRE(prism_morphism(compose(f, g), v) ==
                compose(prism_morphism(f, v), prism_morphism(g, v)));
      }
    }
  }
}

TEST_CASE("recursive builders reproduce the closed forms") {
  const Graph base = recursive_graph({ShapeKind::twisted, Flavor::face, 0});
  CHECK(base.node_count() == 1);
  CHECK(base.edge_count() == 0);

  for (int n = 0; n <= 5; ++n) {
    for (ShapeKind kind :
         {ShapeKind::simplex, ShapeKind::cube, ShapeKind::twisted}) {
      for (Flavor flavor : {Flavor::face, Flavor::reflexive}) {
        const Graph rec = recursive_graph({kind, flavor, n});
        const Graph closed = shape_graph({kind, flavor, n});
        REQUIRE(rec.nodes() == closed.nodes());
        REQUIRE(find_isomorphism(rec, closed));
      }
    }
    // Reflexive recursion equals the closure of the face closed form.
    CHECK(find_isomorphism(
        recursive_graph({ShapeKind::cube, Flavor::reflexive, n}),
        reflexive_closure(shape_graph({ShapeKind::cube, Flavor::face, n}))));
  }
  CHECK_THROWS_AS(
      recursive_graph({ShapeKind::twisted_sorted, Flavor::face, 2}), Error);
}

TEST_CASE("split isomorphisms certify the bit split") {
  for (int n = 1; n <= 4; ++n) {
    for (ShapeKind kind :
         {ShapeKind::simplex, ShapeKind::cube, ShapeKind::twisted}) {
      const auto iso = split_iso({kind, Flavor::face, n});
      CHECK(compose(iso.forward, iso.backward).is_identity());
      CHECK(compose(iso.backward, iso.forward).is_identity());
    }
  }
}

TEST_CASE("twisted Hamiltonian path construction") {
  CHECK(twisted_hamiltonian(1).labels() ==
        std::vector<std::string>{"0", "1"});
  CHECK(twisted_hamiltonian(2).labels() ==
        std::vector<std::string>{"01", "00", "10", "11"});
  CHECK(twisted_hamiltonian(3).labels() ==
        std::vector<std::string>{"011", "010", "000", "001", "101", "100",
                                 "110", "111"});
  for (int n = 0; n <= 8; ++n) {
    const auto path = twisted_hamiltonian(n);
    const auto found = hamiltonian_paths(path.graph());
    REQUIRE(found.size() == 1);
    REQUIRE(found.front() == path);
  }
}

TEST_CASE("twisted edge parity reads the same off either endpoint") {
  // The quantifier's where-clause takes the prefix of the target word;
  // source and target agree below the distinguishing index, so the
  // source prefix gives the same parity.
  for (int n = 1; n <= 6; ++n) {
    const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
    for (const auto& [s, t] : tw.edge_labels()) {
      const int i = edge_dim(tw, s, t);
      const BinaryWord sp = BinaryWord::parse(s).prefix(i);
      const BinaryWord tp = BinaryWord::parse(t).prefix(i);
      REQUIRE(sp == tp);
      REQUIRE(reversal_stats(sp).parity == reversal_stats(tp).parity);
    }
  }
}

TEST_CASE("sorted twisted family is the sort_bin relabeling") {
  for (int n = 0; n <= 5; ++n) {
    const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
    const Graph sorted =
        shape_graph({ShapeKind::twisted_sorted, Flavor::face, n});
    REQUIRE(sorted.edge_count() == tw.edge_count());
    for (const auto& [s, t] : tw.edge_labels()) {
      REQUIRE(sorted.is_edge(sort_bin(BinaryWord::parse(s)).str(),
                             sort_bin(BinaryWord::parse(t)).str()));
    }
  }
}

TEST_CASE("twisted facets are lower twisted cubes") {
  for (int n = 1; n <= 4; ++n) {
    const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
    const Graph lower = shape_graph({ShapeKind::twisted, Flavor::face, n - 1});
    for (int r = 0; r < n; ++r) {
      for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
        const Graph facet = induced_subgraph(tw, facet_nodes(n, r, b));
        REQUIRE(find_isomorphism(facet, lower));
      }
    }
  }
}

TEST_CASE("simplex collapse of the twisted cube") {
  Budget wide;
  wide.max_shape_dim = 32;
  for (int n = 0; n <= 4; ++n) {
    const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
    const Graph simplex = shape_graph(
        {ShapeKind::simplex, Flavor::face, (1 << n) - 1}, wide);
    REQUIRE(find_isomorphism(transitive_closure(tw), simplex, wide));
  }
}
