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

// Named property suites over every module.  Each check runs a complete
// enumeration or a seed-deterministic sample at its stated budget and
// reports pass/fail with a minimal witness.  The CLI `verify` verb and
// the acceptance binary are thin layers over these runners.

#ifndef TWISTCUBE_VERIFY_HPP_
#define TWISTCUBE_VERIFY_HPP_

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "categories.hpp"
#include "exports.hpp"
#include "graph.hpp"
#include "pospace.hpp"
#include "shapes.hpp"
#include "words.hpp"

namespace twistcube {

struct CheckResult {
  std::string suite;
  std::string check;
  bool pass;
  std::string witness;  // empty when passing
};

struct SuiteOptions {
  int max_dim = 4;
  int max_obj = 3;
  std::uint64_t seed = 12345;
};

namespace verify_detail {

class Recorder {
 public:
  Recorder(std::string suite, std::vector<CheckResult>* sink)
      : suite_(std::move(suite)), sink_(sink) {}

  //! Records one named check; `witness` explains the first failure.
  void add(const std::string& check, bool pass,
           const std::string& witness = "") {
    sink_->push_back({suite_, check, pass, pass ? "" : witness});
  }

 private:
  std::string suite_;
  std::vector<CheckResult>* sink_;
};

//! 200 seed-deterministic graphs with 1..8 nodes and mixed densities.
inline std::vector<Graph> random_graph_series(std::uint64_t seed,
                                              int count = 200) {
  static const double densities[] = {0.15, 0.3, 0.5, 0.8};
  std::vector<Graph> out;
  out.reserve(count);
  for (int k = 0; k < count; ++k) {
    out.push_back(
        random_graph(1 + k % 8, densities[(k / 8) % 4], seed + k));
  }
  return out;
}

//! Every graph on exactly `n` labeled nodes (n <= 2 keeps this tiny).
inline std::vector<Graph> all_graphs(int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  std::vector<Edge> pairs;
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) pairs.emplace_back(s, t);
  }
  std::vector<Graph> out;
  for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (mask & (1u << i)) edges.push_back(pairs[i]);
    }
    out.push_back(Graph::from_indices(labels, std::move(edges)));
  }
  return out;
}

inline Graph forward_dag(const Graph& g) {
  std::vector<Edge> edges;
  for (const auto& [s, t] : g.edges()) {
    if (s < t) edges.emplace_back(s, t);
  }
  return Graph::from_indices(g.nodes(), std::move(edges));
}

inline std::string edge_witness(const Graph& g, int s, int t) {
  return "<" + g.label(s) + ", " + g.label(t) + ">";
}

}  // namespace verify_detail

// --- graph_core -------------------------------------------------------------

inline std::vector<CheckResult> run_graph_suite(const SuiteOptions& opts) {
  std::vector<CheckResult> results;
  verify_detail::Recorder rec("graph_core", &results);
  const Budget& budget = default_budget();

  std::vector<Graph> closure_inputs =
      verify_detail::random_graph_series(opts.seed);
  const int fam_cap = std::min(4, opts.max_dim);
  for (int n = 0; n <= fam_cap; ++n) {
    for (ShapeKind kind :
         {ShapeKind::simplex, ShapeKind::cube, ShapeKind::twisted}) {
      for (Flavor flavor : {Flavor::face, Flavor::reflexive}) {
        closure_inputs.push_back(shape_graph({kind, flavor, n}, budget));
      }
    }
  }

  {
    bool ok = true;
    std::string witness;
    for (const Graph& g : closure_inputs) {
      const Graph r = reflexive_closure(g);
      const Graph t = transitive_closure(g);
      if (!predicates(r).is_refl || !predicates(t).is_tran ||
          reflexive_closure(r) != r || transitive_closure(t) != t ||
          reflexive_closure(t) != transitive_closure(r)) {
        ok = false;
        witness = graph_to_json(g);
        break;
      }
    }
    rec.add("closure laws (refl/tran, idempotent, commute)", ok, witness);
  }

  {
    // Off-diagonal edges are untouched by the reflexive closure.
    bool ok = true;
    std::string witness;
    for (const Graph& g : closure_inputs) {
      const Graph r = reflexive_closure(g);
      for (int s = 0; s < g.node_count() && ok; ++s) {
        for (int t = 0; t < g.node_count(); ++t) {
          if (s != t && r.is_edge(s, t) != g.is_edge(s, t)) {
            ok = false;
            witness = verify_detail::edge_witness(g, s, t);
            break;
          }
        }
      }
      if (!ok) break;
    }
    rec.add("reflexive closure keeps s != t edges", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (const Graph& g : closure_inputs) {
      for (ClosureKind kind :
           {ClosureKind::reflexive, ClosureKind::transitive}) {
        const GraphMorphism lifted = lift_through_closure(identity(g), kind);
        if (!lifted.is_identity()) {
          ok = false;
          witness = graph_to_json(g);
        }
      }
      if (!ok) break;
    }
    rec.add("closure lift preserves identities", ok, witness);
  }

  {
    // Unitality and associativity, exhaustively over all graphs with at
    // most two nodes and every morphism between them.
    bool unit_ok = true, assoc_ok = true;
    std::vector<Graph> graphs = verify_detail::all_graphs(0);
    for (const Graph& g : verify_detail::all_graphs(1)) graphs.push_back(g);
    for (const Graph& g : verify_detail::all_graphs(2)) graphs.push_back(g);
    std::vector<std::vector<std::vector<GraphMorphism>>> homs(
        graphs.size(),
        std::vector<std::vector<GraphMorphism>>(graphs.size()));
    for (std::size_t a = 0; a < graphs.size(); ++a) {
      for (std::size_t b = 0; b < graphs.size(); ++b) {
        homs[a][b] = enumerate_homs(graphs[a], graphs[b], budget);
      }
    }
    for (std::size_t a = 0; a < graphs.size() && unit_ok; ++a) {
      for (std::size_t b = 0; b < graphs.size() && unit_ok; ++b) {
        for (const auto& f : homs[a][b]) {
          if (compose(identity(graphs[a]), f) != f ||
              compose(f, identity(graphs[b])) != f) {
            unit_ok = false;
            break;
          }
        }
      }
    }
    for (std::size_t a = 0; a < graphs.size() && assoc_ok; ++a) {
      for (std::size_t b = 0; b < graphs.size() && assoc_ok; ++b) {
        if (homs[a][b].empty()) continue;
        for (std::size_t c = 0; c < graphs.size() && assoc_ok; ++c) {
          if (homs[b][c].empty()) continue;
          for (std::size_t d = 0; d < graphs.size() && assoc_ok; ++d) {
            for (const auto& f : homs[a][b]) {
              for (const auto& g : homs[b][c]) {
                const GraphMorphism fg = compose(f, g);
                for (const auto& h : homs[c][d]) {
                  if (compose(fg, h) != compose(f, compose(g, h))) {
                    assoc_ok = false;
                    break;
                  }
                }
                if (!assoc_ok) break;
              }
              if (!assoc_ok) break;
            }
          }
        }
      }
    }
    rec.add("identity is a two-sided unit (graphs <= 2 nodes)", unit_ok);
    rec.add("composition associative (graphs <= 2 nodes)", assoc_ok);
  }

  {
    // Spot check of the same laws on random three-node graphs.
    bool ok = true;
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const Graph a = random_graph(3, 0.5, opts.seed + 11 * trial);
      const Graph b = random_graph(3, 0.6, opts.seed + 11 * trial + 1);
      const Graph c = random_graph(3, 0.7, opts.seed + 11 * trial + 2);
      const Graph d = random_graph(3, 0.8, opts.seed + 11 * trial + 3);
      for (const auto& f : enumerate_homs(a, b, budget)) {
        if (compose(identity(a), f) != f) ok = false;
        for (const auto& g : enumerate_homs(b, c, budget)) {
          const GraphMorphism fg = compose(f, g);
          for (const auto& h : enumerate_homs(c, d, budget)) {
            if (compose(fg, h) != compose(f, compose(g, h))) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    rec.add("category laws spot-checked on random 3-node graphs", ok);
  }

  {
    // Iso search returns mutually inverse certified maps, and hom counts
    // are invariant under relabeling by any found isomorphism.
    bool ok = true;
    std::string witness;
    std::mt19937_64 rng(opts.seed ^ 0x15011501u);
    for (int trial = 0; trial < 20 && ok; ++trial) {
      const Graph g = random_graph(1 + trial % 5, 0.4, opts.seed + 7 * trial);
      std::vector<std::string> renamed;
      for (int v = 0; v < g.node_count(); ++v) {
        renamed.push_back("r" + std::to_string(g.node_count() - 1 - v));
      }
      std::vector<std::pair<std::string, std::string>> edges;
      for (const auto& [s, t] : g.edges()) {
        edges.emplace_back(renamed[s], renamed[t]);
      }
      const Graph h(renamed, edges);
      const auto iso = find_isomorphism(g, h, budget);
      if (!iso) {
        ok = false;
        witness = "no iso for relabeled " + graph_to_json(g);
        break;
      }
      if (!compose(iso->forward, iso->backward).is_identity() ||
          !compose(iso->backward, iso->forward).is_identity()) {
        ok = false;
        witness = "iso inverse failed on " + graph_to_json(g);
        break;
      }
      const Graph probe = linear_graph(1);
      if (enumerate_homs(probe, g, budget).size() !=
          enumerate_homs(probe, h, budget).size()) {
        ok = false;
        witness = "hom count changed under relabeling";
      }
    }
    rec.add("iso certification and relabeling invariance", ok, witness);
  }

  {
    // DAG fast path agrees with backtracking.
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < 60 && ok; ++trial) {
      const Graph dag = verify_detail::forward_dag(
          random_graph(1 + trial % 6, 0.45, opts.seed + 101 * trial));
      const auto fast = hamiltonian_paths(dag, budget);
      const auto slow = hamiltonian_paths_backtracking(dag, budget);
      if (!(fast == slow)) {
        ok = false;
        witness = graph_to_json(dag);
      }
    }
    rec.add("Hamiltonian DAG criterion agrees with backtracking", ok,
            witness);
  }

  {
    bool ok = true;
    for (int k : {0, 3, 7}) {
      const Graph a = random_graph(k, 0.5, opts.seed + k);
      const Graph b = random_graph(k, 0.5, opts.seed + k);
      if (a != b) ok = false;
      if (random_graph(k, 0.0, opts.seed).edge_count() != 0) ok = false;
      if (random_graph(k, 1.0, opts.seed).edge_count() != k * k) ok = false;
    }
    rec.add("random_graph determinism and density extremes", ok);
  }

  {
    bool ok = true;
    std::string witness;
    for (const Graph& g : closure_inputs) {
      if (graph_from_json(graph_to_json(g)) != g) {
        ok = false;
        witness = graph_to_json(g);
        break;
      }
    }
    rec.add("JSON round trip on every sampled graph", ok, witness);
  }

  return results;
}

// --- words ------------------------------------------------------------------

inline std::vector<CheckResult> run_words_suite(const SuiteOptions& opts) {
  std::vector<CheckResult> results;
  verify_detail::Recorder rec("words", &results);
  const Budget& budget = default_budget();

  {
    // Closed-form reversal count vs the process-replay simulation.
    bool ok = true;
    std::string witness;
    for (int n = 1; n <= 6 && ok; ++n) {
      for (int d = 0; d < n && ok; ++d) {
        for (const auto& rest : BinaryWord::all(n - 1, budget)) {
          std::vector<std::uint8_t> digits;
          for (int i = 0, r = 0; i < n; ++i) {
            digits.push_back(i == d ? kTernaryStar : rest[r]);
            if (i != d) ++r;
          }
          const Arrow a{TernaryWord(digits)};
          const auto stats = arrow_stats(a);
          if (stats.num_rev != simulate_reversals(a) ||
              stats.parity != stats.num_rev % 2) {
            ok = false;
            witness = a.word().str();
            break;
          }
        }
      }
    }
    rec.add("arrow_stats equals simulate_reversals (n <= 6)", ok, witness);
  }

  {
    // Every arrow's endpoints form an edge of the twisted face graph at
    // the arrow's dimension.
    bool ok = true;
    std::string witness;
    for (int n = 1; n <= 6 && ok; ++n) {
      const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
      for (int d = 0; d < n && ok; ++d) {
        for (const auto& rest : BinaryWord::all(n - 1, budget)) {
          std::vector<std::uint8_t> digits;
          for (int i = 0, r = 0; i < n; ++i) {
            digits.push_back(i == d ? kTernaryStar : rest[r]);
            if (i != d) ++r;
          }
          const Arrow a{TernaryWord(digits)};
          const auto [src, tgt] = arrow_endpoints(a);
          if (!tw.is_edge(src.str(), tgt.str()) ||
              edge_dim(tw, src.str(), tgt.str()) != a.dim()) {
            ok = false;
            witness = a.word().str();
            break;
          }
        }
      }
    }
    rec.add("arrow endpoints are twisted edges at the arrow dim (n <= 6)",
            ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= 12 && ok; ++n) {
      for (const auto& b : BinaryWord::all(n, budget)) {
        if (unsort_num(n, sort_num(b), budget) != b ||
            sort_bin(b).to_index() != sort_num(b) ||
            unsort_bin(sort_bin(b)) != b) {
          ok = false;
          witness = b.str();
          break;
        }
      }
      // sort_num is onto fin(2^n) because unsort inverts it above.
      for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
        if (sort_num(unsort_num(n, i, budget)) != i) {
          ok = false;
          witness = "index " + std::to_string(i);
          break;
        }
      }
    }
    rec.add("sort/unsort bijection round trips (n <= 12)", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= std::min(8, opts.max_dim + 4) && ok; ++n) {
      const Graph tw = shape_graph({ShapeKind::twisted, Flavor::face, n});
      for (const auto& [s, t] : tw.edge_labels()) {
        if (sort_num(BinaryWord::parse(s)) >= sort_num(BinaryWord::parse(t))) {
          ok = false;
          witness = s + " -> " + t;
          break;
        }
      }
      for (std::uint64_t i = 0; i + 1 < (std::uint64_t{1} << n); ++i) {
        if (!tw.is_edge(unsort_num(n, i, budget).str(),
                        unsort_num(n, i + 1, budget).str())) {
          ok = false;
          witness = "consecutive index " + std::to_string(i);
          break;
        }
      }
    }
    rec.add("sort monotone along edges; consecutive indices adjacent", ok,
            witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= 12 && ok; ++n) {
      BinaryWord prev;
      for (std::uint64_t v = 0; v < (std::uint64_t{1} << n); ++v) {
        const BinaryWord b = BinaryWord::from_index(v, n);
        const BinaryWord g = gray_encode(b);
        if (gray_decode(g) != b) {
          ok = false;
          witness = b.str();
          break;
        }
        if (v > 0) {
          int hamming = 0;
          for (int i = 0; i < n; ++i) hamming += g[i] != prev[i];
          if (hamming != 1) {
            ok = false;
            witness = "consecutive Gray words at " + std::to_string(v);
            break;
          }
        }
        prev = g;
      }
    }
    rec.add("Gray code round trip and Hamming-1 property (n <= 12)", ok,
            witness);
  }

  {
    // The twist-at-1 parity variant of the sorting functions is exactly
    // the Gray transform pair.
    auto twist_at_one_sort = [](const BinaryWord& b) {
      std::vector<std::uint8_t> out;
      std::uint8_t parity = 0;  // b0 ^ ... ^ b_{i-1}
      for (int i = 0; i < b.length(); ++i) {
        out.push_back(static_cast<std::uint8_t>(b[i] ^ parity));
        parity ^= b[i];
      }
      return BinaryWord(std::move(out));
    };
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= 12 && ok; ++n) {
      for (const auto& b : BinaryWord::all(n, budget)) {
        const BinaryWord sorted = twist_at_one_sort(b);
        if (sorted != gray_decode(b) || gray_encode(sorted) != b) {
          ok = false;
          witness = b.str();
          break;
        }
      }
    }
    rec.add("twist-at-1 sorting is the Gray transform pair (n <= 12)", ok,
            witness);
  }

  {
    // Composition bookkeeping and associativity for ternary face words.
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= 3 && ok; ++n) {
      for (int k = 0; k <= n && ok; ++k) {
        for (int m = 0; m <= k && ok; ++m) {
          for (const auto& g : detail::ternary_face_words(k, n)) {
            for (const auto& f : detail::ternary_face_words(m, k)) {
              const TernaryWord fg = ternary_compose(f, g);
              if (fg.star_count() != f.star_count() ||
                  fg.length() != g.length()) {
                ok = false;
                witness = f.str() + " . " + g.str();
                break;
              }
              for (int j = 0; j <= m && ok; ++j) {
                for (const auto& e : detail::ternary_face_words(j, m)) {
                  if (ternary_compose(e, fg) !=
                      ternary_compose(ternary_compose(e, f), g)) {
                    ok = false;
                    witness = e.str() + " . " + f.str() + " . " + g.str();
                    break;
                  }
                }
              }
              if (!ok) break;
            }
            if (!ok) break;
          }
        }
      }
    }
    rec.add("ternary composition bookkeeping and associativity (n <= 3)", ok,
            witness);
  }

  return results;
}

// --- shape_graphs -------------------------------------------------------

inline std::vector<CheckResult> run_shapes_suite(const SuiteOptions& opts) {
  std::vector<CheckResult> results;
  verify_detail::Recorder rec("shape_graphs", &results);
  const Budget& budget = default_budget();

  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= std::min(8, opts.max_dim + 4) && ok; ++n) {
      const Graph fd = shape_graph({ShapeKind::simplex, Flavor::face, n});
      const Graph fc = shape_graph({ShapeKind::cube, Flavor::face, n});
      const Graph ft = shape_graph({ShapeKind::twisted, Flavor::face, n});
      const int cube_edges = n == 0 ? 0 : n * (1 << (n - 1));
      if (fd.edge_count() != n * (n + 1) / 2 ||
          fc.edge_count() != cube_edges || ft.edge_count() != cube_edges) {
        ok = false;
        witness = "n=" + std::to_string(n);
      }
      if (!predicates(fd).is_irrefl || !predicates(fc).is_irrefl ||
          !predicates(ft).is_irrefl) {
        ok = false;
        witness = "face graph not irreflexive at n=" + std::to_string(n);
      }
      const Graph gd = shape_graph({ShapeKind::simplex, Flavor::reflexive, n});
      const Graph gc = shape_graph({ShapeKind::cube, Flavor::reflexive, n});
      const Graph gt = shape_graph({ShapeKind::twisted, Flavor::reflexive, n});
      if (!predicates(gd).is_refl || !predicates(gc).is_refl ||
          !predicates(gt).is_refl ||
          gd.edge_count() != fd.edge_count() + fd.node_count() ||
          gc.edge_count() != fc.edge_count() + fc.node_count() ||
          gt.edge_count() != ft.edge_count() + ft.node_count()) {
        ok = false;
        witness = "reflexive counts at n=" + std::to_string(n);
      }
    }
    rec.add("edge counts and (ir)reflexivity of the families", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= std::min(8, opts.max_dim + 4) && ok; ++n) {
      const auto iso = find_isomorphism(
          shape_graph({ShapeKind::simplex, Flavor::face, n}),
          transitive_closure(linear_graph(n)), budget);
      if (!iso) {
        ok = false;
        witness = "n=" + std::to_string(n);
      }
    }
    rec.add("simplex face graph is tran closure of the line", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(5, opts.max_dim);
    for (int n = 0; n <= cap && ok; ++n) {
      const Graph fc = shape_graph({ShapeKind::cube, Flavor::face, n});
      const Graph ft = shape_graph({ShapeKind::twisted, Flavor::face, n});
      if (reflexive_closure(fc) !=
              shape_graph({ShapeKind::cube, Flavor::reflexive, n}) ||
          reflexive_closure(ft) !=
              shape_graph({ShapeKind::twisted, Flavor::reflexive, n})) {
        ok = false;
        witness = "cube/twisted n=" + std::to_string(n);
      }
      const auto iso = find_isomorphism(
          reflexive_closure(shape_graph({ShapeKind::simplex, Flavor::face, n})),
          shape_graph({ShapeKind::simplex, Flavor::reflexive, n}), budget);
      if (!iso) {
        ok = false;
        witness = "simplex n=" + std::to_string(n);
      }
    }
    rec.add("reflexive closed forms equal refl closure of face forms", ok,
            witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(5, opts.max_dim);
    for (int n = 0; n <= cap && ok; ++n) {
      for (ShapeKind kind :
           {ShapeKind::simplex, ShapeKind::cube, ShapeKind::twisted}) {
        for (Flavor flavor : {Flavor::face, Flavor::reflexive}) {
          const Graph closed = shape_graph({kind, flavor, n});
          const Graph rec_form = recursive_graph({kind, flavor, n});
          if (rec_form.nodes() != closed.nodes() ||
              !find_isomorphism(rec_form, closed, budget)) {
            ok = false;
            witness = "family at n=" + std::to_string(n);
            break;
          }
        }
        if (!ok) break;
      }
    }
    rec.add("recursive builders match closed forms (n <= 5)", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(5, opts.max_dim);
    for (int n = 1; n <= cap && ok; ++n) {
      for (ShapeKind kind :
           {ShapeKind::simplex, ShapeKind::cube, ShapeKind::twisted}) {
        for (Flavor flavor : {Flavor::face, Flavor::reflexive}) {
          try {
            (void)split_iso({kind, flavor, n}, budget);
          } catch (const Error& e) {
            ok = false;
            witness = e.what();
          }
        }
      }
    }
    rec.add("split isomorphisms certify without search (n <= 5)", ok,
            witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(5, opts.max_dim);
    Budget wide = budget;  // the collapse target has dimension 2^n - 1
    wide.max_shape_dim = std::max(wide.max_shape_dim, (1 << cap));
    for (int n = 0; n <= cap && ok; ++n) {
      const Graph ft = shape_graph({ShapeKind::twisted, Flavor::face, n});
      const Graph target = shape_graph(
          {ShapeKind::simplex, Flavor::face, (1 << n) - 1}, wide);
      if (!find_isomorphism(transitive_closure(ft), target, wide)) {
        ok = false;
        witness = "tran collapse n=" + std::to_string(n);
      }
      const Graph refl_target = shape_graph(
          {ShapeKind::simplex, Flavor::reflexive, (1 << n) - 1}, wide);
      if (!find_isomorphism(reflexive_closure(transitive_closure(ft)),
                            refl_target, wide)) {
        ok = false;
        witness = "refl tran collapse n=" + std::to_string(n);
      }
    }
    rec.add("tran closure of twisted cube collapses to the simplex", ok,
            witness);
  }

  {
    // The sorted relabeling satisfies the prefix/flip closed form.
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= std::min(6, opts.max_dim + 2) && ok; ++n) {
      const Graph fs =
          shape_graph({ShapeKind::twisted_sorted, Flavor::face, n});
      const auto words = BinaryWord::all(n, budget);
      for (const auto& s : words) {
        for (const auto& t : words) {
          bool predicted = false;
          for (int i = 0; i < n && !predicted; ++i) {
            bool match = s[i] == 0 && t[i] == 1;
            for (int j = 0; j < i && match; ++j) match = s[j] == t[j];
            for (int j = i + 1; j < n && match; ++j) match = s[j] != t[j];
            predicted = match;
          }
          if (fs.is_edge(s.str(), t.str()) != predicted) {
            ok = false;
            witness = s.str() + " -> " + t.str();
            break;
          }
        }
        if (!ok) break;
      }
      // The sort_bin relabeling is itself the isomorphism.
      const Graph ft = shape_graph({ShapeKind::twisted, Flavor::face, n});
      std::map<std::string, std::string> fwd;
      for (const auto& w : words) fwd[w.str()] = sort_bin(w).str();
      try {
        (void)GraphMorphism::validate_labels(ft, fs, fwd);
      } catch (const Error&) {
        ok = false;
        witness = "sort_bin relabeling fails at n=" + std::to_string(n);
      }
    }
    rec.add("sorted twisted family: closed form and relabeling agree", ok,
            witness);
  }

  {
    // Facets of a twisted cube are twisted cubes.
    bool ok = true;
    std::string witness;
    const int cap = std::min(5, opts.max_dim);
    for (int n = 1; n <= cap && ok; ++n) {
      const Graph ft = shape_graph({ShapeKind::twisted, Flavor::face, n});
      const Graph lower = shape_graph({ShapeKind::twisted, Flavor::face, n - 1});
      for (int r = 0; r < n && ok; ++r) {
        for (std::uint8_t b : {std::uint8_t{0}, std::uint8_t{1}}) {
          const Graph facet =
              induced_subgraph(ft, facet_nodes(n, r, b, budget));
          if (!find_isomorphism(facet, lower, budget)) {
            ok = false;
            witness = "facet r=" + std::to_string(r) +
                      " b=" + std::to_string(b) + " n=" + std::to_string(n);
            break;
          }
        }
      }
    }
    rec.add("every twisted facet is a lower twisted cube (n <= 5)", ok,
            witness);
  }

  {
    // Iterator interchange with the reflexive closure.
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      const Graph g = random_graph(1 + trial % 6, 0.4, opts.seed + trial);
      if (!find_isomorphism(reflexive_closure(cone(g)),
                            cone(reflexive_closure(g)), budget)) {
        ok = false;
        witness = "cone on " + graph_to_json(g);
      }
      for (PrismVariant v : {PrismVariant::std, PrismVariant::tw}) {
        if (!find_isomorphism(reflexive_closure(prism(g, v)),
                              prism(reflexive_closure(g), v), budget)) {
          ok = false;
          witness = "prism on " + graph_to_json(g);
        }
        const Graph p = prism(g, v);
        if (p.edge_count() != 2 * g.edge_count() + g.node_count()) {
          ok = false;
          witness = "prism edge count on " + graph_to_json(g);
        }
      }
    }
    rec.add("closures commute with cone/prism; prism edge counts", ok,
            witness);
  }

  {
    // Prism functor laws.
    bool ok = true;
    std::string witness;
    for (int trial = 0; trial < 12 && ok; ++trial) {
      const Graph a = random_graph(1 + trial % 3, 0.5, opts.seed + trial);
      const Graph b = random_graph(1 + (trial + 1) % 3, 0.6, opts.seed + trial + 50);
      const Graph c = random_graph(1 + (trial + 2) % 3, 0.7, opts.seed + trial + 99);
      for (PrismVariant v : {PrismVariant::std, PrismVariant::tw}) {
        if (!prism_morphism(identity(a), v).is_identity()) {
          ok = false;
          witness = "prism id law";
          break;
        }
        for (const auto& f : enumerate_homs(a, b, budget)) {
          for (const auto& g : enumerate_homs(b, c, budget)) {
            if (prism_morphism(compose(f, g), v) !=
                compose(prism_morphism(f, v), prism_morphism(g, v))) {
              ok = false;
              witness = "prism composition law";
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) break;
      }
    }
    rec.add("prism functor laws (identities and composition)", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(8, std::max(4, opts.max_dim));
    for (int n = 0; n <= cap && ok; ++n) {
      const GraphPath constructed = twisted_hamiltonian(n, budget);
      const auto found =
          hamiltonian_paths(constructed.graph(), budget);
      if (found.size() != 1 || !(found.front() == constructed)) {
        ok = false;
        witness = "n=" + std::to_string(n);
      }
      if (n <= 4) {
        const auto brute =
            hamiltonian_paths_backtracking(constructed.graph(), budget);
        if (brute.size() != 1 || !(brute.front() == constructed)) {
          ok = false;
          witness = "backtracking n=" + std::to_string(n);
        }
      }
    }
    rec.add("constructed Hamiltonian path matches search", ok, witness);
  }

  return results;
}

// --- categories ---------------------------------------------------------

inline std::vector<CheckResult> run_categories_suite(
    const SuiteOptions& opts) {
  std::vector<CheckResult> results;
  verify_detail::Recorder rec("categories", &results);
  const Budget& budget = default_budget();
  const int cap = std::min(3, opts.max_obj);

  auto choose = [](int n, int k) -> long {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
    return r;
  };

  {
    bool ok = true;
    std::string witness;
    for (int m = 0; m <= cap && ok; ++m) {
      for (int n = 0; n <= cap; ++n) {
        const auto comb =
            hom_set(CategoryId::simplex_semi_comb, m, n, budget);
        const auto graph =
            hom_set(CategoryId::simplex_semi_graph, m, n, budget);
        const auto expected =
            static_cast<std::size_t>(choose(n + 1, m + 1));
        if (comb.size() != expected || graph.size() != expected) {
          ok = false;
          witness = "simplex hom(" + std::to_string(m) + "," +
                    std::to_string(n) + ")";
          break;
        }
        const auto cube_comb =
            hom_set(CategoryId::cube_semi_comb, m, n, budget);
        const auto cube_graph =
            hom_set(CategoryId::cube_semi_graph, m, n, budget);
        const auto cube_expected = static_cast<std::size_t>(
            m > n ? 0 : choose(n, m) * (1L << (n - m)));
        if (cube_comb.size() != cube_expected ||
            cube_graph.size() != cube_expected) {
          ok = false;
          witness = "cube hom(" + std::to_string(m) + "," +
                    std::to_string(n) + ")";
          break;
        }
      }
    }
    for (int n = 0; n <= cap && ok; ++n) {
      if (hom_set(CategoryId::twisted_semi_graph, n, n, budget).size() != 1) {
        ok = false;
        witness = "twisted endo hom(" + std::to_string(n) + ")";
      }
    }
    rec.add("hom-set counts match the binomial formulas", ok, witness);
  }

  {
    // Semi presentations only contain node-injective graph morphisms.
    bool ok = true;
    std::string witness;
    for (CategoryId cat :
         {CategoryId::simplex_semi_graph, CategoryId::cube_semi_graph,
          CategoryId::twisted_semi_graph}) {
      for (int m = 0; m <= cap && ok; ++m) {
        for (int n = 0; n <= cap; ++n) {
          for (const auto& f : hom_set(cat, m, n, budget)) {
            if (!std::get<GraphMorphism>(f.rep).injective()) {
              ok = false;
              witness = std::string(category_name(cat)) + " " +
                        render_morphism(f);
              break;
            }
          }
          if (!ok) break;
        }
      }
    }
    rec.add("semi-category morphisms are injective", ok, witness);
  }

  {
    // Conversion round trips and functoriality for the four pairs.
    using C = CategoryId;
    const std::pair<C, C> pairs[] = {
        {C::simplex_semi_bin, C::simplex_semi_comb},
        {C::simplex_semi_comb, C::simplex_semi_graph},
        {C::cube_semi_comb, C::cube_semi_graph},
        {C::simplex_full_comb, C::simplex_full_graph},
    };
    bool ok = true;
    std::string witness;
    for (const auto& [from, to] : pairs) {
      for (int m = 0; m <= cap && ok; ++m) {
        for (int n = 0; n <= cap; ++n) {
          const auto homs_from = hom_set(from, m, n, budget);
          const auto homs_to = hom_set(to, m, n, budget);
          if (homs_from.size() != homs_to.size()) {
            ok = false;
            witness = std::string("hom bijection ") + category_name(from) +
                      "<->" + category_name(to);
            break;
          }
          for (const auto& f : homs_from) {
            if (convert(to, from, convert(from, to, f, budget), budget) !=
                f) {
              ok = false;
              witness = std::string("round trip ") + render_morphism(f);
              break;
            }
          }
          if (!ok) break;
          for (int k = 0; k <= cap && ok; ++k) {
            for (const auto& f : hom_set(from, m, k, budget)) {
              for (const auto& g : hom_set(from, k, n, budget)) {
                if (convert(from, to, compose_in(from, f, g), budget) !=
                    compose_in(to, convert(from, to, f, budget),
                               convert(from, to, g, budget))) {
                  ok = false;
                  witness = std::string("functoriality ") +
                            category_name(from) + "->" + category_name(to);
                  break;
                }
              }
              if (!ok) break;
            }
          }
        }
        if (!ok) break;
      }
      if (!ok) break;
    }
    rec.add("presentation conversions: round trips and functoriality", ok,
            witness);
  }

  {
    // The dimension-preserving class is a wide subcategory.
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= cap && ok; ++n) {
      const auto id = identity_in(CategoryId::twisted_dim_graph, n, budget);
      if (!preserves_dim(std::get<GraphMorphism>(id.rep))) {
        ok = false;
        witness = "identity not presDim at n=" + std::to_string(n);
      }
    }
    for (int m = 0; m <= cap && ok; ++m) {
      for (int k = 0; k <= cap && ok; ++k) {
        for (int n = 0; n <= cap && ok; ++n) {
          for (const auto& f :
               hom_set(CategoryId::twisted_dim_graph, m, k, budget)) {
            for (const auto& g :
                 hom_set(CategoryId::twisted_dim_graph, k, n, budget)) {
              const auto fg =
                  compose_in(CategoryId::twisted_dim_graph, f, g);
              if (!preserves_dim(std::get<GraphMorphism>(fg.rep))) {
                ok = false;
                witness = "composition leaves presDim";
                break;
              }
            }
            if (!ok) break;
          }
        }
      }
    }
    rec.add("presDim holds for identities and is closed under composition",
            ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    for (CategoryId cat :
         {CategoryId::simplex_semi_graph, CategoryId::cube_semi_graph,
          CategoryId::twisted_semi_graph}) {
      const auto report = verify_direct(cat, cap, budget);
      if (!report.pass) {
        ok = false;
        witness = category_name(cat);
      }
    }
    // Negative control: the full simplex category has degeneracies.
    if (verify_direct(CategoryId::simplex_full_comb, cap, budget).pass) {
      ok = false;
      witness = "simplex_full_comb unexpectedly direct";
    }
    rec.add("direct-category verification (three semi families)", ok,
            witness);
  }

  {
    bool ok = true;
    std::string witness;
    const auto reedy_full = verify_reedy(CategoryId::simplex_full_comb,
                                         std::min(4, opts.max_obj + 1),
                                         budget);
    if (!reedy_full.pass) {
      ok = false;
      witness = "simplex_full_comb";
    }
    const auto reedy_dim =
        verify_reedy(CategoryId::twisted_dim_graph, cap, budget);
    if (!reedy_dim.pass) {
      ok = false;
      witness = "twisted_dim_graph";
    }
    const auto reedy_direct =
        verify_reedy(CategoryId::simplex_semi_comb, cap, budget);
    if (!reedy_direct.pass) {
      ok = false;
      witness = "simplex_semi_comb (direct => Reedy)";
    }
    rec.add("Reedy verification (full simplex, twisted dim, direct)", ok,
            witness);
  }

  {
    // The factorization algorithm against brute-force recomposition.
    bool ok = true;
    std::string witness;
    const int fcap = std::min(4, opts.max_obj + 1);
    for (int m = 0; m <= fcap && ok; ++m) {
      for (int n = 0; n <= fcap && ok; ++n) {
        for (const auto& f :
             hom_set(CategoryId::simplex_full_comb, m, n, budget)) {
          const auto& fm = std::get<MonotoneMap>(f.rep);
          const auto [l, r] = epi_mono_factorize(fm);
          if (!l.is_surjective() || !r.is_strictly_increasing()) {
            ok = false;
            witness = render_morphism(f);
            break;
          }
          std::vector<int> composed(fm.values.size());
          for (std::size_t i = 0; i < composed.size(); ++i) {
            composed[i] = r.values[l.values[i]];
          }
          if (composed != fm.values) {
            ok = false;
            witness = render_morphism(f);
            break;
          }
        }
      }
    }
    rec.add("epi-mono factorization recomposes (objects <= 4)", ok, witness);
  }

  {
    // Binary face words select exactly the extreme points of the face.
    bool ok = true;
    std::string witness;
    for (int m = 0; m <= cap && ok; ++m) {
      for (int n = 0; n <= cap && ok; ++n) {
        for (const auto& f :
             hom_set(CategoryId::simplex_semi_comb, m, n, budget)) {
          const auto& fm = std::get<MonotoneMap>(f.rep);
          const BinaryWord word = std::get<BinaryWord>(
              convert(CategoryId::simplex_semi_comb,
                      CategoryId::simplex_semi_bin, f, budget)
                  .rep);
          for (int i = 0; i <= n; ++i) {
            const bool in_image = std::find(fm.values.begin(),
                                            fm.values.end(),
                                            i) != fm.values.end();
            if ((word[i] == 1) != in_image) {
              ok = false;
              witness = word.str();
              break;
            }
          }
          // Extreme point j of the face is extreme point f(j) of the
          // ambient simplex; its coordinates carry f(j) trailing ones.
          for (int j = 0; j <= m && ok; ++j) {
            const RationalPoint p = simplex_extreme_point(n, fm.values[j]);
            Rational ones = 0;
            for (int i = 0; i < n; ++i) ones += p[i];
            if (ones != fm.values[j] || !in_simplex(p)) {
              ok = false;
              witness = "extreme point " + std::to_string(fm.values[j]);
            }
          }
          if (!ok) break;
        }
      }
    }
    rec.add("face words select exactly their extreme points", ok, witness);
  }

  return results;
}

// --- pospace --------------------------------------------------------------

inline std::vector<CheckResult> run_pospace_suite(const SuiteOptions& opts) {
  std::vector<CheckResult> results;
  verify_detail::Recorder rec("pospace", &results);
  const Budget& budget = default_budget();

  {
    // Order axioms of the generated relation as decision procedures.
    bool ok = true;
    std::string witness;
    for (RankKind kind : {RankKind::standard, RankKind::twisted}) {
      for (int n = 0; n <= std::min(5, opts.max_dim + 1) && ok; ++n) {
        const RankedSpace space =
            kind == RankKind::standard
                ? boxed_space(kind, n, Rational(-8), Rational(8))
                : twisted_pospace(n);
        std::mt19937_64 rng(opts.seed + 977 * n +
                            (kind == RankKind::twisted ? 1 : 0));
        auto draw = [&] {
          return kind == RankKind::standard
                     ? sample_point(rng, n, 8, 8)
                     : sample_point_in_unit_box(rng, n, 8);
        };
        for (int trial = 0; trial < 120; ++trial) {
          const RationalPoint x = draw(), y = draw(), z = draw();
          if (!below(space, x, x)) {
            ok = false;
            witness = "reflexivity at " + x.str();
            break;
          }
          if (below(space, x, y) && below(space, y, z) &&
              !below(space, x, z)) {
            ok = false;
            witness = "transitivity at " + x.str();
            break;
          }
          if (below(space, x, y) && below(space, y, x) && x != y) {
            ok = false;
            witness = "antisymmetry at " + x.str();
            break;
          }
        }
      }
    }
    rec.add("generated order is a partial order on samples", ok, witness);
  }

  {
    // The product order embeds into the generated one; the converse
    // holds only below dimension three.
    bool ok = true;
    std::string witness;
    for (int n = 0; n <= std::min(5, opts.max_dim + 1) && ok; ++n) {
      const RankedSpace space =
          boxed_space(RankKind::standard, n, Rational(-16), Rational(16));
      std::mt19937_64 rng(opts.seed + 31 * n);
      for (int trial = 0; trial < 1000; ++trial) {
        const RationalPoint x = sample_point(rng, n, 8, 8);
        const RationalPoint y = sample_point(rng, n, 8, 8);
        if (product_leq(x, y) && !below(space, x, y)) {
          ok = false;
          witness = "7.12 at " + x.str() + " vs " + y.str();
          break;
        }
        if (n <= 2 && below(space, x, y) && !product_leq(x, y)) {
          ok = false;
          witness = "7.13 reverse at " + x.str() + " vs " + y.str();
          break;
        }
      }
    }
    {
      // Fixed counterexample at n = 3: below holds (33 <= 49) while the
      // product order fails on the last coordinate.
      const RankedSpace space =
          boxed_space(RankKind::standard, 3, Rational(-16), Rational(16));
      const RationalPoint x(
          std::vector<Rational>{Rational(0), Rational(0), Rational(0)});
      const RationalPoint y(
          std::vector<Rational>{Rational(4), Rational(4), Rational(-1)});
      if (!below(space, x, y) || product_leq(x, y)) {
        ok = false;
        witness = "n=3 counterexample";
      }
    }
    rec.add("product order vs generated order implications", ok,
            witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(8, std::max(opts.max_dim, 4));
    for (int n = 0; n <= cap && ok; ++n) {
      const RankedSpace space = twisted_pospace(n);
      const Graph ft = shape_graph({ShapeKind::twisted, Flavor::face, n});
      for (const auto& [s, t] : ft.edge_labels()) {
        if (!below(space, emb(RankKind::twisted, BinaryWord::parse(s)),
                   emb(RankKind::twisted, BinaryWord::parse(t)))) {
          ok = false;
          witness = s + " -> " + t;
          break;
        }
      }
    }
    rec.add("twisted edges are order-related corner pairs (n <= 8)", ok,
            witness);
  }

  {
    // Corner term domination and the rank gap of 2 along the path.
    bool ok = true;
    std::string witness;
    const int cap = std::min(8, std::max(opts.max_dim, 4));
    for (int n = 0; n <= cap && ok; ++n) {
      for (const auto& b : BinaryWord::all(n, budget)) {
        const RationalPoint x = emb(RankKind::twisted, b);
        Rational prefix = 1;
        std::vector<Rational> terms;
        for (int i = 0; i < n; ++i) {
          terms.push_back(x[i] * pow2(n - 1 - i) * prefix);
          prefix *= x[i];
        }
        for (int i = 0; i < n; ++i) {
          Rational tail = 0;
          for (int k = i + 1; k < n; ++k) tail += abs(terms[k]);
          if (abs(terms[i]) < tail) {
            ok = false;
            witness = "domination at " + b.str();
            break;
          }
        }
        if (!ok) break;
      }
      for (std::uint64_t i = 0; i + 1 < (std::uint64_t{1} << n); ++i) {
        const Rational lo = rank_twisted(
            emb(RankKind::twisted, unsort_num(n, i, budget)));
        const Rational hi = rank_twisted(
            emb(RankKind::twisted, unsort_num(n, i + 1, budget)));
        if (hi - lo != 2) {
          ok = false;
          witness = "rank gap at index " + std::to_string(i);
          break;
        }
      }
    }
    rec.add("corner term domination and Hamiltonian rank gap 2", ok,
            witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(10, std::max(opts.max_dim, 4));
    for (int n = 0; n <= cap && ok; ++n) {
      const auto report = rank_sort_identity(n, budget);
      if (!report.pass) {
        ok = false;
        witness = report.witness;
      }
    }
    rec.add("rank/sort identity at every corner (n <= 10)", ok, witness);
  }

  {
    // Both rank_tw forms agree on random rational points.
    bool ok = true;
    std::string witness;
    std::mt19937_64 rng(opts.seed ^ 0xabcdefu);
    for (int trial = 0; trial < 300; ++trial) {
      const RationalPoint x = sample_point(rng, trial % 7, 9, 7);
      if (rank_twisted(x) != rank_twisted_recursive(x)) {
        ok = false;
        witness = x.str();
        break;
      }
    }
    rec.add("twisted rank: recursion equals the closed sum", ok, witness);
  }

  {
    bool ok = true;
    std::string witness;
    const int cap = std::min(6, std::max(opts.max_dim, 4));
    for (int n = 0; n <= cap && ok; ++n) {
      const auto std_report = can_embed(
          shape_graph({ShapeKind::cube, Flavor::face, n}), cube_pospace(n),
          [](const std::string& label) {
            return emb(RankKind::standard, BinaryWord::parse(label));
          });
      const auto tw_report = can_embed(
          shape_graph({ShapeKind::twisted, Flavor::face, n}),
          twisted_pospace(n), [](const std::string& label) {
            return emb(RankKind::twisted, BinaryWord::parse(label));
          });
      if (!std_report.pass || !tw_report.pass) {
        ok = false;
        witness = "embedding n=" + std::to_string(n);
      }
    }
    const auto negative = can_embed(
        shape_graph({ShapeKind::twisted, Flavor::face, 2}), cube_pospace(2),
        [](const std::string& label) {
          return emb(RankKind::standard, BinaryWord::parse(label));
        });
    if (negative.pass || !negative.witness ||
        negative.witness->first != "01" || negative.witness->second != "00") {
      ok = false;
      witness = "negative control";
    }
    rec.add("cube/twisted embeddings pass; mismatched pair fails", ok,
            witness);
  }

  {
    bool ok = true;
    std::string witness;
    std::mt19937_64 rng(opts.seed + 4242);
    for (int trial = 0; trial < 200; ++trial) {
      const int n = trial % 7;
      const RationalPoint x = sample_point(rng, n, 6, 6);
      if (simplex_coords(SimplexCoordMap::psi,
                         simplex_coords(SimplexCoordMap::phi, x)) != x ||
          simplex_coords(SimplexCoordMap::phi,
                         simplex_coords(SimplexCoordMap::psi, x)) != x) {
        ok = false;
        witness = x.str();
        break;
      }
      // phi carries the textbook simplex onto the ordered one.
      std::vector<Rational> scaled;
      for (int i = 0; i < n; ++i) {
        const long den = static_cast<long>(rng() % 6) + 1;
        scaled.push_back(make_rational(static_cast<long>(rng() % (den + 1)),
                                       den * std::max(n, 1)));
      }
      const RationalPoint inside(scaled);
      if (in_simplex_alt(inside) &&
          !in_simplex(simplex_coords(SimplexCoordMap::phi, inside))) {
        ok = false;
        witness = inside.str();
        break;
      }
    }
    rec.add("simplex coordinate maps invert and map membership", ok,
            witness);
  }

  return results;
}

// --- aggregation ------------------------------------------------------------

inline std::vector<CheckResult> run_suite(const std::string& name,
                                          const SuiteOptions& opts) {
  if (name == "graph") return run_graph_suite(opts);
  if (name == "words") return run_words_suite(opts);
  if (name == "shapes") return run_shapes_suite(opts);
  if (name == "categories") return run_categories_suite(opts);
  if (name == "pospace") return run_pospace_suite(opts);
  if (name == "all") {
    std::vector<CheckResult> all;
    for (const char* suite :
         {"graph", "words", "shapes", "categories", "pospace"}) {
      auto part = run_suite(suite, opts);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw Error("unknown suite: " + name);
}

}  // namespace twistcube

#endif  // TWISTCUBE_VERIFY_HPP_
