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

// Finite directed graphs with decidable edge relations, their morphisms
// and paths, closures, hom-set and isomorphism enumeration, and
// Hamiltonian-path search.  Everything is an immutable value; every
// operation is a pure function of its inputs.

#ifndef TWISTCUBE_GRAPH_HPP_
#define TWISTCUBE_GRAPH_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace twistcube {

//! Canonical order on node labels: shortlex (length, then bytes).
//! This agrees with lexicographic order on fixed-length binary words and
//! with numeric order on decimal integer labels, so every graph family
//! in the library enumerates reproducibly.
inline bool node_less(const std::string& a, const std::string& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

using Edge = std::pair<int, int>;

//! A finite directed graph.  Nodes are opaque string labels stored in
//! canonical order; edges are a sorted set of index pairs, so edge
//! membership is a binary search.  Loops are allowed, parallel edges and
//! weights are not.
class Graph {
 public:
  Graph() = default;

  Graph(std::vector<std::string> nodes,
        const std::vector<std::pair<std::string, std::string>>& edges) {
    nodes_ = std::move(nodes);
    std::sort(nodes_.begin(), nodes_.end(), node_less);
    for (std::size_t i = 1; i < nodes_.size(); ++i) {
      if (nodes_[i] == nodes_[i - 1]) {
        throw Error("duplicate node label: " + nodes_[i]);
      }
    }
    edges_.reserve(edges.size());
    for (const auto& [s, t] : edges) {
      edges_.emplace_back(index_of(s), index_of(t));
    }
    finish_edges();
  }

  //! Construct from canonically ordered node labels plus index pairs
  //! (internal builders use this to avoid label round trips).
  static Graph from_indices(std::vector<std::string> nodes,
                            std::vector<Edge> edges) {
    Graph g;
    g.nodes_ = std::move(nodes);
    if (!std::is_sorted(g.nodes_.begin(), g.nodes_.end(), node_less)) {
      throw Error("from_indices requires canonically ordered nodes");
    }
    for (std::size_t i = 1; i < g.nodes_.size(); ++i) {
      if (g.nodes_[i] == g.nodes_[i - 1]) {
        throw Error("duplicate node label: " + g.nodes_[i]);
      }
    }
    for (const auto& [s, t] : edges) {
      if (s < 0 || t < 0 || s >= g.node_count() || t >= g.node_count()) {
        throw Error("edge endpoint out of range");
      }
    }
    g.edges_ = std::move(edges);
    g.finish_edges();
    return g;
  }

  int node_count() const { return static_cast<int>(nodes_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& label(int i) const { return nodes_.at(i); }

  bool has_node(const std::string& v) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v, node_less);
    return it != nodes_.end() && *it == v;
  }

  int index_of(const std::string& v) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), v, node_less);
    if (it == nodes_.end() || *it != v) throw UnknownNode("unknown node: " + v);
    return static_cast<int>(it - nodes_.begin());
  }

  bool is_edge(int s, int t) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{s, t});
  }

  bool is_edge(const std::string& s, const std::string& t) const {
    return is_edge(index_of(s), index_of(t));
  }

  const std::vector<int>& successors(int v) const { return out_.at(v); }
  const std::vector<int>& predecessors(int v) const { return in_.at(v); }

  std::vector<std::pair<std::string, std::string>> edge_labels() const {
    std::vector<std::pair<std::string, std::string>> out;
    out.reserve(edges_.size());
    for (const auto& [s, t] : edges_) out.emplace_back(nodes_[s], nodes_[t]);
    return out;
  }

  //! Graph equality is equality of node sequences and edge sets.
  friend bool operator==(const Graph& a, const Graph& b) {
    return a.nodes_ == b.nodes_ && a.edges_ == b.edges_;
  }
  friend bool operator!=(const Graph& a, const Graph& b) { return !(a == b); }

 private:
  void finish_edges() {
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    out_.assign(nodes_.size(), {});
    in_.assign(nodes_.size(), {});
    for (const auto& [s, t] : edges_) {
      out_[s].push_back(t);
      in_[t].push_back(s);
    }
  }

  std::vector<std::string> nodes_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> out_, in_;
};

struct GraphPredicates {
  bool is_refl;
  bool is_tran;
  bool is_irrefl;
  bool is_intran;
};

//! Exhaustive check of the four order-theoretic predicates (reflexivity,
//! transitivity and their strong negations).  Vacuously true on the
//! empty graph.
inline GraphPredicates predicates(const Graph& g) {
  GraphPredicates p{true, true, true, true};
  for (int v = 0; v < g.node_count(); ++v) {
    if (g.is_edge(v, v)) {
      p.is_irrefl = false;
    } else {
      p.is_refl = false;
    }
  }
  for (int v = 0; v < g.node_count(); ++v) {
    for (int s : g.predecessors(v)) {
      for (int t : g.successors(v)) {
        if (g.is_edge(s, t)) {
          p.is_intran = false;
        } else {
          p.is_tran = false;
        }
      }
    }
  }
  return p;
}

inline Graph reflexive_closure(const Graph& g) {
  std::vector<Edge> edges = g.edges();
  for (int v = 0; v < g.node_count(); ++v) edges.emplace_back(v, v);
  return Graph::from_indices(g.nodes(), std::move(edges));
}

//! Transitive closure per paths of length >= 1: a loop appears only when
//! the node lies on a cycle, so the closure of a DAG stays irreflexive.
inline Graph transitive_closure(const Graph& g) {
  const int n = g.node_count();
  std::vector<Edge> edges;
  std::vector<char> seen(n);
  for (int s = 0; s < n; ++s) {
    std::fill(seen.begin(), seen.end(), 0);
    std::queue<int> q;
    for (int t : g.successors(s)) {
      if (!seen[t]) {
        seen[t] = 1;
        q.push(t);
      }
    }
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int t : g.successors(v)) {
        if (!seen[t]) {
          seen[t] = 1;
          q.push(t);
        }
      }
    }
    for (int t = 0; t < n; ++t) {
      if (seen[t]) edges.emplace_back(s, t);
    }
  }
  return Graph::from_indices(g.nodes(), std::move(edges));
}

//! True iff a path of length >= 0 from s to t exists; length-0 paths
//! count, so reachability is reflexive.
inline bool reachable(const Graph& g, const std::string& s,
                      const std::string& t) {
  int si = g.index_of(s), ti = g.index_of(t);
  if (si == ti) return true;
  std::vector<char> seen(g.node_count());
  std::queue<int> q;
  seen[si] = 1;
  q.push(si);
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int u : g.successors(v)) {
      if (u == ti) return true;
      if (!seen[u]) {
        seen[u] = 1;
        q.push(u);
      }
    }
  }
  return false;
}

inline bool is_acyclic(const Graph& g) {
  const int n = g.node_count();
  std::vector<int> indeg(n);
  for (const auto& [s, t] : g.edges()) {
    (void)s;
    ++indeg[t];
  }
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) q.push(v);
  }
  int removed = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++removed;
    for (int u : g.successors(v)) {
      if (--indeg[u] == 0) q.push(u);
    }
  }
  return removed == n;
}

//! An edge-preserving node map, certified at construction.  Two
//! morphisms are equal iff their endpoints and node maps agree
//! pointwise; the preservation certificate carries no data of its own.
class GraphMorphism {
 public:
  //! Validates edge preservation; reports the first violating edge in
  //! canonical order.
  static GraphMorphism validate(Graph source, Graph target,
                                std::vector<int> node_map) {
    if (static_cast<int>(node_map.size()) != source.node_count()) {
      throw NodeOutOfRange("node map is not total on the source");
    }
    for (int img : node_map) {
      if (img < 0 || img >= target.node_count()) {
        throw NodeOutOfRange("node map image out of range");
      }
    }
    for (const auto& [s, t] : source.edges()) {
      if (!target.is_edge(node_map[s], node_map[t])) {
        throw EdgeNotPreserved(source.label(s), source.label(t));
      }
    }
    return GraphMorphism(std::move(source), std::move(target),
                         std::move(node_map));
  }

  static GraphMorphism validate_labels(
      Graph source, Graph target,
      const std::map<std::string, std::string>& label_map) {
    std::vector<int> node_map(source.node_count());
    for (int v = 0; v < source.node_count(); ++v) {
      auto it = label_map.find(source.label(v));
      if (it == label_map.end()) {
        throw NodeOutOfRange("node map is not total on the source");
      }
      if (!target.has_node(it->second)) {
        throw NodeOutOfRange("node map image out of range: " + it->second);
      }
      node_map[v] = target.index_of(it->second);
    }
    return validate(std::move(source), std::move(target), std::move(node_map));
  }

  //! Non-throwing variant; on failure returns nullopt and stores a
  //! description of the first violation in `error`.
  static std::optional<GraphMorphism> try_validate(Graph source, Graph target,
                                                   std::vector<int> node_map,
                                                   std::string* error) {
    try {
      return validate(std::move(source), std::move(target),
                      std::move(node_map));
    } catch (const Error& e) {
      if (error) *error = e.what();
      return std::nullopt;
    }
  }

  //! For search internals that have already checked preservation.
  static GraphMorphism unchecked(std::shared_ptr<const Graph> source,
                                 std::shared_ptr<const Graph> target,
                                 std::vector<int> node_map) {
    return GraphMorphism(std::move(source), std::move(target),
                         std::move(node_map));
  }

  const Graph& source() const { return *source_; }
  const Graph& target() const { return *target_; }
  std::shared_ptr<const Graph> source_ptr() const { return source_; }
  std::shared_ptr<const Graph> target_ptr() const { return target_; }
  const std::vector<int>& node_map() const { return map_; }

  int apply_index(int v) const { return map_.at(v); }
  const std::string& apply(const std::string& v) const {
    return target_->label(map_.at(source_->index_of(v)));
  }

  bool is_identity() const {
    if (!(*source_ == *target_)) return false;
    for (int v = 0; v < source_->node_count(); ++v) {
      if (map_[v] != v) return false;
    }
    return true;
  }

  bool injective() const {
    std::vector<char> hit(target_->node_count());
    for (int img : map_) {
      if (hit[img]) return false;
      hit[img] = 1;
    }
    return true;
  }

  bool surjective() const {
    std::vector<char> hit(target_->node_count());
    int distinct = 0;
    for (int img : map_) {
      if (!hit[img]) {
        hit[img] = 1;
        ++distinct;
      }
    }
    return distinct == target_->node_count();
  }

  friend bool operator==(const GraphMorphism& a, const GraphMorphism& b) {
    return *a.source_ == *b.source_ && *a.target_ == *b.target_ &&
           a.map_ == b.map_;
  }
  friend bool operator!=(const GraphMorphism& a, const GraphMorphism& b) {
    return !(a == b);
  }

 private:
  GraphMorphism(Graph source, Graph target, std::vector<int> node_map)
      : source_(std::make_shared<const Graph>(std::move(source))),
        target_(std::make_shared<const Graph>(std::move(target))),
        map_(std::move(node_map)) {}
  GraphMorphism(std::shared_ptr<const Graph> source,
                std::shared_ptr<const Graph> target,
                std::vector<int> node_map)
      : source_(std::move(source)),
        target_(std::move(target)),
        map_(std::move(node_map)) {}

  std::shared_ptr<const Graph> source_, target_;
  std::vector<int> map_;
};

inline GraphMorphism identity(const Graph& g) {
  std::vector<int> id(g.node_count());
  for (int v = 0; v < g.node_count(); ++v) id[v] = v;
  return GraphMorphism::validate(g, g, std::move(id));
}

//! Left-to-right composition: apply f, then g.  The
//! composite of two certified morphisms preserves edges, so no
//! revalidation happens.
inline GraphMorphism compose(const GraphMorphism& f, const GraphMorphism& g) {
  if (!(f.target() == g.source())) {
    throw ComposeMismatch("compose: f.target differs from g.source");
  }
  std::vector<int> map(f.source().node_count());
  for (int v = 0; v < f.source().node_count(); ++v) {
    map[v] = g.apply_index(f.apply_index(v));
  }
  return GraphMorphism::unchecked(f.source_ptr(), g.target_ptr(),
                                  std::move(map));
}

enum class ClosureKind { reflexive, transitive };

//! Lifts a morphism through a closure endofunctor: same node map,
//! re-certified between the closed graphs.
inline GraphMorphism lift_through_closure(const GraphMorphism& f,
                                          ClosureKind closure) {
  auto close = [&](const Graph& g) {
    return closure == ClosureKind::reflexive ? reflexive_closure(g)
                                             : transitive_closure(g);
  };
  return GraphMorphism::validate(close(f.source()), close(f.target()),
                                 f.node_map());
}

//! A path is a nonempty node sequence whose consecutive pairs are edges;
//! length counts edges, so a single node is a path of length zero.
class GraphPath {
 public:
  GraphPath(Graph graph, std::vector<std::string> node_sequence)
      : graph_(std::make_shared<const Graph>(std::move(graph))) {
    if (node_sequence.empty()) throw Error("path needs at least one node");
    seq_.reserve(node_sequence.size());
    for (const auto& v : node_sequence) seq_.push_back(graph_->index_of(v));
    check_edges();
  }

  static GraphPath from_indices(std::shared_ptr<const Graph> graph,
                                std::vector<int> seq) {
    GraphPath p;
    p.graph_ = std::move(graph);
    p.seq_ = std::move(seq);
    if (p.seq_.empty()) throw Error("path needs at least one node");
    p.check_edges();
    return p;
  }

  const Graph& graph() const { return *graph_; }
  int length() const { return static_cast<int>(seq_.size()) - 1; }
  const std::vector<int>& indices() const { return seq_; }

  std::vector<std::string> labels() const {
    std::vector<std::string> out;
    out.reserve(seq_.size());
    for (int v : seq_) out.push_back(graph_->label(v));
    return out;
  }

  friend bool operator==(const GraphPath& a, const GraphPath& b) {
    return *a.graph_ == *b.graph_ && a.seq_ == b.seq_;
  }

 private:
  GraphPath() = default;
  void check_edges() const {
    for (std::size_t i = 0; i + 1 < seq_.size(); ++i) {
      if (!graph_->is_edge(seq_[i], seq_[i + 1])) {
        throw NotAnEdge("path step is not an edge: <" +
                        graph_->label(seq_[i]) + ", " +
                        graph_->label(seq_[i + 1]) + ">");
      }
    }
  }

  std::shared_ptr<const Graph> graph_;
  std::vector<int> seq_;
};

//! The line graph with nodes 0..n and edges <i, i+1>.
inline Graph linear_graph(int n) {
  if (n < 0) throw Error("linear_graph: negative length");
  std::vector<std::string> nodes;
  std::vector<Edge> edges;
  for (int i = 0; i <= n; ++i) nodes.push_back(std::to_string(i));
  Graph g = Graph::from_indices(std::move(nodes), {});
  // Node indices follow canonical (numeric) order, so edge i -> i+1 is
  // index pair (i, i+1).
  edges.reserve(n);
  for (int i = 0; i < n; ++i) edges.emplace_back(i, i + 1);
  return Graph::from_indices(g.nodes(), std::move(edges));
}

//! All edge-preserving node maps from `source` to `target`, in
//! lexicographic node-map order.  Prunes by rejecting a partial map at
//! the first unpreserved edge among already-assigned endpoints.
inline std::vector<GraphMorphism> enumerate_homs(
    const Graph& source, const Graph& target,
    const Budget& budget = default_budget()) {
  const int ns = source.node_count();
  const int nt = target.node_count();
  const double raw = std::pow(static_cast<double>(nt), ns);
  if (raw > static_cast<double>(budget.hom_candidates)) {
    throw BudgetExceeded("enumerate_homs: |target|^|source| exceeds budget");
  }
  auto src = std::make_shared<const Graph>(source);
  auto tgt = std::make_shared<const Graph>(target);
  std::vector<GraphMorphism> out;
  std::vector<int> map(ns, -1);
  std::function<void(int)> go = [&](int v) {
    if (v == ns) {
      out.push_back(GraphMorphism::unchecked(src, tgt, map));
      return;
    }
    for (int img = 0; img < nt; ++img) {
      map[v] = img;
      bool ok = true;
      for (int u = 0; u <= v && ok; ++u) {
        if (source.is_edge(u, v) && !target.is_edge(map[u], img)) ok = false;
        if (ok && u != v && source.is_edge(v, u) &&
            !target.is_edge(img, map[u])) {
          ok = false;
        }
      }
      if (ok) go(v + 1);
    }
    map[v] = -1;
  };
  if (ns == 0) {
    out.push_back(GraphMorphism::unchecked(src, tgt, {}));
  } else if (nt > 0) {
    go(0);
  }
  return out;
}

//! An isomorphism carried with its certified inverse.
struct GraphIso {
  GraphMorphism forward;
  GraphMorphism backward;
};

//! Deterministic backtracking isomorphism search (first hit in canonical
//! order).  Degree signatures prune candidates; adjacency is matched in
//! both directions, so the found map and its inverse both preserve
//! edges.
inline std::optional<GraphIso> find_isomorphism(
    const Graph& g, const Graph& h, const Budget& budget = default_budget()) {
  const int n = g.node_count();
  if (n != h.node_count() || g.edge_count() != h.edge_count()) {
    return std::nullopt;
  }
  auto signature = [](const Graph& x) {
    std::vector<std::pair<int, int>> sig(x.node_count());
    for (int v = 0; v < x.node_count(); ++v) {
      sig[v] = {static_cast<int>(x.successors(v).size()),
                static_cast<int>(x.predecessors(v).size())};
    }
    return sig;
  };
  auto gs = signature(g), hs = signature(h);
  {
    auto a = gs, b = hs;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> map(n, -1), used(n, 0);
  std::uint64_t visited = 0;
  std::function<bool(int)> go = [&](int v) -> bool {
    if (v == n) return true;
    for (int img = 0; img < n; ++img) {
      if (used[img] || gs[v] != hs[img]) continue;
      if (++visited > budget.search_nodes) {
        throw BudgetExceeded("find_isomorphism: search budget exceeded");
      }
      bool ok = true;
      for (int u = 0; u <= v && ok; ++u) {
        if (g.is_edge(u, v) != h.is_edge(map[u] == -1 ? img : map[u], img)) {
          ok = false;
        }
        if (ok && g.is_edge(v, u) !=
                      h.is_edge(img, map[u] == -1 ? img : map[u])) {
          ok = false;
        }
      }
      if (!ok) continue;
      map[v] = img;
      used[img] = 1;
      if (go(v + 1)) return true;
      map[v] = -1;
      used[img] = 0;
    }
    return false;
  };
  if (n > 0 && !go(0)) return std::nullopt;
  std::vector<int> inv(n);
  for (int v = 0; v < n; ++v) inv[map[v]] = v;
  return GraphIso{GraphMorphism::validate(g, h, map),
                  GraphMorphism::validate(h, g, inv)};
}

//! All Hamiltonian paths by pure backtracking, ordered by start node and
//! extension in canonical order.
inline std::vector<GraphPath> hamiltonian_paths_backtracking(
    const Graph& g, const Budget& budget = default_budget()) {
  const int n = g.node_count();
  auto shared = std::make_shared<const Graph>(g);
  std::vector<GraphPath> out;
  if (n == 0) return out;
  std::vector<int> path;
  std::vector<char> visited(n, 0);
  std::uint64_t steps = 0;
  std::function<void(int)> extend = [&](int v) {
    if (++steps > budget.search_nodes) {
      throw BudgetExceeded("hamiltonian_paths: search budget exceeded");
    }
    path.push_back(v);
    visited[v] = 1;
    if (static_cast<int>(path.size()) == n) {
      out.push_back(GraphPath::from_indices(shared, path));
    } else {
      for (int u : g.successors(v)) {
        if (!visited[u]) extend(u);
      }
    }
    visited[v] = 0;
    path.pop_back();
  };
  for (int start = 0; start < n; ++start) extend(start);
  return out;
}

//! Hamiltonian paths with a fast path for DAGs: a DAG has a Hamiltonian
//! path iff its topological order is unique (one source at every Kahn
//! step), and then the order itself is the path.  Cyclic inputs fall
//! back to backtracking.
inline std::vector<GraphPath> hamiltonian_paths(
    const Graph& g, const Budget& budget = default_budget()) {
  const int n = g.node_count();
  if (n == 0) return {};
  if (!is_acyclic(g)) return hamiltonian_paths_backtracking(g, budget);
  std::vector<int> indeg(n);
  for (const auto& [s, t] : g.edges()) {
    (void)s;
    ++indeg[t];
  }
  std::vector<int> order;
  std::vector<int> sources;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) sources.push_back(v);
  }
  while (!sources.empty()) {
    if (sources.size() > 1) return {};  // topological order not unique
    int v = sources.back();
    sources.pop_back();
    order.push_back(v);
    for (int u : g.successors(v)) {
      if (--indeg[u] == 0) sources.push_back(u);
    }
  }
  for (std::size_t i = 0; i + 1 < order.size(); ++i) {
    if (!g.is_edge(order[i], order[i + 1])) {
      throw std::logic_error(
          "unique topological order without consecutive edges");
    }
  }
  std::vector<GraphPath> out;
  out.push_back(
      GraphPath::from_indices(std::make_shared<const Graph>(g), order));
  return out;
}

//! Seed-deterministic Erdos-Renyi style graph over integer labels
//! 0..n-1 (loops included in the candidate pairs).  The digit stream
//! comes from std::mt19937_64, which is bit-exact across platforms.
inline Graph random_graph(int n_nodes, double edge_probability,
                          std::uint64_t seed) {
  if (n_nodes < 0) throw Error("random_graph: negative node count");
  std::vector<std::string> nodes;
  for (int i = 0; i < n_nodes; ++i) nodes.push_back(std::to_string(i));
  Graph base = Graph::from_indices(std::move(nodes), {});
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  const bool always = edge_probability >= 1.0;
  const bool never = edge_probability <= 0.0;
  const auto threshold = static_cast<std::uint64_t>(
      edge_probability * 18446744073709551616.0);  // p * 2^64
  for (int s = 0; s < n_nodes; ++s) {
    for (int t = 0; t < n_nodes; ++t) {
      std::uint64_t draw = rng();
      if (always || (!never && draw < threshold)) edges.emplace_back(s, t);
    }
  }
  return Graph::from_indices(base.nodes(), std::move(edges));
}

//! Subgraph induced by a node subset (labels kept).
inline Graph induced_subgraph(const Graph& g,
                              const std::vector<std::string>& keep) {
  std::vector<char> in(g.node_count(), 0);
  for (const auto& v : keep) in[g.index_of(v)] = 1;
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& [s, t] : g.edges()) {
    if (in[s] && in[t]) edges.emplace_back(g.label(s), g.label(t));
  }
  return Graph(keep, edges);
}

}  // namespace twistcube

#endif  // TWISTCUBE_GRAPH_HPP_
