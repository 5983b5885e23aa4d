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

// Concrete graph families: face and reflexive graphs for simplices,
// standard cubes and twisted cubes, the cone and prism iterators, the
// recursive builders and the constructive isomorphisms between the
// closed forms and the iterated forms.

#ifndef TWISTCUBE_SHAPES_HPP_
#define TWISTCUBE_SHAPES_HPP_

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "graph.hpp"
#include "words.hpp"

namespace twistcube {

enum class ShapeKind { simplex, cube, twisted, twisted_sorted };
enum class Flavor { face, reflexive };

//! Selects one family member: F/G of simplex, cube, twisted cube, or
//! the sorted relabeling of the twisted face graph (face flavor only).
struct ShapeFamily {
  ShapeKind kind;
  Flavor flavor;
  int dim;
};

namespace detail {

//! Parity of the shared prefix below index i; decides which way the
//! twisted edge at index i points.
inline std::uint8_t prefix_parity(const BinaryWord& w, int i) {
  std::uint8_t p = static_cast<std::uint8_t>(i & 1);
  for (int j = 0; j < i; ++j) p ^= w[j];
  return p;
}

inline bool all_integer_labels(const Graph& g) {
  for (const auto& v : g.nodes()) {
    if (v.empty() || v.size() > 18) return false;
    for (char c : v) {
      if (c < '0' || c > '9') return false;
    }
    if (v.size() > 1 && v[0] == '0') return false;
  }
  return true;
}

inline bool all_binary_labels(const Graph& g) {
  for (const auto& v : g.nodes()) {
    for (char c : v) {
      if (c != '0' && c != '1') return false;
    }
  }
  return true;
}

//! Label of the cone apex, and the embedding of old labels, flattened so
//! that iterated simplex graphs share the integer namespace of the
//! closed forms (sum labels are collapsed on the spot).
inline std::string cone_apex_label(const Graph& g) {
  if (all_integer_labels(g)) return "0";
  if (g.has_node("*")) {
    throw Error("cone: apex label '*' collides with a node");
  }
  return "*";
}

inline std::string cone_member_label(const Graph& g, const std::string& v) {
  if (all_integer_labels(g)) return std::to_string(std::stoll(v) + 1);
  return v;
}

inline std::string prism_member_label(bool binary_mode, int copy,
                                      const std::string& v) {
  const char b = copy == 0 ? '0' : '1';
  if (binary_mode) return std::string(1, b) + v;
  return std::string(1, b) + ":" + v;
}

}  // namespace detail

//! Adds an apex with an edge to every original node; the apex gets a
//! loop iff the input is reflexive, so the iterator preserves
//! reflexivity.  Pair labels are flattened immediately:
//! integer-labeled inputs shift by one and the apex becomes 0.
inline Graph cone(const Graph& g) {
  const auto preds = predicates(g);
  const std::string apex = detail::cone_apex_label(g);
  std::vector<std::string> nodes{apex};
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& v : g.nodes()) {
    nodes.push_back(detail::cone_member_label(g, v));
  }
  for (const auto& [s, t] : g.edge_labels()) {
    edges.emplace_back(detail::cone_member_label(g, s),
                       detail::cone_member_label(g, t));
  }
  for (const auto& v : g.nodes()) {
    edges.emplace_back(apex, detail::cone_member_label(g, v));
  }
  if (preds.is_refl) edges.emplace_back(apex, apex);
  return Graph(std::move(nodes), edges);
}

enum class PrismVariant { std, tw };

//! Two copies of the graph linked pairwise; the twisted variant reverses
//! every copy-0 edge.  Binary-word labels flatten by
//! prepending the copy digit.
inline Graph prism(const Graph& g, PrismVariant variant) {
  const bool binary_mode = detail::all_binary_labels(g);
  std::vector<std::string> nodes;
  std::vector<std::pair<std::string, std::string>> edges;
  for (int copy = 0; copy < 2; ++copy) {
    for (const auto& v : g.nodes()) {
      nodes.push_back(detail::prism_member_label(binary_mode, copy, v));
    }
  }
  for (const auto& [s, t] : g.edge_labels()) {
    if (variant == PrismVariant::tw) {
      edges.emplace_back(detail::prism_member_label(binary_mode, 0, t),
                         detail::prism_member_label(binary_mode, 0, s));
    } else {
      edges.emplace_back(detail::prism_member_label(binary_mode, 0, s),
                         detail::prism_member_label(binary_mode, 0, t));
    }
    edges.emplace_back(detail::prism_member_label(binary_mode, 1, s),
                       detail::prism_member_label(binary_mode, 1, t));
  }
  for (const auto& v : g.nodes()) {
    edges.emplace_back(detail::prism_member_label(binary_mode, 0, v),
                       detail::prism_member_label(binary_mode, 1, v));
  }
  return Graph(std::move(nodes), edges);
}

//! Functorial action of the prism iterators: <b, v> maps to <b, f(v)>.
inline GraphMorphism prism_morphism(const GraphMorphism& f,
                                    PrismVariant variant) {
  const bool src_bin = detail::all_binary_labels(f.source());
  const bool dst_bin = detail::all_binary_labels(f.target());
  std::map<std::string, std::string> map;
  for (const auto& v : f.source().nodes()) {
    for (int copy = 0; copy < 2; ++copy) {
      map[detail::prism_member_label(src_bin, copy, v)] =
          detail::prism_member_label(dst_bin, copy, f.apply(v));
    }
  }
  return GraphMorphism::validate_labels(prism(f.source(), variant),
                                        prism(f.target(), variant), map);
}

//! Closed-form family graphs.  Simplex nodes are 0..n; cube families
//! live on binary words of length n.  The sorted twisted family is
//! defined as the sort_bin relabeling of the twisted face graph.
inline Graph shape_graph(const ShapeFamily& family,
                         const Budget& budget = default_budget()) {
  const int n = family.dim;
  if (n < 0 || n > budget.max_shape_dim) {
    throw BudgetExceeded("shape_graph: dimension beyond budget");
  }
  if (family.kind == ShapeKind::twisted_sorted &&
      family.flavor != Flavor::face) {
    throw Error("the sorted twisted family exists only in face flavor");
  }

  if (family.kind == ShapeKind::simplex) {
    std::vector<std::string> nodes;
    for (int i = 0; i <= n; ++i) nodes.push_back(std::to_string(i));
    Graph base = Graph::from_indices(std::move(nodes), {});
    std::vector<Edge> edges;
    for (int s = 0; s <= n; ++s) {
      for (int t = family.flavor == Flavor::face ? s + 1 : s; t <= n; ++t) {
        edges.emplace_back(s, t);
      }
    }
    return Graph::from_indices(base.nodes(), std::move(edges));
  }

  Budget word_budget = budget;
  word_budget.max_word_length =
      std::max(word_budget.max_word_length, budget.max_shape_dim);
  const auto words = BinaryWord::all(n, word_budget);
  std::vector<std::string> nodes;
  nodes.reserve(words.size());
  for (const auto& w : words) nodes.push_back(w.str());
  Graph base = Graph::from_indices(std::move(nodes), {});
  std::vector<Edge> edges;

  auto add_edges = [&](bool twisted) {
    // One edge per (node, index) pair whose orientation rule fires; the
    // twisted rule flips orientation by the prefix parity.
    for (std::size_t wi = 0; wi < words.size(); ++wi) {
      const BinaryWord& s = words[wi];
      for (int i = 0; i < n; ++i) {
        const std::uint8_t p =
            twisted ? detail::prefix_parity(s, i) : std::uint8_t{0};
        if (s[i] == p) {
          const BinaryWord t = s.with_digit(i, static_cast<std::uint8_t>(1 - s[i]));
          edges.emplace_back(static_cast<int>(wi),
                             static_cast<int>(t.to_index()));
        }
      }
    }
    if (family.flavor == Flavor::reflexive) {
      // Loops on every node.  For n >= 1 the printed closed form already
      // contains them; at n = 0 its quantifier is vacuous, yet the
      // reflexive family must equal the reflexive closure of the face
      // graph, so loops are unconditional.
      for (std::size_t wi = 0; wi < words.size(); ++wi) {
        edges.emplace_back(static_cast<int>(wi), static_cast<int>(wi));
      }
    }
  };

  switch (family.kind) {
    case ShapeKind::cube:
      add_edges(false);
      break;
    case ShapeKind::twisted:
      add_edges(true);
      break;
    case ShapeKind::twisted_sorted: {
      const Graph tw =
          shape_graph({ShapeKind::twisted, Flavor::face, n}, budget);
      for (const auto& [s, t] : tw.edge_labels()) {
        edges.emplace_back(
            static_cast<int>(sort_bin(BinaryWord::parse(s)).to_index()),
            static_cast<int>(sort_bin(BinaryWord::parse(t)).to_index()));
      }
      break;
    }
    default:
      break;
  }
  // Word index == canonical node index: same-length binary words sort
  // lexicographically, i.e. numerically.
  return Graph::from_indices(base.nodes(), std::move(edges));
}

//! n-fold application of the family iterator to the trivial graph (face
//! flavor) or the unit graph (reflexive flavor).
inline Graph recursive_graph(const ShapeFamily& family,
                             const Budget& budget = default_budget()) {
  if (family.dim < 0 || family.dim > budget.max_shape_dim) {
    throw BudgetExceeded("recursive_graph: dimension beyond budget");
  }
  if (family.kind == ShapeKind::twisted_sorted) {
    throw Error("the sorted twisted family has no recursive form");
  }
  const bool refl = family.flavor == Flavor::reflexive;
  const std::string base_label =
      family.kind == ShapeKind::simplex ? "0" : "";
  std::vector<std::pair<std::string, std::string>> base_edges;
  if (refl) base_edges.emplace_back(base_label, base_label);
  Graph g({base_label}, base_edges);
  for (int i = 0; i < family.dim; ++i) {
    switch (family.kind) {
      case ShapeKind::simplex:
        g = cone(g);
        break;
      case ShapeKind::cube:
        g = prism(g, PrismVariant::std);
        break;
      case ShapeKind::twisted:
        g = prism(g, PrismVariant::tw);
        break;
      default:
        break;
    }
  }
  return g;
}

//! The explicit bit-split isomorphism closed-form(n) = iterator applied
//! to closed-form(n-1).  Because labels flatten,
//! the node map is the identity on labels; constructing it certifies
//! both directions without any search.
inline GraphIso split_iso(const ShapeFamily& family,
                          const Budget& budget = default_budget()) {
  if (family.dim < 1) throw Error("split_iso: dimension must be >= 1");
  const Graph whole = shape_graph(family, budget);
  const ShapeFamily lower{family.kind, family.flavor, family.dim - 1};
  Graph iterated;
  switch (family.kind) {
    case ShapeKind::simplex:
      iterated = cone(shape_graph(lower, budget));
      break;
    case ShapeKind::cube:
      iterated = prism(shape_graph(lower, budget), PrismVariant::std);
      break;
    case ShapeKind::twisted:
      iterated = prism(shape_graph(lower, budget), PrismVariant::tw);
      break;
    default:
      throw Error("split_iso: unsupported family");
  }
  std::map<std::string, std::string> fwd, bwd;
  for (const auto& v : whole.nodes()) {
    fwd[v] = v;
    bwd[v] = v;
  }
  return GraphIso{GraphMorphism::validate_labels(whole, iterated, fwd),
                  GraphMorphism::validate_labels(iterated, whole, bwd)};
}

//! The unique Hamiltonian path of the twisted face graph, built
//! constructively in O(2^n): the copy-0 path in reverse, the linking
//! edge, then the copy-1 path.
inline GraphPath twisted_hamiltonian(int n,
                                     const Budget& budget = default_budget()) {
  if (n < 0 || n > budget.max_shape_dim) {
    throw BudgetExceeded("twisted_hamiltonian: dimension beyond budget");
  }
  std::vector<std::string> seq{""};
  for (int k = 0; k < n; ++k) {
    std::vector<std::string> next;
    next.reserve(seq.size() * 2);
    for (auto it = seq.rbegin(); it != seq.rend(); ++it) {
      next.push_back("0" + *it);
    }
    for (const auto& v : seq) next.push_back("1" + v);
    seq = std::move(next);
  }
  return GraphPath(shape_graph({ShapeKind::twisted, Flavor::face, n}, budget),
                   seq);
}

//! Nodes of the twisted face graph lying on the facet with digit b at
//! index r.
inline std::vector<std::string> facet_nodes(int n, int r, std::uint8_t b,
                                            const Budget& budget =
                                                default_budget()) {
  if (r < 0 || r >= n) throw IndexOutOfRange("facet index out of range");
  std::vector<std::string> out;
  for (const auto& w : BinaryWord::all(n, budget)) {
    if (w[r] == b) out.push_back(w.str());
  }
  return out;
}

}  // namespace twistcube

#endif  // TWISTCUBE_SHAPES_HPP_
