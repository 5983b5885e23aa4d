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

// Deterministic JSON / DOT / TSV emission.  Nodes and edges always
// appear in the library's canonical order, so repeated runs are
// byte-identical.

#ifndef TWISTCUBE_EXPORTS_HPP_
#define TWISTCUBE_EXPORTS_HPP_

#include <optional>
#include <string>

#include <json.hpp>

#include "graph.hpp"
#include "words.hpp"

namespace twistcube {

//! {"nodes":[...],"edges":[["s","t"],...]} with canonical ordering.
inline std::string graph_to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["nodes"] = nlohmann::ordered_json::array();
  for (const auto& v : g.nodes()) j["nodes"].push_back(v);
  j["edges"] = nlohmann::ordered_json::array();
  for (const auto& [s, t] : g.edge_labels()) {
    j["edges"].push_back(nlohmann::ordered_json::array({s, t}));
  }
  return j.dump();
}

inline Graph graph_from_json(const std::string& text) {
  const auto j = nlohmann::json::parse(text);
  std::vector<std::string> nodes;
  for (const auto& v : j.at("nodes")) nodes.push_back(v.get<std::string>());
  std::vector<std::pair<std::string, std::string>> edges;
  for (const auto& e : j.at("edges")) {
    edges.emplace_back(e.at(0).get<std::string>(), e.at(1).get<std::string>());
  }
  return Graph(std::move(nodes), edges);
}

//! digraph with quoted labels; node declarations first, then edges, all
//! in canonical order.  `highlight` marks the given path's edges.
inline std::string graph_to_dot(
    const Graph& g, const std::optional<GraphPath>& highlight = std::nullopt) {
  std::vector<std::vector<char>> hot;
  if (highlight) {
    hot.assign(g.node_count(), std::vector<char>(g.node_count(), 0));
    const auto& seq = highlight->indices();
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
      hot[seq[i]][seq[i + 1]] = 1;
    }
  }
  std::string out = "digraph {\n";
  for (const auto& v : g.nodes()) {
    out += "  \"" + v + "\";\n";
  }
  for (const auto& [s, t] : g.edges()) {
    out += "  \"" + g.label(s) + "\" -> \"" + g.label(t) + "\"";
    if (highlight && hot[s][t]) out += " [color=red,penwidth=2]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

//! TSV rows `position-label TAB index TAB sorted-label` in Hamiltonian
//! order: row i holds unsort_num(n, i) and its sort_bin relabeling.
inline std::string sort_table(int n, const Budget& budget = default_budget()) {
  std::string out;
  for (std::uint64_t i = 0; i < (std::uint64_t{1} << n); ++i) {
    const BinaryWord node = unsort_num(n, i, budget);
    out += node.str() + "\t" + std::to_string(i) + "\t" +
           sort_bin(node).str() + "\n";
  }
  return out;
}

}  // namespace twistcube

#endif  // TWISTCUBE_EXPORTS_HPP_
