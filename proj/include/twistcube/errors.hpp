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

#ifndef TWISTCUBE_ERRORS_HPP_
#define TWISTCUBE_ERRORS_HPP_

#include <cstdint>
#include <stdexcept>
#include <string>

namespace twistcube {

//! Base class for all errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

//! A request exceeded a configured enumeration or size budget.
//! Budgets are never silently truncated; callers either get the full
//! answer or this error.
struct BudgetExceeded : Error {
  using Error::Error;
};

//! A node map failed to preserve some edge; carries the first witness.
struct EdgeNotPreserved : Error {
  std::string src_node, dst_node;
  EdgeNotPreserved(std::string s, std::string t)
      : Error("edge not preserved: <" + s + ", " + t + ">"),
        src_node(std::move(s)),
        dst_node(std::move(t)) {}
};

//! A node map referenced a node outside the target graph.
struct NodeOutOfRange : Error {
  using Error::Error;
};

//! A node label was looked up in a graph that does not contain it.
struct UnknownNode : Error {
  using Error::Error;
};

//! Composition of morphisms whose middle objects differ.
struct ComposeMismatch : Error {
  using Error::Error;
};

//! Word substitution with mismatching arities.
struct ArityMismatch : Error {
  using Error::Error;
};

struct IndexOutOfRange : Error {
  using Error::Error;
};

//! A pair of nodes was treated as an edge but is not one.
struct NotAnEdge : Error {
  using Error::Error;
};

//! A point was used outside the domain box of a ranked space.
struct OutsideBox : Error {
  using Error::Error;
};

//! An operation requiring acyclicity was given a cyclic graph.
struct CyclicInput : Error {
  using Error::Error;
};

struct UnsupportedConversion : Error {
  using Error::Error;
};

//! Enumeration budgets.  All limits are explicit
//! configuration; exceeding one raises BudgetExceeded.
struct Budget {
  //! Cap on |target|^|source| raw candidates for hom enumeration.
  std::uint64_t hom_candidates = 100'000'000;
  //! Cap on nodes visited by backtracking searches (iso / Hamiltonian).
  std::uint64_t search_nodes = 50'000'000;
  //! Largest dimension accepted by the shape-graph generators.
  int max_shape_dim = 14;
  //! Largest binary/ternary word length.
  int max_word_length = 20;
};

inline const Budget& default_budget() {
  static const Budget b{};
  return b;
}

}  // namespace twistcube

#endif  // TWISTCUBE_ERRORS_HPP_
