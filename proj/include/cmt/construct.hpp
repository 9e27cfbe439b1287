// Copyright 2026 The cmt-bigraph Authors.
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

// Block expansion G(n_1, ..., n_d): every matched edge x_i y_i of a base graph
// is blown up into K_{n_i,n_i} and all other adjacencies are inherited. The
// inverse, contract(), recovers the unique cross-free base.

#ifndef CMT_CONSTRUCT_HPP_
#define CMT_CONSTRUCT_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cmt/bigraph.hpp"

namespace cmt {

struct Expansion {
  BipartiteGraph base;
  PureOrder order;
  // Aligned with order.pairs.
  std::vector<std::size_t> multiplicities;
};

struct ExpandedGraph {
  BipartiteGraph graph;
  // (x_11, y_11), ..., (x_1n_1, y_1n_1), (x_21, y_21), ...
  PureOrder order;
};

// Copies of base vertex `v` are named v_1, ..., v_n. Throws Error on a
// length mismatch, a zero multiplicity, or when `order` is not a pure order
// of the base.
ExpandedGraph expand(const Expansion& e);

// Base on one representative pair per cross class (the least index) with the
// class sizes as multiplicities. The base's sides are listed in block order
// so its pure order is the identity pairing. Throws Error if `g` is not
// unmixed, IsolatedVertexError for isolated vertices, and ConsistencyError
// if the base is not cross-free or a different choice of representatives
// gives a non-isomorphic base.
Expansion contract(const BipartiteGraph& g);

// 0 when all n_i = 1, else sum(n_i) - min{n_i : n_i > 1} + 1. Throws Error if
// the base is not cross-free under its order.
int predicted_codim(const Expansion& e);

// Expansion document: the base graph document plus an `M:` line listing one
// multiplicity per left vertex in declaration order. If the declared order
// (left[i], right[i]) is a pure order it is used as is; otherwise one is
// searched for and each multiplicity follows its left vertex.
Expansion expansion_from_document(const GraphDocument& doc);
Expansion parse_expansion(std::string_view text);

// Base listed in pure-order sequence, so it parses back to the same pairing.
std::string format_expansion(const Expansion& e);

}  // namespace cmt

#endif  // CMT_CONSTRUCT_HPP_
