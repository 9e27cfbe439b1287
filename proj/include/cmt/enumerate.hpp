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

// Exhaustive generation of small bipartite graphs up to isomorphism.

#ifndef CMT_ENUMERATE_HPP_
#define CMT_ENUMERATE_HPP_

#include <cstddef>
#include <optional>
#include <vector>

#include "cmt/bigraph.hpp"
#include "cmt/canonical.hpp"
#include "cmt/classify.hpp"
#include "cmt/construct.hpp"

namespace cmt {

inline constexpr std::size_t kMaxCmPairs = 5;
inline constexpr std::size_t kMaxUnmixedPairs = 4;

// Graph of a partial order on {0, ..., d-1}: vertices x1..xd, y1..yd, edge
// x_i y_j iff i <= j in the order. `below[i]` has bit j set iff i < j.
BipartiteGraph order_graph(const std::vector<std::uint32_t>& below);

// Every partial order on {0, ..., d-1} as strict-upper-set bitmasks
// (labelled, not deduplicated).
std::vector<std::vector<std::uint32_t>> partial_orders(std::size_t d);

// Cohen-Macaulay bipartite graphs of the given dimension (d = dimension + 1
// matched pairs), one per isomorphism class, sorted by canonical code.
// Throws SizeLimitError unless 0 <= dimension and d <= kMaxCmPairs.
std::vector<BipartiteGraph> enumerate_cm(int dimension);

// Unmixed bipartite graphs without isolated vertices on d matched pairs, one
// per isomorphism class, sorted by canonical code. Throws SizeLimitError
// unless 1 <= d <= kMaxUnmixedPairs.
std::vector<BipartiteGraph> enumerate_unmixed(std::size_t d);

struct SharpCmtOptions {
  // Upper bound on sum(n_i); 0 means no bound beyond the structural ones.
  std::size_t max_total = 0;
  // Restrict to bases of this dimension.
  std::optional<int> base_dimension;
  // Restrict to multiplicity vectors whose entries >= 2, sorted, equal this.
  std::optional<std::vector<std::size_t>> large_multiplicities;
};

struct SharpCmtEntry {
  BipartiteGraph graph;
  Expansion expansion;
  CanonicalForm code;
  bool connected = false;
  // Member of the family with a single enlarged block of arbitrary size;
  // `graph` is its n = 2 instance.
  bool parametric = false;
};

struct BaseDimensionSummary {
  int base_dimension = 0;
  // (base, multiplicity vector) pairs passing the constraints, before
  // isomorphism deduplication.
  std::size_t candidates = 0;
  std::size_t graphs = 0;
  std::size_t connected = 0;
};

struct SharpCmtFamily {
  int t = 0;
  std::vector<SharpCmtEntry> entries;
  // n = 3 instances of the parametric entries, in the same order.
  std::vector<SharpCmtEntry> representatives;
  std::vector<BaseDimensionSummary> by_base_dimension;

  std::size_t count() const { return entries.size(); }
  std::size_t connected_count() const;
};

// Graphs that are CM_t but not CM_{t-1}, built as expansions of
// Cohen-Macaulay bases H with 1 <= dim H <= t - 1:
//   dim H = t - 1: exactly one n_i >= 2, of any size (emitted at n = 2, with
//                  n = 3 as a second representative);
//   dim H <= t - 2: between 2 and t - dim H entries n_i >= 2, each at most
//                  t - dim H;
// keeping only vectors with predicted codimension t. Every entry is
// re-checked with classify(). Throws Error for t < 2 and SizeLimitError when
// a base or an expansion is beyond the brute-force limits.
SharpCmtFamily enumerate_sharp_cmt(int t, const SharpCmtOptions& options = {});

struct UnmixedVerification {
  std::size_t d = 0;
  std::size_t instances = 0;
  // Graphs where classify() and the oracle disagree, with the report.
  std::vector<std::pair<BipartiteGraph, OracleReport>> disagreements;

  bool ok() const { return disagreements.empty(); }
};

// Runs verify_against_oracle on every graph of enumerate_unmixed(d).
UnmixedVerification verify_unmixed(std::size_t d);

}  // namespace cmt

#endif  // CMT_ENUMERATE_HPP_
