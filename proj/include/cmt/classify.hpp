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

// Structural CM_t classification of unmixed bipartite graphs.
//
// For an unmixed bipartite graph with d matched pairs whose cross classes
// have sizes n_1, ..., n_b, the sharp codimension is
//
//   t = 0                  if every class is a singleton (cross-free),
//   t = d - n_min + 1      otherwise, n_min = min{n_i : n_i >= 2}.
//
// No homology is computed here; verify_against_oracle() is the only entry
// point that consults the simplicial oracle.

#ifndef CMT_CLASSIFY_HPP_
#define CMT_CLASSIFY_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cmt/bigraph.hpp"

namespace cmt {

// order[k] is the pure-order index placed at position k; after relabelling,
// every edge x_i y_j has i <= j.
struct MacaulayOrder {
  std::vector<std::size_t> order;

  bool operator==(const MacaulayOrder&) const = default;
};

// Filled in only for unmixed graphs.
struct UnmixedStructure {
  PureOrder pure_order;
  BlockDecomposition blocks;
  std::size_t d = 0;
  std::vector<std::size_t> block_sizes;
  std::optional<std::size_t> n_min;
  // Indices into blocks.blocks of every block of size n_min.
  std::vector<std::size_t> minimal_blocks;
  int t_sharp = 0;
  std::optional<MacaulayOrder> macaulay_order;

  int dimension() const { return static_cast<int>(d) - 1; }
  bool cohen_macaulay() const { return t_sharp == 0; }
  bool buchsbaum() const { return t_sharp <= 1; }
};

struct CmtClassification {
  std::optional<UnmixedStructure> structure;

  bool unmixed() const { return structure.has_value(); }
};

// Throws IsolatedVertexError.
CmtClassification classify(const BipartiteGraph& g);

// Topological order of i -> j (x_i y_j an edge, i != j) when `po` is
// cross-free; nullopt when some block has size >= 2. Throws Error if `po` is
// not a pure order of `g`.
std::optional<MacaulayOrder> macaulay_order(const BipartiteGraph& g, const PureOrder& po);

// Throws Error if `g` is not unmixed.
std::optional<MacaulayOrder> macaulay_order(const BipartiteGraph& g);

// True iff every edge x_i y_j satisfies pos(i) <= pos(j) under `order`.
bool satisfies_macaulay_condition(const BipartiteGraph& g, const PureOrder& po,
                                  const MacaulayOrder& order);

// t_sharp <= 1. Throws Error if `g` is not unmixed.
bool is_buchsbaum(const BipartiteGraph& g);

// Sharp codimension of a disjoint union from the components' sizes d, d'
// (dimensions d-1, d'-1) and sharp codimensions r, r'. When both r and r'
// are positive only an upper bound is known and `sharp` is false.
struct UnionCodim {
  int value = 0;
  bool sharp = true;

  bool operator==(const UnionCodim&) const = default;
};

// Throws Error for d, d' < 1 or r, r' < 0.
UnionCodim disjoint_union_codim(int d, int r, int dprime, int rprime);

enum class VerifyStatus { kAgree, kDisagree, kOutsideHypothesis };

struct OracleReport {
  VerifyStatus status = VerifyStatus::kAgree;
  std::optional<CmtClassification> structural;
  bool oracle_pure = false;
  int oracle_dimension = -1;
  std::optional<int> oracle_codim;
  std::optional<int> oracle_codim_recursive;
  std::string detail;

  bool agree() const { return status == VerifyStatus::kAgree; }
};

// Runs classify() and the homological oracle on Ind(g) and compares
// unmixedness with purity, dimension, and t_sharp with both oracle routes.
// Never throws for graphs within the oracle's size limit; graphs with
// isolated vertices report kOutsideHypothesis.
OracleReport verify_against_oracle(const BipartiteGraph& g);

}  // namespace cmt

#endif  // CMT_CLASSIFY_HPP_
