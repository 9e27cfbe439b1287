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

// Bipartite graphs, pure orders (the unmixedness witness), the
// cross-relation block decomposition and closed-neighbourhood deletion.

#ifndef CMT_BIGRAPH_HPP_
#define CMT_BIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cmt/errors.hpp"

namespace cmt {

enum class Side { kLeft, kRight };

struct Edge {
  std::size_t left = 0;
  std::size_t right = 0;

  auto operator<=>(const Edge&) const = default;
};

struct VertexRef {
  Side side = Side::kLeft;
  std::size_t index = 0;

  bool operator==(const VertexRef&) const = default;
};

// A bipartite graph with named vertices. Vertices are addressed by their
// position on their side; names are opaque and unique across both sides.
// Immutable after construction.
class BipartiteGraph {
 public:
  BipartiteGraph() = default;

  // Throws Error if a name is repeated, an edge endpoint is out of range, or
  // an edge is listed twice.
  BipartiteGraph(std::vector<std::string> left, std::vector<std::string> right,
                 std::vector<Edge> edges);

  // Same as above with edges given by endpoint names.
  static BipartiteGraph FromNames(
      std::vector<std::string> left, std::vector<std::string> right,
      const std::vector<std::pair<std::string, std::string>>& edges);

  const std::vector<std::string>& left() const { return left_; }
  const std::vector<std::string>& right() const { return right_; }
  std::size_t left_size() const { return left_.size(); }
  std::size_t right_size() const { return right_.size(); }
  std::size_t vertex_count() const { return left_.size() + right_.size(); }

  // Sorted by (left, right).
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  bool has_edge(std::size_t left, std::size_t right) const {
    return adjacency_[left * right_.size() + right] != 0;
  }

  std::size_t left_degree(std::size_t left) const;
  std::size_t right_degree(std::size_t right) const;

  std::optional<VertexRef> find(std::string_view name) const;
  const std::string& name(VertexRef v) const;

  // First isolated vertex in left-then-right order, if any.
  std::optional<VertexRef> isolated_vertex() const;

  // Vertex names and edges identical, in the same order.
  bool operator==(const BipartiteGraph& other) const;

 private:
  std::vector<std::string> left_;
  std::vector<std::string> right_;
  std::vector<Edge> edges_;
  std::vector<std::uint8_t> adjacency_;
};

// The pairing x_i <-> y_i as indices into the two sides, in pure-order
// sequence. Position k in `pairs` is pure-order index k + 1.
struct MatchedPair {
  std::size_t left = 0;
  std::size_t right = 0;

  bool operator==(const MatchedPair&) const = default;
};

struct PureOrder {
  std::vector<MatchedPair> pairs;

  std::size_t d() const { return pairs.size(); }
  bool operator==(const PureOrder&) const = default;
};

// Partition of the pure-order indices {0, ..., d-1} into cross classes.
// Blocks are listed by smallest member; members ascend.
struct BlockDecomposition {
  std::vector<std::vector<std::size_t>> blocks;

  std::vector<std::size_t> sizes() const;
};

// Graph document: `L:` line, `R:` line, any number of `E:` lines, and for
// expansion documents a trailing `M:` line. `#` starts a comment.
struct GraphDocument {
  BipartiteGraph graph;
  std::optional<std::vector<std::size_t>> multiplicities;
};

GraphDocument parse_document(std::string_view text);

// Rejects documents carrying an `M:` line.
BipartiteGraph parse_graph(std::string_view text);

std::string format_graph(const BipartiteGraph& g);

// Checks both pure-order conditions directly: `po` is a perfect matching of
// edges, and x_i y_j, x_j y_k edges (i, j, k distinct) force x_i y_k.
bool is_pure_order(const BipartiteGraph& g, const PureOrder& po);

// Searches every perfect matching (backtracking, low-degree vertices first)
// for one satisfying the transitivity condition. Unequal sides give nullopt.
// Throws IsolatedVertexError when an isolated vertex is present.
std::optional<PureOrder> find_pure_order(const BipartiteGraph& g);

bool is_unmixed(const BipartiteGraph& g);

// Cross classes of `po`: i ~ j iff x_i y_j and x_j y_i are both edges.
// Throws ConsistencyError if the relation is not transitive or a class does
// not span a complete bipartite subgraph.
BlockDecomposition cross_blocks(const BipartiteGraph& g, const PureOrder& po);

// G minus N[v]. Throws Error for an unknown vertex.
BipartiteGraph delete_closed_neighborhood(const BipartiteGraph& g,
                                          std::string_view vertex);

// Throws Error when the graphs share a vertex name.
BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b);

// Subgraph induced on the listed positions, kept in the listed order.
BipartiteGraph induced_subgraph(const BipartiteGraph& g,
                                const std::vector<std::size_t>& left,
                                const std::vector<std::size_t>& right);

// Isolated vertices count as components. The empty graph is connected.
bool is_connected(const BipartiteGraph& g);

}  // namespace cmt

#endif  // CMT_BIGRAPH_HPP_
