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

#include "cmt/construct.hpp"

#include <algorithm>
#include <sstream>

#include "cmt/canonical.hpp"

namespace cmt {

ExpandedGraph expand(const Expansion& e) {
  const std::size_t d = e.order.d();
  if (e.multiplicities.size() != d) {
    throw Error("expected " + std::to_string(d) + " multiplicities, got " +
                std::to_string(e.multiplicities.size()));
  }
  if (std::any_of(e.multiplicities.begin(), e.multiplicities.end(),
                  [](std::size_t n) { return n == 0; })) {
    throw Error("multiplicities must be positive");
  }
  if (!is_pure_order(e.base, e.order)) throw Error("expansion base order is not a pure order");

  std::vector<std::string> left, right;
  std::vector<std::size_t> owner;  // pure-order index of each new position
  for (std::size_t i = 0; i < d; ++i) {
    const auto& [l, r] = e.order.pairs[i];
    for (std::size_t k = 1; k <= e.multiplicities[i]; ++k) {
      left.push_back(e.base.left()[l] + "_" + std::to_string(k));
      right.push_back(e.base.right()[r] + "_" + std::to_string(k));
      owner.push_back(i);
    }
  }
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < owner.size(); ++a) {
    for (std::size_t b = 0; b < owner.size(); ++b) {
      const std::size_t i = owner[a], j = owner[b];
      if (i == j || e.base.has_edge(e.order.pairs[i].left, e.order.pairs[j].right)) {
        edges.push_back({a, b});
      }
    }
  }
  ExpandedGraph out{BipartiteGraph(std::move(left), std::move(right), std::move(edges)), {}};
  for (std::size_t a = 0; a < owner.size(); ++a) out.order.pairs.push_back({a, a});
  return out;
}

namespace {

Expansion ContractWith(const BipartiteGraph& g, const PureOrder& po,
                       const BlockDecomposition& blocks, bool use_last) {
  Expansion out;
  std::vector<std::size_t> left, right;
  for (const auto& block : blocks.blocks) {
    const std::size_t rep = use_last ? block.back() : block.front();
    left.push_back(po.pairs[rep].left);
    right.push_back(po.pairs[rep].right);
    out.multiplicities.push_back(block.size());
  }
  out.base = induced_subgraph(g, left, right);
  for (std::size_t i = 0; i < left.size(); ++i) out.order.pairs.push_back({i, i});
  return out;
}

}  // namespace

Expansion contract(const BipartiteGraph& g) {
  auto po = find_pure_order(g);
  if (!po) throw Error("contract needs an unmixed graph");
  const BlockDecomposition blocks = cross_blocks(g, *po);

  // Adjacency between two cross classes is all-or-nothing.
  for (const auto& a : blocks.blocks) {
    for (const auto& b : blocks.blocks) {
      const bool first = g.has_edge(po->pairs[a.front()].left, po->pairs[b.front()].right);
      for (std::size_t i : a) {
        for (std::size_t j : b) {
          if (g.has_edge(po->pairs[i].left, po->pairs[j].right) != first) {
            throw ConsistencyError("adjacency between cross classes is not uniform");
          }
        }
      }
    }
  }

  Expansion out = ContractWith(g, *po, blocks, false);
  if (predicted_codim(Expansion{out.base, out.order,
                                std::vector<std::size_t>(out.order.d(), 1)}) != 0) {
    throw ConsistencyError("contracted base is not cross-free");
  }
  if (out.base.left_size() <= CanonicalForm::kMaxSide) {
    Expansion other = ContractWith(g, *po, blocks, true);
    if (canonical_form(other.base) != canonical_form(out.base)) {
      throw ConsistencyError("contracted base depends on the representative choice");
    }
  }
  return out;
}

int predicted_codim(const Expansion& e) {
  const PureOrder& po = e.order;
  if (e.multiplicities.size() != po.d()) throw Error("multiplicity length mismatch");
  for (std::size_t i = 0; i < po.d(); ++i) {
    for (std::size_t j = i + 1; j < po.d(); ++j) {
      if (e.base.has_edge(po.pairs[i].left, po.pairs[j].right) &&
          e.base.has_edge(po.pairs[j].left, po.pairs[i].right)) {
        throw Error("expansion base is not cross-free");
      }
    }
  }
  std::size_t total = 0;
  std::size_t smallest_large = 0;
  for (std::size_t n : e.multiplicities) {
    total += n;
    if (n > 1 && (smallest_large == 0 || n < smallest_large)) smallest_large = n;
  }
  if (smallest_large == 0) return 0;
  return static_cast<int>(total - smallest_large + 1);
}

Expansion expansion_from_document(const GraphDocument& doc) {
  if (!doc.multiplicities) throw ParseError(0, "expansion document needs an M: line");
  const BipartiteGraph& g = doc.graph;
  const auto& m = *doc.multiplicities;
  if (m.size() != g.left_size()) {
    throw ParseError(0, "M: line has " + std::to_string(m.size()) + " entries for " +
                            std::to_string(g.left_size()) + " left vertices");
  }
  PureOrder declared;
  if (g.left_size() == g.right_size()) {
    for (std::size_t i = 0; i < g.left_size(); ++i) declared.pairs.push_back({i, i});
  }
  if (!declared.pairs.empty() && is_pure_order(g, declared)) {
    return Expansion{g, declared, m};
  }
  auto po = find_pure_order(g);
  if (!po) throw Error("expansion base is not unmixed");
  Expansion e{g, *po, {}};
  for (const auto& p : po->pairs) e.multiplicities.push_back(m[p.left]);
  return e;
}

Expansion parse_expansion(std::string_view text) {
  return expansion_from_document(parse_document(text));
}

std::string format_expansion(const Expansion& e) {
  std::vector<std::size_t> left, right;
  for (const auto& p : e.order.pairs) {
    left.push_back(p.left);
    right.push_back(p.right);
  }
  std::ostringstream out;
  out << format_graph(induced_subgraph(e.base, left, right)) << "M:";
  for (std::size_t n : e.multiplicities) out << ' ' << n;
  out << '\n';
  return out.str();
}

}  // namespace cmt
