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

#include "cmt/classify.hpp"

#include <algorithm>
#include <sstream>

#include "cmt/complex.hpp"

namespace cmt {

std::optional<MacaulayOrder> macaulay_order(const BipartiteGraph& g, const PureOrder& po) {
  if (!is_pure_order(g, po)) throw Error("macaulay_order needs a valid pure order");
  const BlockDecomposition blocks = cross_blocks(g, po);
  const std::size_t d = po.d();
  if (blocks.blocks.size() != d) return std::nullopt;

  // Kahn's algorithm, smallest ready index first.
  std::vector<std::size_t> indegree(d, 0);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j && g.has_edge(po.pairs[i].left, po.pairs[j].right)) ++indegree[j];
    }
  }
  std::vector<std::uint8_t> placed(d, 0);
  MacaulayOrder out;
  while (out.order.size() < d) {
    std::size_t next = d;
    for (std::size_t i = 0; i < d; ++i) {
      if (!placed[i] && indegree[i] == 0) {
        next = i;
        break;
      }
    }
    if (next == d) throw ConsistencyError("cross-free pure order with a directed cycle");
    placed[next] = 1;
    out.order.push_back(next);
    for (std::size_t j = 0; j < d; ++j) {
      if (j != next && g.has_edge(po.pairs[next].left, po.pairs[j].right)) --indegree[j];
    }
  }
  return out;
}

std::optional<MacaulayOrder> macaulay_order(const BipartiteGraph& g) {
  auto po = find_pure_order(g);
  if (!po) throw Error("macaulay_order needs an unmixed graph");
  return macaulay_order(g, *po);
}

bool satisfies_macaulay_condition(const BipartiteGraph& g, const PureOrder& po,
                                  const MacaulayOrder& order) {
  const std::size_t d = po.d();
  if (order.order.size() != d) return false;
  std::vector<std::size_t> position(d, d);
  for (std::size_t k = 0; k < d; ++k) {
    if (order.order[k] >= d || position[order.order[k]] != d) return false;
    position[order.order[k]] = k;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (g.has_edge(po.pairs[i].left, po.pairs[j].right) && position[i] > position[j]) {
        return false;
      }
    }
  }
  return true;
}

CmtClassification classify(const BipartiteGraph& g) {
  auto po = find_pure_order(g);
  if (!po) return {};

  UnmixedStructure s;
  s.pure_order = *po;
  s.blocks = cross_blocks(g, *po);
  s.d = po->d();
  s.block_sizes = s.blocks.sizes();
  for (std::size_t n : s.block_sizes) {
    if (n >= 2 && (!s.n_min || n < *s.n_min)) s.n_min = n;
  }
  if (s.n_min) {
    for (std::size_t b = 0; b < s.block_sizes.size(); ++b) {
      if (s.block_sizes[b] == *s.n_min) s.minimal_blocks.push_back(b);
    }
    s.t_sharp = static_cast<int>(s.d) - static_cast<int>(*s.n_min) + 1;
  } else {
    s.t_sharp = 0;
    s.macaulay_order = macaulay_order(g, *po);
  }
  return CmtClassification{std::move(s)};
}

bool is_buchsbaum(const BipartiteGraph& g) {
  CmtClassification c = classify(g);
  if (!c.unmixed()) throw Error("is_buchsbaum needs an unmixed graph");
  return c.structure->buchsbaum();
}

UnionCodim disjoint_union_codim(int d, int r, int dprime, int rprime) {
  if (d < 1 || dprime < 1) throw Error("component sizes must be at least 1");
  if (r < 0 || rprime < 0) throw Error("codimensions must be nonnegative");
  if (r == 0 && rprime == 0) return {0, true};
  if (r == 0) return {d + rprime, true};
  if (rprime == 0) return {dprime + r, true};
  return {std::max(d + rprime, dprime + r), false};
}

OracleReport verify_against_oracle(const BipartiteGraph& g) {
  OracleReport report;
  const SimplicialComplex ind = independence_complex(g);
  report.oracle_pure = is_pure(ind);
  report.oracle_dimension = dim(ind);
  report.oracle_codim = cm_codim(ind);
  report.oracle_codim_recursive = cm_codim_recursive(ind);

  if (auto v = g.isolated_vertex()) {
    report.status = VerifyStatus::kOutsideHypothesis;
    report.detail = "isolated vertex " + g.name(*v);
    return report;
  }
  report.structural = classify(g);

  std::ostringstream why;
  const CmtClassification& c = *report.structural;
  if (c.unmixed() != report.oracle_pure) {
    why << "unmixed=" << c.unmixed() << " but oracle pure=" << report.oracle_pure << "; ";
  }
  if (report.oracle_codim != report.oracle_codim_recursive) {
    why << "oracle routes disagree; ";
  }
  if (c.unmixed()) {
    const auto& s = *c.structure;
    if (s.dimension() != report.oracle_dimension) {
      why << "dimension " << s.dimension() << " vs oracle " << report.oracle_dimension << "; ";
    }
    if (!report.oracle_codim || *report.oracle_codim != s.t_sharp) {
      why << "t_sharp " << s.t_sharp << " vs oracle "
          << (report.oracle_codim ? std::to_string(*report.oracle_codim) : "none") << "; ";
    }
  }
  report.detail = why.str();
  report.status = report.detail.empty() ? VerifyStatus::kAgree : VerifyStatus::kDisagree;
  return report;
}

}  // namespace cmt
