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

#include "cmt/enumerate.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cmt/classify.hpp"

namespace cmt {
namespace {

std::vector<std::string> Names(char prefix, std::size_t d) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= d; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

std::vector<BipartiteGraph> SortedByCode(std::map<CanonicalForm, BipartiteGraph> m) {
  std::vector<BipartiteGraph> out;
  out.reserve(m.size());
  for (auto& [code, g] : m) out.push_back(std::move(g));
  return out;
}

PureOrder Identity(std::size_t d) {
  PureOrder po;
  for (std::size_t i = 0; i < d; ++i) po.pairs.push_back({i, i});
  return po;
}

}  // namespace

BipartiteGraph order_graph(const std::vector<std::uint32_t>& below) {
  const std::size_t d = below.size();
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i == j || (below[i] >> j & 1U)) edges.push_back({i, j});
    }
  }
  return BipartiteGraph(Names('x', d), Names('y', d), std::move(edges));
}

std::vector<std::vector<std::uint32_t>> partial_orders(std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j) slots.emplace_back(i, j);
    }
  }
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> below(d);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::fill(below.begin(), below.end(), 0);
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1U) below[slots[k].first] |= 1U << slots[k].second;
    }
    bool ok = true;
    for (std::size_t i = 0; i < d && ok; ++i) {
      for (std::size_t j = 0; j < d && ok; ++j) {
        if (!(below[i] >> j & 1U)) continue;
        if (below[j] >> i & 1U) ok = false;                 // antisymmetry
        if ((below[j] & ~below[i]) != 0) ok = false;        // transitivity
      }
    }
    if (ok) out.push_back(below);
  }
  return out;
}

std::vector<BipartiteGraph> enumerate_cm(int dimension) {
  if (dimension < 0 || static_cast<std::size_t>(dimension) + 1 > kMaxCmPairs) {
    throw SizeLimitError("enumerate_cm supports dimensions 0 to " +
                         std::to_string(kMaxCmPairs - 1));
  }
  std::map<CanonicalForm, BipartiteGraph> seen;
  for (const auto& order : partial_orders(static_cast<std::size_t>(dimension) + 1)) {
    BipartiteGraph g = order_graph(order);
    seen.try_emplace(canonical_form(g), std::move(g));
  }
  return SortedByCode(std::move(seen));
}

std::vector<BipartiteGraph> enumerate_unmixed(std::size_t d) {
  if (d < 1 || d > kMaxUnmixedPairs) {
    throw SizeLimitError("enumerate_unmixed supports 1 to " +
                         std::to_string(kMaxUnmixedPairs) + " matched pairs");
  }
  std::vector<Edge> optional;
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (i != j) optional.push_back({i, j});
    }
  }
  std::map<CanonicalForm, BipartiteGraph> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < d; ++i) edges.push_back({i, i});
    for (std::size_t k = 0; k < optional.size(); ++k) {
      if (mask >> k & 1U) edges.push_back(optional[k]);
    }
    BipartiteGraph g(Names('x', d), Names('y', d), std::move(edges));
    if (!is_unmixed(g)) continue;
    seen.try_emplace(canonical_form(g), std::move(g));
  }
  return SortedByCode(std::move(seen));
}

std::size_t SharpCmtFamily::connected_count() const {
  return static_cast<std::size_t>(std::count_if(
      entries.begin(), entries.end(), [](const SharpCmtEntry& e) { return e.connected; }));
}

namespace {

// All vectors in {1, 2..cap}^d with between 2 and cap entries >= 2.
std::vector<std::vector<std::size_t>> BoundedVectors(std::size_t d, std::size_t cap) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(d, 1);
  auto rec = [&](auto&& self, std::size_t i, std::size_t large) -> void {
    if (i == d) {
      if (large >= 2 && large <= cap) out.push_back(v);
      return;
    }
    for (std::size_t n = 1; n <= cap; ++n) {
      v[i] = n;
      self(self, i + 1, large + (n >= 2 ? 1 : 0));
    }
    v[i] = 1;
  };
  rec(rec, 0, 0);
  return out;
}

std::vector<std::size_t> LargeSorted(const std::vector<std::size_t>& m) {
  std::vector<std::size_t> out;
  for (std::size_t n : m) {
    if (n >= 2) out.push_back(n);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t Sum(const std::vector<std::size_t>& m) {
  std::size_t s = 0;
  for (std::size_t n : m) s += n;
  return s;
}

SharpCmtEntry MakeEntry(const BipartiteGraph& base, std::vector<std::size_t> mult, int t,
                        bool parametric) {
  Expansion e{base, Identity(base.left_size()), std::move(mult)};
  ExpandedGraph x = expand(e);
  const CmtClassification c = classify(x.graph);
  if (!c.unmixed() || c.structure->t_sharp != t) {
    throw ConsistencyError("enumerated expansion does not classify as sharp CM_" +
                           std::to_string(t));
  }
  SharpCmtEntry out{x.graph, std::move(e), canonical_form(x.graph), is_connected(x.graph),
                    parametric};
  return out;
}

}  // namespace

SharpCmtFamily enumerate_sharp_cmt(int t, const SharpCmtOptions& options) {
  if (t < 2) throw Error("enumerate_sharp_cmt needs t >= 2");
  SharpCmtFamily family;
  family.t = t;
  std::set<CanonicalForm> seen;

  auto fits = [&](const std::vector<std::size_t>& m) {
    if (options.max_total != 0 && Sum(m) > options.max_total) return false;
    if (options.large_multiplicities && LargeSorted(m) != *options.large_multiplicities) {
      return false;
    }
    return true;
  };

  for (int base_dim = 1; base_dim <= t - 1; ++base_dim) {
    if (options.base_dimension && *options.base_dimension != base_dim) continue;
    BaseDimensionSummary summary;
    summary.base_dimension = base_dim;
    const auto d = static_cast<std::size_t>(base_dim) + 1;
    std::vector<std::pair<SharpCmtEntry, std::optional<SharpCmtEntry>>> found;

    for (const BipartiteGraph& base : enumerate_cm(base_dim)) {
      if (base_dim == t - 1) {
        for (std::size_t i = 0; i < d; ++i) {
          std::vector<std::size_t> m(d, 1);
          m[i] = 2;
          if (!fits(m)) continue;
          ++summary.candidates;
          SharpCmtEntry entry = MakeEntry(base, m, t, true);
          if (!seen.insert(entry.code).second) continue;
          m[i] = 3;
          std::optional<SharpCmtEntry> rep;
          if (options.max_total == 0 || Sum(m) <= options.max_total) {
            rep = MakeEntry(base, m, t, true);
          }
          found.emplace_back(std::move(entry), std::move(rep));
        }
      } else {
        const auto cap = static_cast<std::size_t>(t - base_dim);
        for (auto& m : BoundedVectors(d, cap)) {
          if (!fits(m)) continue;
          Expansion probe{base, Identity(d), m};
          if (predicted_codim(probe) != t) continue;
          ++summary.candidates;
          SharpCmtEntry entry = MakeEntry(base, m, t, false);
          if (!seen.insert(entry.code).second) continue;
          found.emplace_back(std::move(entry), std::nullopt);
        }
      }
    }

    std::sort(found.begin(), found.end(),
              [](const auto& a, const auto& b) { return a.first.code < b.first.code; });
    for (auto& [entry, rep] : found) {
      ++summary.graphs;
      summary.connected += entry.connected ? 1 : 0;
      family.entries.push_back(std::move(entry));
      if (rep) family.representatives.push_back(std::move(*rep));
    }
    family.by_base_dimension.push_back(summary);
  }
  return family;
}

UnmixedVerification verify_unmixed(std::size_t d) {
  UnmixedVerification out;
  out.d = d;
  for (auto& g : enumerate_unmixed(d)) {
    ++out.instances;
    OracleReport r = verify_against_oracle(g);
    if (!r.agree()) out.disagreements.emplace_back(std::move(g), std::move(r));
  }
  return out;
}

}  // namespace cmt
