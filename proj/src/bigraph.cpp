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

#include "cmt/bigraph.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace cmt {

BipartiteGraph::BipartiteGraph(std::vector<std::string> left,
                               std::vector<std::string> right,
                               std::vector<Edge> edges)
    : left_(std::move(left)),
      right_(std::move(right)),
      edges_(std::move(edges)),
      adjacency_(left_.size() * right_.size(), 0) {
  std::unordered_set<std::string> seen;
  for (const auto* side : {&left_, &right_}) {
    for (const auto& n : *side) {
      if (!seen.insert(n).second) {
        throw Error("duplicate vertex identifier '" + n + "'");
      }
    }
  }
  for (const Edge& e : edges_) {
    if (e.left >= left_.size() || e.right >= right_.size()) {
      throw Error("edge endpoint out of range");
    }
    auto& cell = adjacency_[e.left * right_.size() + e.right];
    if (cell != 0) {
      throw Error("duplicate edge " + left_[e.left] + "-" + right_[e.right]);
    }
    cell = 1;
  }
  std::sort(edges_.begin(), edges_.end());
}

BipartiteGraph BipartiteGraph::FromNames(
    std::vector<std::string> left, std::vector<std::string> right,
    const std::vector<std::pair<std::string, std::string>>& edges) {
  std::unordered_map<std::string, std::size_t> lpos, rpos;
  for (std::size_t i = 0; i < left.size(); ++i) lpos.emplace(left[i], i);
  for (std::size_t i = 0; i < right.size(); ++i) rpos.emplace(right[i], i);
  std::vector<Edge> out;
  out.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    auto a = lpos.find(u);
    auto b = rpos.find(v);
    if (a == lpos.end() || b == rpos.end()) {
      throw Error("edge " + u + "-" + v + " does not join left to right");
    }
    out.push_back({a->second, b->second});
  }
  return BipartiteGraph(std::move(left), std::move(right), std::move(out));
}

std::size_t BipartiteGraph::left_degree(std::size_t left) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < right_.size(); ++r) n += has_edge(left, r);
  return n;
}

std::size_t BipartiteGraph::right_degree(std::size_t right) const {
  std::size_t n = 0;
  for (std::size_t l = 0; l < left_.size(); ++l) n += has_edge(l, right);
  return n;
}

std::optional<VertexRef> BipartiteGraph::find(std::string_view name) const {
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if (left_[i] == name) return VertexRef{Side::kLeft, i};
  }
  for (std::size_t i = 0; i < right_.size(); ++i) {
    if (right_[i] == name) return VertexRef{Side::kRight, i};
  }
  return std::nullopt;
}

const std::string& BipartiteGraph::name(VertexRef v) const {
  return v.side == Side::kLeft ? left_.at(v.index) : right_.at(v.index);
}

std::optional<VertexRef> BipartiteGraph::isolated_vertex() const {
  for (std::size_t i = 0; i < left_.size(); ++i) {
    if (left_degree(i) == 0) return VertexRef{Side::kLeft, i};
  }
  for (std::size_t i = 0; i < right_.size(); ++i) {
    if (right_degree(i) == 0) return VertexRef{Side::kRight, i};
  }
  return std::nullopt;
}

bool BipartiteGraph::operator==(const BipartiteGraph& other) const {
  return left_ == other.left_ && right_ == other.right_ &&
         edges_ == other.edges_;
}

std::vector<std::size_t> BlockDecomposition::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(blocks.size());
  for (const auto& b : blocks) out.push_back(b.size());
  return out;
}

// ---------------------------------------------------------------------------
// Document format

namespace {

std::string_view Trim(std::string_view s) {
  const char* ws = " \t\r\v\f";
  auto a = s.find_first_not_of(ws);
  if (a == std::string_view::npos) return {};
  auto b = s.find_last_not_of(ws);
  return s.substr(a, b - a + 1);
}

std::vector<std::string_view> Tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ValidName(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
           (c >= '0' && c <= '9') || c == '_';
  });
}

}  // namespace

GraphDocument parse_document(std::string_view text) {
  enum class Stage { kLeft, kRight, kEdges, kDone };
  Stage stage = Stage::kLeft;

  std::vector<std::string> left, right;
  std::unordered_map<std::string, VertexRef> where;
  std::vector<Edge> edges;
  std::unordered_set<std::size_t> edge_keys;
  std::optional<std::vector<std::size_t>> mult;

  auto add_names = [&](std::size_t line, std::string_view body, Side side,
                       std::vector<std::string>& out) {
    for (auto tok : Tokens(body)) {
      if (!ValidName(tok)) {
        throw ParseError(line, "invalid vertex name '" + std::string(tok) + "'");
      }
      std::string name(tok);
      if (where.count(name) != 0) {
        throw ParseError(line, "duplicate vertex identifier '" + name + "'");
      }
      where.emplace(name, VertexRef{side, out.size()});
      out.push_back(std::move(name));
    }
  };

  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (line.empty()) continue;
    if (line.size() < 2 || line[1] != ':') {
      throw ParseError(line_no, "expected a line starting with L:, R:, E: or M:");
    }
    const char tag = line[0];
    std::string_view body = line.substr(2);

    switch (tag) {
      case 'L':
        if (stage != Stage::kLeft) throw ParseError(line_no, "unexpected L: line");
        add_names(line_no, body, Side::kLeft, left);
        stage = Stage::kRight;
        break;
      case 'R':
        if (stage != Stage::kRight) throw ParseError(line_no, "unexpected R: line");
        add_names(line_no, body, Side::kRight, right);
        stage = Stage::kEdges;
        break;
      case 'E':
        if (stage != Stage::kEdges) throw ParseError(line_no, "unexpected E: line");
        for (auto tok : Tokens(body)) {
          auto dash = tok.find('-');
          if (dash == std::string_view::npos || tok.find('-', dash + 1) != std::string_view::npos) {
            throw ParseError(line_no, "malformed edge token '" + std::string(tok) + "'");
          }
          std::string u(tok.substr(0, dash)), v(tok.substr(dash + 1));
          auto a = where.find(u);
          auto b = where.find(v);
          if (a == where.end() || b == where.end()) {
            throw ParseError(line_no, "unknown vertex in edge '" + std::string(tok) + "'");
          }
          if (a->second.side != Side::kLeft || b->second.side != Side::kRight) {
            throw ParseError(line_no, "endpoint on wrong side in edge '" + std::string(tok) + "'");
          }
          Edge e{a->second.index, b->second.index};
          // Sides are complete by now, so the key is stable.
          if (!edge_keys.insert(e.left * (right.size() + 1) + e.right).second) {
            throw ParseError(line_no, "duplicate edge '" + std::string(tok) + "'");
          }
          edges.push_back(e);
        }
        break;
      case 'M': {
        if (stage != Stage::kEdges) throw ParseError(line_no, "unexpected M: line");
        std::vector<std::size_t> m;
        for (auto tok : Tokens(body)) {
          std::size_t value = 0;
          auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
          if (ec != std::errc() || p != tok.data() + tok.size()) {
            throw ParseError(line_no, "invalid multiplicity '" + std::string(tok) + "'");
          }
          m.push_back(value);
        }
        mult = std::move(m);
        stage = Stage::kDone;
        break;
      }
      default:
        throw ParseError(line_no, "unknown line tag '" + std::string(1, tag) + ":'");
    }
  }
  if (stage == Stage::kLeft) throw ParseError(0, "missing L: line");
  if (stage == Stage::kRight) throw ParseError(0, "missing R: line");

  return GraphDocument{BipartiteGraph(std::move(left), std::move(right), std::move(edges)),
                       std::move(mult)};
}

BipartiteGraph parse_graph(std::string_view text) {
  GraphDocument doc = parse_document(text);
  if (doc.multiplicities) {
    throw ParseError(0, "M: line is only valid in expansion documents");
  }
  return std::move(doc.graph);
}

std::string format_graph(const BipartiteGraph& g) {
  std::ostringstream out;
  out << "L:";
  for (const auto& n : g.left()) out << ' ' << n;
  out << "\nR:";
  for (const auto& n : g.right()) out << ' ' << n;
  out << "\nE:";
  for (const Edge& e : g.edges()) out << ' ' << g.left()[e.left] << '-' << g.right()[e.right];
  out << '\n';
  return out.str();
}

// ---------------------------------------------------------------------------
// Pure orders

namespace {

// Transitivity violated by some triple involving pure-order index `k` and
// indices < k of `pairs`.
bool ViolatesWithNewest(const BipartiteGraph& g,
                        const std::vector<MatchedPair>& pairs) {
  const std::size_t k = pairs.size() - 1;
  auto e = [&](std::size_t a, std::size_t b) {
    return g.has_edge(pairs[a].left, pairs[b].right);
  };
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      // Every ordered triple of distinct indices containing k.
      if (e(k, i) && e(i, j) && !e(k, j)) return true;
      if (e(i, k) && e(k, j) && !e(i, j)) return true;
      if (e(i, j) && e(j, k) && !e(i, k)) return true;
    }
  }
  return false;
}

class MatchingSearch {
 public:
  explicit MatchingSearch(const BipartiteGraph& g) : g_(g), used_(g.right_size(), 0) {
    order_.resize(g.left_size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
      return g.left_degree(a) < g.left_degree(b);
    });
  }

  std::optional<PureOrder> Run() {
    if (!Extend(0)) return std::nullopt;
    PureOrder po{pairs_};
    std::sort(po.pairs.begin(), po.pairs.end(),
              [](const MatchedPair& a, const MatchedPair& b) { return a.left < b.left; });
    return po;
  }

 private:
  bool Extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t l = order_[depth];
    for (std::size_t r = 0; r < g_.right_size(); ++r) {
      if (used_[r] || !g_.has_edge(l, r)) continue;
      used_[r] = 1;
      pairs_.push_back({l, r});
      // A violated triple among assigned pairs survives any extension.
      if (!ViolatesWithNewest(g_, pairs_) && Extend(depth + 1)) return true;
      pairs_.pop_back();
      used_[r] = 0;
    }
    return false;
  }

  const BipartiteGraph& g_;
  std::vector<std::size_t> order_;
  std::vector<std::uint8_t> used_;
  std::vector<MatchedPair> pairs_;
};

void RequireNoIsolated(const BipartiteGraph& g) {
  if (auto v = g.isolated_vertex()) throw IsolatedVertexError(g.name(*v));
}

}  // namespace

bool is_pure_order(const BipartiteGraph& g, const PureOrder& po) {
  const std::size_t d = po.d();
  if (g.left_size() != d || g.right_size() != d) return false;
  std::vector<std::uint8_t> seen_l(d, 0), seen_r(d, 0);
  for (const auto& p : po.pairs) {
    if (p.left >= d || p.right >= d || seen_l[p.left] || seen_r[p.right]) return false;
    seen_l[p.left] = seen_r[p.right] = 1;
    if (!g.has_edge(p.left, p.right)) return false;
  }
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      for (std::size_t k = 0; k < d; ++k) {
        if (i == j || j == k || i == k) continue;
        if (g.has_edge(po.pairs[i].left, po.pairs[j].right) &&
            g.has_edge(po.pairs[j].left, po.pairs[k].right) &&
            !g.has_edge(po.pairs[i].left, po.pairs[k].right)) {
          return false;
        }
      }
    }
  }
  return true;
}

std::optional<PureOrder> find_pure_order(const BipartiteGraph& g) {
  RequireNoIsolated(g);
  if (g.left_size() != g.right_size()) return std::nullopt;
  return MatchingSearch(g).Run();
}

bool is_unmixed(const BipartiteGraph& g) { return find_pure_order(g).has_value(); }

BlockDecomposition cross_blocks(const BipartiteGraph& g, const PureOrder& po) {
  const std::size_t d = po.d();
  auto cross = [&](std::size_t i, std::size_t j) {
    return i == j || (g.has_edge(po.pairs[i].left, po.pairs[j].right) &&
                      g.has_edge(po.pairs[j].left, po.pairs[i].right));
  };
  std::vector<std::size_t> block_of(d, d);
  BlockDecomposition out;
  for (std::size_t i = 0; i < d; ++i) {
    if (block_of[i] != d) continue;
    std::vector<std::size_t> members;
    for (std::size_t j = i; j < d; ++j) {
      if (cross(i, j)) {
        if (block_of[j] != d) throw ConsistencyError("cross relation is not transitive");
        members.push_back(j);
      }
    }
    for (std::size_t a : members) {
      for (std::size_t b : members) {
        if (!cross(a, b)) throw ConsistencyError("cross relation is not transitive");
      }
      block_of[a] = out.blocks.size();
    }
    out.blocks.push_back(std::move(members));
  }
  // Every index related to a member must itself be a member.
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      if (cross(i, j) && block_of[i] != block_of[j]) {
        throw ConsistencyError("cross relation is not transitive");
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Graph surgery

BipartiteGraph delete_closed_neighborhood(const BipartiteGraph& g,
                                          std::string_view vertex) {
  auto v = g.find(vertex);
  if (!v) throw Error("unknown vertex '" + std::string(vertex) + "'");
  std::vector<std::size_t> keep_l, keep_r;
  if (v->side == Side::kLeft) {
    for (std::size_t l = 0; l < g.left_size(); ++l) {
      if (l != v->index) keep_l.push_back(l);
    }
    for (std::size_t r = 0; r < g.right_size(); ++r) {
      if (!g.has_edge(v->index, r)) keep_r.push_back(r);
    }
  } else {
    for (std::size_t l = 0; l < g.left_size(); ++l) {
      if (!g.has_edge(l, v->index)) keep_l.push_back(l);
    }
    for (std::size_t r = 0; r < g.right_size(); ++r) {
      if (r != v->index) keep_r.push_back(r);
    }
  }
  return induced_subgraph(g, keep_l, keep_r);
}

BipartiteGraph disjoint_union(const BipartiteGraph& a, const BipartiteGraph& b) {
  std::vector<std::string> left = a.left();
  std::vector<std::string> right = a.right();
  left.insert(left.end(), b.left().begin(), b.left().end());
  right.insert(right.end(), b.right().begin(), b.right().end());
  std::vector<Edge> edges = a.edges();
  for (const Edge& e : b.edges()) {
    edges.push_back({e.left + a.left_size(), e.right + a.right_size()});
  }
  return BipartiteGraph(std::move(left), std::move(right), std::move(edges));
}

BipartiteGraph induced_subgraph(const BipartiteGraph& g,
                                const std::vector<std::size_t>& left,
                                const std::vector<std::size_t>& right) {
  std::vector<std::string> ln, rn;
  for (std::size_t l : left) ln.push_back(g.left().at(l));
  for (std::size_t r : right) rn.push_back(g.right().at(r));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < left.size(); ++i) {
    for (std::size_t j = 0; j < right.size(); ++j) {
      if (g.has_edge(left[i], right[j])) edges.push_back({i, j});
    }
  }
  return BipartiteGraph(std::move(ln), std::move(rn), std::move(edges));
}

bool is_connected(const BipartiteGraph& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) return true;
  const std::size_t nl = g.left_size();
  std::vector<std::uint8_t> seen(n, 0);
  std::vector<std::size_t> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    auto visit = [&](std::size_t w) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    };
    if (v < nl) {
      for (std::size_t r = 0; r < g.right_size(); ++r) {
        if (g.has_edge(v, r)) visit(nl + r);
      }
    } else {
      for (std::size_t l = 0; l < nl; ++l) {
        if (g.has_edge(l, v - nl)) visit(l);
      }
    }
  }
  return reached == n;
}

}  // namespace cmt
