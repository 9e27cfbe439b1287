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

#include "cmt/complex.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "cmt/exact_rank.hpp"

namespace cmt {
namespace {

int Size(Face f) { return std::popcount(f); }

bool SubsetOf(Face a, Face b) { return (a & ~b) == 0; }

std::vector<Face> MaximalOnly(std::vector<Face> facets) {
  std::sort(facets.begin(), facets.end(), [](Face a, Face b) {
    return Size(a) != Size(b) ? Size(a) > Size(b) : a < b;
  });
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
  std::vector<Face> kept;
  for (Face f : facets) {
    bool covered = std::any_of(kept.begin(), kept.end(),
                               [f](Face k) { return SubsetOf(f, k); });
    if (!covered) kept.push_back(f);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::vector<std::string> vertices,
                                     std::vector<Face> facets)
    : vertices_(std::move(vertices)) {
  if (vertices_.size() > kMaxVertices) {
    throw SizeLimitError("complex has " + std::to_string(vertices_.size()) +
                         " vertices; the limit is " + std::to_string(kMaxVertices));
  }
  std::unordered_set<std::string> seen;
  for (const auto& v : vertices_) {
    if (!seen.insert(v).second) throw Error("duplicate vertex '" + v + "'");
  }
  const Face all = vertices_.size() == 32 ? ~Face{0} : (Face{1} << vertices_.size()) - 1;
  for (Face f : facets) {
    if (!SubsetOf(f, all)) throw Error("facet uses a vertex outside the vertex list");
  }
  facets_ = MaximalOnly(std::move(facets));
}

SimplicialComplex SimplicialComplex::FromFacets(
    const std::vector<std::vector<std::string>>& facets) {
  std::vector<std::string> vertices;
  std::unordered_map<std::string, std::size_t> pos;
  std::vector<Face> masks;
  for (const auto& facet : facets) {
    Face m = 0;
    for (const auto& v : facet) {
      auto [it, fresh] = pos.emplace(v, vertices.size());
      if (fresh) vertices.push_back(v);
      if (it->second >= kMaxVertices) throw SizeLimitError("too many vertices");
      m |= Face{1} << it->second;
    }
    masks.push_back(m);
  }
  return SimplicialComplex(std::move(vertices), std::move(masks));
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [f](Face g) { return SubsetOf(f, g); });
}

Face SimplicialComplex::face_of(const std::vector<std::string>& names) const {
  Face f = 0;
  for (const auto& n : names) {
    auto it = std::find(vertices_.begin(), vertices_.end(), n);
    if (it == vertices_.end()) throw Error("unknown vertex '" + n + "'");
    f |= Face{1} << (it - vertices_.begin());
  }
  return f;
}

std::vector<std::string> SimplicialComplex::names_of(Face f) const {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    if (f >> i & 1U) out.push_back(vertices_[i]);
  }
  return out;
}

std::vector<Face> SimplicialComplex::faces() const {
  std::unordered_set<Face> all;
  for (Face f : facets_) {
    for (Face s = f;; s = (s - 1) & f) {
      all.insert(s);
      if (s == 0) break;
    }
  }
  std::vector<Face> out(all.begin(), all.end());
  std::sort(out.begin(), out.end(), [](Face a, Face b) {
    return Size(a) != Size(b) ? Size(a) < Size(b) : a < b;
  });
  return out;
}

std::set<std::set<std::string>> SimplicialComplex::facet_sets() const {
  std::set<std::set<std::string>> out;
  for (Face f : facets_) {
    auto names = names_of(f);
    out.emplace(names.begin(), names.end());
  }
  return out;
}

std::size_t HomologyProfile::at(int dimension) const {
  const int k = dimension + 1;
  if (k < 0 || static_cast<std::size_t>(k) >= betti.size()) return 0;
  return betti[static_cast<std::size_t>(k)];
}

// ---------------------------------------------------------------------------

SimplicialComplex independence_complex(const BipartiteGraph& g) {
  const std::size_t nl = g.left_size();
  const std::size_t n = g.vertex_count();
  if (n > SimplicialComplex::kMaxVertices) {
    throw SizeLimitError("graph has " + std::to_string(n) + " vertices; the limit is " +
                         std::to_string(SimplicialComplex::kMaxVertices));
  }
  std::vector<std::string> names = g.left();
  names.insert(names.end(), g.right().begin(), g.right().end());

  // Neighbourhoods in G; independent sets are cliques of the complement.
  std::vector<Face> adj(n, 0);
  for (const Edge& e : g.edges()) {
    adj[e.left] |= Face{1} << (nl + e.right);
    adj[nl + e.right] |= Face{1} << e.left;
  }
  const Face all = n == 32 ? ~Face{0} : (Face{1} << n) - 1;

  std::vector<Face> facets;
  // Bron-Kerbosch with pivoting on the complement graph.
  auto expand = [&](auto&& self, Face chosen, Face candidates, Face excluded) -> void {
    if (candidates == 0 && excluded == 0) {
      facets.push_back(chosen);
      return;
    }
    const Face pool = candidates | excluded;
    int pivot = std::countr_zero(pool);
    std::size_t best = 0;
    for (Face p = pool; p != 0; p &= p - 1) {
      int u = std::countr_zero(p);
      auto cover = static_cast<std::size_t>(std::popcount(candidates & ~adj[u]));
      if (cover >= best) {
        best = cover;
        pivot = u;
      }
    }
    // Complement neighbours of the pivot are the non-neighbours in G.
    Face branch = candidates & (adj[pivot] | (Face{1} << pivot));
    for (Face b = branch; b != 0; b &= b - 1) {
      int v = std::countr_zero(b);
      const Face bit = Face{1} << v;
      const Face keep = all & ~adj[v] & ~bit;
      self(self, chosen | bit, candidates & keep, excluded & keep);
      candidates &= ~bit;
      excluded |= bit;
    }
  };
  expand(expand, 0, all, 0);
  return SimplicialComplex(std::move(names), std::move(facets));
}

int dim(const SimplicialComplex& c) {
  if (c.is_empty()) throw Error("the empty complex has no dimension");
  int best = 0;
  for (Face f : c.facets()) best = std::max(best, Size(f));
  return best - 1;
}

bool is_pure(const SimplicialComplex& c) {
  const auto& f = c.facets();
  return std::all_of(f.begin(), f.end(),
                     [&](Face x) { return Size(x) == Size(f.front()); });
}

SimplicialComplex link(const SimplicialComplex& c, Face f) {
  if (!c.contains(f)) throw Error("link requested for a set that is not a face");
  std::vector<Face> rest;
  Face used = 0;
  for (Face g : c.facets()) {
    if (SubsetOf(f, g)) {
      rest.push_back(g & ~f);
      used |= g & ~f;
    }
  }
  // Compact to the vertices that survive, keeping their relative order.
  std::vector<std::string> names;
  std::vector<int> remap(c.vertices().size(), -1);
  for (std::size_t i = 0; i < c.vertices().size(); ++i) {
    if (used >> i & 1U) {
      remap[i] = static_cast<int>(names.size());
      names.push_back(c.vertices()[i]);
    }
  }
  std::vector<Face> facets;
  facets.reserve(rest.size());
  for (Face g : rest) {
    Face m = 0;
    for (Face b = g; b != 0; b &= b - 1) m |= Face{1} << remap[std::countr_zero(b)];
    facets.push_back(m);
  }
  return SimplicialComplex(std::move(names), std::move(facets));
}

SimplicialComplex link(const SimplicialComplex& c, const std::vector<std::string>& face) {
  return link(c, c.face_of(face));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  std::unordered_set<std::string> names(a.vertices().begin(), a.vertices().end());
  for (const auto& v : b.vertices()) {
    if (names.count(v) != 0) throw Error("join of complexes sharing vertex '" + v + "'");
  }
  const std::size_t na = a.vertices().size();
  if (na + b.vertices().size() > SimplicialComplex::kMaxVertices) {
    throw SizeLimitError("join exceeds the vertex limit");
  }
  std::vector<std::string> vertices = a.vertices();
  vertices.insert(vertices.end(), b.vertices().begin(), b.vertices().end());
  std::vector<Face> facets;
  for (Face fa : a.facets()) {
    for (Face fb : b.facets()) facets.push_back(fa | (fb << na));
  }
  return SimplicialComplex(std::move(vertices), std::move(facets));
}

// ---------------------------------------------------------------------------
// Homology

HomologyProfile reduced_homology(const SimplicialComplex& c) {
  HomologyProfile out;
  if (c.is_empty()) return out;

  const std::vector<Face> faces = c.faces();
  const int top = dim(c) + 1;  // largest face size
  std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(top) + 1);
  for (Face f : faces) by_size[static_cast<std::size_t>(Size(f))].push_back(f);

  // rank[s] = rank of the boundary map from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> rank(static_cast<std::size_t>(top) + 2, 0);
  for (int s = 1; s <= top; ++s) {
    const auto& rows = by_size[static_cast<std::size_t>(s - 1)];
    const auto& cols = by_size[static_cast<std::size_t>(s)];
    std::unordered_map<Face, std::size_t> row_of;
    for (std::size_t i = 0; i < rows.size(); ++i) row_of.emplace(rows[i], i);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      int position = 0;
      for (Face b = cols[j]; b != 0; b &= b - 1, ++position) {
        const Face facet = cols[j] & ~(b & (~b + 1));
        m(row_of.at(facet), j) = (position % 2 == 0) ? 1 : -1;
      }
    }
    rank[static_cast<std::size_t>(s)] = rational_rank(m);
  }
  out.betti.resize(static_cast<std::size_t>(top) + 1);
  for (int s = 0; s <= top; ++s) {
    const auto us = static_cast<std::size_t>(s);
    out.betti[us] = by_size[us].size() - rank[us] - rank[us + 1];
  }
  return out;
}

namespace {

// Reduced homology of `c` vanishes strictly below its dimension.
bool HomologyConcentratedOnTop(const SimplicialComplex& c) {
  if (c.is_empty()) return true;
  const HomologyProfile h = reduced_homology(c);
  const int d = dim(c);
  for (int k = -1; k < d; ++k) {
    if (h.at(k) != 0) return false;
  }
  return true;
}

}  // namespace

bool is_cohen_macaulay(const SimplicialComplex& c) {
  for (Face f : c.faces()) {
    if (!HomologyConcentratedOnTop(link(c, f))) return false;
  }
  return true;
}

bool is_cm_t(const SimplicialComplex& c, int t) {
  if (!is_pure(c)) return false;
  const int threshold = std::max(t, 0);
  for (Face f : c.faces()) {
    if (Size(f) >= threshold && !is_cohen_macaulay(link(c, f))) return false;
  }
  return true;
}

std::optional<int> cm_codim(const SimplicialComplex& c) {
  if (!is_pure(c)) return std::nullopt;
  // lk(F) is Cohen-Macaulay iff every face G containing F has lk(G) with
  // homology concentrated on top, since lk_{lk F}(G \ F) = lk G. So the
  // faces with non-CM links are exactly the subsets of the "bad" faces and
  // the least admissible t is one more than the largest bad face.
  int largest_bad = -1;
  for (Face f : c.faces()) {
    if (Size(f) > largest_bad && !HomologyConcentratedOnTop(link(c, f))) {
      largest_bad = Size(f);
    }
  }
  return largest_bad + 1;
}

namespace {

using ComplexKey = std::pair<std::vector<std::string>, std::vector<Face>>;

int RecursiveCodim(const SimplicialComplex& c, std::map<ComplexKey, int>& memo) {
  ComplexKey key{c.vertices(), c.facets()};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  int result = 0;
  if (!is_cohen_macaulay(c)) {
    int worst = 0;
    for (std::size_t v = 0; v < c.vertices().size(); ++v) {
      worst = std::max(worst, RecursiveCodim(link(c, Face{1} << v), memo));
    }
    result = worst + 1;
  }
  memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

std::optional<int> cm_codim_recursive(const SimplicialComplex& c) {
  if (!is_pure(c)) return std::nullopt;
  std::map<ComplexKey, int> memo;
  return RecursiveCodim(c, memo);
}

long long reduced_euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  for (Face f : c.faces()) {
    // A face of size s has dimension s - 1.
    chi += ((Size(f) - 1) % 2 == 0) ? 1 : -1;
  }
  return chi;
}

long long reduced_euler_characteristic(const HomologyProfile& h) {
  long long chi = 0;
  for (std::size_t k = 0; k < h.betti.size(); ++k) {
    // betti[k] sits in dimension k - 1.
    const auto b = static_cast<long long>(h.betti[k]);
    chi += (k % 2 == 1) ? b : -b;
  }
  return chi;
}

}  // namespace cmt
