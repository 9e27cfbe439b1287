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

// Brute-force simplicial oracle: independence complexes, links, joins,
// reduced rational homology and the face-link Cohen-Macaulay tests.
//
// Nothing in here knows about pure orders or blocks; the classifier and this
// module are meant to be independent routes to the same numbers.

#ifndef CMT_COMPLEX_HPP_
#define CMT_COMPLEX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "cmt/bigraph.hpp"

namespace cmt {

// A face as a bitmask over the owning complex's vertex list.
using Face = std::uint32_t;

class SimplicialComplex {
 public:
  static constexpr std::size_t kMaxVertices = 32;

  // The empty complex: no faces at all, not even the empty face.
  SimplicialComplex() = default;

  // Facets are reduced to the inclusion-maximal ones and sorted. Throws
  // SizeLimitError past kMaxVertices and Error on facets naming bits outside
  // the vertex list or duplicate vertex names.
  SimplicialComplex(std::vector<std::string> vertices, std::vector<Face> facets);

  // {∅}: the complex whose only face is the empty set.
  static SimplicialComplex VoidComplex() { return SimplicialComplex({}, {Face{0}}); }

  // Convenience for tests and fixtures.
  static SimplicialComplex FromFacets(const std::vector<std::vector<std::string>>& facets);

  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Face>& facets() const { return facets_; }

  // True for the complex with no faces (distinct from VoidComplex()).
  bool is_empty() const { return facets_.empty(); }

  bool contains(Face f) const;

  // Throws Error when a name is not a vertex.
  Face face_of(const std::vector<std::string>& names) const;
  std::vector<std::string> names_of(Face f) const;

  // Every face, ordered by cardinality then mask.
  std::vector<Face> faces() const;

  // Facets as name sets; equal across complexes with permuted vertex lists.
  std::set<std::set<std::string>> facet_sets() const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Face> facets_;
};

// Reduced Betti numbers over Q. betti[k] is the rank in dimension k - 1.
struct HomologyProfile {
  std::vector<std::size_t> betti;

  // Zero outside the stored range.
  std::size_t at(int dimension) const;
  bool operator==(const HomologyProfile&) const = default;
};

// Facets are the maximal independent sets; vertex list is left then right.
SimplicialComplex independence_complex(const BipartiteGraph& g);

// Largest facet size minus one. Throws Error for the empty complex.
int dim(const SimplicialComplex& c);

bool is_pure(const SimplicialComplex& c);

// Throws Error if `f` is not a face. The result's vertex list keeps only the
// vertices that occur in the link.
SimplicialComplex link(const SimplicialComplex& c, Face f);
SimplicialComplex link(const SimplicialComplex& c, const std::vector<std::string>& face);

// Throws Error when the vertex lists overlap.
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);

HomologyProfile reduced_homology(const SimplicialComplex& c);

// Reisner's criterion over Q: every link (the complex itself included) has
// vanishing reduced homology below its dimension.
bool is_cohen_macaulay(const SimplicialComplex& c);

// Pure, and every face with at least `t` vertices has a Cohen-Macaulay link.
// Negative `t` means 0.
bool is_cm_t(const SimplicialComplex& c, int t);

// Least t with is_cm_t, straight from the definition; nullopt if not pure.
std::optional<int> cm_codim(const SimplicialComplex& c);

// Same number through the vertex-link recursion: 0 if Cohen-Macaulay,
// otherwise 1 + max over vertices of the link's codimension.
std::optional<int> cm_codim_recursive(const SimplicialComplex& c);

// Alternating face count sum_{k >= -1} (-1)^k f_k (reduced Euler char).
long long reduced_euler_characteristic(const SimplicialComplex& c);

// Same quantity from the Betti numbers.
long long reduced_euler_characteristic(const HomologyProfile& h);

}  // namespace cmt

#endif  // CMT_COMPLEX_HPP_
