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

#ifndef CMT_CANONICAL_HPP_
#define CMT_CANONICAL_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>

#include "cmt/bigraph.hpp"

namespace cmt {

// Isomorphism-class key for small bipartite graphs. Two graphs get the same
// code iff a bijection of vertices, optionally exchanging the two sides as a
// whole, carries one edge set onto the other.
//
// `bits` is the biadjacency matrix read row-major, first entry in the most
// significant used bit, minimised over row permutations, column permutations
// and transposition.
struct CanonicalForm {
  static constexpr std::size_t kMaxSide = 8;

  std::uint8_t rows = 0;
  std::uint8_t cols = 0;
  std::uint64_t bits = 0;

  auto operator<=>(const CanonicalForm&) const = default;

  // e.g. "3x3-0000000000000111"; usable as a file name.
  std::string to_string() const;
};

// Throws SizeLimitError if either side exceeds kMaxSide.
CanonicalForm canonical_form(const BipartiteGraph& g);

}  // namespace cmt

#endif  // CMT_CANONICAL_HPP_
