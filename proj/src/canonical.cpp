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

#include "cmt/canonical.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>
#include <vector>

namespace cmt {
namespace {

// Minimum row-major code of `rows` (each a column bitmask) over all row and
// column permutations. For a fixed row order the lexicographically least
// matrix sorts the columns ascending by their top-to-bottom bit strings, so
// only row orders are enumerated.
std::uint64_t MinCode(const std::vector<std::uint8_t>& rows, std::size_t ncols) {
  const std::size_t nrows = rows.size();
  std::vector<std::size_t> perm(nrows);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  std::vector<std::uint16_t> colkey(ncols);
  do {
    // Column key: bits in row order, first row most significant.
    for (std::size_t c = 0; c < ncols; ++c) {
      std::uint16_t k = 0;
      for (std::size_t r = 0; r < nrows; ++r) {
        k = static_cast<std::uint16_t>((k << 1) | ((rows[perm[r]] >> c) & 1U));
      }
      colkey[c] = k;
    }
    std::vector<std::uint16_t> sorted = colkey;
    std::sort(sorted.begin(), sorted.end());
    std::uint64_t code = 0;
    for (std::size_t r = 0; r < nrows; ++r) {
      const unsigned shift = static_cast<unsigned>(nrows - 1 - r);
      for (std::size_t c = 0; c < ncols; ++c) {
        code = (code << 1) | ((sorted[c] >> shift) & 1U);
      }
    }
    best = std::min(best, code);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return nrows == 0 || ncols == 0 ? 0 : best;
}

}  // namespace

std::string CanonicalForm::to_string() const {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%ux%u-%016llx", static_cast<unsigned>(rows),
                static_cast<unsigned>(cols), static_cast<unsigned long long>(bits));
  return buf;
}

CanonicalForm canonical_form(const BipartiteGraph& g) {
  const std::size_t nl = g.left_size();
  const std::size_t nr = g.right_size();
  if (nl > CanonicalForm::kMaxSide || nr > CanonicalForm::kMaxSide) {
    throw SizeLimitError("canonical_form supports at most " +
                         std::to_string(CanonicalForm::kMaxSide) + " vertices per side");
  }
  std::vector<std::uint8_t> by_left(nl, 0), by_right(nr, 0);
  for (const Edge& e : g.edges()) {
    by_left[e.left] = static_cast<std::uint8_t>(by_left[e.left] | (1U << e.right));
    by_right[e.right] = static_cast<std::uint8_t>(by_right[e.right] | (1U << e.left));
  }
  CanonicalForm straight{static_cast<std::uint8_t>(nl), static_cast<std::uint8_t>(nr),
                         MinCode(by_left, nr)};
  CanonicalForm swapped{static_cast<std::uint8_t>(nr), static_cast<std::uint8_t>(nl),
                        MinCode(by_right, nl)};
  return std::min(straight, swapped);
}

}  // namespace cmt
