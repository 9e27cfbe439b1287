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

#include "cmt/exact_rank.hpp"

#include <gmpxx.h>

#include <optional>
#include <utility>

namespace cmt {
namespace {

using Wide = __int128;

// Bareiss elimination with row pivoting. Each entry after step k is a
// (k+1)-minor of the input, and the division by the previous pivot is exact.
// Returns nullopt on overflow.
template <typename T, typename MulSub>
std::optional<std::size_t> Bareiss(std::vector<T> a, std::size_t rows, std::size_t cols,
                                   MulSub mul_sub) {
  auto at = [&](std::size_t r, std::size_t c) -> T& { return a[r * cols + c]; };
  T prev = 1;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t pivot = rows;
    for (std::size_t r = rank; r < rows; ++r) {
      if (at(r, c) != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot == rows) continue;
    if (pivot != rank) {
      for (std::size_t k = 0; k < cols; ++k) std::swap(at(pivot, k), at(rank, k));
    }
    const T p = at(rank, c);
    for (std::size_t r = rank + 1; r < rows; ++r) {
      const T f = at(r, c);
      for (std::size_t k = c + 1; k < cols; ++k) {
        // at(r,k) = (p * at(r,k) - f * at(rank,k)) / prev
        if (!mul_sub(at(r, k), p, f, at(rank, k), prev)) return std::nullopt;
      }
      at(r, c) = 0;
    }
    prev = p;
    ++rank;
  }
  return rank;
}

bool WideStep(Wide& x, Wide p, Wide f, Wide y, Wide prev) {
  Wide a, b, diff;
  if (__builtin_mul_overflow(p, x, &a)) return false;
  if (__builtin_mul_overflow(f, y, &b)) return false;
  if (__builtin_sub_overflow(a, b, &diff)) return false;
  x = diff / prev;
  return true;
}

bool BigStep(mpz_class& x, const mpz_class& p, const mpz_class& f, const mpz_class& y,
             const mpz_class& prev) {
  mpz_class t = p * x - f * y;
  mpz_divexact(x.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
  return true;
}

}  // namespace

namespace detail {

std::size_t rational_rank_bignum(const IntMatrix& m) {
  std::vector<mpz_class> a;
  a.reserve(m.data.size());
  for (std::int64_t v : m.data) a.emplace_back(static_cast<long>(v));
  return *Bareiss(std::move(a), m.rows, m.cols, BigStep);
}

}  // namespace detail

std::size_t rational_rank(const IntMatrix& m) {
  if (m.rows == 0 || m.cols == 0) return 0;
  std::vector<Wide> a(m.data.begin(), m.data.end());
  if (auto r = Bareiss(std::move(a), m.rows, m.cols, WideStep)) return *r;
  return detail::rational_rank_bignum(m);
}

}  // namespace cmt
