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

#include <doctest.h>

#include "cmt/canonical.hpp"
#include "cmt/classify.hpp"
#include "cmt/complex.hpp"
#include "cmt/construct.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/fixtures.hpp"
#include "test_util.hpp"

namespace cmt {
namespace {

PureOrder Identity(std::size_t d) {
  PureOrder po;
  for (std::size_t i = 0; i < d; ++i) po.pairs.push_back({i, i});
  return po;
}

// Multiplicity vectors in {1..cap}^d with sum <= max_total.
std::vector<std::vector<std::size_t>> Vectors(std::size_t d, std::size_t max_total) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> v(d, 1);
  auto rec = [&](auto&& self, std::size_t i, std::size_t sum) -> void {
    if (i == d) {
      out.push_back(v);
      return;
    }
    for (std::size_t n = 1; sum + n + (d - i - 1) <= max_total; ++n) {
      v[i] = n;
      self(self, i + 1, sum + n);
    }
  };
  rec(rec, 0, 0);
  return out;
}

TEST_CASE("expand examples") {
  for (std::size_t n = 1; n <= 4; ++n) {
    ExpandedGraph k = expand({testing::SingleEdge(), Identity(1), {n}});
    CHECK(canonical_form(k.graph) == canonical_form(testing::Complete(n)));
    CHECK(k.graph.edge_count() == n * n);
  }

  ExpandedGraph f1 = expand({testing::Path2(), Identity(2), {1, 3}});
  CHECK(canonical_form(f1.graph) == canonical_form(builtin_graph("fig1")));
  CHECK(f1.graph.left() == std::vector<std::string>{"x1_1", "x2_1", "x2_2", "x2_3"});
  CHECK(f1.graph.right() == std::vector<std::string>{"y1_1", "y2_1", "y2_2", "y2_3"});
  CHECK(is_pure_order(f1.graph, f1.order));

  ExpandedGraph f2 = expand({testing::TwoEdges(), Identity(2), {2, 2}});
  CHECK(canonical_form(f2.graph) == canonical_form(builtin_graph("fig2")));

  CHECK_THROWS_AS(expand({testing::Path2(), Identity(2), {1}}), Error);
  CHECK_THROWS_AS(expand({testing::Path2(), Identity(2), {1, 0}}), Error);
  CHECK_THROWS_AS(expand({testing::Path2(), PureOrder{{{0, 1}, {1, 0}}}, {1, 1}}), Error);
}

TEST_CASE("contract examples") {
  for (std::size_t n = 2; n <= 4; ++n) {
    Expansion e = contract(testing::Complete(n));
    CHECK(e.base.edge_count() == 1);
    CHECK(e.multiplicities == std::vector<std::size_t>{n});
  }

  Expansion f1 = contract(builtin_graph("fig1"));
  CHECK(canonical_form(f1.base) == canonical_form(testing::Path2()));
  CHECK(f1.multiplicities == std::vector<std::size_t>{1, 3});
  CHECK(f1.base.left() == std::vector<std::string>{"x1", "x21"});

  for (int dimension = 0; dimension <= 3; ++dimension) {
    for (const auto& g : enumerate_cm(dimension)) {
      Expansion e = contract(g);
      CHECK(canonical_form(e.base) == canonical_form(g));
      CHECK(e.multiplicities == std::vector<std::size_t>(g.left_size(), 1));
    }
  }

  CHECK_THROWS_AS(contract(testing::Hexagon()), Error);
  CHECK_THROWS_AS(contract(testing::Make(2, 2, {{1, 1}, {1, 2}})), IsolatedVertexError);
}

TEST_CASE("predicted_codim examples") {
  CHECK(predicted_codim({testing::Path2(), Identity(2), {1, 3}}) == 2);
  CHECK(predicted_codim({testing::TwoEdges(), Identity(2), {2, 2}}) == 3);
  CHECK(predicted_codim({testing::Path2(), Identity(2), {2, 2}}) == 3);
  CHECK(predicted_codim({testing::Path2(), Identity(2), {1, 1}}) == 0);
  CHECK_THROWS_AS(predicted_codim({testing::Complete(2), Identity(2), {1, 1}}), Error);
}

TEST_CASE("expansion is unmixed for every unmixed base with d <= 3 and n_i <= 3") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& base : enumerate_unmixed(d)) {
      const PureOrder po = *find_pure_order(base);
      for (const auto& m : Vectors(d, 3 * d)) {
        if (*std::max_element(m.begin(), m.end()) > 3) continue;
        ExpandedGraph x = expand({base, po, m});
        REQUIRE(is_unmixed(x.graph));
        REQUIRE(is_pure_order(x.graph, x.order));
      }
    }
  }
}

TEST_CASE("contract inverts expand and codimensions agree (d <= 3, sum n_i <= 5)") {
  std::size_t checked = 0;
  for (int dimension = 0; dimension <= 2; ++dimension) {
    for (const auto& base : enumerate_cm(dimension)) {
      const std::size_t d = base.left_size();
      for (const auto& m : Vectors(d, 5)) {
        const Expansion e{base, Identity(d), m};
        const ExpandedGraph x = expand(e);
        const Expansion back = contract(x.graph);
        REQUIRE(canonical_form(back.base) == canonical_form(base));
        // Same (base, multiplicities) up to base automorphism.
        REQUIRE(canonical_form(expand(back).graph) == canonical_form(x.graph));
        auto a = back.multiplicities, b = m;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        REQUIRE(a == b);

        const int predicted = predicted_codim(e);
        REQUIRE(classify(x.graph).structure->t_sharp == predicted);
        REQUIRE(cm_codim(independence_complex(x.graph)) == predicted);
        ++checked;
      }
    }
  }
  CHECK(checked > 50);
}

TEST_CASE("every unmixed graph with d <= 4 contracts to an isomorphism-invariant base") {
  std::mt19937 rng(5);
  for (std::size_t d = 1; d <= 4; ++d) {
    for (const auto& g : enumerate_unmixed(d)) {
      const Expansion e = contract(g);
      REQUIRE(predicted_codim(e) == classify(g).structure->t_sharp);
      for (int trial = 0; trial < 3; ++trial) {
        const Expansion other = contract(testing::Shuffled(g, rng, trial == 2));
        REQUIRE(canonical_form(other.base) == canonical_form(e.base));
      }
    }
  }
}

TEST_CASE("expansion documents") {
  const char* text =
      "# chain with top pair blown up\n"
      "L: x1 x2\nR: y1 y2\nE: x1-y1 x1-y2 x2-y2\nM: 1 3\n";
  Expansion e = parse_expansion(text);
  CHECK(e.multiplicities == std::vector<std::size_t>{1, 3});
  CHECK(e.order == Identity(2));
  CHECK(canonical_form(expand(e).graph) == canonical_form(builtin_graph("fig1")));

  const std::string out = format_expansion(e);
  CHECK(out == "L: x1 x2\nR: y1 y2\nE: x1-y1 x1-y2 x2-y2\nM: 1 3\n");
  Expansion again = parse_expansion(out);
  CHECK(again.base == e.base);
  CHECK(again.multiplicities == e.multiplicities);

  // Declared order is not a matching; multiplicities follow the left vertex.
  Expansion swapped = parse_expansion("L: a b\nR: q p\nE: a-p b-q a-q\nM: 3 1\n");
  REQUIRE(swapped.order.pairs.size() == 2);
  for (std::size_t i = 0; i < 2; ++i) {
    const auto left = swapped.order.pairs[i].left;
    CHECK(swapped.multiplicities[i] == (left == 0 ? 3u : 1u));
  }

  CHECK_THROWS_AS(parse_expansion("L: x1\nR: y1\nE: x1-y1\n"), ParseError);
  CHECK_THROWS_AS(parse_expansion("L: x1\nR: y1\nE: x1-y1\nM: 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_expansion("L: x1\nR: y1\nE: x1-y1\nM: two\n"), ParseError);
}

}  // namespace
}  // namespace cmt
