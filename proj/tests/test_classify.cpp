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

#include "cmt/classify.hpp"
#include "cmt/complex.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/fixtures.hpp"
#include "cmt/json_io.hpp"
#include "test_util.hpp"

namespace cmt {
namespace {

using testing::Make;

const UnmixedStructure& Structure(const CmtClassification& c) {
  REQUIRE(c.unmixed());
  return *c.structure;
}

TEST_CASE("classify examples") {
  SUBCASE("K22") {
    const auto c = classify(testing::Complete(2));
    const auto& s = Structure(c);
    CHECK(s.d == 2);
    CHECK(s.block_sizes == std::vector<std::size_t>{2});
    CHECK(s.n_min == 2u);
    CHECK(s.t_sharp == 1);
    CHECK(s.buchsbaum());
    CHECK_FALSE(s.cohen_macaulay());
  }
  SUBCASE("fig1") {
    const auto c = classify(builtin_graph("fig1"));
    const auto& s = Structure(c);
    CHECK(s.d == 4);
    CHECK(s.block_sizes == std::vector<std::size_t>{1, 3});
    CHECK(s.n_min == 3u);
    CHECK(s.t_sharp == 2);
    CHECK(s.minimal_blocks == std::vector<std::size_t>{1});
  }
  SUBCASE("fig2") {
    const auto c = classify(builtin_graph("fig2"));
    const auto& s = Structure(c);
    CHECK(s.d == 4);
    CHECK(s.block_sizes == std::vector<std::size_t>{2, 2});
    CHECK(s.n_min == 2u);
    CHECK(s.t_sharp == 3);
    CHECK(s.minimal_blocks == std::vector<std::size_t>{0, 1});
  }
  SUBCASE("single edge is Cohen-Macaulay") {
    const auto c = classify(testing::SingleEdge());
    CHECK(Structure(c).t_sharp == 0);
    CHECK_FALSE(Structure(c).n_min);
    CHECK(Structure(c).macaulay_order);
  }
  SUBCASE("not unmixed") {
    CHECK_FALSE(classify(testing::Hexagon()).unmixed());
    CHECK_FALSE(classify(Make(2, 1, {{1, 1}, {2, 1}})).unmixed());
  }
  SUBCASE("isolated vertex") {
    CHECK_THROWS_AS(classify(Make(2, 2, {{1, 1}, {1, 2}})), IsolatedVertexError);
  }
}

TEST_CASE("macaulay_order examples") {
  auto path = macaulay_order(testing::Path2());
  REQUIRE(path);
  CHECK(path->order == std::vector<std::size_t>{0, 1});

  CHECK_FALSE(macaulay_order(testing::Complete(2)));

  BipartiteGraph two = testing::TwoEdges();
  auto order = macaulay_order(two);
  REQUIRE(order);
  CHECK(satisfies_macaulay_condition(two, *find_pure_order(two), *order));

  // Reversed chain: x2 sits below x1.
  BipartiteGraph rev = Make(2, 2, {{1, 1}, {2, 1}, {2, 2}});
  auto r = macaulay_order(rev);
  REQUIRE(r);
  CHECK(r->order == std::vector<std::size_t>{1, 0});

  CHECK_THROWS_AS(macaulay_order(testing::Hexagon()), Error);
  CHECK_THROWS_AS(macaulay_order(testing::Path2(), PureOrder{{{0, 1}, {1, 0}}}), Error);
}

TEST_CASE("is_buchsbaum examples") {
  CHECK(is_buchsbaum(testing::Complete(5)));
  CHECK_FALSE(is_buchsbaum(builtin_graph("fig1")));
  CHECK(is_buchsbaum(testing::SingleEdge()));
  CHECK_THROWS_AS(is_buchsbaum(testing::Hexagon()), Error);
}

TEST_CASE("disjoint_union_codim examples") {
  // Edge next to K22: 1 + 1.
  CHECK(disjoint_union_codim(1, 0, 2, 1) == UnionCodim{2, true});
  CHECK(disjoint_union_codim(2, 1, 1, 0) == UnionCodim{2, true});
  CHECK(disjoint_union_codim(3, 0, 4, 0) == UnionCodim{0, true});
  CHECK(disjoint_union_codim(2, 1, 2, 1) == UnionCodim{3, false});
  CHECK(Structure(classify(builtin_graph("fig2"))).t_sharp == 3);
  CHECK_THROWS_AS(disjoint_union_codim(0, 0, 1, 0), Error);
  CHECK_THROWS_AS(disjoint_union_codim(1, -1, 1, 0), Error);

  const auto c = classify(disjoint_union(testing::SingleEdge(),
                                         testing::Renamed(testing::Complete(2), "b")));
  CHECK(Structure(c).t_sharp == 2);
}

TEST_CASE("verify_against_oracle examples") {
  auto k33 = verify_against_oracle(testing::Complete(3));
  CHECK(k33.agree());
  CHECK(k33.oracle_codim == 1);

  auto fig3 = verify_against_oracle(builtin_graph("fig3"));
  CHECK(fig3.agree());
  CHECK(fig3.oracle_codim == 3);
  CHECK(Structure(*fig3.structural).t_sharp == 3);

  auto hex = verify_against_oracle(testing::Hexagon());
  CHECK(hex.agree());
  CHECK_FALSE(hex.oracle_pure);

  auto iso = verify_against_oracle(Make(2, 2, {{1, 1}, {1, 2}}));
  CHECK(iso.status == VerifyStatus::kOutsideHypothesis);
  CHECK_FALSE(iso.oracle_pure);
}

TEST_CASE("structural and oracle routes agree for d <= 3") {
  for (std::size_t d = 1; d <= 3; ++d) {
    for (const auto& g : enumerate_unmixed(d)) {
      const OracleReport r = verify_against_oracle(g);
      INFO(format_graph(g));
      REQUIRE(r.agree());
      const auto& s = Structure(*r.structural);
      REQUIRE(s.dimension() == dim(independence_complex(g)));
      // t_sharp == 1 exactly for one block of size d >= 2.
      const bool complete = s.block_sizes.size() == 1 && s.d >= 2;
      REQUIRE((s.t_sharp == 1) == complete);
      // Dichotomy: Buchsbaum iff complete bipartite or Macaulay-orderable.
      REQUIRE((*r.oracle_codim <= 1) == (complete || s.macaulay_order.has_value()));
      if (s.macaulay_order) {
        REQUIRE(satisfies_macaulay_condition(g, s.pure_order, *s.macaulay_order));
        REQUIRE(r.oracle_codim == 0);
      }
    }
  }
}

TEST_CASE("disjoint_union_codim matches the oracle on unions of small unmixed graphs") {
  std::vector<BipartiteGraph> parts;
  for (std::size_t d = 1; d <= 3; ++d) {
    for (auto& g : enumerate_unmixed(d)) parts.push_back(g);
  }
  std::size_t checked = 0;
  for (const auto& a : parts) {
    const auto ca = classify(a);
    const auto& sa = Structure(ca);
    for (const auto& b0 : parts) {
      const BipartiteGraph b = testing::Renamed(b0, "b");
      const auto cb = classify(b);
      const auto& sb = Structure(cb);
      const UnionCodim u = disjoint_union_codim(static_cast<int>(sa.d), sa.t_sharp,
                                                static_cast<int>(sb.d), sb.t_sharp);
      const auto oracle = cm_codim(independence_complex(disjoint_union(a, b)));
      REQUIRE(oracle);
      INFO(format_graph(a), format_graph(b));
      if (u.sharp) {
        REQUIRE(*oracle == u.value);
      } else {
        REQUIRE(*oracle <= u.value);
      }
      ++checked;
    }
  }
  CHECK(checked == parts.size() * parts.size());
}

TEST_CASE("classification JSON carries the documented fields") {
  BipartiteGraph fig1 = builtin_graph("fig1");
  Json j = to_json(fig1, classify(fig1));
  CHECK(j["unmixed"] == true);
  CHECK(j["d"] == 4);
  CHECK(j["dimension"] == 3);
  CHECK(j["block_sizes"] == Json::array({1, 3}));
  CHECK(j["n_min"] == 3);
  CHECK(j["t_sharp"] == 2);
  CHECK(j["buchsbaum"] == false);
  CHECK(j["cohen_macaulay"] == false);
  CHECK_FALSE(j.contains("macaulay_order"));
  CHECK(j["blocks"] == Json::parse("[[1],[2,3,4]]"));

  Json path = to_json(testing::Path2(), classify(testing::Path2()));
  CHECK(path["macaulay_order"] == Json::array({1, 2}));
  CHECK(path["n_min"].is_null());

  CHECK(to_json(testing::Hexagon(), classify(testing::Hexagon())) == Json{{"unmixed", false}});
}

}  // namespace
}  // namespace cmt
