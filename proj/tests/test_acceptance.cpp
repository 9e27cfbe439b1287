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

// Acceptance suite. One test case per criterion; each prints a single
// "criterion N: PASS|FAIL" line. All comparisons are exact integer equality.

#include <doctest.h>

#include <chrono>
#include <cstdio>
#include <sstream>
#include <string>

#include "cmt/canonical.hpp"
#include "cmt/classify.hpp"
#include "cmt/complex.hpp"
#include "cmt/construct.hpp"
#include "cmt/enumerate.hpp"
#include "cmt/fixtures.hpp"
#include "test_util.hpp"

namespace cmt {
namespace {

constexpr double kCriterion1BudgetSeconds = 300.0;
constexpr double kCriterion4BudgetSeconds = 120.0;
constexpr std::size_t kMaxPairs = 4;  // d <= 4 in criteria 1 and 2

class Criterion {
 public:
  Criterion(int number, std::string title)
      : number_(number), title_(std::move(title)), start_(std::chrono::steady_clock::now()) {}

  ~Criterion() {
    std::printf("criterion %d: %s  %s  [%zu checks, %zu failed, %.1f s]%s\n", number_,
                failures_ == 0 ? "PASS" : "FAIL", title_.c_str(), checks_, failures_, seconds(),
                notes_.str().c_str());
    std::fflush(stdout);
  }

  // Records a failure; the first few are echoed to the console.
  bool expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (failures_ <= 5) notes_ << "\n    mismatch: " << what;
    }
    CHECK_MESSAGE(ok, what);
    return ok;
  }

  void note(const std::string& text) { notes_ << "\n    " << text; }

  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  int number_;
  std::string title_;
  std::chrono::steady_clock::time_point start_;
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::ostringstream notes_;
};

std::string Str(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }

int Sharp(const BipartiteGraph& g) { return classify(g).structure.value().t_sharp; }

std::vector<BipartiteGraph> Unmixed(std::size_t max_d) {
  std::vector<BipartiteGraph> out;
  for (std::size_t d = 1; d <= max_d; ++d) {
    for (auto& g : enumerate_unmixed(d)) out.push_back(std::move(g));
  }
  return out;
}

std::vector<std::vector<std::size_t>> Multiplicities(std::size_t d, std::size_t max_total) {
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

PureOrder Identity(std::size_t d) {
  PureOrder po;
  for (std::size_t i = 0; i < d; ++i) po.pairs.push_back({i, i});
  return po;
}

// Graphs used by criteria 5 and 6, shared with criterion 7.
std::vector<BipartiteGraph> UnionGraphs() {
  std::vector<BipartiteGraph> out;
  std::vector<BipartiteGraph> strict;
  for (const auto& g : Unmixed(3)) {
    if (Sharp(g) >= 1) strict.push_back(testing::Renamed(g, "p"));
  }
  for (int dimension = 0; dimension <= 1; ++dimension) {
    for (const auto& g : enumerate_cm(dimension)) {
      for (const auto& h : strict) out.push_back(disjoint_union(g, h));
    }
  }
  return out;
}

std::vector<Expansion> ExpansionCases() {
  std::vector<Expansion> out;
  for (int dimension = 0; dimension <= 2; ++dimension) {
    for (const auto& base : enumerate_cm(dimension)) {
      const std::size_t d = base.left_size();
      for (auto& m : Multiplicities(d, 5)) out.push_back({base, Identity(d), m});
    }
  }
  return out;
}

TEST_CASE("criterion 1: structural codimension equals the homological codimension (d <= 4)") {
  Criterion c(1, "t_sharp == oracle cm_codim on every unmixed graph with d <= 4");
  std::size_t instances = 0;
  for (const auto& g : Unmixed(kMaxPairs)) {
    const OracleReport r = verify_against_oracle(g);
    c.expect(r.agree() && r.structural->structure &&
                 r.oracle_codim == r.structural->structure->t_sharp,
             format_graph(g) + " oracle " + Str(r.oracle_codim));
    ++instances;
  }
  c.note(std::to_string(instances) + " isomorphism classes");
  c.expect(c.seconds() < kCriterion1BudgetSeconds, "runtime budget");
}

TEST_CASE("criterion 2: Buchsbaum dichotomy") {
  Criterion c(2, "t_sharp == 1 exactly for K_{n,n}, n >= 2");
  for (std::size_t n = 2; n <= 5; ++n) {
    const BipartiteGraph k = testing::Complete(n);
    c.expect(Sharp(k) == 1, "classify K" + std::to_string(n) + std::to_string(n));
    c.expect(cm_codim(independence_complex(k)) == 1, "oracle K" + std::to_string(n) + std::to_string(n));
  }
  for (const auto& g : Unmixed(kMaxPairs)) {
    const bool complete = g.edge_count() == g.left_size() * g.right_size();
    if (complete && g.left_size() >= 2) continue;
    const int t = Sharp(g);
    const auto oracle = cm_codim(independence_complex(g));
    c.expect(t != 1 && oracle != 1, format_graph(g));
  }
}

TEST_CASE("criterion 3: figures") {
  Criterion c(3, "fig1 -> 2, fig2 -> 3, fig3 -> 3 by classifier and oracle");
  const std::pair<const char*, int> expected[] = {{"fig1", 2}, {"fig2", 3}, {"fig3", 3}};
  for (const auto& [name, t] : expected) {
    const OracleReport r = verify_against_oracle(builtin_graph(name));
    c.expect(r.structural && r.structural->structure && r.structural->structure->t_sharp == t,
             std::string(name) + " classify");
    c.expect(r.oracle_codim == t, std::string(name) + " oracle " + Str(r.oracle_codim));
  }
}

TEST_CASE("criterion 4: enumeration counts") {
  Criterion c(4, "enumerate_cm 2/4/10 at dim 1/2/3; sharp CM_4 36 graphs, 21 connected");
  const std::pair<int, std::size_t> cm[] = {{1, 2}, {2, 4}, {3, 10}};
  for (const auto& [dimension, expected] : cm) {
    const std::size_t got = enumerate_cm(dimension).size();
    c.note("enumerate_cm(" + std::to_string(dimension) + ") = " + std::to_string(got) +
           " (expected " + std::to_string(expected) + ")");
    c.expect(got == expected, "enumerate_cm(" + std::to_string(dimension) + ") = " +
                                  std::to_string(got));
  }
  // Bounds for t = 4: dim H <= t - 1 = 3 (so d <= 4 base pairs) and, below the
  // top dimension, at most t - dim H enlarged blocks of size at most
  // t - dim H <= 3. The top dimension is the one-block family, counted once
  // per isomorphism type.
  const SharpCmtFamily f = enumerate_sharp_cmt(4);
  for (const auto& s : f.by_base_dimension) {
    c.note("  dim H = " + std::to_string(s.base_dimension) + ": " + std::to_string(s.graphs) +
           " graphs (" + std::to_string(s.connected) + " connected) from " +
           std::to_string(s.candidates) + " (base, multiplicity) candidates");
  }
  c.note("enumerate_sharp_cmt(4) = " + std::to_string(f.count()) + " graphs, " +
         std::to_string(f.connected_count()) + " connected (expected 36, 21)");
  c.expect(f.count() == 36, "sharp CM_4 count " + std::to_string(f.count()));
  c.expect(f.connected_count() == 21, "sharp CM_4 connected " + std::to_string(f.connected_count()));
  c.expect(c.seconds() < kCriterion4BudgetSeconds, "runtime budget");
}

TEST_CASE("criterion 5: disjoint union with a Cohen-Macaulay graph is sharp") {
  Criterion c(5, "cm_codim(G + G') == d + r' for CM G (d <= 2), strict CM_r' G' (d' <= 3)");
  std::size_t pairs = 0;
  std::vector<BipartiteGraph> strict;
  for (const auto& g : Unmixed(3)) {
    if (Sharp(g) >= 1) strict.push_back(testing::Renamed(g, "p"));
  }
  for (int dimension = 0; dimension <= 1; ++dimension) {
    for (const auto& g : enumerate_cm(dimension)) {
      const int d = static_cast<int>(g.left_size());
      for (const auto& h : strict) {
        const int rprime = *cm_codim(independence_complex(h));
        const auto oracle = cm_codim(independence_complex(disjoint_union(g, h)));
        c.expect(oracle == d + rprime, format_graph(g) + "+\n" + format_graph(h));
        c.expect(disjoint_union_codim(d, 0, static_cast<int>(h.left_size()), rprime) ==
                     UnionCodim{d + rprime, true},
                 "disjoint_union_codim");
        ++pairs;
      }
    }
  }
  c.note(std::to_string(pairs) + " pairs");
}

TEST_CASE("criterion 6: expansion properties (d <= 3, sum n_i <= 5)") {
  Criterion c(6, "expand unmixed; contract inverts expand; predicted == classify == oracle");
  std::size_t cases = 0;
  for (const auto& e : ExpansionCases()) {
    const ExpandedGraph x = expand(e);
    const std::string label = format_expansion(e);
    c.expect(is_unmixed(x.graph) && is_pure(independence_complex(x.graph)), label + " unmixed");
    const Expansion back = contract(x.graph);
    c.expect(canonical_form(back.base) == canonical_form(e.base) &&
                 canonical_form(expand(back).graph) == canonical_form(x.graph),
             label + " round trip");
    const int predicted = predicted_codim(e);
    c.expect(Sharp(x.graph) == predicted, label + " classify");
    c.expect(cm_codim(independence_complex(x.graph)) == predicted, label + " oracle");
    ++cases;
  }
  c.note(std::to_string(cases) + " (base, multiplicity) cases");
}

TEST_CASE("criterion 7: oracle self-consistency") {
  Criterion c(7, "Euler-Poincare and definitional == recursive cm_codim on all complexes above");
  std::vector<BipartiteGraph> graphs = Unmixed(kMaxPairs);
  for (std::size_t n = 2; n <= 5; ++n) graphs.push_back(testing::Complete(n));
  for (const auto& name : builtin_names()) graphs.push_back(builtin_graph(name));
  for (auto& g : UnionGraphs()) graphs.push_back(std::move(g));
  for (const auto& e : ExpansionCases()) graphs.push_back(expand(e).graph);

  std::size_t complexes = 0;
  for (const auto& g : graphs) {
    const SimplicialComplex ind = independence_complex(g);
    const HomologyProfile h = reduced_homology(ind);
    c.expect(reduced_euler_characteristic(h) == reduced_euler_characteristic(ind),
             format_graph(g) + " Euler-Poincare");
    c.expect(cm_codim(ind) == cm_codim_recursive(ind), format_graph(g) + " codim routes");
    for (std::size_t v = 0; v < ind.vertices().size(); ++v) {
      const SimplicialComplex lk = link(ind, Face{1} << v);
      c.expect(reduced_euler_characteristic(reduced_homology(lk)) ==
                   reduced_euler_characteristic(lk),
               format_graph(g) + " vertex link Euler-Poincare");
    }
    ++complexes;
  }
  c.note(std::to_string(complexes) + " complexes");
}

}  // namespace
}  // namespace cmt
