// Copyright 2026 The kappalab Authors
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

#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "kappalab/cayley.hpp"
#include "kappalab/kappa.hpp"
#include "oracle.hpp"

using namespace kappalab;

namespace {

Graph complete(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph::from_edges(n, edges);
}

Graph to_graph(const oracle::Matrix& m) {
  std::vector<Edge> edges;
  for (int u = 0; u < m.size; ++u)
    for (int v = u + 1; v < m.size; ++v)
      if (m.adj[u][v]) edges.emplace_back(u, v);
  return Graph::from_edges(m.size, edges);
}

oracle::Matrix to_matrix(const Graph& g) {
  oracle::Matrix m(static_cast<int>(g.vertex_count()));
  for (auto [u, v] : g.edges()) m.connect(u, v);
  return m;
}

}  // namespace

TEST_CASE("exhaustive values on AG4 and small fixtures") {
  const auto ag4 = build_ag(4);
  const auto k3 = kappa_ell_exhaustive(ag4.graph(), 3);
  CHECK(k3.status == SearchStatus::Found);
  CHECK(k3.tier == Tier::Exhaustive);
  CHECK(k3.value == 6);
  REQUIRE(k3.witness);
  CHECK(k3.witness->report.count() >= 3);
  CHECK(kappa_ell_exhaustive(ag4.graph(), 4).value == 8);
  const auto k5 = kappa_ell_exhaustive(ag4.graph(), 5);
  CHECK(k5.value == 8);
  CHECK(kappa_ell_exhaustive(ag4.graph(), 2).value == 4);

  const auto k4 = kappa_ell_exhaustive(complete(4), 3);
  CHECK(k4.value == 2);
  CHECK(k4.tier == Tier::RuleFewerThanEll);
  CHECK_THROWS_AS(kappa_ell_exhaustive(complete(4), 1), std::invalid_argument);
}

TEST_CASE("exhaustive limits") {
  const auto ag4 = build_ag(4);
  ExhaustiveOptions capped;
  capped.k_max = 5;
  const auto none = kappa_ell_exhaustive(ag4.graph(), 3, capped);
  CHECK(none.status == SearchStatus::NoCutWithinLimit);
  CHECK(none.settled_below == 6);

  ExhaustiveOptions tight;
  tight.budget = 100;
  const auto partial = kappa_ell_exhaustive(ag4.graph(), 3, tight);
  CHECK(partial.status == SearchStatus::Inconclusive);
  CHECK(partial.settled_below >= 1);
  CHECK(partial.settled_below <= 6);
}

TEST_CASE("exhaustive search agrees with the brute-force oracle") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 25; ++trial) {
    const int size = 4 + trial % 9;
    const auto m = oracle::random_graph(rng, size, 0.25 + 0.02 * (trial % 10));
    const auto g = to_graph(m);
    for (int ell = 2; ell <= 4; ++ell) {
      const auto r = kappa_ell_exhaustive(g, ell);
      REQUIRE(r.status == SearchStatus::Found);
      CHECK(r.value == oracle::kappa_ell(m, ell));
    }
    CHECK(kappa_ell_exhaustive(g, 2).value == vertex_connectivity(g));
  }
}

// A cut leaving ell + 1 components also leaves ell, so kappa is monotone up
// to the point where the fewer-than-ell rule takes over; past it the value
// |V| - ell + 1 shrinks with ell.
TEST_CASE("kappa is monotone in ell while cuts decide it") {
  const auto s4 = build_splitstar(4);
  const auto ag4 = build_ag(4);
  for (const Graph* g : {&s4.graph(), &ag4.graph()}) {
    int previous = 0;
    for (int ell = 2; ell <= 6; ++ell) {
      const auto r = kappa_ell_exhaustive(*g, ell);
      if (r.tier != Tier::Exhaustive) break;
      CHECK(r.value >= previous);
      previous = r.value;
    }
  }
  const auto k5 = complete(5);
  CHECK(kappa_ell_exhaustive(k5, 2).value == 4);
  CHECK(kappa_ell_exhaustive(k5, 3).value == 3);
}

TEST_CASE("connected sets") {
  const auto g = build_ag(4).graph();
  const auto sets = connected_sets(g, 3);
  CHECK(std::is_sorted(sets.begin(), sets.end()));
  CHECK(std::set<VertexList>(sets.begin(), sets.end()).size() == sets.size());
  // Oracle: every subset of size <= 3 that is connected.
  const auto m = to_matrix(g);
  std::size_t expected = 0;
  for (std::uint32_t mask = 1; mask < (1u << 12); ++mask) {
    const int k = __builtin_popcount(mask);
    if (k > 3) continue;
    std::vector<char> removed(12, 1);
    for (int v = 0; v < 12; ++v)
      if ((mask >> v) & 1) removed[v] = 0;
    if (oracle::components(m, removed) == 1) ++expected;
  }
  CHECK(sets.size() == expected);
}

TEST_CASE("witness search values") {
  WitnessOptions b1;
  CHECK(kappa_ell_witness_search(build_ag(5).graph(), 3, b1).value == 10);
  const auto ag5_5 = kappa_ell_witness_search(build_ag(5).graph(), 5, b1);
  CHECK(ag5_5.value == 16);
  CHECK(ag5_5.tier == Tier::WitnessUpperBound);
  REQUIRE(ag5_5.family);
  CHECK(is_valid_family(build_ag(5).graph(), *ag5_5.family));
  CHECK(ag5_5.witness->report.count() >= 5);
  CHECK(kappa_ell_witness_search(build_splitstar(5).graph(), 4, b1).value == 16);
  CHECK_THROWS_AS(kappa_ell_witness_search(build_ag(4).graph(), 1, b1), std::invalid_argument);
}

TEST_CASE("witness bounds never undercut the exact value") {
  const auto ag4 = build_ag(4).graph();
  const auto s4 = build_splitstar(4).graph();
  for (const Graph* g : {&ag4, &s4}) {
    for (int ell = 3; ell <= 4; ++ell) {
      const int exact = kappa_ell_exhaustive(*g, ell).value;
      for (int b = 1; b <= 2; ++b) {
        WitnessOptions options;
        options.max_part_size = b;
        const auto w = kappa_ell_witness_search(*g, ell, options);
        if (w.status == SearchStatus::Found) CHECK(w.value >= exact);
      }
    }
  }
  // Pinning vertex 0 is exact on a vertex-transitive graph.
  WitnessOptions pinned, free;
  free.pin_vertex_zero = false;
  CHECK(kappa_ell_witness_search(ag4, 4, pinned).value ==
        kappa_ell_witness_search(ag4, 4, free).value);
}

TEST_CASE("random witness families are sound") {
  const auto g = build_ag(5).graph();
  const auto sets = connected_sets(g, 3);
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<std::size_t> pick(0, sets.size() - 1);
  int built = 0;
  while (built < 1000) {
    WitnessFamily family;
    const int want = 1 + static_cast<int>(rng() % 4);
    for (int tries = 0; tries < 50 && static_cast<int>(family.parts.size()) < want; ++tries) {
      WitnessFamily grown = family;
      grown.parts.push_back(sets[pick(rng)]);
      if (is_valid_family(g, grown)) family = std::move(grown);
    }
    if (family.parts.empty()) continue;
    ++built;
    const FaultSet fault(g.vertex_count(), neighborhood(g, family_union(family)));
    const auto report = components(g, fault);
    // Every part survives as its own component, plus the remainder.
    CHECK(report.count() >= static_cast<int>(family.parts.size()) + 1);
  }
}

TEST_CASE("results do not depend on the worker count") {
  const auto s4 = build_splitstar(4).graph();
  const auto ag5 = build_ag(5).graph();
  for (int jobs : {2, 4, 8}) {
    ExhaustiveOptions e1, ej;
    ej.jobs = jobs;
    const auto a = kappa_ell_exhaustive(s4, 3, e1);
    const auto b = kappa_ell_exhaustive(s4, 3, ej);
    CHECK(a.value == b.value);
    CHECK(a.explored == b.explored);
    CHECK(a.witness->fault == b.witness->fault);

    WitnessOptions w1, wj;
    w1.max_part_size = wj.max_part_size = 2;
    wj.jobs = jobs;
    const auto c = kappa_ell_witness_search(ag5, 4, w1);
    const auto d = kappa_ell_witness_search(ag5, 4, wj);
    CHECK(c.value == d.value);
    CHECK(c.explored == d.explored);
    CHECK(c.witness->fault == d.witness->fault);
  }
}

TEST_CASE("closed forms and constructions") {
  CHECK(formula_value(Family::AlternatingGroup, 3, 4) == 6);
  CHECK(formula_value(Family::AlternatingGroup, 5, 4) == std::nullopt);
  CHECK(formula_value(Family::AlternatingGroup, 5, 5) == 16);
  CHECK(formula_value(Family::SplitStar, 5, 4) == 12);
  CHECK(formula_value(Family::SplitStar, 6, 5) == std::nullopt);

  for (int n = 4; n <= 7; ++n) {
    for (int ell = 3; ell <= 5; ++ell) {
      for (Family f : {Family::AlternatingGroup, Family::SplitStar}) {
        const auto formula = formula_value(f, ell, n);
        if (!formula) continue;
        const auto g = build(f, n);
        const auto cut = construct_extremal_cut(g, ell);
        CHECK(cut.formula == *formula);
        CHECK(static_cast<int>(cut.witness.fault.size()) == *formula);
        CHECK(cut.witness.report.count() >= ell);
        CHECK(verify_cut(g.graph(), cut.witness.fault, ell).accepted);
      }
    }
  }
  const auto ag4 = build_ag(4);
  const auto four = construct_extremal_cut(ag4, 4);
  CHECK(four.witness.report.count() == 4);
  CHECK_THROWS_AS(construct_extremal_cut(ag4, 5), std::invalid_argument);

  // S_4^2, ell = 3: the pair is two vertices with exactly two common neighbors.
  const auto s4 = build_splitstar(4);
  const auto three = construct_extremal_cut(s4, 3);
  REQUIRE(three.family.parts.size() == 2);
  CHECK(common_neighbors(s4.graph(), three.family.parts[0][0], three.family.parts[1][0]).size() ==
        2);
}

TEST_CASE("cut verdicts") {
  const auto ag4 = build_ag(4);
  std::vector<Vertex> s{ag4.id_of("1234"), ag4.id_of("4321"), ag4.id_of("3412")};
  const FaultSet f(12, neighborhood(ag4.graph(), make_vertex_list(s)));
  const auto v = verify_cut(ag4.graph(), f, 4);
  CHECK(v.accepted);
  CHECK(v.report.count() == 4);
  CHECK_FALSE(verify_cut(ag4.graph(), FaultSet{}, 2).accepted);
  CHECK(verify_cut(ag4.graph(), FaultSet{}, 2).report.count() == 1);
  const std::vector<std::string> cycle{"1234", "2143", "3412", "4321"};
  const auto r = verify_cut(ag4.graph(), FaultSet::from_labels(ag4, cycle), 3);
  CHECK_FALSE(r.accepted);
  CHECK(r.report.count() == 2);
}

TEST_CASE("hyper-connectivity scan and census of AG4") {
  const auto ag4 = build_ag(4);
  const auto scan = hyper_connectivity_scan(ag4.graph());
  CHECK(scan.complete);
  CHECK(scan.connectivity == 4);
  CHECK(scan.scanned == 495);
  CHECK_FALSE(scan.hyper_connected);
  CHECK(scan.counterexample_count > 0);
  bool found = false;
  for (const auto& c : scan.counterexamples) {
    CHECK(c.count() == 2);
    if (ag4.labels_of(c.fault) == std::vector<std::string>{"1234", "2143", "3412", "4321"}) {
      found = true;
      CHECK(c.shapes[0].kind == ShapeKind::FourCycle);
    }
  }
  CHECK(found);

  // Size-8 cuts with four components: the rest is an independent 4-set whose
  // neighborhood is the cut.
  const auto census = census_cuts(ag4.graph(), 8, 4);
  CHECK(census.complete);
  CHECK(census.scanned == 495);
  CHECK(census.cuts.size() == 9);
  for (const auto& c : census.cuts) {
    VertexList rest;
    for (const auto& comp : c.components) rest.insert(rest.end(), comp.begin(), comp.end());
    rest = make_vertex_list(rest);
    CHECK(rest.size() == 4);
    CHECK(is_independent(ag4.graph(), rest));
    CHECK(neighborhood(ag4.graph(), rest) == c.fault);
  }

  ScanOptions tiny;
  tiny.budget = 10;
  CHECK_FALSE(hyper_connectivity_scan(ag4.graph(), tiny).complete);
}
