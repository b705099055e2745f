// Copyright 2026 The lcaspan Authors
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

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "lcaspan/generators.hpp"
#include "lcaspan/spanner5.hpp"
#include "lcaspan/verifier.hpp"

using namespace lcaspan;

namespace {

// G(n, p) plus `hubs` vertices joined to everyone, so some degrees exceed
// SuperDeg.
Graph with_hubs(std::size_t n, double p, std::size_t hubs, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::vector<LabelEdge> edges;
  for (std::uint64_t a = 0; a < n; ++a) {
    for (std::uint64_t b = a + 1; b < n; ++b) {
      if (a < hubs || coin(rng)) edges.push_back({{a}, {b}});
    }
  }
  std::shuffle(edges.begin(), edges.end(), rng);
  return Graph::build_from_edge_list(n, edges);
}

}  // namespace

TEST_CASE("spanner5 degree ladder") {
  auto p3 = Spanner5Params::derive(4096, {});
  CHECK(p3.low_deg == 16);
  CHECK(p3.med_deg == 16);
  CHECK(p3.super_deg == 1024);
  CHECK(p3.rep_count == 12);

  Spanner5Config c4;
  c4.r = 4;
  auto p4 = Spanner5Params::derive(4096, c4);
  CHECK(p4.low_deg == 8);
  CHECK(p4.med_deg == 23);     // 2^4.5 = 22.6
  CHECK(p4.super_deg == 1449); // 2^10.5 = 1448.2
  CHECK(p4.low_deg <= p4.med_deg);
  CHECK(p4.med_deg <= p4.super_deg);
}

TEST_CASE("vertex classes and cell centers match a direct scan") {
  Graph g = with_hubs(300, 0.2, 4, 5);
  Spanner5Lca lca(g.n(), g.id_bits(), 7);
  const auto& P = lca.params();
  CoinFlipper coin(7, "spanner5/S", P.p_cell, g.id_bits(), independence_order(g.n()));
  auto center = [&](VertexIndex i) { return coin(g.label(i)) && g.degree(i) <= P.super_deg; };
  ProbeOracle o(g);
  std::map<VertexClass, int> seen;
  for (VertexIndex i = 0; i < g.n(); ++i) {
    const std::size_t d = g.degree(i);
    VertexClass want;
    if (d < P.med_deg) {
      want = VertexClass::kLow;
    } else if (d > P.super_deg) {
      want = VertexClass::kSuper;
    } else {
      std::size_t light = 0;
      for (std::size_t j = 0; j < P.med_deg; ++j) light += g.degree(g.neighbors(i)[j].neighbor) <= P.super_deg;
      want = 2 * light >= P.med_deg ? VertexClass::kDeserted : VertexClass::kCrowded;
    }
    CHECK(lca.classify_vertex(o, g.label(i)) == want);
    ++seen[want];

    std::vector<VertexId> cent;
    if (d >= P.med_deg) {
      for (std::size_t j = 0; j < P.med_deg; ++j) {
        if (center(g.neighbors(i)[j].neighbor)) cent.push_back(g.label(g.neighbors(i)[j].neighbor));
      }
      if (center(i)) cent.push_back(g.label(i));
    }
    CHECK(lca.cell_centers(o, g.label(i)) == cent);
  }
  CHECK(seen[VertexClass::kSuper] == 4);
  CHECK(seen[VertexClass::kDeserted] > 0);
}

TEST_CASE("clusters match a global recomputation") {
  Graph g = with_hubs(300, 0.2, 3, 8);
  Spanner5Lca lca(g.n(), g.id_bits(), 2);
  const auto& P = lca.params();
  CoinFlipper coin(2, "spanner5/S", P.p_cell, g.id_bits(), independence_order(g.n()));
  // Built from the members' side: w joins C(s) when s sits in w's first MedDeg slots.
  std::map<std::uint64_t, std::set<std::uint64_t>> global;
  for (VertexIndex i = 0; i < g.n(); ++i) {
    if (coin(g.label(i)) && g.degree(i) <= P.super_deg) global[g.label(i).label].insert(g.label(i).label);
  }
  for (VertexIndex w = 0; w < g.n(); ++w) {
    if (g.degree(w) < P.med_deg) continue;
    for (std::size_t j = 0; j < P.med_deg; ++j) {
      auto it = global.find(g.label(g.neighbors(w)[j].neighbor).label);
      if (it != global.end()) it->second.insert(g.label(w).label);
    }
  }
  REQUIRE_FALSE(global.empty());
  ProbeOracle o(g);
  for (const auto& [s, members] : global) {
    std::vector<std::uint64_t> got;
    for (VertexId x : lca.cluster_members(o, {s})) got.push_back(x.label);
    CHECK(got == std::vector<std::uint64_t>(members.begin(), members.end()));
  }
  for (VertexIndex i = 0; i < 3; ++i) CHECK_THROWS_AS(lca.cluster_members(o, g.label(i)), std::logic_error);
}

TEST_CASE("buckets partition a cluster into MedDeg-wide slices") {
  Spanner5Lca lca(4096, 14, 1);  // MedDeg 16
  std::vector<VertexId> cluster;
  for (std::uint64_t i = 0; i < 37; ++i) cluster.push_back({3 * i});
  auto bs = lca.buckets({0}, cluster);
  REQUIRE(bs.size() == 3);
  CHECK(bs[0].members.size() == 16);
  CHECK(bs[2].members.size() == 5);
  std::vector<VertexId> joined;
  for (const auto& b : bs) {
    CHECK(b.center == VertexId{0});
    joined.insert(joined.end(), b.members.begin(), b.members.end());
  }
  CHECK(joined == cluster);
  CHECK(lca.buckets({0}, {}).empty());
}

TEST_CASE("representatives are sampled super-degree neighbors") {
  Graph g = with_hubs(300, 0.2, 6, 3);
  Spanner5Lca lca(g.n(), g.id_bits(), 4);
  ProbeOracle o(g);
  for (VertexIndex i = 10; i < 40; ++i) {
    RepresentativeSet r = lca.reps_of(o, g.label(i));
    for (VertexId y : r.reps) {
      CHECK(g.degree(g.index_of(y)) >= lca.params().super_deg);
      const long pos = g.position(i, g.index_of(y));
      CHECK(pos >= 0);
      CHECK(static_cast<std::uint64_t>(pos) < lca.params().med_deg);
    }
    CHECK(std::is_sorted(r.centers_of_reps.begin(), r.centers_of_reps.end()));
  }
}

TEST_CASE("spanner5 answers do not depend on orientation") {
  Graph g = with_hubs(200, 0.3, 3, 12);
  Spanner5Lca lca(g.n(), g.id_bits(), 6);
  ProbeOracle o(g);
  for (const IndexEdge& e : g.edges()) {
    VertexId a = g.label(e.u), b = g.label(e.v);
    CHECK(lca.query(o, a, b) == lca.query(o, b, a));
    CHECK(lca.query_cell(o, a, b).keep == lca.query_cell(o, b, a).keep);
  }
}

TEST_CASE("spanner5 stretch at most 5") {
  for (std::uint64_t seed = 1; seed <= 2; ++seed) {
    Graph g = with_hubs(300, 0.3, 3, seed);
    Spanner5Lca lca(g.n(), g.id_bits(), seed);
    auto h = materialize(lca, g);
    auto st = stretch_check(g, h.kept_edges(), 5);
    CAPTURE(seed);
    CHECK(st.violations.empty());
    CHECK(h.edge_count() < g.m());
    CHECK(h.sealed_breaches == 0);
  }
  Spanner5Config c4;
  c4.r = 4;
  Graph g = generate(GnpModel{300, 0.3}, 9);
  REQUIRE(g.min_degree() >= Spanner5Params::derive(300, c4).med_deg);
  Spanner5Lca lca(g.n(), g.id_bits(), 9, c4);
  auto h = materialize(lca, g);
  CHECK(stretch_check(g, h.kept_edges(), 5).violations.empty());
}
