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

#include "doctest.h"
#include "lcaspan/generators.hpp"
#include "lcaspan/spanner3.hpp"
#include "lcaspan/verifier.hpp"

using namespace lcaspan;

TEST_CASE("spanner3 thresholds") {
  auto p = Spanner3Params::derive(10000, {});
  CHECK(p.thr_high == 100);
  CHECK(p.thr_super == 1000);
  auto q = Spanner3Params::derive(64, {});
  CHECK(q.thr_high == 8);
  CHECK(q.thr_super == 23);  // 64^(3/4) = 22.6
  CHECK(q.p_high == doctest::Approx(6.0 / 8.0));
}

TEST_CASE("block_of slices with remainder in the last block") {
  auto b = block_of(1700, 2500, 1000);
  CHECK(b.first == 1001);
  CHECK(b.last == 2500);
  b = block_of(1, 2500, 1000);
  CHECK(b.first == 1);
  CHECK(b.last == 1000);
  b = block_of(5, 7, 10);  // fewer slots than one block
  CHECK(b.first == 1);
  CHECK(b.last == 7);
  CHECK_THROWS(block_of(0, 7, 10));
  CHECK_THROWS(block_of(8, 7, 10));
}

TEST_CASE("classify_edge matches degrees") {
  Graph g = generate(GnpModel{64, 0.3}, 7);
  Spanner3Lca lca(g.n(), g.id_bits(), 1);
  ProbeOracle o(g);
  int seen[3] = {0, 0, 0};
  for (const IndexEdge& e : g.edges()) {
    const std::size_t low = std::min(g.degree(e.u), g.degree(e.v));
    EdgeClass want = low <= 8 ? EdgeClass::kLow : low > 23 ? EdgeClass::kSuper : EdgeClass::kHigh;
    CHECK(lca.classify_edge(o, g.label(e.u), g.label(e.v)) == want);
    ++seen[static_cast<int>(want)];
  }
  CHECK(seen[static_cast<int>(EdgeClass::kHigh)] > 0);
}

TEST_CASE("center sets list heads in the first window slots") {
  Graph g = generate(GnpModel{64, 0.3}, 3);
  Spanner3Lca lca(g.n(), g.id_bits(), 5);
  CoinFlipper coin(5, "spanner3/S", lca.params().p_high, g.id_bits(), independence_order(64));
  ProbeOracle o(g);
  for (VertexIndex i = 0; i < g.n(); ++i) {
    MultiCenterSet s = lca.high_centers(o, g.label(i));
    std::vector<std::pair<std::uint64_t, std::size_t>> want, got;
    const auto& list = g.neighbors(i);
    for (std::size_t j = 0; j < std::min<std::size_t>(8, list.size()); ++j) {
      VertexId w = g.label(list[j].neighbor);
      if (coin(w)) want.push_back({w.label, j + 1});
    }
    for (const auto& c : s.centers) got.push_back({c.center.label, c.index});
    CHECK(got == want);
  }
}

TEST_CASE("is_cluster_member costs one adjacency probe") {
  Graph g = generate(GnpModel{40, 0.5}, 2);
  ProbeOracle base(g);
  for (const IndexEdge& e : g.edges()) {
    ProbeOracle o = base.fresh();
    const long pos = g.position(e.u, e.v) + 1;
    bool in = is_cluster_member(o, g.label(e.u), g.label(e.v), 5);
    CHECK(in == (pos <= 5));
    CHECK(o.tally().adjacency_count == 1);
    CHECK(o.tally().total() == 1);
  }
}

TEST_CASE("low-degree inputs keep every edge") {
  std::vector<LabelEdge> path;
  for (std::uint64_t i = 0; i + 1 < 50; ++i) path.push_back({{i}, {i + 1}});
  Graph p = Graph::build_from_edge_list(50, path);
  Spanner3Lca lca(p.n(), p.id_bits(), 9);
  auto h = materialize(lca, p);
  CHECK(h.edge_count() == p.m());

  Graph sparse = generate(BoundedModel{400, 5, 8}, 4);
  Spanner3Lca lca2(sparse.n(), sparse.id_bits(), 9);
  CHECK(materialize(lca2, sparse).edge_count() == sparse.m());
}

TEST_CASE("spanner3 answers do not depend on orientation") {
  Graph g = generate(GnpModel{120, 0.4}, 11);
  Spanner3Lca lca(g.n(), g.id_bits(), 3);
  ProbeOracle o(g);
  for (const IndexEdge& e : g.edges()) {
    CHECK(lca.query(o, g.label(e.u), g.label(e.v)) == lca.query(o, g.label(e.v), g.label(e.u)));
  }
}

TEST_CASE("spanner3 non-edges answer NO") {
  Graph g = generate(GnpModel{100, 0.3}, 1);
  Spanner3Lca lca(g.n(), g.id_bits(), 3);
  ProbeOracle o(g);
  int checked = 0;
  for (VertexIndex a = 0; a < 30; ++a) {
    for (VertexIndex b = a + 1; b < 30; ++b) {
      if (g.has_edge(a, b)) continue;
      CHECK_FALSE(lca.query(o, g.label(a), g.label(b)));
      ++checked;
    }
  }
  CHECK(checked > 0);
}

TEST_CASE("spanner3 stretch at most 3") {
  for (auto [n, p] : {std::pair{64ul, 0.3}, std::pair{200ul, 0.3}, std::pair{300ul, 0.8}}) {
    for (std::uint64_t seed = 1; seed <= 2; ++seed) {
      Graph g = generate(GnpModel{n, p}, seed);
      Spanner3Lca lca(g.n(), g.id_bits(), seed);
      auto h = materialize(lca, g);
      auto st = stretch_check(g, h.kept_edges(), 3);
      CAPTURE(n);
      CAPTURE(seed);
      CHECK(st.violations.empty());
      CHECK(st.max_stretch <= 3);
      CHECK(h.sealed_breaches == 0);
      if (n == 300) CHECK(h.edge_count() < g.m());
    }
  }
}
