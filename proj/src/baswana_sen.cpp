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

#include "lcaspan/baswana_sen.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace lcaspan {

long LocalGraph::index_of(VertexId v) const {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v,
                             [](VertexId a, VertexId b) { return a.label < b.label; });
  if (it == vertices.end() || it->label != v.label) return -1;
  return it - vertices.begin();
}

LocalGraph make_local_graph(std::vector<VertexId> vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& edges) {
  LocalGraph g;
  std::sort(vertices.begin(), vertices.end(),
            [](VertexId a, VertexId b) { return a.label < b.label; });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  g.vertices = std::move(vertices);
  g.adj.assign(g.vertices.size(), {});
  for (const auto& [a, b] : edges) {
    long ia = g.index_of(a);
    long ib = g.index_of(b);
    if (ia < 0 || ib < 0) throw std::invalid_argument("make_local_graph: endpoint not listed");
    if (ia == ib) continue;
    g.adj[ia].push_back(static_cast<std::uint32_t>(ib));
    g.adj[ib].push_back(static_cast<std::uint32_t>(ia));
  }
  for (auto& list : g.adj) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return g;
}

BaswanaSen::BaswanaSen(unsigned k, const std::vector<CoinFlipper>* phase_coins)
    : k_(k), coins_(phase_coins) {
  if (k_ < 1) throw std::invalid_argument("BaswanaSen: k must be >= 1");
  if (k_ > 1 && (!coins_ || coins_->size() + 1 < k_)) {
    throw std::invalid_argument("BaswanaSen: need k-1 phase coins");
  }
}

BaswanaSen::Run BaswanaSen::run(const LocalGraph& g) const {
  const std::size_t n = g.vertices.size();
  Run out;
  out.selected.assign(n, {});
  std::vector<std::uint64_t> cluster(n);
  for (std::size_t i = 0; i < n; ++i) cluster[i] = g.vertices[i].label;
  out.cluster.push_back(cluster);

  auto live = [&](std::size_t a, std::size_t b) {
    return cluster[a] != kNone && cluster[b] != kNone && cluster[a] != cluster[b];
  };
  // Edges not yet discarded. An edge that once joined two members of one
  // cluster stays discarded even if its endpoints later part ways.
  std::vector<std::vector<std::uint32_t>> open = g.adj;
  auto prune = [&] {
    for (std::size_t v = 0; v < n; ++v) {
      auto& list = open[v];
      list.erase(std::remove_if(list.begin(), list.end(), [&](std::uint32_t x) { return !live(v, x); }),
                 list.end());
    }
  };
  // Adjacent clusters of v over open edges, each with its minimum-ID neighbor.
  // Indices are label-sorted, so the first hit per cluster is the minimum.
  auto adjacent_clusters = [&](std::size_t v) {
    std::map<std::uint64_t, std::uint32_t> first;
    for (std::uint32_t x : open[v]) first.emplace(cluster[x], x);
    return first;
  };

  for (unsigned phase = 1; phase < k_; ++phase) {
    const CoinFlipper& coin = (*coins_)[phase - 1];
    std::vector<std::uint64_t> next = cluster;
    for (std::size_t v = 0; v < n; ++v) {
      if (cluster[v] == kNone || coin(VertexId{cluster[v]})) continue;
      auto adjacent = adjacent_clusters(v);
      bool joined = false;
      for (const auto& [center, x] : adjacent) {  // ascending center ID
        if (coin(VertexId{center})) {
          out.selected[v].push_back(x);
          next[v] = center;
          joined = true;
          break;
        }
      }
      if (!joined) {
        for (const auto& entry : adjacent) out.selected[v].push_back(entry.second);
        next[v] = kNone;
      }
    }
    cluster = std::move(next);
    out.cluster.push_back(cluster);
    prune();
  }

  for (std::size_t v = 0; v < n; ++v) {
    if (cluster[v] == kNone) continue;
    for (const auto& entry : adjacent_clusters(v)) out.selected[v].push_back(entry.second);
  }
  for (auto& list : out.selected) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return out;
}

bool BaswanaSen::keeps(const LocalGraph& g, const Run& run, VertexId u, VertexId v) {
  long iu = g.index_of(u);
  long iv = g.index_of(v);
  if (iu < 0 || iv < 0) return false;
  auto has = [&](long a, long b) {
    const auto& s = run.selected[a];
    return std::binary_search(s.begin(), s.end(), static_cast<std::uint32_t>(b));
  };
  return has(iu, iv) || has(iv, iu);
}

}  // namespace lcaspan
