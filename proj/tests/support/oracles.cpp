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

#include "support/oracles.hpp"

#include <algorithm>
#include <deque>

namespace lcaspan::oracle {

Plain plain(const Graph& g) {
  Plain p;
  for (VertexId v : g.vertices()) {
    p.labels.push_back(v.label);
    p.adj[v.label];
  }
  for (const IndexEdge& e : g.edges()) {
    const std::uint64_t a = g.label(e.u).label;
    const std::uint64_t b = g.label(e.v).label;
    p.adj[a].push_back(b);
    p.adj[b].push_back(a);
  }
  std::sort(p.labels.begin(), p.labels.end());
  for (auto& [v, list] : p.adj) std::sort(list.begin(), list.end());
  return p;
}

std::map<std::uint64_t, unsigned> distances(const Plain& g, std::uint64_t source) {
  std::map<std::uint64_t, unsigned> dist{{source, 0}};
  std::deque<std::uint64_t> queue{source};
  while (!queue.empty()) {
    std::uint64_t x = queue.front();
    queue.pop_front();
    for (std::uint64_t w : g.adj.at(x)) {
      if (dist.emplace(w, dist[x] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

std::vector<std::vector<unsigned>> all_pairs(const Graph& g, const std::vector<IndexEdge>& h) {
  const std::size_t n = g.n();
  std::vector<std::vector<unsigned>> d(n, std::vector<unsigned>(n, kFar));
  for (std::size_t i = 0; i < n; ++i) d[i][i] = 0;
  for (const IndexEdge& e : h) d[e.u][e.v] = d[e.v][e.u] = 1;
  for (std::size_t via = 0; via < n; ++via) {
    for (std::size_t i = 0; i < n; ++i) {
      if (d[i][via] == kFar) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (d[via][j] == kFar) continue;
        d[i][j] = std::min(d[i][j], d[i][via] + d[via][j]);
      }
    }
  }
  return d;
}

std::vector<std::uint64_t> lexicographic_order(const Plain& g, std::uint64_t v, unsigned radius) {
  const auto from_v = distances(g, v);
  std::vector<std::pair<std::vector<std::uint64_t>, std::uint64_t>> keyed;
  for (const auto& [u, d] : from_v) {
    if (d > radius) continue;
    // Walk from v, each time taking the smallest neighbor one step closer to u.
    const auto to_u = distances(g, u);
    std::vector<std::uint64_t> path{v};
    std::uint64_t at = v;
    while (at != u) {
      for (std::uint64_t w : g.adj.at(at)) {
        if (to_u.at(w) + 1 == to_u.at(at)) {
          at = w;
          break;
        }
      }
      path.push_back(at);
    }
    // Shorter paths first, then lexicographic.
    path.insert(path.begin(), path.size());
    keyed.emplace_back(std::move(path), u);
  }
  std::sort(keyed.begin(), keyed.end());
  std::vector<std::uint64_t> out;
  for (auto& [key, u] : keyed) out.push_back(u);
  return out;
}

std::map<std::uint64_t, unsigned> center_distance(const Plain& g,
                                                  const std::function<bool(std::uint64_t)>& is_center) {
  std::map<std::uint64_t, unsigned> dist;
  std::deque<std::uint64_t> queue;
  for (std::uint64_t v : g.labels) {
    if (is_center(v)) {
      dist[v] = 0;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    std::uint64_t x = queue.front();
    queue.pop_front();
    for (std::uint64_t w : g.adj.at(x)) {
      if (dist.emplace(w, dist[x] + 1).second) queue.push_back(w);
    }
  }
  return dist;
}

std::set<std::uint64_t> sparse_vertices(const Plain& g, unsigned k,
                                        const std::function<bool(std::uint64_t)>& is_center) {
  const auto dist = center_distance(g, is_center);
  std::set<std::uint64_t> out;
  for (std::uint64_t v : g.labels) {
    auto it = dist.find(v);
    if (it == dist.end() || it->second > k) out.insert(v);
  }
  return out;
}

std::map<std::uint64_t, std::uint64_t> voronoi_parents(
    const Plain& g, unsigned radius, const std::function<bool(std::uint64_t)>& is_center) {
  const auto dist = center_distance(g, is_center);
  std::map<std::uint64_t, std::uint64_t> parent;
  for (const auto& [v, d] : dist) {
    if (d > radius) continue;
    if (d == 0) {
      parent[v] = v;
      continue;
    }
    for (std::uint64_t w : g.adj.at(v)) {
      auto it = dist.find(w);
      if (it != dist.end() && it->second + 1 == d) {
        parent[v] = w;
        break;
      }
    }
  }
  return parent;
}

std::set<std::pair<std::uint64_t, std::uint64_t>> global_clustering(
    const std::vector<std::uint64_t>& vertices,
    const std::set<std::pair<std::uint64_t, std::uint64_t>>& edges, unsigned k,
    const std::vector<CoinFlipper>& phase_coins) {
  constexpr std::uint64_t kOut = ~std::uint64_t{0};
  std::map<std::uint64_t, std::uint64_t> cluster;
  for (std::uint64_t v : vertices) cluster[v] = v;
  // Unsettled edges, stored in both directions.
  std::map<std::uint64_t, std::set<std::uint64_t>> open;
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    open[a].insert(b);
    open[b].insert(a);
  }
  auto drop = [&](std::uint64_t a, std::uint64_t b) {
    open[a].erase(b);
    open[b].erase(a);
  };
  std::set<std::pair<std::uint64_t, std::uint64_t>> chosen;

  for (unsigned phase = 1; phase < k; ++phase) {
    const CoinFlipper& coin = phase_coins[phase - 1];
    auto next = cluster;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> to_drop;
    for (std::uint64_t v : vertices) {
      if (cluster[v] == kOut || coin(VertexId{cluster[v]})) continue;
      std::map<std::uint64_t, std::vector<std::uint64_t>> by_cluster;
      for (std::uint64_t x : open[v]) by_cluster[cluster[x]].push_back(x);
      std::uint64_t target = kOut;
      for (const auto& [c, xs] : by_cluster) {
        if (coin(VertexId{c})) {
          target = c;
          break;
        }
      }
      if (target != kOut) {
        const auto& xs = by_cluster[target];
        chosen.insert({v, *std::min_element(xs.begin(), xs.end())});
        for (std::uint64_t x : xs) to_drop.push_back({v, x});
        next[v] = target;
      } else {
        for (const auto& [c, xs] : by_cluster) {
          chosen.insert({v, *std::min_element(xs.begin(), xs.end())});
          for (std::uint64_t x : xs) to_drop.push_back({v, x});
        }
        next[v] = kOut;
      }
    }
    for (const auto& [a, b] : to_drop) drop(a, b);
    cluster = std::move(next);
    // Edges inside one cluster are settled by the cluster tree.
    for (std::uint64_t v : vertices) {
      std::vector<std::uint64_t> same;
      for (std::uint64_t x : open[v]) {
        if (cluster[v] != kOut && cluster[x] == cluster[v]) same.push_back(x);
      }
      for (std::uint64_t x : same) drop(v, x);
    }
  }
  for (std::uint64_t v : vertices) {
    if (cluster[v] == kOut) continue;
    std::map<std::uint64_t, std::uint64_t> first;
    for (std::uint64_t x : open[v]) {
      if (cluster[x] == kOut) continue;
      auto [it, fresh] = first.emplace(cluster[x], x);
      if (!fresh) it->second = std::min(it->second, x);
    }
    for (const auto& [c, x] : first) chosen.insert({v, x});
  }
  return chosen;
}

}  // namespace lcaspan::oracle
