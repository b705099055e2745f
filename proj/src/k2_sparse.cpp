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
#include <cmath>
#include <deque>
#include <iostream>
#include <string>

#include "k2_session.hpp"
#include "lcaspan/math.hpp"

namespace lcaspan {

namespace {

bool by_label(VertexId a, VertexId b) { return a.label < b.label; }

std::vector<CoinFlipper> make_phase_coins(std::uint64_t seed, const K2Params& p,
                                          unsigned id_bits, unsigned d) {
  std::vector<CoinFlipper> coins;
  for (unsigned i = 1; i < p.k; ++i) {
    coins.emplace_back(seed, "k2/phase" + std::to_string(i), p.p_phase, id_bits, d);
  }
  return coins;
}

}  // namespace

K2Params K2Params::derive(std::uint64_t n, const K2Config& config) {
  if (config.k < 1) throw std::invalid_argument("k2: k must be >= 1");
  K2Params p;
  p.n = n;
  p.k_requested = config.k;
  const unsigned k_max = std::max(1u, ceil_log2(std::max<std::uint64_t>(n, 2)));
  p.k = std::min(config.k, k_max);
  const double nd = static_cast<double>(std::max<std::uint64_t>(n, 2));
  const double log_n = log2_clamped(n);
  p.L = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(config.c_L * std::cbrt(nd))));
  const double L = static_cast<double>(p.L);
  p.p_center = std::min(1.0, config.c_center * log_n / L);
  p.q = std::max<std::uint64_t>(
      1, static_cast<std::uint64_t>(std::ceil(config.c_q * std::pow(nd, 1.0 / p.k) * log_n)));
  p.p_mark = std::min(1.0, config.c_mark / L);
  p.p_phase = std::min(1.0, config.c_phase * std::pow(nd, -1.0 / p.k));
  return p;
}

bool Cluster::contains(VertexId v) const {
  return std::binary_search(members.begin(), members.end(), v, by_label);
}

K2Lca::K2Lca(std::uint64_t n, unsigned id_bits, std::uint64_t seed, K2Config config)
    : config_(config),
      params_(K2Params::derive(n, config)),
      center_coin_(seed, "k2/center", params_.p_center, id_bits, independence_order(n)),
      mark_coin_(seed, "k2/mark", params_.p_mark, id_bits, independence_order(n)),
      ranks_(seed, "k2/rank", n, params_.k, id_bits, independence_order(n)),
      phase_coins_(make_phase_coins(seed, params_, id_bits, independence_order(n))),
      clustering_(params_.k, &phase_coins_) {
  if (params_.k < params_.k_requested) {
    std::cerr << "k2: k=" << params_.k_requested << " clamped to " << params_.k << "\n";
  }
}

K2Lca::~K2Lca() = default;

// ---- session: neighbor lists and the center search ----

const std::vector<VertexId>& K2Lca::Session::neighbors(VertexId v) {
  auto it = neighbors_.find(v.label);
  if (it != neighbors_.end()) return it->second;
  std::vector<VertexId> list;
  const std::size_t d = oracle.degree(v);
  list.reserve(d);
  for (std::size_t i = 1; i <= d; ++i) {
    auto w = oracle.neighbor(v, i);
    if (!w) break;
    list.push_back(*w);
  }
  return neighbors_.emplace(v.label, std::move(list)).first->second;
}

const std::vector<VertexId>& K2Lca::Session::sorted_neighbors(VertexId v) {
  auto it = sorted_.find(v.label);
  if (it != sorted_.end()) return it->second;
  std::vector<VertexId> list = neighbors(v);
  std::sort(list.begin(), list.end(), by_label);
  return sorted_.emplace(v.label, std::move(list)).first->second;
}

const BfsResult& K2Lca::Session::bfs(VertexId v) {
  auto it = bfs_.find(v.label);
  if (it != bfs_.end()) return it->second;

  const K2Params& p = lca.params_;
  BfsResult r;
  r.origin = v;
  std::unordered_set<std::uint64_t> seen{v.label};
  r.discovered.push_back(v);
  r.distance.push_back(0);
  r.parent.push_back(-1);

  auto discover = [&](VertexId w, unsigned dist, long parent) {
    seen.insert(w.label);
    r.discovered.push_back(w);
    r.distance.push_back(dist);
    r.parent.push_back(parent);
    if (lca.center_coin_(w)) r.found_center = {w, dist};
  };

  if (lca.center_coin_(v)) {
    r.found_center = {v, 0};
  } else if (r.discovered.size() < p.L) {
    std::size_t head = 0;
    bool done = false;
    while (!done) {
      if (head == r.discovered.size() || r.distance[head] >= p.k) {
        r.frontier_exhausted = true;
        break;
      }
      const long x = static_cast<long>(head++);
      for (VertexId w : sorted_neighbors(r.discovered[x])) {
        if (seen.count(w.label)) continue;
        discover(w, r.distance[x] + 1, x);
        if (r.found_center || r.discovered.size() >= p.L) {
          done = true;
          break;
        }
      }
    }
  }
  if (r.saturated(p.L)) ++failures;
  return bfs_.emplace(v.label, std::move(r)).first->second;
}

bool K2Lca::Session::sparse(VertexId v) { return !bfs(v).found_center; }

// ---- sparse side ----

Answer K2Lca::sparse_rule(Session& s, VertexId u, VertexId v) const {
  const unsigned k = params_.k;
  // Radius-k balls in G around both endpoints. Vertices strictly inside a
  // ball contribute their full neighbor lists; a vertex on the rim of both
  // balls needs only its own cluster at phase 0, so its other edges may stay
  // unknown.
  std::unordered_map<std::uint64_t, unsigned> radius;  // min distance to u or v
  std::vector<VertexId> ball;
  for (VertexId root : {u, v}) {
    std::deque<std::pair<VertexId, unsigned>> queue{{root, 0}};
    std::unordered_map<std::uint64_t, unsigned> dist{{root.label, 0}};
    while (!queue.empty()) {
      auto [x, d] = queue.front();
      queue.pop_front();
      auto [it, fresh] = radius.emplace(x.label, d);
      if (fresh) ball.push_back(x);
      else it->second = std::min(it->second, d);
      if (d >= k) continue;
      for (VertexId w : s.sorted_neighbors(x)) {
        if (dist.emplace(w.label, d + 1).second) queue.push_back({w, d + 1});
      }
    }
  }

  std::vector<std::pair<VertexId, VertexId>> edges;
  for (VertexId x : ball) {
    if (radius[x.label] >= k) continue;
    const bool x_sparse = s.sparse(x);
    for (VertexId w : s.sorted_neighbors(x)) {
      if (x_sparse || s.sparse(w)) edges.emplace_back(x, w);
    }
  }
  LocalGraph local = make_local_graph(ball, edges);
  BaswanaSen::Run run = clustering_.run(local);
  return {BaswanaSen::keeps(local, run, u, v), 0};
}

BfsResult K2Lca::bfs_explore(ProbeOracle& oracle, VertexId v) const {
  Session s(*this, oracle);
  return s.bfs(v);
}

bool K2Lca::is_sparse(ProbeOracle& oracle, VertexId v) const {
  Session s(*this, oracle);
  return s.sparse(v);
}

Answer K2Lca::query_sparse(ProbeOracle& oracle, VertexId u, VertexId v) const {
  Session s(*this, oracle);
  Answer a = sparse_rule(s, u, v);
  a.failure_events += s.failures;
  return a;
}

Answer K2Lca::decide(ProbeOracle& oracle, VertexId u, VertexId v) const {
  if (!oracle.adjacency(u, v)) return {};
  Session s(*this, oracle);
  Answer a;
  if (s.sparse(u) || s.sparse(v)) {
    a = sparse_rule(s, u, v);
  } else {
    a.keep = tree_rule(s, u, v) || cluster_rules(s, u, v);
  }
  a.failure_events += s.failures;
  return a;
}

double K2Lca::stretch_bound() const {
  return config_.c_stretch * params_.k * params_.k;
}

std::uint64_t K2Lca::seed_bits() const {
  std::uint64_t bits = center_coin_.seed_bits() + mark_coin_.seed_bits() + ranks_.seed_bits();
  for (const auto& c : phase_coins_) bits += c.seed_bits();
  return bits;
}

NamedConstants K2Lca::constants() const {
  return {{"k", static_cast<double>(params_.k)},
          {"c_L", config_.c_L},
          {"c_center", config_.c_center},
          {"c_q", config_.c_q},
          {"c_mark", config_.c_mark},
          {"c_phase", config_.c_phase},
          {"c_stretch", config_.c_stretch},
          {"L", static_cast<double>(params_.L)},
          {"q", static_cast<double>(params_.q)},
          {"p_center", center_coin_.realized_bias()},
          {"p_mark", mark_coin_.realized_bias()},
          {"p_phase", phase_coins_.empty() ? 1.0 : phase_coins_.front().realized_bias()}};
}

double K2Lca::size_shape(double n) const {
  const double l = std::log2(n);
  return std::pow(n, 1.0 + 1.0 / params_.k) * l * l * l * l;
}

double K2Lca::probe_shape(double n, double max_degree) const {
  const double d = std::max(1.0, max_degree);
  return d * d * d * d * std::cbrt(n * n);
}

}  // namespace lcaspan
