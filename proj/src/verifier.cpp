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

#include "lcaspan/verifier.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <random>
#include <stdexcept>

#include "lcaspan/hashing.hpp"

namespace lcaspan {
namespace {

bool dropped_by_fault(VertexId a, VertexId b, const MaterializeOptions& options) {
  if (options.drop_fraction <= 0.0) return false;
  const std::uint64_t lo = std::min(a.label, b.label), hi = std::max(a.label, b.label);
  const std::uint64_t h = splitmix64(options.fault_seed ^ splitmix64(lo * 0x100000001B3ULL + hi));
  return static_cast<double>(h >> 11) * 0x1.0p-53 < options.drop_fraction;
}

std::vector<std::vector<VertexIndex>> adjacency_of(std::size_t n, const std::vector<IndexEdge>& h) {
  std::vector<std::vector<VertexIndex>> adj(n);
  for (const auto& e : h) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  return adj;
}

// Exact BFS distances from one source to a set of targets in H.
class DistanceFinder {
 public:
  DistanceFinder(std::size_t n, const std::vector<IndexEdge>& h) : n_(n), dist_(n, kInfiniteDistance), wanted_(n, 0) {
    words_ = (n + 63) / 64;
    // Dense H: expand whole frontiers with row bitsets.
    use_bitsets_ = n <= 20000 && 2 * h.size() > n * words_;
    if (use_bitsets_) {
      rows_.assign(n * words_, 0);
      for (const auto& e : h) {
        rows_[e.u * words_ + (e.v >> 6)] |= 1ULL << (e.v & 63);
        rows_[e.v * words_ + (e.u >> 6)] |= 1ULL << (e.u & 63);
      }
    } else {
      adj_ = adjacency_of(n, h);
    }
  }

  // Fills dist_ for at least every target; returns the distances in order.
  std::vector<unsigned> distances(VertexIndex source, const std::vector<VertexIndex>& targets) {
    for (VertexIndex t : touched_) dist_[t] = kInfiniteDistance;
    touched_.clear();
    std::size_t pending = targets.size();
    auto settle = [&](VertexIndex x, unsigned d) {
      dist_[x] = d;
      touched_.push_back(x);
    };
    settle(source, 0);
    for (VertexIndex t : targets) wanted_[t] = 1;
    if (wanted_[source]) --pending;

    std::vector<VertexIndex> frontier{source};
    unsigned level = 0;
    if (use_bitsets_) {
      std::vector<std::uint64_t> reached(words_, 0), next(words_);
      reached[source >> 6] |= 1ULL << (source & 63);
      while (!frontier.empty() && pending > 0) {
        ++level;
        std::fill(next.begin(), next.end(), 0);
        for (VertexIndex x : frontier) {
          const std::uint64_t* row = &rows_[x * words_];
          for (std::size_t w = 0; w < words_; ++w) next[w] |= row[w];
        }
        frontier.clear();
        for (std::size_t w = 0; w < words_; ++w) {
          std::uint64_t fresh = next[w] & ~reached[w];
          reached[w] |= fresh;
          while (fresh) {
            VertexIndex x = static_cast<VertexIndex>(w * 64 + __builtin_ctzll(fresh));
            fresh &= fresh - 1;
            settle(x, level);
            if (wanted_[x]) --pending;
            frontier.push_back(x);
          }
        }
      }
    } else {
      std::deque<VertexIndex> queue{source};
      while (!queue.empty() && pending > 0) {
        VertexIndex x = queue.front();
        queue.pop_front();
        for (VertexIndex y : adj_[x]) {
          if (dist_[y] != kInfiniteDistance) continue;
          settle(y, dist_[x] + 1);
          if (wanted_[y]) --pending;
          queue.push_back(y);
        }
      }
    }
    std::vector<unsigned> out;
    out.reserve(targets.size());
    for (VertexIndex t : targets) {
      out.push_back(dist_[t]);
      wanted_[t] = 0;
    }
    return out;
  }

 private:
  std::size_t n_;
  std::size_t words_ = 0;
  bool use_bitsets_ = false;
  std::vector<std::uint64_t> rows_;
  std::vector<std::vector<VertexIndex>> adj_;
  std::vector<unsigned> dist_;
  std::vector<char> wanted_;
  std::vector<VertexIndex> touched_;
};

struct DisjointSets {
  std::vector<VertexIndex> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  VertexIndex find(VertexIndex x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(VertexIndex a, VertexIndex b) { parent[find(a)] = find(b); }
};

}  // namespace

std::size_t MaterializedSpanner::edge_count() const {
  return static_cast<std::size_t>(std::count(kept.begin(), kept.end(), 1));
}

std::vector<IndexEdge> MaterializedSpanner::kept_edges() const {
  std::vector<IndexEdge> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (kept[i]) out.push_back(edges[i]);
  return out;
}

MaterializedSpanner materialize(const SpannerLca& lca, const Graph& g,
                                const MaterializeOptions& options) {
  MaterializedSpanner h;
  h.base = &g;
  h.edges = g.edges();
  const std::vector<VertexId> labels = g.vertices();
  const std::size_t m = h.edges.size();
  h.kept.assign(m, 0);
  h.probes.assign(m, {});

  std::vector<std::size_t> order = options.order;
  if (order.empty()) {
    order.resize(m);
    std::iota(order.begin(), order.end(), 0);
  }
  if (order.size() != m) throw std::invalid_argument("materialize: order is not a permutation");

  const ProbeOracle base(g);
  for (std::size_t idx : order) {
    const IndexEdge& e = h.edges.at(idx);
    VertexId a = labels[e.u], b = labels[e.v];
    if (!options.flip.empty() && options.flip[idx]) std::swap(a, b);
    ProbeOracle session = options.budget ? base.with_budget(*options.budget, options.policy)
                                         : base.fresh();
    const std::uint64_t before = g.public_accesses();
    Answer ans = lca.decide(session, a, b);
    if (g.public_accesses() != before) ++h.sealed_breaches;
    if (ans.keep && dropped_by_fault(a, b, options)) ans.keep = false;
    h.kept[idx] = ans.keep ? 1 : 0;
    h.probes[idx] = session.tally();
    h.failure_events += ans.failure_events;
    if (session.budget_exceeded()) ++h.budget_exceeded;
  }
  return h;
}

StretchResult stretch_check(const Graph& g, const std::vector<IndexEdge>& h, unsigned bound) {
  StretchResult result;
  const std::size_t n = g.n();
  if (n == 0) return result;
  // Targets per source: neighbors with a larger index.
  std::vector<std::vector<VertexIndex>> targets(n);
  for (const auto& e : g.edges()) targets[e.u].push_back(e.v);

  DistanceFinder finder(n, h);
  for (VertexIndex s = 0; s < n; ++s) {
    if (targets[s].empty()) continue;
    auto d = finder.distances(s, targets[s]);
    for (std::size_t i = 0; i < d.size(); ++i) {
      result.max_stretch = std::max(result.max_stretch, d[i]);
      if (d[i] > bound) result.violations.push_back({s, targets[s][i], d[i]});
    }
  }
  return result;
}

bool same_components(const Graph& g, const std::vector<IndexEdge>& h) {
  const std::size_t n = g.n();
  DisjointSets in_g(n), in_h(n);
  for (const auto& e : g.edges()) in_g.unite(e.u, e.v);
  for (const auto& e : h) in_h.unite(e.u, e.v);
  // Same partition iff the map root_g -> root_h is a bijection.
  std::vector<std::int64_t> g_to_h(n, -1), h_to_g(n, -1);
  for (VertexIndex x = 0; x < n; ++x) {
    VertexIndex a = in_g.find(x), b = in_h.find(x);
    if (g_to_h[a] == -1) g_to_h[a] = b;
    if (h_to_g[b] == -1) h_to_g[b] = a;
    if (g_to_h[a] != b || h_to_g[b] != a) return false;
  }
  return true;
}

ConsistencyResult consistency_check(const LcaFactory& factory, const Graph& g, std::uint64_t seed,
                                    unsigned instances, unsigned orders,
                                    std::uint64_t shuffle_seed) {
  ConsistencyResult result;
  auto reference_lca = factory(seed);
  const MaterializedSpanner reference = materialize(*reference_lca, g);
  const std::size_t m = reference.edges.size();
  result.sealed_breaches = reference.sealed_breaches;
  std::mt19937_64 rng(shuffle_seed);
  std::vector<char> differs(m, 0);
  for (unsigned i = 0; i < instances; ++i) {
    auto lca = factory(seed);
    for (unsigned o = 0; o < orders; ++o) {
      MaterializeOptions opts;
      opts.order.resize(m);
      std::iota(opts.order.begin(), opts.order.end(), 0);
      std::shuffle(opts.order.begin(), opts.order.end(), rng);
      opts.flip.resize(m);
      std::bernoulli_distribution coin(0.5);
      for (auto& f : opts.flip) f = coin(rng) ? 1 : 0;
      MaterializedSpanner run = materialize(*lca, g, opts);
      ++result.runs;
      result.sealed_breaches += run.sealed_breaches;
      for (std::size_t e = 0; e < m; ++e)
        if (run.kept[e] != reference.kept[e]) differs[e] = 1;
    }
  }
  result.disagreeing_edges = static_cast<std::size_t>(std::count(differs.begin(), differs.end(), 1));
  result.consistent = result.disagreeing_edges == 0;
  return result;
}

double fit_constant(const std::vector<FitRun>& runs,
                    const std::function<double(double, double)>& shape) {
  if (runs.empty()) throw std::invalid_argument("fit_constant: no runs");
  double c = 0.0;
  for (const auto& r : runs) c = std::max(c, r.observed / shape(r.n, r.max_degree));
  return c;
}

VerificationReport summarize(const SpannerLca& lca, const Graph& g, std::uint64_t seed,
                             const MaterializedSpanner& h, const StretchResult& stretch) {
  VerificationReport r;
  r.algo = lca.name();
  r.n = g.n();
  r.m = g.m();
  r.k_or_r = lca.param();
  r.seed = seed;
  r.edge_count = h.edge_count();
  r.max_stretch = stretch.max_stretch;
  r.stretch_violations = stretch.violations.size();
  std::uint64_t total = 0;
  for (const auto& t : h.probes) {
    r.max_probes = std::max(r.max_probes, t.total());
    total += t.total();
  }
  r.mean_probes = h.probes.empty() ? 0.0 : static_cast<double>(total) / h.probes.size();
  r.failure_events = h.failure_events;
  r.budget_exceeded = h.budget_exceeded;
  r.sealed_breaches = h.sealed_breaches;
  r.components_preserved = same_components(g, h.kept_edges());
  r.constants = lca.constants();
  return r;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["algo"] = r.algo;
  j["n"] = r.n;
  j["m"] = r.m;
  j["k_or_r"] = r.k_or_r;
  j["seed"] = r.seed;
  j["edge_count"] = r.edge_count;
  if (r.max_stretch == kInfiniteDistance) {
    j["max_stretch"] = "inf";
  } else {
    j["max_stretch"] = r.max_stretch;
  }
  j["max_probes"] = r.max_probes;
  j["mean_probes"] = r.mean_probes;
  j["failure_events"] = r.failure_events;
  j["stretch_violations"] = r.stretch_violations;
  j["budget_exceeded"] = r.budget_exceeded;
  j["sealed_breaches"] = r.sealed_breaches;
  j["components_preserved"] = r.components_preserved;
  nlohmann::ordered_json c = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.constants) c[k] = v;
  j["constants"] = c;
  return j;
}

}  // namespace lcaspan
