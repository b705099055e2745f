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

#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "lcaspan/graph.hpp"
#include "lcaspan/lca.hpp"
#include "lcaspan/probe_oracle.hpp"

namespace lcaspan {

inline constexpr unsigned kInfiniteDistance = std::numeric_limits<unsigned>::max();

struct MaterializeOptions {
  std::optional<std::uint64_t> budget;  // per-query probe cap
  BudgetPolicy policy = BudgetPolicy::kThrow;
  // Query order as a permutation of g.edges(); identity when empty.
  std::vector<std::size_t> order;
  // Query (v, u) instead of (u, v) for edges whose flag is set.
  std::vector<char> flip;
  // Fault injection: drop this fraction of YES answers, chosen by edge hash.
  double drop_fraction = 0.0;
  std::uint64_t fault_seed = 0;
};

// kept[i] and probes[i] refer to g.edges()[i].
struct MaterializedSpanner {
  const Graph* base = nullptr;
  std::vector<IndexEdge> edges;
  std::vector<char> kept;
  std::vector<ProbeTally> probes;
  std::uint64_t failure_events = 0;
  std::uint64_t budget_exceeded = 0;  // queries that crossed the cap (bench mode)
  std::uint64_t sealed_breaches = 0;  // queries that read the graph outside the oracle

  std::size_t edge_count() const;
  std::vector<IndexEdge> kept_edges() const;
};

// Queries every edge once, each in a fresh probe session. The graph's access
// counter is compared before and after every query, so any read that
// bypasses the oracle shows up in sealed_breaches.
MaterializedSpanner materialize(const SpannerLca& lca, const Graph& g,
                                const MaterializeOptions& options = {});

struct StretchViolation {
  VertexIndex u;
  VertexIndex v;
  unsigned distance;  // kInfiniteDistance if disconnected in H
};

struct StretchResult {
  unsigned max_stretch = 0;  // over all edges of g; kInfiniteDistance if any is cut
  std::vector<StretchViolation> violations;
};

// Distance in H between the endpoints of every edge of g. Checking edges is
// enough: a path in g maps edge by edge onto paths in H at most t times
// longer.
StretchResult stretch_check(const Graph& g, const std::vector<IndexEdge>& h, unsigned bound);

// True iff H has exactly the connected components of g.
bool same_components(const Graph& g, const std::vector<IndexEdge>& h);

struct ConsistencyResult {
  bool consistent = true;
  unsigned runs = 0;
  std::size_t disagreeing_edges = 0;
  std::uint64_t sealed_breaches = 0;  // summed over every run
};

using LcaFactory = std::function<std::unique_ptr<SpannerLca>(std::uint64_t seed)>;

// `instances` independently built LCAs with the same seed, each run over
// `orders` shuffled query orders with random orientations; every run must
// produce the same spanner as the first.
ConsistencyResult consistency_check(const LcaFactory& factory, const Graph& g, std::uint64_t seed,
                                    unsigned instances, unsigned orders,
                                    std::uint64_t shuffle_seed = 1);

struct FitRun {
  double n;
  double max_degree;
  double observed;
};

// C = max over runs of observed / shape(n, max_degree).
double fit_constant(const std::vector<FitRun>& runs,
                    const std::function<double(double n, double max_degree)>& shape);

struct VerificationReport {
  std::string algo;
  std::size_t n = 0;
  std::size_t m = 0;
  unsigned k_or_r = 0;
  std::uint64_t seed = 0;
  std::size_t edge_count = 0;
  unsigned max_stretch = 0;
  std::size_t stretch_violations = 0;
  std::uint64_t max_probes = 0;
  double mean_probes = 0.0;
  std::uint64_t failure_events = 0;
  std::uint64_t budget_exceeded = 0;
  std::uint64_t sealed_breaches = 0;
  bool components_preserved = true;
  NamedConstants constants;
};

VerificationReport summarize(const SpannerLca& lca, const Graph& g, std::uint64_t seed,
                             const MaterializedSpanner& h, const StretchResult& stretch);

nlohmann::ordered_json to_json(const VerificationReport& report);

}  // namespace lcaspan
