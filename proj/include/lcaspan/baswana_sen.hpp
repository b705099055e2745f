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
#include <vector>

#include "lcaspan/graph.hpp"
#include "lcaspan/hashing.hpp"

namespace lcaspan {

// A subgraph known explicitly, e.g. the part of G gathered around a query.
// Vertices are sorted by label; each adjacency list holds indices into
// `vertices`, also sorted by label.
struct LocalGraph {
  std::vector<VertexId> vertices;
  std::vector<std::vector<std::uint32_t>> adj;

  // Index of v, or -1.
  long index_of(VertexId v) const;
};

// Builds a LocalGraph from an undirected edge list; duplicates are merged.
LocalGraph make_local_graph(std::vector<VertexId> vertices,
                            const std::vector<std::pair<VertexId, VertexId>>& edges);

// k-phase cluster-sampling spanner on an unweighted graph.
//
// R_0 puts every vertex in its own cluster. In phase i < k each cluster of
// R_{i-1} survives iff the phase coin of its center is heads. A vertex v of a
// dead cluster looks at its remaining edges (edges to clustered vertices of other
// clusters):
//   - if some neighbor sits in a surviving cluster, v joins the surviving
//     cluster of minimum center ID through its minimum-ID neighbor there;
//   - otherwise v selects one edge (to the minimum-ID neighbor) into every
//     adjacent cluster and becomes unclustered.
// An edge is discarded at the end of a phase once an endpoint is unclustered
// or both endpoints share a cluster, and never comes back. In the final phase
// every clustered vertex selects one edge into every adjacent cluster. The
// selected edges form a (2k-1)-spanner.
//
// `phase_coins[i]` is the coin of phase i+1 and must hold k-1 entries.
class BaswanaSen {
 public:
  BaswanaSen(unsigned k, const std::vector<CoinFlipper>* phase_coins);

  struct Run {
    // selected[i]: neighbors (indices) that vertex i selected, sorted.
    std::vector<std::vector<std::uint32_t>> selected;
    // cluster[phase][i]: center label of i after `phase` phases, or kNone.
    std::vector<std::vector<std::uint64_t>> cluster;
  };
  static constexpr std::uint64_t kNone = ~std::uint64_t{0};

  Run run(const LocalGraph& g) const;

  // True iff u or v selected the edge {u, v} in `run`.
  static bool keeps(const LocalGraph& g, const Run& run, VertexId u, VertexId v);

  unsigned k() const { return k_; }

 private:
  unsigned k_;
  const std::vector<CoinFlipper>* coins_;
};

}  // namespace lcaspan
