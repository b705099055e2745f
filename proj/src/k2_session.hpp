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

// Per-query memo shared by the sparse and dense halves of K2Lca. Every oracle
// call still goes through the session's ProbeOracle, so tallies count each
// distinct probe once per session.

#include <map>
#include <memory>
#include <unordered_map>
#include <unordered_set>

#include "lcaspan/k2.hpp"
#include "lcaspan/probe_oracle.hpp"

namespace lcaspan {

using EdgeKey = std::pair<std::uint64_t, std::uint64_t>;  // (ID of first, ID of second)

struct CellBoundary {
  // For each adjacent center s other than the cluster's own: the minimum-ID
  // edge (x, w) with x in the cluster and w in Vor(s).
  std::map<std::uint64_t, EdgeKey> min_edge;
};

struct K2Lca::Session {
  Session(const K2Lca& lca, ProbeOracle& oracle) : lca(lca), oracle(oracle) {}

  const K2Lca& lca;
  ProbeOracle& oracle;
  unsigned failures = 0;

  const std::vector<VertexId>& neighbors(VertexId v);         // adjacency-list order
  const std::vector<VertexId>& sorted_neighbors(VertexId v);  // by ID
  const BfsResult& bfs(VertexId v);
  bool sparse(VertexId v);
  const VoronoiAssignment& assignment(VertexId v);  // v dense
  const std::vector<VertexId>& children(VertexId v);
  const Subtree& subtree(VertexId v);
  const Cluster& cluster(VertexId v);
  const CellBoundary& boundary(const Cluster& c);

 private:
  void collect_subtree(VertexId root, std::vector<VertexId>& out);

  std::unordered_map<std::uint64_t, std::vector<VertexId>> neighbors_;
  std::unordered_map<std::uint64_t, std::vector<VertexId>> sorted_;
  std::unordered_map<std::uint64_t, BfsResult> bfs_;
  std::unordered_map<std::uint64_t, VoronoiAssignment> assignment_;
  std::unordered_map<std::uint64_t, std::vector<VertexId>> children_;
  std::unordered_map<std::uint64_t, Subtree> subtree_;
  std::unordered_map<std::uint64_t, std::shared_ptr<const Cluster>> cluster_;
  std::map<const Cluster*, CellBoundary> boundary_;
};

}  // namespace lcaspan
