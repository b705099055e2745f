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
#include <optional>
#include <stdexcept>

#include "lcaspan/graph.hpp"

namespace lcaspan {

struct ProbeTally {
  std::uint64_t neighbor_count = 0;
  std::uint64_t degree_count = 0;
  std::uint64_t adjacency_count = 0;

  std::uint64_t total() const { return neighbor_count + degree_count + adjacency_count; }
  friend bool operator==(const ProbeTally&, const ProbeTally&) = default;
};

class ProbeBudgetExceeded : public std::runtime_error {
 public:
  ProbeBudgetExceeded(std::uint64_t limit, const ProbeTally& tally);
  std::uint64_t limit() const { return limit_; }
  const ProbeTally& tally() const { return tally_; }

 private:
  std::uint64_t limit_;
  ProbeTally tally_;
};

class UnknownVertex : public std::out_of_range {
 public:
  explicit UnknownVertex(VertexId v);
};

enum class BudgetPolicy {
  kThrow,   // test mode: the probe that crosses the cap throws
  kRecord,  // bench mode: the crossing is flagged and probing continues
};

// The adjacency-list oracle. An LCA sees the graph only through neighbor,
// degree and adjacency; each call bumps the session tally by one. n and the
// ID bit width are public parameters, not graph structure.
class ProbeOracle {
 public:
  explicit ProbeOracle(const Graph& g) : graph_(&g) {}

  // A new session over the same graph with a zero tally and a probe cap.
  ProbeOracle with_budget(std::uint64_t limit, BudgetPolicy policy = BudgetPolicy::kThrow) const;
  // A new session with a zero tally and no cap.
  ProbeOracle fresh() const { return ProbeOracle(*graph_); }

  // i-th neighbor of v (1-based), or nullopt when i > deg(v).
  std::optional<VertexId> neighbor(VertexId v, std::size_t i);
  std::size_t degree(VertexId v);
  // Index of v in u's list (1-based), or nullopt when not adjacent.
  std::optional<std::size_t> adjacency(VertexId u, VertexId v);

  const ProbeTally& tally() const { return tally_; }
  bool budget_exceeded() const { return exceeded_; }
  std::optional<std::uint64_t> budget() const { return limit_; }

  std::size_t vertex_count() const { return graph_->labels_.size(); }
  unsigned id_bits() const { return graph_->id_bits_; }

 private:
  VertexIndex resolve(VertexId v) const;
  void charge();

  const Graph* graph_;
  ProbeTally tally_;
  std::optional<std::uint64_t> limit_;
  BudgetPolicy policy_ = BudgetPolicy::kThrow;
  bool exceeded_ = false;
};

}  // namespace lcaspan
