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

#include "lcaspan/probe_oracle.hpp"

#include <string>

namespace lcaspan {

ProbeBudgetExceeded::ProbeBudgetExceeded(std::uint64_t limit, const ProbeTally& tally)
    : std::runtime_error("probe budget of " + std::to_string(limit) + " exceeded"),
      limit_(limit),
      tally_(tally) {}

UnknownVertex::UnknownVertex(VertexId v)
    : std::out_of_range("unknown vertex " + std::to_string(v.label)) {}

ProbeOracle ProbeOracle::with_budget(std::uint64_t limit, BudgetPolicy policy) const {
  ProbeOracle o(*graph_);
  o.limit_ = limit;
  o.policy_ = policy;
  return o;
}

VertexIndex ProbeOracle::resolve(VertexId v) const {
  VertexIndex i;
  if (!graph_->raw_lookup(v, i)) throw UnknownVertex(v);
  return i;
}

void ProbeOracle::charge() {
  if (limit_ && tally_.total() > *limit_) {
    exceeded_ = true;
    if (policy_ == BudgetPolicy::kThrow) throw ProbeBudgetExceeded(*limit_, tally_);
  }
}

std::optional<VertexId> ProbeOracle::neighbor(VertexId v, std::size_t i) {
  VertexIndex a = resolve(v);
  ++tally_.neighbor_count;
  charge();
  const auto& list = graph_->adj_[a];
  if (i == 0 || i > list.size()) return std::nullopt;
  return graph_->labels_[list[i - 1].neighbor];
}

std::size_t ProbeOracle::degree(VertexId v) {
  VertexIndex a = resolve(v);
  ++tally_.degree_count;
  charge();
  return graph_->adj_[a].size();
}

std::optional<std::size_t> ProbeOracle::adjacency(VertexId u, VertexId v) {
  VertexIndex a = resolve(u);
  VertexIndex b = resolve(v);
  ++tally_.adjacency_count;
  charge();
  long pos = graph_->raw_position(a, b);
  if (pos < 0) return std::nullopt;
  return static_cast<std::size_t>(pos) + 1;
}

}  // namespace lcaspan
