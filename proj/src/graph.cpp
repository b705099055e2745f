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

#include "lcaspan/graph.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <unordered_set>

#include "lcaspan/math.hpp"

namespace lcaspan {
namespace {

constexpr std::uint64_t kEmptyKey = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kMatrixMaxVertices = 4096;  // positions fit in 16 bits
constexpr std::uint32_t kNoIndex = std::numeric_limits<std::uint32_t>::max();

std::uint64_t mix64(std::uint64_t x) {
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t pair_key(VertexIndex a, VertexIndex b) {
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace

Graph::Graph(const Graph& other) = default;
Graph& Graph::operator=(const Graph& other) = default;

Graph::Graph(Graph&& other) noexcept
    : labels_(std::move(other.labels_)),
      adj_(std::move(other.adj_)),
      m_(other.m_),
      id_bits_(other.id_bits_),
      dense_index_(std::move(other.dense_index_)),
      sparse_index_(std::move(other.sparse_index_)),
      position_matrix_(std::move(other.position_matrix_)),
      edge_slots_(std::move(other.edge_slots_)),
      edge_mask_(other.edge_mask_),
      accesses_(other.accesses_) {}

Graph& Graph::operator=(Graph&& other) noexcept {
  labels_ = std::move(other.labels_);
  adj_ = std::move(other.adj_);
  m_ = other.m_;
  id_bits_ = other.id_bits_;
  dense_index_ = std::move(other.dense_index_);
  sparse_index_ = std::move(other.sparse_index_);
  position_matrix_ = std::move(other.position_matrix_);
  edge_slots_ = std::move(other.edge_slots_);
  edge_mask_ = other.edge_mask_;
  accesses_ = other.accesses_;
  return *this;
}

Graph Graph::build_from_edge_list(std::size_t n, const std::vector<LabelEdge>& edges) {
  std::vector<VertexId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = VertexId{i};
  return build_labeled(std::move(labels), edges);
}

Graph Graph::build_labeled(std::vector<VertexId> labels, const std::vector<LabelEdge>& edges) {
  Graph g;
  g.labels_ = std::move(labels);
  g.adj_.assign(g.labels_.size(), {});
  std::unordered_map<VertexId, VertexIndex, VertexIdHash> index;
  index.reserve(g.labels_.size() * 2);
  for (std::size_t i = 0; i < g.labels_.size(); ++i) {
    if (!index.emplace(g.labels_[i], static_cast<VertexIndex>(i)).second) {
      throw GraphError("duplicate vertex label " + std::to_string(g.labels_[i].label));
    }
  }
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(edges.size() * 2);
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a);
    auto ib = index.find(b);
    if (ia == index.end() || ib == index.end()) {
      throw GraphError("edge (" + std::to_string(a.label) + "," + std::to_string(b.label) +
                       ") names an unknown vertex");
    }
    VertexIndex u = ia->second;
    VertexIndex v = ib->second;
    if (u == v) throw GraphError("self-loop at " + std::to_string(a.label));
    if (!seen.insert(pair_key(std::min(u, v), std::max(u, v))).second) {
      throw GraphError("duplicate edge (" + std::to_string(a.label) + "," +
                       std::to_string(b.label) + ")");
    }
    auto pu = static_cast<std::uint32_t>(g.adj_[u].size());
    auto pv = static_cast<std::uint32_t>(g.adj_[v].size());
    g.adj_[u].push_back({v, pv});
    g.adj_[v].push_back({u, pu});
  }
  g.finalize();
  return g;
}

Graph Graph::from_adjacency(std::vector<VertexId> labels,
                            const std::vector<std::vector<VertexIndex>>& neighbors) {
  const std::size_t n = labels.size();
  if (neighbors.size() != n) throw GraphError("adjacency size does not match vertex count");
  {
    std::unordered_set<VertexId, VertexIdHash> distinct(labels.begin(), labels.end());
    if (distinct.size() != n) throw GraphError("duplicate vertex label");
  }
  std::unordered_map<std::uint64_t, std::uint32_t> slot;
  std::size_t total = 0;
  for (const auto& list : neighbors) total += list.size();
  slot.reserve(total * 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < neighbors[a].size(); ++i) {
      VertexIndex b = neighbors[a][i];
      if (b >= n) throw GraphError("neighbor index out of range");
      if (b == a) throw GraphError("self-loop at " + std::to_string(labels[a].label));
      if (!slot.emplace(pair_key(static_cast<VertexIndex>(a), b), static_cast<std::uint32_t>(i))
               .second) {
        throw GraphError("parallel edge at " + std::to_string(labels[a].label));
      }
    }
  }
  Graph g;
  g.labels_ = std::move(labels);
  g.adj_.assign(n, {});
  for (std::size_t a = 0; a < n; ++a) {
    g.adj_[a].reserve(neighbors[a].size());
    for (VertexIndex b : neighbors[a]) {
      auto it = slot.find(pair_key(b, static_cast<VertexIndex>(a)));
      if (it == slot.end()) throw GraphError("asymmetric adjacency");
      g.adj_[a].push_back({b, it->second});
    }
  }
  g.finalize();
  return g;
}

Graph Graph::unchecked(std::vector<VertexId> labels, std::vector<std::vector<AdjEntry>> adj) {
  Graph g;
  g.labels_ = std::move(labels);
  g.adj_ = std::move(adj);
  g.adj_.resize(g.labels_.size());
  g.finalize();
  return g;
}

void Graph::finalize() {
  std::size_t degree_sum = 0;
  std::uint64_t max_label = 0;
  for (const auto& list : adj_) degree_sum += list.size();
  for (VertexId v : labels_) max_label = std::max(max_label, v.label);
  m_ = degree_sum / 2;
  id_bits_ = bit_width_at_least_one(max_label);

  dense_index_.clear();
  sparse_index_.clear();
  if (max_label < 16 * labels_.size() + 1024) {
    dense_index_.assign(max_label + 1, kNoIndex);
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      if (dense_index_[labels_[i].label] == kNoIndex) {
        dense_index_[labels_[i].label] = static_cast<std::uint32_t>(i);
      }
    }
  } else {
    for (std::size_t i = 0; i < labels_.size(); ++i) {
      sparse_index_.emplace(labels_[i], static_cast<VertexIndex>(i));
    }
  }

  position_matrix_.clear();
  edge_slots_.clear();
  edge_mask_ = 0;
  const std::size_t n = adj_.size();
  if (n <= kMatrixMaxVertices) {
    position_matrix_.assign(n * n, 0);
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t i = adj_[a].size(); i-- > 0;) {
        position_matrix_[a * n + adj_[a][i].neighbor] = static_cast<std::uint16_t>(i + 1);
      }
    }
    return;
  }
  std::uint64_t capacity = std::bit_ceil<std::uint64_t>(2 * degree_sum + 2);
  edge_slots_.assign(capacity, EdgeSlot{kEmptyKey, 0});
  edge_mask_ = capacity - 1;
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t i = 0; i < adj_[a].size(); ++i) {
      std::uint64_t key = pair_key(static_cast<VertexIndex>(a), adj_[a][i].neighbor);
      std::uint64_t h = mix64(key) & edge_mask_;
      while (edge_slots_[h].key != kEmptyKey && edge_slots_[h].key != key) h = (h + 1) & edge_mask_;
      if (edge_slots_[h].key == kEmptyKey) edge_slots_[h] = {key, static_cast<std::uint32_t>(i)};
    }
  }
}

const std::vector<VertexId>& Graph::vertices() const {
  touch();
  return labels_;
}

VertexId Graph::label(VertexIndex i) const {
  touch();
  return labels_.at(i);
}

std::size_t Graph::degree(VertexIndex i) const {
  touch();
  return adj_.at(i).size();
}

const std::vector<AdjEntry>& Graph::neighbors(VertexIndex i) const {
  touch();
  return adj_.at(i);
}

std::size_t Graph::max_degree() const {
  touch();
  std::size_t best = 0;
  for (const auto& list : adj_) best = std::max(best, list.size());
  return best;
}

std::size_t Graph::min_degree() const {
  touch();
  if (adj_.empty()) return 0;
  std::size_t best = adj_[0].size();
  for (const auto& list : adj_) best = std::min(best, list.size());
  return best;
}

bool Graph::contains(VertexId v) const {
  touch();
  return raw_contains(v);
}

VertexIndex Graph::index_of(VertexId v) const {
  touch();
  return raw_index(v);
}

long Graph::position(VertexIndex a, VertexIndex b) const {
  touch();
  return raw_position(a, b);
}

std::vector<IndexEdge> Graph::edges() const {
  touch();
  std::vector<IndexEdge> out;
  out.reserve(m_);
  for (std::size_t a = 0; a < adj_.size(); ++a) {
    for (const AdjEntry& e : adj_[a]) {
      if (e.neighbor > a) out.push_back({static_cast<VertexIndex>(a), e.neighbor});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool Graph::raw_contains(VertexId v) const {
  if (!dense_index_.empty() || sparse_index_.empty()) {
    return v.label < dense_index_.size() && dense_index_[v.label] != kNoIndex;
  }
  return sparse_index_.count(v) > 0;
}

bool Graph::raw_lookup(VertexId v, VertexIndex& out) const {
  if (!dense_index_.empty()) {
    if (v.label < dense_index_.size() && dense_index_[v.label] != kNoIndex) {
      out = dense_index_[v.label];
      return true;
    }
    return false;
  }
  auto it = sparse_index_.find(v);
  if (it == sparse_index_.end()) return false;
  out = it->second;
  return true;
}

VertexIndex Graph::raw_index(VertexId v) const {
  if (!dense_index_.empty()) {
    if (v.label < dense_index_.size() && dense_index_[v.label] != kNoIndex) {
      return dense_index_[v.label];
    }
  } else {
    auto it = sparse_index_.find(v);
    if (it != sparse_index_.end()) return it->second;
  }
  throw GraphError("unknown vertex " + std::to_string(v.label));
}

long Graph::raw_position(VertexIndex a, VertexIndex b) const {
  if (!position_matrix_.empty()) {
    const std::size_t n = adj_.size();
    if (a >= n || b >= n) return -1;
    return static_cast<long>(position_matrix_[static_cast<std::size_t>(a) * n + b]) - 1;
  }
  if (edge_slots_.empty()) return -1;
  std::uint64_t key = pair_key(a, b);
  std::uint64_t h = mix64(key) & edge_mask_;
  while (edge_slots_[h].key != kEmptyKey) {
    if (edge_slots_[h].key == key) return edge_slots_[h].pos;
    h = (h + 1) & edge_mask_;
  }
  return -1;
}

std::vector<Violation> validate(const Graph& g) {
  std::vector<Violation> out;
  const std::size_t n = g.labels_.size();
  {
    std::unordered_set<VertexId, VertexIdHash> seen;
    for (VertexId v : g.labels_) {
      if (!seen.insert(v).second) {
        out.push_back({Violation::Kind::kDuplicateLabel, v, 0,
                       "duplicate label " + std::to_string(v.label)});
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    const VertexId va = g.labels_[a];
    std::unordered_set<VertexIndex> seen;
    for (std::size_t i = 0; i < g.adj_[a].size(); ++i) {
      const AdjEntry& e = g.adj_[a][i];
      const std::string where = "(" + std::to_string(va.label) + "," + std::to_string(i + 1) + ")";
      if (e.neighbor >= n) {
        out.push_back({Violation::Kind::kOutOfRange, va, i + 1, "neighbor out of range at " + where});
        continue;
      }
      if (e.neighbor == a) {
        out.push_back({Violation::Kind::kSelfLoop, va, i + 1,
                       "self-loop at " + std::to_string(va.label)});
      }
      if (!seen.insert(e.neighbor).second) {
        out.push_back({Violation::Kind::kParallelEdge, va, i + 1, "parallel edge at " + where});
      }
      const auto& back = g.adj_[e.neighbor];
      if (e.reverse >= back.size() || back[e.reverse].neighbor != a || back[e.reverse].reverse != i) {
        out.push_back({Violation::Kind::kCrossIndex, va, i + 1, "cross-index violation at " + where});
      }
    }
  }
  return out;
}

std::string to_string(Violation::Kind kind) {
  switch (kind) {
    case Violation::Kind::kSelfLoop: return "self-loop";
    case Violation::Kind::kParallelEdge: return "parallel-edge";
    case Violation::Kind::kCrossIndex: return "cross-index";
    case Violation::Kind::kOutOfRange: return "out-of-range";
    case Violation::Kind::kDuplicateLabel: return "duplicate-label";
  }
  return "unknown";
}

}  // namespace lcaspan
