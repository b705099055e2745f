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

#include <atomic>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace lcaspan {

struct VertexId {
  std::uint64_t label = 0;

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

struct VertexIdHash {
  std::size_t operator()(VertexId v) const noexcept {
    std::uint64_t x = v.label + 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return static_cast<std::size_t>(x ^ (x >> 31));
  }
};

using VertexIndex = std::uint32_t;

// One slot of an adjacency list. `reverse` is the 0-based position of the
// owning vertex inside `neighbor`'s list.
struct AdjEntry {
  VertexIndex neighbor;
  std::uint32_t reverse;
};

// An edge by dense vertex index, stored with u < v.
struct IndexEdge {
  VertexIndex u;
  VertexIndex v;

  friend auto operator<=>(const IndexEdge&, const IndexEdge&) = default;
};

using LabelEdge = std::pair<VertexId, VertexId>;

class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Violation {
  enum class Kind { kSelfLoop, kParallelEdge, kCrossIndex, kOutOfRange, kDuplicateLabel };
  Kind kind;
  VertexId vertex;
  std::size_t position = 0;  // 1-based slot in vertex's list, 0 if not applicable
  std::string message;
};

class ProbeOracle;

// Immutable simple undirected graph with fixed-order adjacency lists.
//
// Every public structural accessor bumps an access counter; the probe oracle
// reads through a private path that does not. This lets tests confirm that an
// LCA query touched the graph only through probes.
class Graph {
 public:
  Graph() = default;
  Graph(const Graph& other);
  Graph(Graph&& other) noexcept;
  Graph& operator=(const Graph& other);
  Graph& operator=(Graph&& other) noexcept;

  // Vertices are labelled 0..n-1; adjacency order is first appearance.
  static Graph build_from_edge_list(std::size_t n, const std::vector<LabelEdge>& edges);

  // Arbitrary distinct labels; adjacency order is first appearance.
  static Graph build_labeled(std::vector<VertexId> labels, const std::vector<LabelEdge>& edges);

  // Neighbor lists given directly by index; checked for symmetry and simplicity.
  static Graph from_adjacency(std::vector<VertexId> labels,
                              const std::vector<std::vector<VertexIndex>>& neighbors);

  // No checking at all. Only for exercising validate() on corrupted input.
  static Graph unchecked(std::vector<VertexId> labels, std::vector<std::vector<AdjEntry>> adj);

  std::size_t n() const { return labels_.size(); }
  std::size_t m() const { return m_; }

  const std::vector<VertexId>& vertices() const;
  VertexId label(VertexIndex i) const;
  std::size_t degree(VertexIndex i) const;
  const std::vector<AdjEntry>& neighbors(VertexIndex i) const;
  std::size_t max_degree() const;
  std::size_t min_degree() const;

  bool contains(VertexId v) const;
  VertexIndex index_of(VertexId v) const;  // throws GraphError for unknown labels

  // 0-based position of b in a's list, or -1.
  long position(VertexIndex a, VertexIndex b) const;
  bool has_edge(VertexIndex a, VertexIndex b) const { return position(a, b) >= 0; }

  // Canonical edge list (u < v by index), ordered by (u, v).
  std::vector<IndexEdge> edges() const;

  // Bit width of the largest label (public parameter for hash input widths).
  unsigned id_bits() const { return id_bits_; }

  std::uint64_t public_accesses() const { return accesses_.value.load(std::memory_order_relaxed); }

 private:
  friend class ProbeOracle;
  friend std::vector<Violation> validate(const Graph& g);

  struct Counter {
    std::atomic<std::uint64_t> value{0};
    Counter() = default;
    Counter(const Counter& o) : value(o.value.load()) {}
    Counter& operator=(const Counter& o) {
      value.store(o.value.load());
      return *this;
    }
  };

  void touch() const { accesses_.value.fetch_add(1, std::memory_order_relaxed); }
  void finalize();  // builds lookup tables; assumes adj_ is well formed

  // Unaudited reads for the probe oracle.
  VertexIndex raw_index(VertexId v) const;
  bool raw_contains(VertexId v) const;
  bool raw_lookup(VertexId v, VertexIndex& out) const;
  long raw_position(VertexIndex a, VertexIndex b) const;

  std::vector<VertexId> labels_;
  std::vector<std::vector<AdjEntry>> adj_;
  std::size_t m_ = 0;
  unsigned id_bits_ = 1;

  // Label lookup: dense table when labels are small, hash map otherwise.
  std::vector<std::uint32_t> dense_index_;
  std::unordered_map<VertexId, VertexIndex, VertexIdHash> sparse_index_;

  // Position of b in a's list. Small graphs use an n x n matrix holding
  // position + 1 (0 = absent); larger ones an open-addressing table keyed by
  // (a << 32 | b).
  struct EdgeSlot {
    std::uint64_t key;
    std::uint32_t pos;
  };
  std::vector<std::uint16_t> position_matrix_;
  std::vector<EdgeSlot> edge_slots_;
  std::uint64_t edge_mask_ = 0;

  mutable Counter accesses_;
};

// Empty iff every Graph invariant holds.
std::vector<Violation> validate(const Graph& g);

std::string to_string(Violation::Kind kind);

}  // namespace lcaspan
