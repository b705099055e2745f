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
#include <memory>
#include <optional>
#include <vector>

#include "lcaspan/baswana_sen.hpp"
#include "lcaspan/hashing.hpp"
#include "lcaspan/lca.hpp"

namespace lcaspan {

struct K2Config {
  unsigned k = 2;
  double c_L = 4.0;       // L = ceil(c_L * n^(1/3))
  double c_center = 1.0;  // p_center = c_center * log n / L
  double c_q = 1.0;       // q = ceil(c_q * n^(1/k) * log n)
  double c_mark = 1.0;    // p_mark = c_mark / L
  double c_phase = 1.0;   // clustering phase bias c_phase * n^(-1/k)
  double c_stretch = 4.0; // stretch_bound() = c_stretch * k^2
};

struct K2Params {
  std::uint64_t n = 0;
  unsigned k = 1;            // after clamping to ceil(log2 n)
  unsigned k_requested = 1;
  std::uint64_t L = 1;
  double p_center = 1.0;
  std::uint64_t q = 1;
  double p_mark = 1.0;
  double p_phase = 1.0;

  static K2Params derive(std::uint64_t n, const K2Config& config);
};

struct BfsResult {
  VertexId origin;
  std::vector<VertexId> discovered;       // discovery order
  std::vector<unsigned> distance;         // aligned with discovered
  std::vector<long> parent;               // index into discovered, -1 for the origin
  std::optional<std::pair<VertexId, unsigned>> found_center;  // (center, distance)
  bool frontier_exhausted = false;        // stopped at radius k or ran out of vertices

  // L vertices discovered and none of them is a center.
  bool saturated(std::uint64_t L) const { return !found_center && discovered.size() >= L; }
};

struct VoronoiAssignment {
  VertexId vertex;
  VertexId center;
  std::vector<VertexId> path;  // vertex, ..., center
};

struct Subtree {
  bool heavy = false;
  std::uint64_t size = 0;  // valid when !heavy
};

struct Cluster {
  enum class Kind { kWholeCell, kSingletonHeavy, kSubtreeGroup };
  Kind kind = Kind::kWholeCell;
  VertexId home_center;
  std::vector<VertexId> members;  // sorted by label
  // kSubtreeGroup only: the heavy parent and the grouped slice of its light
  // children (0-based, inclusive, adjacency-list order).
  std::optional<VertexId> heavy_parent;
  std::size_t first_child = 0;
  std::size_t last_child = 0;

  bool contains(VertexId v) const;
};

// O(k^2)-spanner LCA for bounded-degree graphs.
//
// Centers are sampled with probability p_center. A vertex is dense if the
// center search (a BFS that expands neighbors in ID order and stops at the
// first center, after L discoveries, or at radius k) finds a center, and
// sparse otherwise. A search that stops at L discoveries without a center is
// a failure event and the vertex counts as sparse.
//
// Edges with a sparse endpoint are decided by simulating the k-phase
// clustering spanner on the radius-k balls around both endpoints. Edges
// between dense vertices are kept if they lie on a Voronoi tree path, or if
// one of the three cluster connection rules holds in either orientation.
class K2Lca : public SpannerLca {
 public:
  K2Lca(std::uint64_t n, unsigned id_bits, std::uint64_t seed, K2Config config = {});
  ~K2Lca() override;

  std::string name() const override { return "k2"; }
  Answer decide(ProbeOracle& oracle, VertexId u, VertexId v) const override;
  double stretch_bound() const override;
  unsigned param() const override { return params_.k; }
  std::uint64_t seed_bits() const override;
  NamedConstants constants() const override;
  double size_shape(double n) const override;
  double probe_shape(double n, double max_degree) const override;

  const K2Params& params() const { return params_; }
  const K2Config& config() const { return config_; }

  bool is_center(VertexId v) const { return center_coin_(v); }
  bool is_marked(VertexId center) const { return mark_coin_(center); }
  std::uint64_t rank(VertexId center) const { return ranks_.rank(center); }
  const RankAssignment& ranks() const { return ranks_; }
  const std::vector<CoinFlipper>& phase_coins() const { return phase_coins_; }

  // Each call runs in its own probe session on `oracle`.
  BfsResult bfs_explore(ProbeOracle& oracle, VertexId v) const;
  bool is_sparse(ProbeOracle& oracle, VertexId v) const;
  Answer query_sparse(ProbeOracle& oracle, VertexId u, VertexId v) const;

  // Dense side; the vertex arguments must be dense.
  VoronoiAssignment center_of(ProbeOracle& oracle, VertexId v) const;
  std::vector<VertexId> voronoi_children(ProbeOracle& oracle, VertexId v) const;
  Subtree subtree_size_or_heavy(ProbeOracle& oracle, VertexId v) const;
  Cluster cluster_of(ProbeOracle& oracle, VertexId v) const;
  bool query_denseI(ProbeOracle& oracle, VertexId u, VertexId v) const;
  bool query_denseB(ProbeOracle& oracle, VertexId u, VertexId v) const;

  struct Session;

 private:
  friend struct Session;

  Answer sparse_rule(Session& s, VertexId u, VertexId v) const;
  bool tree_rule(Session& s, VertexId u, VertexId v) const;
  bool cluster_rules(Session& s, VertexId u, VertexId v) const;
  bool oriented_rules(Session& s, VertexId x, VertexId y) const;

  K2Config config_;
  K2Params params_;
  CoinFlipper center_coin_;
  CoinFlipper mark_coin_;
  RankAssignment ranks_;
  std::vector<CoinFlipper> phase_coins_;
  BaswanaSen clustering_;
};

}  // namespace lcaspan
