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

#include "lcaspan/center_rules.hpp"
#include "lcaspan/hashing.hpp"
#include "lcaspan/lca.hpp"

namespace lcaspan {

struct Spanner5Config {
  unsigned r = 3;
  double c_cell = 1.0;   // S bias is c_cell * log n / MedDeg
  double c_rep = 1.0;    // rep_count = ceil(c_rep * log n)
  double c_super = 1.0;  // S' bias is c_super * log n / SuperDeg
};

struct Spanner5Params {
  std::uint64_t n = 0;
  unsigned r = 3;
  std::uint64_t low_deg = 0;    // ceil(n^(1/r))
  std::uint64_t med_deg = 0;    // ceil(n^(1/2 - 1/(2r)))
  std::uint64_t super_deg = 0;  // ceil(n^(1 - 1/(2r)))
  double p_cell = 1.0;
  double p_super = 1.0;
  unsigned rep_count = 1;

  static Spanner5Params derive(std::uint64_t n, const Spanner5Config& config);
};

enum class VertexClass { kLow, kDeserted, kCrowded, kSuper };

struct Bucket {
  VertexId center;
  std::vector<VertexId> members;  // ID-sorted slice of the cluster
};

struct RepresentativeSet {
  VertexId owner;
  std::vector<VertexId> reps;
  std::vector<VertexId> centers_of_reps;  // union of S'(x) over reps, ID-sorted
};

// 5-spanner LCA.
//
// Degree ladder LowDeg <= MedDeg <= SuperDeg. Edges touching a vertex of
// degree above SuperDeg are handled by the 3-spanner block rule at that
// threshold; edges inside the band go through the cell rule (clusters of
// centers of degree <= SuperDeg, bucketed by ID) and the representative rule
// (sampled super-degree neighbors and their S' centers). Every rule is
// evaluated on every edge it applies to, in both orientations.
class Spanner5Lca : public SpannerLca {
 public:
  Spanner5Lca(std::uint64_t n, unsigned id_bits, std::uint64_t seed, Spanner5Config config = {});

  std::string name() const override { return "spanner5"; }
  Answer decide(ProbeOracle& oracle, VertexId u, VertexId v) const override;
  double stretch_bound() const override { return 5; }
  unsigned param() const override { return params_.r; }
  std::uint64_t seed_bits() const override;
  NamedConstants constants() const override;
  double size_shape(double n) const override;
  double probe_shape(double n, double max_degree) const override;

  const Spanner5Params& params() const { return params_; }

  VertexClass classify_vertex(ProbeOracle& oracle, VertexId v) const;

  // Cell centers: coin heads of degree <= SuperDeg among the first MedDeg
  // neighbors (requires deg(v) >= MedDeg), plus v itself if v is a center.
  std::vector<VertexId> cell_centers(ProbeOracle& oracle, VertexId v) const;

  // C(s), ID-sorted; throws std::logic_error if deg(s) > SuperDeg.
  std::vector<VertexId> cluster_members(ProbeOracle& oracle, VertexId s) const;

  // Width-MedDeg chunks of an ID-sorted cluster.
  std::vector<Bucket> buckets(VertexId center, const std::vector<VertexId>& cluster) const;

  RepresentativeSet reps_of(ProbeOracle& oracle, VertexId v) const;

  Answer query_cell(ProbeOracle& oracle, VertexId u, VertexId v) const;
  Answer query_rep(ProbeOracle& oracle, VertexId u, VertexId v) const;

 private:
  struct Session;

  bool is_cell_center(Session& s, VertexId x) const;
  const std::vector<VertexId>& cent(Session& s, VertexId x) const;
  const std::vector<VertexId>& cluster(Session& s, VertexId center) const;
  const std::vector<VertexId>& reps(Session& s, VertexId x) const;
  const std::vector<VertexId>& centers_of_reps(Session& s, VertexId x) const;
  VertexClass vertex_class(Session& s, VertexId x) const;
  std::vector<std::uint64_t> rep_indices(VertexId v, std::size_t degree) const;

  Answer cell_rule(Session& s, VertexId u, VertexId v) const;
  Answer rep_rule(Session& s, VertexId scanner, VertexId target, std::size_t target_pos) const;

  Spanner5Config config_;
  Spanner5Params params_;
  CoinFlipper in_s_;
  CoinFlipper in_s_super_;
  IndexSampler rep_sampler_;
};

}  // namespace lcaspan
