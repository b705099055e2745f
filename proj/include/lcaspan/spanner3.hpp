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

#include "lcaspan/center_rules.hpp"
#include "lcaspan/hashing.hpp"
#include "lcaspan/lca.hpp"

namespace lcaspan {

struct Spanner3Config {
  double c_center = 1.0;        // S bias is c_center * log n / sqrt(n)
  double c_center_super = 1.0;  // S' bias is c_center_super * log n / n^(3/4)
};

struct Spanner3Params {
  std::uint64_t n = 0;
  std::uint64_t thr_high = 0;   // ceil(sqrt n)
  std::uint64_t thr_super = 0;  // ceil(n^(3/4)), also the block width
  double p_high = 1.0;
  double p_super = 1.0;

  static Spanner3Params derive(std::uint64_t n, const Spanner3Config& config);
};

enum class EdgeClass { kLow, kHigh, kSuper };

// 3-spanner LCA.
//
// An edge is kept if it is LOW (an endpoint of degree <= sqrt n), if one
// endpoint is a center of the other (S or S'), or if the HIGH or block rule
// says so in either orientation:
//  - HIGH, scanner x with deg(x) <= n^(3/4): keep (x, y) if some center of
//    S(y) is not held by any neighbor of x listed before y.
//  - block, any scanner x: the same test for S'(y), restricted to the
//    neighbors of x in y's block.
// Running both rules in both orientations makes the witness edges of every
// omitted edge themselves subject to the rule that keeps them.
class Spanner3Lca : public SpannerLca {
 public:
  Spanner3Lca(std::uint64_t n, unsigned id_bits, std::uint64_t seed, Spanner3Config config = {});

  std::string name() const override { return "spanner3"; }
  Answer decide(ProbeOracle& oracle, VertexId u, VertexId v) const override;
  double stretch_bound() const override { return 3; }
  std::uint64_t seed_bits() const override;
  NamedConstants constants() const override;
  double size_shape(double n) const override;
  double probe_shape(double n, double max_degree) const override;

  const Spanner3Params& params() const { return params_; }

  EdgeClass classify_edge(ProbeOracle& oracle, VertexId u, VertexId v) const;

  MultiCenterSet high_centers(ProbeOracle& oracle, VertexId v) const;
  MultiCenterSet super_centers(ProbeOracle& oracle, VertexId v) const;

  // HIGH rule with v scanning its list up to u.
  Answer query_high(ProbeOracle& oracle, VertexId u, VertexId v) const;
  // Block rule with v scanning u's block of its list.
  Answer query_super(ProbeOracle& oracle, VertexId u, VertexId v) const;

 private:
  Answer high_rule(ProbeOracle& oracle, VertexId scanner, VertexId target,
                   std::size_t target_degree, std::size_t target_pos) const;

  Spanner3Config config_;
  Spanner3Params params_;
  CoinFlipper in_s_;
  CoinFlipper in_s_super_;
};

}  // namespace lcaspan
