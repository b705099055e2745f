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

#include "lcaspan/spanner3.hpp"

#include <algorithm>
#include <cmath>

#include "lcaspan/math.hpp"

namespace lcaspan {

Spanner3Params Spanner3Params::derive(std::uint64_t n, const Spanner3Config& config) {
  Spanner3Params p;
  p.n = n;
  p.thr_high = ceil_pow(n, 1, 2);
  p.thr_super = ceil_pow(n, 3, 4);
  const double log_n = log2_clamped(n);
  const double nd = static_cast<double>(std::max<std::uint64_t>(n, 1));
  p.p_high = std::min(1.0, config.c_center * log_n / std::sqrt(nd));
  p.p_super = std::min(1.0, config.c_center_super * log_n / std::pow(nd, 0.75));
  return p;
}

Spanner3Lca::Spanner3Lca(std::uint64_t n, unsigned id_bits, std::uint64_t seed,
                         Spanner3Config config)
    : config_(config),
      params_(Spanner3Params::derive(n, config)),
      in_s_(seed, "spanner3/S", params_.p_high, id_bits, independence_order(n)),
      in_s_super_(seed, "spanner3/S'", params_.p_super, id_bits, independence_order(n)) {}

EdgeClass Spanner3Lca::classify_edge(ProbeOracle& oracle, VertexId u, VertexId v) const {
  const std::size_t low = std::min(oracle.degree(u), oracle.degree(v));
  if (low <= params_.thr_high) return EdgeClass::kLow;
  if (low > params_.thr_super) return EdgeClass::kSuper;
  return EdgeClass::kHigh;
}

MultiCenterSet Spanner3Lca::high_centers(ProbeOracle& oracle, VertexId v) const {
  return center_set(oracle, v, oracle.degree(v), params_.thr_high, in_s_);
}

MultiCenterSet Spanner3Lca::super_centers(ProbeOracle& oracle, VertexId v) const {
  return center_set(oracle, v, oracle.degree(v), params_.thr_super, in_s_super_);
}

Answer Spanner3Lca::high_rule(ProbeOracle& oracle, VertexId scanner, VertexId target,
                              std::size_t target_degree, std::size_t target_pos) const {
  MultiCenterSet centers = center_set(oracle, target, target_degree, params_.thr_high, in_s_);
  if (centers.empty()) return {true, 1};
  return {reveals_new_center(oracle, scanner, 1, target_pos - 1, centers, params_.thr_high), 0};
}

Answer Spanner3Lca::query_high(ProbeOracle& oracle, VertexId u, VertexId v) const {
  const std::size_t du = oracle.degree(u);
  auto pos = oracle.adjacency(v, u);
  if (!pos) return {};
  return high_rule(oracle, v, u, du, *pos);
}

Answer Spanner3Lca::query_super(ProbeOracle& oracle, VertexId u, VertexId v) const {
  const std::size_t du = oracle.degree(u);
  const std::size_t dv = oracle.degree(v);
  auto pos = oracle.adjacency(v, u);
  if (!pos) return {};
  return block_rule(oracle, v, dv, u, du, *pos, params_.thr_super, in_s_super_);
}

Answer Spanner3Lca::decide(ProbeOracle& oracle, VertexId u, VertexId v) const {
  if (params_.n < 16) return {true, 0};
  const std::size_t du = oracle.degree(u);
  const std::size_t dv = oracle.degree(v);
  if (std::min(du, dv) <= params_.thr_high) return {true, 0};

  // Center-edge rule: u in S(v) or S'(v), or the reverse.
  const std::size_t u_in_v = oracle.adjacency(v, u).value_or(0);
  const std::size_t v_in_u = oracle.adjacency(u, v).value_or(0);
  if (u_in_v == 0 || v_in_u == 0) return {};  // not an edge
  auto is_center_edge = [&](VertexId c, std::size_t pos) {
    return (pos <= params_.thr_high && in_s_(c)) || (pos <= params_.thr_super && in_s_super_(c));
  };
  if (is_center_edge(u, u_in_v) || is_center_edge(v, v_in_u)) return {true, 0};

  struct Side {
    VertexId scanner;
    std::size_t scanner_degree;
    VertexId target;
    std::size_t target_degree;
    std::size_t target_pos;
  };
  const Side sides[2] = {{v, dv, u, du, u_in_v}, {u, du, v, dv, v_in_u}};

  for (const Side& s : sides) {
    if (s.scanner_degree > params_.thr_super) continue;
    Answer a = high_rule(oracle, s.scanner, s.target, s.target_degree, s.target_pos);
    if (a.keep) return a;
  }
  for (const Side& s : sides) {
    Answer a = block_rule(oracle, s.scanner, s.scanner_degree, s.target, s.target_degree,
                          s.target_pos, params_.thr_super, in_s_super_);
    if (a.keep) return a;
  }
  return {};
}

std::uint64_t Spanner3Lca::seed_bits() const { return in_s_.seed_bits() + in_s_super_.seed_bits(); }

NamedConstants Spanner3Lca::constants() const {
  return {{"c_center", config_.c_center},
          {"c_center_super", config_.c_center_super},
          {"thr_high", static_cast<double>(params_.thr_high)},
          {"thr_super", static_cast<double>(params_.thr_super)},
          {"p_high", in_s_.realized_bias()},
          {"p_super", in_s_super_.realized_bias()}};
}

double Spanner3Lca::size_shape(double n) const { return std::pow(n, 1.5) * std::log2(n); }

double Spanner3Lca::probe_shape(double n, double) const {
  const double l = std::log2(n);
  return std::pow(n, 0.75) * l * l;
}

}  // namespace lcaspan
