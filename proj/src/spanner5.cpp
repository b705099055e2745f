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

#include "lcaspan/spanner5.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>
#include <unordered_map>

#include "lcaspan/math.hpp"

namespace lcaspan {

Spanner5Params Spanner5Params::derive(std::uint64_t n, const Spanner5Config& config) {
  if (config.r < 1) throw std::invalid_argument("spanner5: r must be >= 1");
  Spanner5Params p;
  p.n = n;
  p.r = config.r;
  p.low_deg = ceil_pow(n, 1, config.r);
  p.med_deg = ceil_pow(n, config.r - 1, 2 * config.r);
  p.super_deg = ceil_pow(n, 2 * config.r - 1, 2 * config.r);
  const double log_n = log2_clamped(n);
  p.p_cell = std::min(1.0, config.c_cell * log_n / static_cast<double>(p.med_deg));
  p.p_super = std::min(1.0, config.c_super * log_n / static_cast<double>(p.super_deg));
  p.rep_count = static_cast<unsigned>(std::max(1.0, std::ceil(config.c_rep * log_n)));
  return p;
}

// Per-query memo. Every entry was paid for with probes in this session.
struct Spanner5Lca::Session {
  ProbeOracle& oracle;
  std::unordered_map<VertexId, std::size_t, VertexIdHash> degree;
  std::unordered_map<VertexId, std::vector<VertexId>, VertexIdHash> cent, cluster, reps, centers;
  std::unordered_map<VertexId, VertexClass, VertexIdHash> cls;
  std::map<std::pair<std::uint64_t, std::uint64_t>, bool> adjacent;

  explicit Session(ProbeOracle& o) : oracle(o) {}

  std::size_t deg(VertexId x) {
    auto it = degree.find(x);
    if (it != degree.end()) return it->second;
    std::size_t d = oracle.degree(x);
    degree.emplace(x, d);
    return d;
  }
};

Spanner5Lca::Spanner5Lca(std::uint64_t n, unsigned id_bits, std::uint64_t seed,
                         Spanner5Config config)
    : config_(config),
      params_(Spanner5Params::derive(n, config)),
      in_s_(seed, "spanner5/S", params_.p_cell, id_bits, independence_order(n)),
      in_s_super_(seed, "spanner5/S'", params_.p_super, id_bits, independence_order(n)),
      rep_sampler_(seed, "spanner5/reps", id_bits, params_.rep_count, params_.med_deg,
                   independence_order(n)) {}

bool Spanner5Lca::is_cell_center(Session& s, VertexId x) const {
  return in_s_(x) && s.deg(x) <= params_.super_deg;
}

const std::vector<VertexId>& Spanner5Lca::cent(Session& s, VertexId x) const {
  auto it = s.cent.find(x);
  if (it != s.cent.end()) return it->second;
  std::vector<VertexId> out;
  const std::size_t d = s.deg(x);
  if (d >= params_.med_deg) {
    const std::size_t limit = std::min<std::size_t>(params_.med_deg, d);
    for (std::size_t i = 1; i <= limit; ++i) {
      VertexId w = *s.oracle.neighbor(x, i);
      if (is_cell_center(s, w)) out.push_back(w);
    }
    if (is_cell_center(s, x)) out.push_back(x);
  }
  return s.cent.emplace(x, std::move(out)).first->second;
}

const std::vector<VertexId>& Spanner5Lca::cluster(Session& s, VertexId center) const {
  auto it = s.cluster.find(center);
  if (it != s.cluster.end()) return it->second;
  const std::size_t d = s.deg(center);
  if (d > params_.super_deg) {
    throw std::logic_error("spanner5: cluster center above SuperDeg");
  }
  std::vector<VertexId> members{center};
  for (std::size_t i = 1; i <= d; ++i) {
    VertexId w = *s.oracle.neighbor(center, i);
    if (s.deg(w) < params_.med_deg) continue;
    auto pos = s.oracle.adjacency(w, center);
    if (pos && *pos <= params_.med_deg) members.push_back(w);
  }
  std::sort(members.begin(), members.end());
  return s.cluster.emplace(center, std::move(members)).first->second;
}

std::vector<std::uint64_t> Spanner5Lca::rep_indices(VertexId v, std::size_t degree) const {
  const std::uint64_t range = std::min<std::uint64_t>(params_.med_deg, degree);
  if (range == 0) return {};
  auto idx = rep_sampler_.sample(v, range);
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  return idx;
}

const std::vector<VertexId>& Spanner5Lca::reps(Session& s, VertexId x) const {
  auto it = s.reps.find(x);
  if (it != s.reps.end()) return it->second;
  std::vector<VertexId> out;
  for (std::uint64_t i : rep_indices(x, s.deg(x))) {
    VertexId y = *s.oracle.neighbor(x, i);
    if (s.deg(y) >= params_.super_deg) out.push_back(y);
  }
  return s.reps.emplace(x, std::move(out)).first->second;
}

const std::vector<VertexId>& Spanner5Lca::centers_of_reps(Session& s, VertexId x) const {
  auto it = s.centers.find(x);
  if (it != s.centers.end()) return it->second;
  std::vector<VertexId> out;
  for (VertexId y : reps(s, x)) {
    MultiCenterSet cs = center_set(s.oracle, y, s.deg(y), params_.super_deg, in_s_super_);
    for (const auto& c : cs.centers) out.push_back(c.center);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return s.centers.emplace(x, std::move(out)).first->second;
}

VertexClass Spanner5Lca::vertex_class(Session& s, VertexId x) const {
  auto it = s.cls.find(x);
  if (it != s.cls.end()) return it->second;
  const std::size_t d = s.deg(x);
  VertexClass c;
  if (d < params_.med_deg) {
    c = VertexClass::kLow;
  } else if (d > params_.super_deg) {
    c = VertexClass::kSuper;
  } else {
    std::size_t light = 0;
    for (std::size_t i = 1; i <= params_.med_deg; ++i) {
      if (s.deg(*s.oracle.neighbor(x, i)) <= params_.super_deg) ++light;
    }
    c = 2 * light >= params_.med_deg ? VertexClass::kDeserted : VertexClass::kCrowded;
  }
  s.cls.emplace(x, c);
  return c;
}

namespace {

// The ID-sorted slice of width `width` of `cluster` that holds x.
std::vector<VertexId> bucket_holding(const std::vector<VertexId>& cluster, VertexId x,
                                     std::size_t width) {
  auto it = std::lower_bound(cluster.begin(), cluster.end(), x);
  const std::size_t pos = static_cast<std::size_t>(it - cluster.begin());
  const std::size_t first = (pos / width) * width;
  const std::size_t last = std::min(cluster.size(), first + width);
  return {cluster.begin() + first, cluster.begin() + last};
}

bool same_edge(VertexId a, VertexId b, VertexId u, VertexId v) {
  return (a == u && b == v) || (a == v && b == u);
}

}  // namespace

Answer Spanner5Lca::cell_rule(Session& s, VertexId u, VertexId v) const {
  const auto& cu = cent(s, u);
  const auto& cv = cent(s, v);
  if (cu.empty() || cv.empty()) {
    if (vertex_class(s, u) == VertexClass::kDeserted && vertex_class(s, v) == VertexClass::kDeserted) {
      return {true, 1};
    }
    return {};
  }
  auto adjacent = [&](VertexId a, VertexId b) {
    const auto key = std::make_pair(a.label, b.label);
    auto it = s.adjacent.find(key);
    if (it != s.adjacent.end()) return it->second;
    bool e = s.oracle.adjacency(a, b).has_value();
    s.adjacent.emplace(key, e);
    return e;
  };
  for (VertexId cs : cu) {
    for (VertexId ct : cv) {
      if (cs == ct) continue;
      auto bu = bucket_holding(cluster(s, cs), u, params_.med_deg);
      auto bv = bucket_holding(cluster(s, ct), v, params_.med_deg);
      // Orient candidates with the bucket of the smaller center first.
      const bool u_first = cs < ct;
      const auto& first = u_first ? bu : bv;
      const auto& second = u_first ? bv : bu;
      const VertexId qa = u_first ? u : v, qb = u_first ? v : u;
      bool is_min = true;
      for (VertexId a : first) {
        if (!(a < qa) && a != qa) break;
        if (s.deg(a) < params_.med_deg) continue;
        bool found = false;
        for (VertexId b : second) {
          if (a == qa && !(b < qb)) break;
          if (a == b || s.deg(b) < params_.med_deg) continue;
          if (adjacent(a, b)) {
            found = true;
            is_min = same_edge(a, b, u, v);
            break;
          }
        }
        if (found) break;
      }
      if (is_min) return {true, 0};
    }
  }
  return {};
}

Answer Spanner5Lca::rep_rule(Session& s, VertexId scanner, VertexId target,
                             std::size_t target_pos) const {
  const std::vector<VertexId>& centers = centers_of_reps(s, target);
  if (centers.empty()) {
    if (vertex_class(s, target) == VertexClass::kCrowded) return {true, 1};
    return {};
  }
  std::vector<char> covered(centers.size(), 0);
  std::size_t remaining = centers.size();
  for (std::size_t j = 1; j < target_pos && remaining > 0; ++j) {
    VertexId w = *s.oracle.neighbor(scanner, j);
    const std::size_t dw = s.deg(w);
    if (dw < params_.med_deg || dw > params_.super_deg) continue;
    for (VertexId x : reps(s, w)) {
      for (std::size_t c = 0; c < centers.size() && remaining > 0; ++c) {
        if (covered[c]) continue;
        if (is_cluster_member(s.oracle, x, centers[c], params_.super_deg)) {
          covered[c] = 1;
          --remaining;
        }
      }
    }
  }
  return {remaining > 0, 0};
}

VertexClass Spanner5Lca::classify_vertex(ProbeOracle& oracle, VertexId v) const {
  Session s(oracle);
  return vertex_class(s, v);
}

std::vector<VertexId> Spanner5Lca::cell_centers(ProbeOracle& oracle, VertexId v) const {
  Session s(oracle);
  return cent(s, v);
}

std::vector<VertexId> Spanner5Lca::cluster_members(ProbeOracle& oracle, VertexId center) const {
  Session s(oracle);
  return cluster(s, center);
}

std::vector<Bucket> Spanner5Lca::buckets(VertexId center,
                                         const std::vector<VertexId>& cluster) const {
  std::vector<Bucket> out;
  for (std::size_t i = 0; i < cluster.size(); i += params_.med_deg) {
    const std::size_t end = std::min(cluster.size(), i + static_cast<std::size_t>(params_.med_deg));
    out.push_back({center, {cluster.begin() + i, cluster.begin() + end}});
  }
  return out;
}

RepresentativeSet Spanner5Lca::reps_of(ProbeOracle& oracle, VertexId v) const {
  Session s(oracle);
  return {v, reps(s, v), centers_of_reps(s, v)};
}

Answer Spanner5Lca::query_cell(ProbeOracle& oracle, VertexId u, VertexId v) const {
  Session s(oracle);
  if (s.deg(u) < params_.med_deg || s.deg(v) < params_.med_deg) return {};
  const std::size_t u_in_v = oracle.adjacency(v, u).value_or(0);
  const std::size_t v_in_u = oracle.adjacency(u, v).value_or(0);
  if ((u_in_v && u_in_v <= params_.med_deg && is_cell_center(s, u)) ||
      (v_in_u && v_in_u <= params_.med_deg && is_cell_center(s, v))) {
    return {true, 0};
  }
  return cell_rule(s, u, v);
}

Answer Spanner5Lca::query_rep(ProbeOracle& oracle, VertexId u, VertexId v) const {
  Session s(oracle);
  const std::size_t du = s.deg(u), dv = s.deg(v);
  auto in_band = [&](std::size_t d) { return d >= params_.med_deg && d <= params_.super_deg; };
  const std::size_t u_in_v = oracle.adjacency(v, u).value_or(0);
  const std::size_t v_in_u = oracle.adjacency(u, v).value_or(0);
  if (u_in_v == 0) return {};
  auto holds = [&](VertexId x, std::size_t dx, std::size_t pos_in_x, std::size_t dy) {
    if (!in_band(dx) || dy < params_.super_deg) return false;
    auto idx = rep_indices(x, dx);
    return std::binary_search(idx.begin(), idx.end(), pos_in_x);
  };
  if (holds(v, dv, u_in_v, du) || holds(u, du, v_in_u, dv)) return {true, 0};
  if (!in_band(du) || !in_band(dv)) return {};
  return rep_rule(s, u, v, v_in_u);
}

Answer Spanner5Lca::decide(ProbeOracle& oracle, VertexId u, VertexId v) const {
  if (params_.n < 16) return {true, 0};
  Session s(oracle);
  const std::size_t du = s.deg(u), dv = s.deg(v);
  const std::size_t low = std::min(du, dv);
  if (low <= params_.low_deg) return {true, 0};
  // Only reachable for r > 3 on inputs below the minimum-degree premise.
  if (low < params_.med_deg) return {true, 0};

  const std::size_t u_in_v = oracle.adjacency(v, u).value_or(0);
  const std::size_t v_in_u = oracle.adjacency(u, v).value_or(0);
  if (u_in_v == 0 || v_in_u == 0) return {};

  // Center edges: S' at SuperDeg, S at MedDeg.
  if ((u_in_v <= params_.super_deg && in_s_super_(u)) ||
      (v_in_u <= params_.super_deg && in_s_super_(v))) {
    return {true, 0};
  }
  if ((u_in_v <= params_.med_deg && is_cell_center(s, u)) ||
      (v_in_u <= params_.med_deg && is_cell_center(s, v))) {
    return {true, 0};
  }
  // Representative edges.
  auto in_band = [&](std::size_t d) { return d >= params_.med_deg && d <= params_.super_deg; };
  auto holds = [&](VertexId x, std::size_t dx, std::size_t pos_in_x, std::size_t dy) {
    if (!in_band(dx) || dy < params_.super_deg) return false;
    auto idx = rep_indices(x, dx);
    return std::binary_search(idx.begin(), idx.end(), pos_in_x);
  };
  if (holds(v, dv, u_in_v, du) || holds(u, du, v_in_u, dv)) return {true, 0};

  struct Side {
    VertexId scanner;
    std::size_t scanner_degree;
    VertexId target;
    std::size_t target_degree;
    std::size_t target_pos;
  };
  const Side sides[2] = {{v, dv, u, du, u_in_v}, {u, du, v, dv, v_in_u}};
  for (const Side& sd : sides) {
    Answer a = block_rule(oracle, sd.scanner, sd.scanner_degree, sd.target, sd.target_degree,
                          sd.target_pos, params_.super_deg, in_s_super_);
    if (a.keep) return a;
  }

  Answer cell = cell_rule(s, u, v);
  if (cell.keep) return cell;

  if (in_band(du) && in_band(dv)) {
    for (const Side& sd : sides) {
      Answer a = rep_rule(s, sd.scanner, sd.target, sd.target_pos);
      if (a.keep) return a;
    }
  }
  return {};
}

std::uint64_t Spanner5Lca::seed_bits() const {
  return in_s_.seed_bits() + in_s_super_.seed_bits() + rep_sampler_.seed_bits();
}

NamedConstants Spanner5Lca::constants() const {
  return {{"r", static_cast<double>(params_.r)},
          {"c_cell", config_.c_cell},
          {"c_rep", config_.c_rep},
          {"c_super", config_.c_super},
          {"low_deg", static_cast<double>(params_.low_deg)},
          {"med_deg", static_cast<double>(params_.med_deg)},
          {"super_deg", static_cast<double>(params_.super_deg)},
          {"p_cell", in_s_.realized_bias()},
          {"p_super", in_s_super_.realized_bias()},
          {"rep_count", static_cast<double>(params_.rep_count)}};
}

double Spanner5Lca::size_shape(double n) const {
  const double l = std::log2(n);
  return std::pow(n, 1.0 + 1.0 / params_.r) * l * l;
}

double Spanner5Lca::probe_shape(double n, double) const {
  const double l = std::log2(n);
  return std::pow(n, 1.0 - 1.0 / (2.0 * params_.r)) * l * l * l;
}

}  // namespace lcaspan
