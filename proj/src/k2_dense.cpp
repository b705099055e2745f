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

#include <algorithm>
#include <stdexcept>

#include "k2_session.hpp"

namespace lcaspan {

namespace {

bool by_label(VertexId a, VertexId b) { return a.label < b.label; }

EdgeKey key_of(VertexId a, VertexId b) { return {a.label, b.label}; }

}  // namespace

const VoronoiAssignment& K2Lca::Session::assignment(VertexId v) {
  auto it = assignment_.find(v.label);
  if (it != assignment_.end()) return it->second;
  const BfsResult& r = bfs(v);
  if (!r.found_center) throw std::logic_error("k2: center_of on a sparse vertex");
  VoronoiAssignment a;
  a.vertex = v;
  a.center = r.found_center->first;
  // The center is the last discovered vertex; walk the BFS tree back to v.
  long at = static_cast<long>(r.discovered.size()) - 1;
  while (at >= 0) {
    a.path.push_back(r.discovered[at]);
    at = r.parent[at];
  }
  std::reverse(a.path.begin(), a.path.end());
  return assignment_.emplace(v.label, std::move(a)).first->second;
}

const std::vector<VertexId>& K2Lca::Session::children(VertexId v) {
  auto it = children_.find(v.label);
  if (it != children_.end()) return it->second;
  std::vector<VertexId> out;
  for (VertexId w : neighbors(v)) {
    if (sparse(w)) continue;
    const VoronoiAssignment& a = assignment(w);
    if (a.path.size() >= 2 && a.path[1] == v) out.push_back(w);
  }
  return children_.emplace(v.label, std::move(out)).first->second;
}

const Subtree& K2Lca::Session::subtree(VertexId v) {
  auto it = subtree_.find(v.label);
  if (it != subtree_.end()) return it->second;
  const std::uint64_t L = lca.params_.L;
  Subtree t{false, 1};
  // Copy: the recursion below may rehash children_.
  const std::vector<VertexId> kids = children(v);
  for (VertexId w : kids) {
    const Subtree& c = subtree(w);
    if (c.heavy) {
      t.heavy = true;
      break;
    }
    t.size += c.size;
    if (t.size > L) {
      t.heavy = true;
      break;
    }
  }
  if (t.heavy) t.size = 0;
  return subtree_.emplace(v.label, t).first->second;
}

void K2Lca::Session::collect_subtree(VertexId root, std::vector<VertexId>& out) {
  std::vector<VertexId> stack{root};
  while (!stack.empty()) {
    VertexId x = stack.back();
    stack.pop_back();
    out.push_back(x);
    for (VertexId w : children(x)) stack.push_back(w);
  }
}

const Cluster& K2Lca::Session::cluster(VertexId v) {
  auto it = cluster_.find(v.label);
  if (it != cluster_.end()) return *it->second;

  const std::uint64_t L = lca.params_.L;
  const VoronoiAssignment a = assignment(v);
  auto c = std::make_shared<Cluster>();
  c->home_center = a.center;

  if (!subtree(a.center).heavy) {
    c->kind = Cluster::Kind::kWholeCell;
    collect_subtree(a.center, c->members);
  } else if (subtree(v).heavy) {
    c->kind = Cluster::Kind::kSingletonHeavy;
    c->members = {v};
  } else {
    c->kind = Cluster::Kind::kSubtreeGroup;
    // First heavy vertex above v on its path; the center is heavy, so the
    // walk stops. `below` is u's child on the path.
    std::size_t j = 1;
    while (!subtree(a.path[j]).heavy) ++j;
    const VertexId u = a.path[j];
    const VertexId below = a.path[j - 1];
    std::vector<VertexId> light;
    for (VertexId w : children(u)) {
      if (!subtree(w).heavy) light.push_back(w);
    }
    // Greedy groups: close a group once its size reaches L.
    std::size_t first = 0;
    std::uint64_t size = 0;
    for (std::size_t i = 0; i < light.size(); ++i) {
      size += subtree(light[i]).size;
      const bool closes = size >= L || i + 1 == light.size();
      if (!closes) continue;
      const bool mine = std::any_of(light.begin() + first, light.begin() + i + 1,
                                    [&](VertexId w) { return w == below; });
      if (mine) {
        c->heavy_parent = u;
        c->first_child = first;
        c->last_child = i;
        for (std::size_t t = first; t <= i; ++t) collect_subtree(light[t], c->members);
        break;
      }
      first = i + 1;
      size = 0;
    }
    if (c->members.empty()) {  // v's path disagrees with u's children
      ++failures;
      c->kind = Cluster::Kind::kSingletonHeavy;
      c->members = {v};
    }
  }
  std::sort(c->members.begin(), c->members.end(), by_label);
  return *cluster_.emplace(v.label, std::move(c)).first->second;
}

const CellBoundary& K2Lca::Session::boundary(const Cluster& c) {
  auto it = boundary_.find(&c);
  if (it != boundary_.end()) return it->second;
  CellBoundary b;
  for (VertexId x : c.members) {
    for (VertexId w : neighbors(x)) {
      if (c.contains(w) || sparse(w)) continue;
      const VertexId s = assignment(w).center;
      if (s == c.home_center) continue;
      const EdgeKey e = key_of(x, w);
      auto [slot, fresh] = b.min_edge.emplace(s.label, e);
      if (!fresh && e < slot->second) slot->second = e;
    }
  }
  return boundary_.emplace(&c, std::move(b)).first->second;
}

// ---- connection rules ----

bool K2Lca::tree_rule(Session& s, VertexId u, VertexId v) const {
  const auto& pu = s.assignment(u).path;
  const auto& pv = s.assignment(v).path;
  return std::find(pv.begin(), pv.end(), u) != pv.end() ||
         std::find(pu.begin(), pu.end(), v) != pu.end();
}

// Rules (1)-(3) with x in cluster A and y in cluster B.
bool K2Lca::oriented_rules(Session& s, VertexId x, VertexId y) const {
  const Cluster& A = s.cluster(x);
  const Cluster& B = s.cluster(y);
  const EdgeKey xy = key_of(x, y);

  // (1) A marked and (x, y) is the minimum edge of E(A, B).
  if (mark_coin_(A.home_center)) {
    EdgeKey best = xy;
    for (VertexId a : A.members) {
      for (VertexId w : s.neighbors(a)) {
        if (B.contains(w)) best = std::min(best, key_of(a, w));
      }
    }
    if (best == xy) return true;
  }

  const CellBoundary& bB = s.boundary(B);
  const bool b_sees_mark = std::any_of(bB.min_edge.begin(), bB.min_edge.end(),
                                       [&](const auto& e) { return mark_coin_(VertexId{e.first}); });

  // (2) B adjacent to no marked cell and (y, x) is the minimum edge of
  // E(B, Vor(A)).
  if (!b_sees_mark) {
    auto e = bB.min_edge.find(A.home_center.label);
    if (e != bB.min_edge.end() && e->second == key_of(y, x)) return true;
    return false;
  }

  // (3) (x, y) is the minimum edge of E(A, Vor(B)), and for some marked C
  // that B participates in, c(B) ranks among the q lowest of c(dA) & c(dC).
  const CellBoundary& bA = s.boundary(A);
  auto e = bA.min_edge.find(B.home_center.label);
  if (e == bA.min_edge.end() || e->second != xy) return false;

  auto before = [&](std::uint64_t a, std::uint64_t b) {
    const std::uint64_t ra = ranks_.rank(VertexId{a});
    const std::uint64_t rb = ranks_.rank(VertexId{b});
    return ra != rb ? ra < rb : a < b;
  };
  const std::uint64_t cb = B.home_center.label;
  for (const auto& [center, edge] : bB.min_edge) {
    if (!mark_coin_(VertexId{center})) continue;
    // B participates in the cluster of clusters of the cluster holding the
    // far end of its minimum edge into this marked cell.
    const Cluster& C = s.cluster(VertexId{edge.second});
    const CellBoundary& bC = s.boundary(C);
    if (!bC.min_edge.count(cb)) continue;
    std::uint64_t lower = 0;  // common centers ranked before c(B)
    for (const auto& entry : bA.min_edge) {
      if (entry.first != cb && bC.min_edge.count(entry.first) && before(entry.first, cb)) ++lower;
    }
    if (lower < params_.q) return true;
  }
  return false;
}

bool K2Lca::cluster_rules(Session& s, VertexId u, VertexId v) const {
  if (s.assignment(u).center == s.assignment(v).center) return false;
  return oriented_rules(s, u, v) || oriented_rules(s, v, u);
}

// ---- single-session entry points ----

VoronoiAssignment K2Lca::center_of(ProbeOracle& oracle, VertexId v) const {
  Session s(*this, oracle);
  return s.assignment(v);
}

std::vector<VertexId> K2Lca::voronoi_children(ProbeOracle& oracle, VertexId v) const {
  Session s(*this, oracle);
  return s.children(v);
}

Subtree K2Lca::subtree_size_or_heavy(ProbeOracle& oracle, VertexId v) const {
  Session s(*this, oracle);
  return s.subtree(v);
}

Cluster K2Lca::cluster_of(ProbeOracle& oracle, VertexId v) const {
  Session s(*this, oracle);
  return s.cluster(v);
}

bool K2Lca::query_denseI(ProbeOracle& oracle, VertexId u, VertexId v) const {
  Session s(*this, oracle);
  return tree_rule(s, u, v);
}

bool K2Lca::query_denseB(ProbeOracle& oracle, VertexId u, VertexId v) const {
  Session s(*this, oracle);
  return cluster_rules(s, u, v);
}

}  // namespace lcaspan
