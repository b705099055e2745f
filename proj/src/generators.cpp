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

#include "lcaspan/generators.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <unordered_set>
#include <vector>

namespace lcaspan {
namespace {

using Rng = std::mt19937_64;

std::uint64_t pair_key(std::size_t a, std::size_t b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

std::vector<VertexId> random_labels(std::size_t n, Rng& rng) {
  std::vector<std::uint64_t> pool(4 * n);
  std::iota(pool.begin(), pool.end(), 0);
  std::shuffle(pool.begin(), pool.end(), rng);
  std::vector<VertexId> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = VertexId{pool[i]};
  return labels;
}

Graph assemble(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges,
               Rng& rng) {
  std::vector<std::vector<VertexIndex>> nbrs(n);
  for (auto [a, b] : edges) {
    nbrs[a].push_back(static_cast<VertexIndex>(b));
    nbrs[b].push_back(static_cast<VertexIndex>(a));
  }
  for (auto& list : nbrs) std::shuffle(list.begin(), list.end(), rng);
  return Graph::from_adjacency(random_labels(n, rng), nbrs);
}

std::vector<std::pair<std::size_t, std::size_t>> gnp_edges(std::size_t n, double p, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (p <= 0.0) return edges;
  std::bernoulli_distribution coin(std::min(1.0, p));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      if (p >= 1.0 || coin(rng)) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> regular_edges(std::size_t n, std::size_t d,
                                                               Rng& rng) {
  // Circulant start, then degree-preserving double-edge swaps.
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::unordered_set<std::uint64_t> present;
  auto add = [&](std::size_t a, std::size_t b) {
    if (present.insert(pair_key(a, b)).second) edges.emplace_back(std::min(a, b), std::max(a, b));
  };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 1; s <= d / 2; ++s) add(i, (i + s) % n);
    if (d % 2 == 1) add(i, (i + n / 2) % n);
  }
  if (edges.size() < 2) return edges;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  const std::size_t attempts = 10 * edges.size();
  for (std::size_t t = 0; t < attempts; ++t) {
    std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, e] = edges[j];
    if (rng() & 1) std::swap(c, e);
    if (a == e || c == b || a == c || b == e) continue;
    if (present.count(pair_key(a, e)) || present.count(pair_key(c, b))) continue;
    present.erase(pair_key(a, b));
    present.erase(pair_key(c, e));
    present.insert(pair_key(a, e));
    present.insert(pair_key(c, b));
    edges[i] = {std::min(a, e), std::max(a, e)};
    edges[j] = {std::min(c, b), std::max(c, b)};
  }
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> clustered_edges(const ClusteredModel& m,
                                                                 Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::bernoulli_distribution in(std::clamp(m.p_in, 0.0, 1.0));
  std::bernoulli_distribution out(std::clamp(m.p_out, 0.0, 1.0));
  for (std::size_t a = 0; a < m.n; ++a) {
    for (std::size_t b = a + 1; b < m.n; ++b) {
      bool same = (a * m.blocks / m.n) == (b * m.blocks / m.n);
      if (same ? in(rng) : out(rng)) edges.emplace_back(a, b);
    }
  }
  return edges;
}

std::vector<std::pair<std::size_t, std::size_t>> bounded_edges(const BoundedModel& m, Rng& rng) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  if (m.n < 2) return edges;
  const auto target = static_cast<std::size_t>(m.avg_degree * static_cast<double>(m.n) / 2.0);
  std::vector<std::size_t> deg(m.n, 0);
  std::unordered_set<std::uint64_t> present;
  std::uniform_int_distribution<std::size_t> pick(0, m.n - 1);
  const std::size_t attempts = 50 * target + 100;
  for (std::size_t t = 0; t < attempts && edges.size() < target; ++t) {
    std::size_t a = pick(rng);
    std::size_t b = pick(rng);
    if (a == b || deg[a] >= m.max_degree || deg[b] >= m.max_degree) continue;
    if (!present.insert(pair_key(a, b)).second) continue;
    ++deg[a];
    ++deg[b];
    edges.emplace_back(std::min(a, b), std::max(a, b));
  }
  return edges;
}

std::vector<std::string> split(std::string_view text, char sep) {
  std::vector<std::string> parts;
  std::string cur;
  for (char c : text) {
    if (c == sep) {
      parts.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  parts.push_back(cur);
  return parts;
}

std::size_t to_count(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = std::stoull(s, &pos);
  if (pos != s.size()) throw GraphError("bad integer '" + s + "' in model");
  return static_cast<std::size_t>(v);
}

double to_real(const std::string& s) {
  std::size_t pos = 0;
  double v = std::stod(s, &pos);
  if (pos != s.size()) throw GraphError("bad number '" + s + "' in model");
  return v;
}

}  // namespace

Graph generate(const GraphModel& model, std::uint64_t gen_seed) {
  Rng rng(gen_seed);
  return std::visit(
      [&](const auto& m) -> Graph {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, GnpModel>) {
          if (m.p < 0.0 || m.p > 1.0) throw GraphError("gnp: p must lie in [0,1]");
          auto edges = gnp_edges(m.n, m.p, rng);
          return assemble(m.n, edges, rng);
        } else if constexpr (std::is_same_v<M, RegularModel>) {
          if (m.d >= m.n && m.n > 0) throw GraphError("regular: need d < n");
          if ((m.n * m.d) % 2 != 0) throw GraphError("regular: n*d must be even");
          auto edges = regular_edges(m.n, m.d, rng);
          return assemble(m.n, edges, rng);
        } else if constexpr (std::is_same_v<M, ClusteredModel>) {
          if (m.blocks == 0 || m.blocks > std::max<std::size_t>(m.n, 1)) {
            throw GraphError("clustered: need 1 <= blocks <= n");
          }
          auto edges = clustered_edges(m, rng);
          return assemble(m.n, edges, rng);
        } else {
          if (m.avg_degree < 0.0) throw GraphError("bounded: negative average degree");
          auto edges = bounded_edges(m, rng);
          return assemble(m.n, edges, rng);
        }
      },
      model);
}

GraphModel parse_model(std::string_view text) {
  auto parts = split(text, ':');
  const std::string& kind = parts[0];
  if (kind == "gnp" && parts.size() == 3) return GnpModel{to_count(parts[1]), to_real(parts[2])};
  if (kind == "regular" && parts.size() == 3) {
    return RegularModel{to_count(parts[1]), to_count(parts[2])};
  }
  if (kind == "clustered" && (parts.size() == 3 || parts.size() == 5)) {
    ClusteredModel m{to_count(parts[1]), to_count(parts[2])};
    if (parts.size() == 5) {
      m.p_in = to_real(parts[3]);
      m.p_out = to_real(parts[4]);
    }
    return m;
  }
  if (kind == "bounded" && parts.size() == 4) {
    return BoundedModel{to_count(parts[1]), to_real(parts[2]), to_count(parts[3])};
  }
  throw GraphError("unrecognized graph model '" + std::string(text) + "'");
}

std::string describe(const GraphModel& model) {
  std::ostringstream out;
  std::visit(
      [&](const auto& m) {
        using M = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<M, GnpModel>) {
          out << "gnp:" << m.n << ":" << m.p;
        } else if constexpr (std::is_same_v<M, RegularModel>) {
          out << "regular:" << m.n << ":" << m.d;
        } else if constexpr (std::is_same_v<M, ClusteredModel>) {
          out << "clustered:" << m.n << ":" << m.blocks << ":" << m.p_in << ":" << m.p_out;
        } else {
          out << "bounded:" << m.n << ":" << m.avg_degree << ":" << m.max_degree;
        }
      },
      model);
  return out.str();
}

std::size_t model_vertex_count(const GraphModel& model) {
  return std::visit([](const auto& m) { return m.n; }, model);
}

GraphModel with_vertex_count(GraphModel model, std::size_t n) {
  std::visit([n](auto& m) { m.n = n; }, model);
  return model;
}

Graph read_graph(std::istream& in) {
  std::string line;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<std::uint64_t> listed;
  bool have_listed = false;
  std::vector<std::pair<std::uint64_t, std::uint64_t>> raw;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) {
      std::string comment = line.substr(hash + 1);
      const std::string tag = " vertices:";
      if (comment.rfind(tag, 0) == 0) {
        std::istringstream ids(comment.substr(tag.size()));
        std::uint64_t id;
        while (ids >> id) listed.push_back(id);
        have_listed = true;
      }
      line.resize(hash);
    }
    std::istringstream fields(line);
    std::uint64_t a;
    std::uint64_t b;
    if (!(fields >> a)) continue;
    if (!(fields >> b)) throw GraphError("line " + std::to_string(line_no) + ": expected two fields");
    std::string extra;
    if (fields >> extra) throw GraphError("line " + std::to_string(line_no) + ": trailing data");
    if (!have_header) {
      n = static_cast<std::size_t>(a);
      m = static_cast<std::size_t>(b);
      have_header = true;
    } else {
      raw.emplace_back(a, b);
    }
  }
  if (!have_header) throw GraphError("missing 'n m' header");
  if (raw.size() != m) {
    throw GraphError("header announces " + std::to_string(m) + " edges, found " +
                     std::to_string(raw.size()));
  }

  std::vector<VertexId> labels;
  if (have_listed) {
    if (listed.size() != n) throw GraphError("vertex directive does not list n labels");
    for (auto id : listed) labels.push_back(VertexId{id});
  } else {
    bool small = std::all_of(raw.begin(), raw.end(), [n](auto e) { return e.first < n && e.second < n; });
    if (small) {
      for (std::size_t i = 0; i < n; ++i) labels.push_back(VertexId{i});
    } else {
      std::unordered_set<std::uint64_t> seen;
      for (auto [a, b] : raw) {
        if (seen.insert(a).second) labels.push_back(VertexId{a});
        if (seen.insert(b).second) labels.push_back(VertexId{b});
      }
      if (labels.size() > n) throw GraphError("more distinct labels than n");
      for (std::uint64_t id = 0; labels.size() < n; ++id) {
        if (seen.insert(id).second) labels.push_back(VertexId{id});
      }
    }
  }
  std::vector<LabelEdge> edges;
  edges.reserve(raw.size());
  for (auto [a, b] : raw) edges.emplace_back(VertexId{a}, VertexId{b});
  return Graph::build_labeled(std::move(labels), edges);
}

Graph read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphError("cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  const auto& labels = g.vertices();
  out << g.n() << " " << g.m() << "\n";
  bool identity = true;
  for (std::size_t i = 0; i < labels.size(); ++i) identity = identity && labels[i].label == i;
  if (!identity) {
    out << "# vertices:";
    for (VertexId v : labels) out << " " << v.label;
    out << "\n";
  }
  // Edges go out by list position (every vertex's first slot, then every
  // second slot, ...). Reading the file back keeps the edge set and labels;
  // the adjacency order becomes the file order, which is as arbitrary as the
  // original but not always identical to it.
  std::unordered_set<std::uint64_t> written;
  written.reserve(g.m() * 2);
  std::size_t max_deg = g.max_degree();
  for (std::size_t p = 0; p < max_deg; ++p) {
    for (std::size_t a = 0; a < g.n(); ++a) {
      const auto& list = g.neighbors(static_cast<VertexIndex>(a));
      if (p >= list.size()) continue;
      VertexIndex b = list[p].neighbor;
      if (written.insert(pair_key(a, b)).second) {
        out << labels[a].label << " " << labels[b].label << "\n";
      }
    }
  }
}

void write_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphError("cannot write " + path);
  write_graph(out, g);
}

}  // namespace lcaspan
