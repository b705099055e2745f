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
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include "lcaspan/graph.hpp"

namespace lcaspan {

struct GnpModel {
  std::size_t n = 0;
  double p = 0.0;
};

struct RegularModel {
  std::size_t n = 0;
  std::size_t d = 0;
};

// Planted partition: `blocks` near-equal groups, edge probability p_in inside
// a group and p_out across groups.
struct ClusteredModel {
  std::size_t n = 0;
  std::size_t blocks = 1;
  double p_in = 0.5;
  double p_out = 0.01;
};

// G(n, p) with p = avg_degree/(n-1), dropping any pair that would push an
// endpoint past max_degree. Used for the bounded-degree instances.
struct BoundedModel {
  std::size_t n = 0;
  double avg_degree = 4.0;
  std::size_t max_degree = 8;
};

using GraphModel = std::variant<GnpModel, RegularModel, ClusteredModel, BoundedModel>;

// Deterministic in (model, gen_seed). Labels are a random injection into
// [0, 4n) and every adjacency list is independently shuffled.
Graph generate(const GraphModel& model, std::uint64_t gen_seed);

// "gnp:N:P", "regular:N:D", "clustered:N:B[:PIN:POUT]", "bounded:N:AVG:MAX".
GraphModel parse_model(std::string_view text);
std::string describe(const GraphModel& model);
std::size_t model_vertex_count(const GraphModel& model);
GraphModel with_vertex_count(GraphModel model, std::size_t n);

// Text edge-list format: "n m", then m lines "u v"; '#' starts a comment.
// When labels are not exactly 0..n-1 the writer adds a "# vertices:" line
// listing them so isolated vertices survive a round trip.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const Graph& g);
void write_graph_file(const std::string& path, const Graph& g);

}  // namespace lcaspan
