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
#include <string>
#include <utility>
#include <vector>

#include "lcaspan/probe_oracle.hpp"

namespace lcaspan {

struct Answer {
  bool keep = false;
  // Number of w.h.p.-excluded fallbacks that forced this answer to YES.
  unsigned failure_events = 0;
};

using NamedConstants = std::vector<std::pair<std::string, double>>;

// A spanner LCA: for a fixed (n, ID width, seed) it answers "is (u, v) in H?"
// for edges of the graph behind the oracle, touching the graph only through
// probes. Implementations hold no state that depends on earlier queries.
class SpannerLca {
 public:
  virtual ~SpannerLca() = default;

  virtual std::string name() const = 0;
  virtual Answer decide(ProbeOracle& oracle, VertexId u, VertexId v) const = 0;
  bool query(ProbeOracle& oracle, VertexId u, VertexId v) const { return decide(oracle, u, v).keep; }

  // Stretch bound the materialized spanner must meet.
  virtual double stretch_bound() const = 0;
  // r for spanner5, k for k2, 0 otherwise.
  virtual unsigned param() const { return 0; }
  // Total seed bits drawn across every hash this instance uses.
  virtual std::uint64_t seed_bits() const = 0;
  virtual NamedConstants constants() const = 0;

  // Size and probe bounds without constants, for fitting.
  virtual double size_shape(double n) const = 0;
  virtual double probe_shape(double n, double max_degree) const = 0;
};

}  // namespace lcaspan
