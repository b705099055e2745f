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
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "lcaspan/lca.hpp"

namespace lcaspan {

// Overrides for the tunable constants, keyed by the names each algorithm
// reports from constants() (e.g. "c_center", "c_L").
using ConstantOverrides = std::map<std::string, double>;

struct LcaSpec {
  std::string algo;  // "spanner3", "spanner5" or "k2"
  std::uint64_t n = 0;
  unsigned id_bits = 1;
  std::uint64_t seed = 0;
  std::optional<unsigned> param;  // r for spanner5, k for k2
  ConstantOverrides constants;
};

// Throws std::invalid_argument on an unknown algorithm, an unknown constant,
// or a parameter given to an algorithm that takes none.
std::unique_ptr<SpannerLca> make_lca(const LcaSpec& spec);

const std::vector<std::string>& algorithm_names();

// "KEY=VALUE" -> (KEY, VALUE); throws std::invalid_argument when malformed.
std::pair<std::string, double> parse_constant(const std::string& text);

}  // namespace lcaspan
