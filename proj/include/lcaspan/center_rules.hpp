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

#include <cstddef>
#include <vector>

#include "lcaspan/hashing.hpp"
#include "lcaspan/lca.hpp"
#include "lcaspan/probe_oracle.hpp"

namespace lcaspan {

struct CenterEntry {
  VertexId center;
  std::size_t index;  // 1-based position in the owner's list
};

// Multiple-center set: heads among the first min(window, deg) neighbors.
struct MultiCenterSet {
  VertexId owner;
  std::size_t window = 0;
  std::vector<CenterEntry> centers;

  bool empty() const { return centers.empty(); }
};

// `degree` is the owner's degree, already probed by the caller.
MultiCenterSet center_set(ProbeOracle& oracle, VertexId owner, std::size_t degree,
                          std::size_t window, const CoinFlipper& is_center);

// s is in the center set of w iff s sits within w's first `window` slots.
// Exactly one ADJACENCY probe.
bool is_cluster_member(ProbeOracle& oracle, VertexId w, VertexId s, std::size_t window);

// True iff some center of `target` is held by none of scanner's neighbors at
// positions [first, last]. Stops as soon as every center is covered.
bool reveals_new_center(ProbeOracle& oracle, VertexId scanner, std::size_t first,
                        std::size_t last, const MultiCenterSet& target, std::size_t window);

// Block containing 1-based position `pos` in a list of length `degree`:
// width-`block` slices, the last one absorbing the remainder.
struct BlockRange {
  std::size_t first;
  std::size_t last;
};
BlockRange block_of(std::size_t pos, std::size_t degree, std::size_t block);

// Block rule with threshold t (block width and center window): keep
// (scanner, target) if some center of target's window-t set is held by no
// neighbor of scanner listed earlier in target's block. A target of degree
// above t with no center is a sampling failure and is kept.
Answer block_rule(ProbeOracle& oracle, VertexId scanner, std::size_t scanner_degree,
                  VertexId target, std::size_t target_degree, std::size_t target_pos,
                  std::size_t threshold, const CoinFlipper& is_center);

}  // namespace lcaspan
