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

#include "lcaspan/center_rules.hpp"

#include <algorithm>
#include <stdexcept>

namespace lcaspan {

MultiCenterSet center_set(ProbeOracle& oracle, VertexId owner, std::size_t degree,
                          std::size_t window, const CoinFlipper& is_center) {
  MultiCenterSet out{owner, window, {}};
  const std::size_t limit = std::min(window, degree);
  for (std::size_t i = 1; i <= limit; ++i) {
    auto w = oracle.neighbor(owner, i);
    if (!w) break;
    if (is_center(*w)) out.centers.push_back({*w, i});
  }
  return out;
}

bool is_cluster_member(ProbeOracle& oracle, VertexId w, VertexId s, std::size_t window) {
  auto pos = oracle.adjacency(w, s);
  return pos && *pos <= window;
}

bool reveals_new_center(ProbeOracle& oracle, VertexId scanner, std::size_t first,
                        std::size_t last, const MultiCenterSet& target, std::size_t window) {
  if (target.empty()) return false;
  std::vector<char> covered(target.centers.size(), 0);
  std::size_t remaining = covered.size();
  for (std::size_t q = first; q <= last && remaining > 0; ++q) {
    auto x = oracle.neighbor(scanner, q);
    if (!x) break;
    for (std::size_t c = 0; c < covered.size(); ++c) {
      if (covered[c]) continue;
      if (is_cluster_member(oracle, *x, target.centers[c].center, window)) {
        covered[c] = 1;
        --remaining;
      }
    }
  }
  return remaining > 0;
}

BlockRange block_of(std::size_t pos, std::size_t degree, std::size_t block) {
  if (pos < 1 || pos > degree || block == 0) throw std::invalid_argument("block_of: bad position");
  const std::size_t blocks = std::max<std::size_t>(1, degree / block);
  const std::size_t b = std::min((pos - 1) / block, blocks - 1);
  const std::size_t first = b * block + 1;
  const std::size_t last = (b + 1 == blocks) ? degree : first + block - 1;
  return {first, last};
}

Answer block_rule(ProbeOracle& oracle, VertexId scanner, std::size_t scanner_degree,
                  VertexId target, std::size_t target_degree, std::size_t target_pos,
                  std::size_t threshold, const CoinFlipper& is_center) {
  MultiCenterSet centers = center_set(oracle, target, target_degree, threshold, is_center);
  if (centers.empty()) return {target_degree > threshold, target_degree > threshold ? 1u : 0u};
  BlockRange blk = block_of(target_pos, scanner_degree, threshold);
  return {reveals_new_center(oracle, scanner, blk.first, target_pos - 1, centers, threshold), 0};
}

}  // namespace lcaspan
