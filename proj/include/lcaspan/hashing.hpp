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
#include <string_view>
#include <vector>

#include "lcaspan/gf2.hpp"
#include "lcaspan/graph.hpp"

namespace lcaspan {

// Independence order used by every hash in the library: max(2, 2*ceil(log2 n)).
unsigned independence_order(std::uint64_t n);

std::uint64_t splitmix64(std::uint64_t x);
std::uint64_t fnv1a64(std::string_view s);

// Counter-mode expansion of a 64-bit master seed into a bit stream.
//
//   key    = splitmix64(master ^ fnv1a64(role))
//   word_j = splitmix64(key + j * 0x9E3779B97F4A7C15)
//
// Bits are consumed from word_0 upward, least significant bit first.
class SeedExpander {
 public:
  SeedExpander(std::uint64_t master, std::string_view role);

  // The next `bits` bits of the stream (1..64), packed low-first.
  std::uint64_t next_bits(unsigned bits);
  std::uint64_t bits_consumed() const { return consumed_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  std::uint64_t buffer_ = 0;
  unsigned available_ = 0;
  std::uint64_t consumed_ = 0;
};

// h(x) = low beta bits of sum_i c_i x^i over GF(2^w), w = max(gamma, beta).
// Drawn with d coefficients, the family is d-wise independent.
class HashFunction {
 public:
  HashFunction(unsigned input_bits, unsigned output_bits, std::vector<std::uint64_t> coefficients);

  std::uint64_t operator()(std::uint64_t x) const;

  unsigned input_bits() const { return gamma_; }
  unsigned output_bits() const { return beta_; }
  unsigned field_width() const { return width_; }
  unsigned independence() const { return static_cast<unsigned>(coeffs_.size()); }
  const std::vector<std::uint64_t>& coefficients() const { return coeffs_; }
  std::uint64_t seed_bits() const { return coeffs_.size() * width_; }

 private:
  unsigned gamma_;
  unsigned beta_;
  unsigned width_;
  std::uint64_t out_mask_;
  std::vector<std::uint64_t> coeffs_;
  const Gf2Field* field_;
};

// Coefficients are the next d * max(gamma, beta) bits of SeedExpander(seed, role).
HashFunction draw_hash(std::uint64_t seed, std::string_view role, unsigned gamma, unsigned beta,
                       unsigned d);

// beta = floor(log2(1/p)), so the realized bias 2^-beta lies in [p, 2p).
unsigned coin_beta(double p);

// Head iff h(id) == 0. h must have beta == coin_beta(p).
bool coin(const HashFunction& h, VertexId id, double p);

// A seeded coin with bias p over IDs of a fixed bit width. Small ID
// universes are tabulated up front; answers are identical either way.
class CoinFlipper {
 public:
  CoinFlipper(std::uint64_t seed, std::string_view role, double p, unsigned id_bits, unsigned d);

  bool operator()(VertexId id) const;

  double bias() const { return p_; }
  double realized_bias() const;
  unsigned output_bits() const { return beta_; }
  std::uint64_t seed_bits() const;
  const HashFunction& hash() const { return hash_; }

 private:
  double p_;
  unsigned beta_;
  HashFunction hash_;
  std::vector<std::uint64_t> heads_;  // bitset over [0, 2^id_bits) when tabulated
};

// r(v) = R_1(v) . R_2(v) . ... . R_T(v), each R_i a separate N-bit hash of
// ID(v), with R_1 in the most significant position.
class RankAssignment {
 public:
  RankAssignment(std::uint64_t seed, std::string_view role, std::uint64_t n, unsigned k,
                 unsigned id_bits, unsigned d);

  unsigned blocks() const { return static_cast<unsigned>(hashes_.size()); }
  unsigned bits_per_block() const { return block_bits_; }
  unsigned width() const { return blocks() * block_bits_; }

  std::uint64_t block(unsigned i, VertexId id) const;  // i in [0, blocks())
  std::uint64_t rank(VertexId id) const;
  std::uint64_t seed_bits() const;

 private:
  unsigned block_bits_;
  std::vector<HashFunction> hashes_;
};

// Draws `count` indices in [1, range] for an ID, one hash evaluation per
// slot on input (ID << slot_bits | slot).
class IndexSampler {
 public:
  IndexSampler(std::uint64_t seed, std::string_view role, unsigned id_bits, unsigned count,
               std::uint64_t max_range, unsigned d);

  std::uint64_t index(VertexId id, unsigned slot, std::uint64_t range) const;
  std::vector<std::uint64_t> sample(VertexId id, std::uint64_t range) const;

  unsigned count() const { return count_; }
  std::uint64_t seed_bits() const { return hash_.seed_bits(); }
  const HashFunction& hash() const { return hash_; }

 private:
  unsigned count_;
  unsigned slot_bits_;
  HashFunction hash_;
};

std::vector<std::uint64_t> sample_indices(std::uint64_t seed, std::string_view role,
                                          unsigned id_bits, VertexId id, std::uint64_t range,
                                          unsigned count, unsigned d);

}  // namespace lcaspan
