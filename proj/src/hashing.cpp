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

#include "lcaspan/hashing.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "lcaspan/math.hpp"

namespace lcaspan {
namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;
constexpr unsigned kCoinTableBits = 16;

std::uint64_t low_mask(unsigned bits) { return bits >= 64 ? ~0ULL : ((1ULL << bits) - 1); }

}  // namespace

unsigned independence_order(std::uint64_t n) { return std::max(2u, 2 * ceil_log2(n)); }

std::uint64_t splitmix64(std::uint64_t x) {
  x += kGolden;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ULL;
  }
  return h;
}

SeedExpander::SeedExpander(std::uint64_t master, std::string_view role)
    : key_(splitmix64(master ^ fnv1a64(role))) {}

std::uint64_t SeedExpander::next_bits(unsigned bits) {
  if (bits == 0 || bits > 64) throw std::invalid_argument("SeedExpander: bits must be in 1..64");
  std::uint64_t out = 0;
  unsigned got = 0;
  while (got < bits) {
    if (available_ == 0) {
      buffer_ = splitmix64(key_ + counter_ * kGolden);
      ++counter_;
      available_ = 64;
    }
    unsigned take = std::min(bits - got, available_);
    out |= (buffer_ & low_mask(take)) << got;
    buffer_ = take >= 64 ? 0 : buffer_ >> take;
    available_ -= take;
    got += take;
  }
  consumed_ += bits;
  return out;
}

HashFunction::HashFunction(unsigned input_bits, unsigned output_bits,
                           std::vector<std::uint64_t> coefficients)
    : gamma_(input_bits),
      beta_(output_bits),
      width_(std::max({input_bits, output_bits, 1u})),
      out_mask_(low_mask(output_bits)),
      coeffs_(std::move(coefficients)) {
  if (width_ > 64) throw std::invalid_argument("HashFunction: widths above 64 bits");
  if (coeffs_.empty()) throw std::invalid_argument("HashFunction: need d >= 1 coefficients");
  field_ = &Gf2Field::of_width(width_);
  for (auto& c : coeffs_) c &= field_->mask();
}

std::uint64_t HashFunction::operator()(std::uint64_t x) const {
  if (gamma_ < 64 && (x >> gamma_) != 0) throw std::out_of_range("HashFunction: input too wide");
  std::uint64_t acc = coeffs_.back();
  for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = field_->mul(acc, x) ^ coeffs_[i];
  return acc & out_mask_;
}

HashFunction draw_hash(std::uint64_t seed, std::string_view role, unsigned gamma, unsigned beta,
                       unsigned d) {
  if (d < 1 || gamma < 1) throw std::invalid_argument("draw_hash: need d >= 1 and gamma >= 1");
  const unsigned w = std::max(gamma, beta);
  SeedExpander ex(seed, role);
  std::vector<std::uint64_t> coeffs(d);
  for (auto& c : coeffs) c = ex.next_bits(w);
  return HashFunction(gamma, beta, std::move(coeffs));
}

unsigned coin_beta(double p) {
  if (!(p > 0.0)) throw std::invalid_argument("coin: bias must be positive");
  unsigned b = 0;
  while (b < 63 && std::ldexp(1.0, -static_cast<int>(b + 1)) >= p) ++b;
  return b;
}

bool coin(const HashFunction& h, VertexId id, double p) {
  if (h.output_bits() != coin_beta(p)) throw std::invalid_argument("coin: hash width does not match bias");
  return h(id.label) == 0;
}

CoinFlipper::CoinFlipper(std::uint64_t seed, std::string_view role, double p, unsigned id_bits,
                         unsigned d)
    : p_(std::min(p, 1.0)),
      beta_(coin_beta(p_)),
      hash_(beta_ == 0 ? HashFunction(id_bits, 0, {0}) : draw_hash(seed, role, id_bits, beta_, d)) {
  if (beta_ > 0 && id_bits <= kCoinTableBits) {
    const std::uint64_t universe = 1ULL << id_bits;
    heads_.assign((universe + 63) / 64, 0);
    for (std::uint64_t x = 0; x < universe; ++x) {
      if (hash_(x) == 0) heads_[x >> 6] |= 1ULL << (x & 63);
    }
  }
}

bool CoinFlipper::operator()(VertexId id) const {
  if (beta_ == 0) return true;
  if (!heads_.empty() && (id.label >> 6) < heads_.size()) {
    return (heads_[id.label >> 6] >> (id.label & 63)) & 1;
  }
  return hash_(id.label) == 0;
}

double CoinFlipper::realized_bias() const { return std::ldexp(1.0, -static_cast<int>(beta_)); }

std::uint64_t CoinFlipper::seed_bits() const { return beta_ == 0 ? 0 : hash_.seed_bits(); }

RankAssignment::RankAssignment(std::uint64_t seed, std::string_view role, std::uint64_t n,
                               unsigned k, unsigned id_bits, unsigned d) {
  if (k < 1) throw std::invalid_argument("RankAssignment: k must be >= 1");
  const unsigned log_n = std::max(1u, ceil_log2(n));
  block_bits_ = (log_n + k - 1) / k;
  if (static_cast<std::uint64_t>(k) * block_bits_ > 64) {
    throw std::invalid_argument("RankAssignment: rank wider than 64 bits");
  }
  const std::string base(role);
  for (unsigned i = 0; i < k; ++i) {
    hashes_.push_back(draw_hash(seed, base + "/block" + std::to_string(i), id_bits, block_bits_, d));
  }
}

std::uint64_t RankAssignment::block(unsigned i, VertexId id) const { return hashes_.at(i)(id.label); }

std::uint64_t RankAssignment::rank(VertexId id) const {
  std::uint64_t r = 0;
  for (const auto& h : hashes_) r = (r << block_bits_) | h(id.label);
  return r;
}

std::uint64_t RankAssignment::seed_bits() const {
  std::uint64_t total = 0;
  for (const auto& h : hashes_) total += h.seed_bits();
  return total;
}

IndexSampler::IndexSampler(std::uint64_t seed, std::string_view role, unsigned id_bits,
                           unsigned count, std::uint64_t max_range, unsigned d)
    : count_(count),
      slot_bits_(ceil_log2(std::max(count, 1u))),
      hash_(draw_hash(seed, role, id_bits + slot_bits_,
                      std::min(64u, ceil_log2(std::max<std::uint64_t>(max_range, 1)) + 8), d)) {
  if (id_bits + slot_bits_ > 64) throw std::invalid_argument("IndexSampler: input too wide");
}

std::uint64_t IndexSampler::index(VertexId id, unsigned slot, std::uint64_t range) const {
  if (range == 0) throw std::invalid_argument("IndexSampler: empty range");
  const std::uint64_t x = (id.label << slot_bits_) | slot;
  const unsigned __int128 scaled = static_cast<unsigned __int128>(hash_(x)) * range;
  return 1 + static_cast<std::uint64_t>(scaled >> hash_.output_bits());
}

std::vector<std::uint64_t> IndexSampler::sample(VertexId id, std::uint64_t range) const {
  std::vector<std::uint64_t> out(count_);
  for (unsigned s = 0; s < count_; ++s) out[s] = index(id, s, range);
  return out;
}

std::vector<std::uint64_t> sample_indices(std::uint64_t seed, std::string_view role,
                                          unsigned id_bits, VertexId id, std::uint64_t range,
                                          unsigned count, unsigned d) {
  return IndexSampler(seed, role, id_bits, count, range, d).sample(id, range);
}

}  // namespace lcaspan
