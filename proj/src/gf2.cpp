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

#include "lcaspan/gf2.hpp"

#include <array>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace lcaspan {
namespace {

constexpr std::array<std::uint64_t, 65> kLowTerms = {
    0x0,                                                  // unused
    0x1,        0x3,       0x3,        0x3,        0x5,        0x3,        0x3,  // 1..7
    0x1B,                                                 // 8
    0x3,        0x9,       0x5,        0x9,        0x27,       0x21,       0x3,  // 9..15
    0x2B,                                                 // 16
    0x9,        0x9,       0x27,       0x9,        0x5,        0x3,        0x21,  // 17..23
    0x87,       0x9,       0x47,       0x27,       0x3,        0x5,        0x3,  // 24..30
    0x9,                                                  // 31
    0x8D,                                                 // 32
    0x401,      0x81,      0x5,        0x201,      0x207,      0x87,       0x11,  // 33..39
    0x8000007,  0x9,       0x81,       0x1007,     0x21,       0x20007,    0x3,  // 40..46
    0x21,       0x20007,   0x201,      0x207,      0x10000007, 0x9,        0x47,  // 47..53
    0x201,      0x81,      0x200007,   0x11,       0x80001,    0x1000007,  0x3,  // 54..60
    0x27,       0x20000001, 0x3,                                                 // 61..63
    0x1B,                                                 // 64
};

constexpr unsigned kTableWidth = 20;

std::uint64_t width_mask(unsigned w) { return w >= 64 ? ~0ULL : ((1ULL << w) - 1); }

std::vector<std::uint64_t> prime_factors(std::uint64_t x) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= x; ++p) {
    if (x % p == 0) {
      out.push_back(p);
      while (x % p == 0) x /= p;
    }
  }
  if (x > 1) out.push_back(x);
  return out;
}

std::uint64_t slow_pow(std::uint64_t base, std::uint64_t e, unsigned w) {
  std::uint64_t r = 1;
  while (e) {
    if (e & 1) r = gf2_mul_carryless(r, base, w);
    base = gf2_mul_carryless(base, base, w);
    e >>= 1;
  }
  return r;
}

}  // namespace

std::uint64_t irreducible_low_terms(unsigned width) {
  if (width < 1 || width > 64) throw std::invalid_argument("GF(2^w): width must be in 1..64");
  return kLowTerms[width];
}

std::uint64_t gf2_mul_carryless(std::uint64_t a, std::uint64_t b, unsigned width) {
  const std::uint64_t low = irreducible_low_terms(width);
  const std::uint64_t mask = width_mask(width);
  const std::uint64_t top = 1ULL << (width - 1);
  a &= mask;
  b &= mask;
  std::uint64_t r = 0;
  while (b) {
    if (b & 1) r ^= a;
    b >>= 1;
    bool carry = (a & top) != 0;
    a = (a << 1) & mask;
    if (carry) a ^= low;
  }
  return r;
}

Gf2Field::Gf2Field(unsigned width) : width_(width), mask_(width_mask(width)) {
  if (width > kTableWidth || width < 2) return;
  const std::uint64_t order = (1ULL << width) - 1;
  const auto factors = prime_factors(order);
  std::uint64_t gen = 0;
  for (std::uint64_t g = 2; g <= order; ++g) {
    bool primitive = true;
    for (std::uint64_t q : factors) {
      if (slow_pow(g, order / q, width) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = g;
      break;
    }
  }
  log_.assign(order + 1, 0);
  exp_.assign(2 * order, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < order; ++i) {
    exp_[i] = static_cast<std::uint32_t>(x);
    exp_[i + order] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = gf2_mul_carryless(x, gen, width);
  }
}

const Gf2Field& Gf2Field::of_width(unsigned width) {
  if (width < 1 || width > 64) throw std::invalid_argument("GF(2^w): width must be in 1..64");
  static std::array<std::unique_ptr<Gf2Field>, 65> fields;
  static std::array<std::once_flag, 65> once;
  std::call_once(once[width], [width] { fields[width].reset(new Gf2Field(width)); });
  return *fields[width];
}

std::uint64_t Gf2Field::mul(std::uint64_t a, std::uint64_t b) const {
  a &= mask_;
  b &= mask_;
  if (!log_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  if (width_ == 1) return a & b;
  return gf2_mul_carryless(a, b, width_);
}

}  // namespace lcaspan
