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
#include <vector>

namespace lcaspan {

// Low-order terms of the irreducible polynomial used for GF(2^w), i.e. the
// modulus is x^w + (bits of the returned value). Widths 1..64.
//
//   w=8:  x^8  + x^4 + x^3 + x + 1
//   w=16: x^16 + x^5 + x^3 + x + 1
//   w=32: x^32 + x^7 + x^3 + x^2 + 1
//   w=64: x^64 + x^4 + x^3 + x + 1
// Other widths use a low-weight irreducible found by search (a trinomial
// where one exists).
std::uint64_t irreducible_low_terms(unsigned width);

// Shift-and-add multiplication modulo the fixed polynomial.
std::uint64_t gf2_mul_carryless(std::uint64_t a, std::uint64_t b, unsigned width);

// Arithmetic in GF(2^w). Widths up to 20 multiply through log/antilog
// tables built once per width; wider fields use the carry-less routine.
class Gf2Field {
 public:
  static const Gf2Field& of_width(unsigned width);

  unsigned width() const { return width_; }
  std::uint64_t mask() const { return mask_; }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;

 private:
  explicit Gf2Field(unsigned width);

  unsigned width_;
  std::uint64_t mask_;
  std::vector<std::uint32_t> log_;
  std::vector<std::uint32_t> exp_;  // doubled so log sums need no reduction
};

}  // namespace lcaspan
