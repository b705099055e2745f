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

namespace lcaspan {

// Smallest t with 2^t >= n. ceil_log2(1) == 0.
unsigned ceil_log2(std::uint64_t n);

// Number of bits needed to write x; at least 1.
unsigned bit_width_at_least_one(std::uint64_t x);

// log2(n) as used in the sampling biases; clamped below at 1.
double log2_clamped(std::uint64_t n);

// Smallest integer x >= 1 with x^den >= n^num, computed exactly.
std::uint64_t ceil_pow(std::uint64_t n, unsigned num, unsigned den);

}  // namespace lcaspan
