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

#include "lcaspan/math.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_int.hpp>

namespace lcaspan {

unsigned ceil_log2(std::uint64_t n) {
  if (n <= 1) return 0;
  return static_cast<unsigned>(std::bit_width(n - 1));
}

unsigned bit_width_at_least_one(std::uint64_t x) {
  return std::max(1u, static_cast<unsigned>(std::bit_width(x)));
}

double log2_clamped(std::uint64_t n) {
  return std::max(1.0, std::log2(static_cast<double>(std::max<std::uint64_t>(n, 1))));
}

std::uint64_t ceil_pow(std::uint64_t n, unsigned num, unsigned den) {
  if (den == 0) throw std::invalid_argument("ceil_pow: zero denominator");
  if (n <= 1 || num == 0) return 1;
  unsigned g = std::gcd(num, den);
  num /= g;
  den /= g;
  using boost::multiprecision::cpp_int;
  const cpp_int target = boost::multiprecision::pow(cpp_int(n), num);
  auto reaches = [&](std::uint64_t x) {
    return boost::multiprecision::pow(cpp_int(x), den) >= target;
  };
  double guess = std::pow(static_cast<double>(n), static_cast<double>(num) / den);
  std::uint64_t x = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(std::ceil(guess)));
  while (x > 1 && reaches(x - 1)) --x;
  while (!reaches(x)) ++x;
  return x;
}

}  // namespace lcaspan
