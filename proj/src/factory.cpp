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

#include "lcaspan/factory.hpp"

#include <functional>
#include <stdexcept>

#include "lcaspan/k2.hpp"
#include "lcaspan/spanner3.hpp"
#include "lcaspan/spanner5.hpp"

namespace lcaspan {

namespace {

using Setters = std::map<std::string, std::function<void(double)>>;

void apply(const ConstantOverrides& overrides, const Setters& setters, const std::string& algo) {
  for (const auto& [key, value] : overrides) {
    auto it = setters.find(key);
    if (it == setters.end()) throw std::invalid_argument(algo + ": unknown constant '" + key + "'");
    it->second(value);
  }
}

unsigned as_count(double v, const std::string& key) {
  if (v < 1 || v != static_cast<double>(static_cast<unsigned>(v))) {
    throw std::invalid_argument(key + " must be a positive integer");
  }
  return static_cast<unsigned>(v);
}

}  // namespace

const std::vector<std::string>& algorithm_names() {
  static const std::vector<std::string> names{"spanner3", "spanner5", "k2"};
  return names;
}

std::unique_ptr<SpannerLca> make_lca(const LcaSpec& spec) {
  if (spec.algo == "spanner3") {
    if (spec.param) throw std::invalid_argument("spanner3 takes no r or k");
    Spanner3Config c;
    apply(spec.constants,
          {{"c_center", [&](double v) { c.c_center = v; }},
           {"c_center_super", [&](double v) { c.c_center_super = v; }}},
          spec.algo);
    return std::make_unique<Spanner3Lca>(spec.n, spec.id_bits, spec.seed, c);
  }
  if (spec.algo == "spanner5") {
    Spanner5Config c;
    if (spec.param) c.r = *spec.param;
    apply(spec.constants,
          {{"r", [&](double v) { c.r = as_count(v, "r"); }},
           {"c_cell", [&](double v) { c.c_cell = v; }},
           {"c_rep", [&](double v) { c.c_rep = v; }},
           {"c_super", [&](double v) { c.c_super = v; }},
           {"c_super5", [&](double v) { c.c_super = v; }}},
          spec.algo);
    return std::make_unique<Spanner5Lca>(spec.n, spec.id_bits, spec.seed, c);
  }
  if (spec.algo == "k2") {
    K2Config c;
    if (spec.param) c.k = *spec.param;
    apply(spec.constants,
          {{"k", [&](double v) { c.k = as_count(v, "k"); }},
           {"c_L", [&](double v) { c.c_L = v; }},
           {"c_center", [&](double v) { c.c_center = v; }},
           {"c_q", [&](double v) { c.c_q = v; }},
           {"c_mark", [&](double v) { c.c_mark = v; }},
           {"c_phase", [&](double v) { c.c_phase = v; }},
           {"c_stretch", [&](double v) { c.c_stretch = v; }}},
          spec.algo);
    return std::make_unique<K2Lca>(spec.n, spec.id_bits, spec.seed, c);
  }
  throw std::invalid_argument("unknown algorithm '" + spec.algo + "'");
}

std::pair<std::string, double> parse_constant(const std::string& text) {
  const auto eq = text.find('=');
  if (eq == std::string::npos || eq == 0 || eq + 1 == text.size()) {
    throw std::invalid_argument("constant must look like KEY=VALUE: '" + text + "'");
  }
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text.substr(eq + 1), &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() - eq - 1) throw std::invalid_argument("bad constant value: '" + text + "'");
  return {text.substr(0, eq), value};
}

}  // namespace lcaspan
