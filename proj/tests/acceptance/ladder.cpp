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

// Criteria 1-3: stretch, size and probes of the 3- and 5-spanners on G(n, p).

#include <algorithm>
#include <cmath>
#include <functional>
#include <iostream>
#include <map>

#include "harness.hpp"
#include "lcaspan/generators.hpp"
#include "lcaspan/spanner3.hpp"
#include "lcaspan/spanner5.hpp"

namespace acceptance {

namespace {

const std::vector<std::size_t> kSizes{200, 500, 1000, 2000};
constexpr std::size_t kFitSize = 200;
constexpr std::uint64_t kSeeds = 20;
constexpr std::uint64_t kMinGoodSeeds = 19;   // size and probe bounds
constexpr std::uint64_t kMaxFailureSeeds = 1; // seeds with any failure event

struct Family {
  std::string name;
  std::function<double(std::size_t)> p;
};

// Average degree 5, average degree 2 sqrt(n), and p = 1/2.
const std::vector<Family>& families() {
  static const std::vector<Family> f{
      {"sparse", [](std::size_t n) { return 5.0 / static_cast<double>(n - 1); }},
      {"medium", [](std::size_t n) { return 2.0 * std::sqrt(static_cast<double>(n)) / static_cast<double>(n - 1); }},
      {"dense", [](std::size_t) { return 0.5; }},
  };
  return f;
}

using LcaMaker = std::function<std::unique_ptr<SpannerLca>(const Graph&, std::uint64_t seed)>;

std::vector<Run> sweep(Group& group, const std::string& tag, const std::vector<Family>& fams,
                       const LcaMaker& make, unsigned bound,
                       const std::function<bool(const SpannerLca&, const Graph&)>& premise = {}) {
  std::vector<Run> runs;
  for (const Family& f : fams) {
    for (std::size_t n : kSizes) {
      for (std::uint64_t seed = 1; seed <= kSeeds; ++seed) {
        Graph g = generate(GnpModel{n, f.p(n)}, seed);
        auto lca = make(g, seed);
        if (premise && !premise(*lca, g)) {
          group.info(tag + " " + f.name + " n=" + std::to_string(n) + " seed=" + std::to_string(seed) +
                     ": premise fails, instance skipped");
          continue;
        }
        Run r = run_spanner(*lca, g, bound);
        r.family = tag + "/" + f.name;
        r.seed = seed;
        group.record(r);
        runs.push_back(r);
      }
      std::cerr << tag << " " << f.name << " n=" << n << " done" << std::endl;
    }
  }
  return runs;
}

struct FitCheck {
  bool pass = true;
  double c_size = 0;
  double c_probe = 0;
  std::vector<std::string> notes;
};

// Constants are the worst ratios at n = 200 over every family; each larger
// (family, n) cell must then meet both bounds on >= 19 of 20 seeds and show
// failure events on at most one seed.
FitCheck fit_and_check(const std::vector<Run>& runs) {
  FitCheck out;
  std::vector<FitRun> size_fit, probe_fit;
  for (const Run& r : runs) {
    if (r.n != kFitSize) continue;
    out.c_size = std::max(out.c_size, static_cast<double>(r.edges) / r.size_shape);
    out.c_probe = std::max(out.c_probe, static_cast<double>(r.max_probes) / r.probe_shape);
  }
  std::map<std::pair<std::string, std::size_t>, std::pair<std::uint64_t, std::uint64_t>> cells;
  std::map<std::pair<std::string, std::size_t>, std::uint64_t> counts;
  for (const Run& r : runs) {
    auto key = std::make_pair(r.family, r.n);
    auto& [good, failing] = cells[key];
    ++counts[key];
    if (r.failures > 0) ++failing;
    if (r.n == kFitSize) continue;
    const bool ok = static_cast<double>(r.edges) <= out.c_size * r.size_shape &&
                    static_cast<double>(r.max_probes) <= out.c_probe * r.probe_shape;
    if (ok) ++good;
  }
  for (const auto& [key, v] : cells) {
    const auto& [good, failing] = v;
    const std::uint64_t total = counts[key];
    std::string cell = key.first + " n=" + std::to_string(key.second);
    if (key.second != kFitSize && (good < kMinGoodSeeds || total < kSeeds)) {
      out.pass = false;
      out.notes.push_back(cell + ": bounds hold on " + std::to_string(good) + "/" + std::to_string(total));
    }
    if (failing > kMaxFailureSeeds) {
      out.pass = false;
      out.notes.push_back(cell + ": failure events on " + std::to_string(failing) + " seeds");
    }
  }
  return out;
}

std::size_t total_violations(const std::vector<Run>& runs) {
  std::size_t v = 0;
  for (const Run& r : runs) v += r.violations;
  return v;
}

void print_cells(Group& group, const std::vector<Run>& runs) {
  std::map<std::pair<std::string, std::size_t>, std::vector<const Run*>> cells;
  for (const Run& r : runs) cells[{r.family, r.n}].push_back(&r);
  for (const auto& [key, rs] : cells) {
    double edges = 0, probes = 0, m = 0;
    unsigned stretch = 0;
    for (const Run* r : rs) {
      m += static_cast<double>(r->m);
      edges += static_cast<double>(r->edges);
      probes = std::max(probes, static_cast<double>(r->max_probes));
      stretch = std::max(stretch, r->max_stretch);
    }
    group.info(key.first + " n=" + std::to_string(key.second) + ": mean m=" + fmt(m / rs.size(), 6) +
               " mean|H|=" + fmt(edges / rs.size(), 6) + " max probes=" + fmt(probes, 6) +
               " max stretch=" + std::to_string(stretch));
  }
}

}  // namespace

int run_spanner3(Group& group) {
  LcaMaker make = [](const Graph& g, std::uint64_t seed) {
    return std::make_unique<Spanner3Lca>(g.n(), g.id_bits(), seed);
  };
  std::vector<Run> runs = sweep(group, "spanner3", families(), make, 3);
  print_cells(group, runs);
  const std::size_t v = total_violations(runs);
  group.verdict(1, v == 0,
                "3-spanner stretch: " + std::to_string(v) + " edges with dist_H > 3 over " +
                    std::to_string(runs.size()) + " spanners (tolerance 0)");
  FitCheck fit = fit_and_check(runs);
  for (const auto& note : fit.notes) group.info(note);
  group.verdict(2, fit.pass,
                "3-spanner size/probes: C=" + fmt(fit.c_size) + " for n^1.5 log n, C'=" + fmt(fit.c_probe) +
                    " for n^0.75 log^2 n, fitted at n=200; >= 19/20 seeds per cell, <= 1 failure seed");
  return group.exit_code();
}

int run_spanner5(Group& group) {
  LcaMaker make3 = [](const Graph& g, std::uint64_t seed) {
    return std::make_unique<Spanner5Lca>(g.n(), g.id_bits(), seed);
  };
  std::vector<Run> r3 = sweep(group, "spanner5_r3", families(), make3, 5);
  print_cells(group, r3);

  // r = 4 needs minimum degree MedDeg = n^(3/8); the medium family has it.
  LcaMaker make4 = [](const Graph& g, std::uint64_t seed) {
    Spanner5Config c;
    c.r = 4;
    return std::make_unique<Spanner5Lca>(g.n(), g.id_bits(), seed, c);
  };
  auto premise = [](const SpannerLca& lca, const Graph& g) {
    return g.min_degree() >= static_cast<const Spanner5Lca&>(lca).params().med_deg;
  };
  std::vector<Family> medium{families()[1]};
  std::vector<Run> r4 = sweep(group, "spanner5_r4", medium, make4, 5, premise);
  print_cells(group, r4);

  const std::size_t v = total_violations(r3) + total_violations(r4);
  FitCheck f3 = fit_and_check(r3);
  FitCheck f4 = fit_and_check(r4);
  for (const auto& note : f3.notes) group.info(note);
  for (const auto& note : f4.notes) group.info(note);
  const bool pass = v == 0 && f3.pass && f4.pass;
  group.verdict(3, pass,
                "5-spanner: " + std::to_string(v) + " edges with dist_H > 5 over " +
                    std::to_string(r3.size() + r4.size()) + " spanners (tolerance 0); r=3 C=" +
                    fmt(f3.c_size) + " for n^(4/3) log^2 n, C'=" + fmt(f3.c_probe) +
                    " for n^(5/6) log^3 n; r=4 min-degree C=" + fmt(f4.c_size) +
                    " for n^(5/4) log^2 n, C'=" + fmt(f4.c_probe) +
                    " for n^(7/8) log^3 n; fitted at n=200, >= 19/20 seeds per cell");
  return group.exit_code();
}

}  // namespace acceptance
