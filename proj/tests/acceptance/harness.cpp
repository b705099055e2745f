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

#include "harness.hpp"

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <sstream>

namespace acceptance {

Run run_spanner(const SpannerLca& lca, const Graph& g, unsigned stretch_bound,
                const MaterializeOptions& options) {
  Run r;
  r.n = g.n();
  r.m = g.m();
  r.param = lca.param();
  r.max_degree = g.max_degree();
  MaterializedSpanner h = materialize(lca, g, options);
  StretchResult st = stretch_check(g, h.kept_edges(), stretch_bound);
  r.edges = h.edge_count();
  r.max_stretch = st.max_stretch;
  r.violations = st.violations.size();
  for (const auto& t : h.probes) {
    r.max_probes = std::max(r.max_probes, t.total());
    r.mean_probes += static_cast<double>(t.total());
  }
  if (!h.probes.empty()) r.mean_probes /= static_cast<double>(h.probes.size());
  r.failures = h.failure_events;
  r.budget_exceeded = h.budget_exceeded;
  r.sealed_breaches = h.sealed_breaches;
  const double n = static_cast<double>(std::max<std::size_t>(g.n(), 2));
  r.size_shape = lca.size_shape(n);
  r.probe_shape = lca.probe_shape(n, static_cast<double>(r.max_degree));
  return r;
}

Group::Group(std::string name, std::string out_dir) : name_(std::move(name)), out_dir_(std::move(out_dir)) {
  std::filesystem::create_directories(out_dir_);
  // A stale marker must not vouch for a run that died half way.
  std::filesystem::remove(out_dir_ + "/sealed_" + name_ + ".txt");
  csv_.open(out_dir_ + "/" + name_ + ".csv");
  csv_ << "family,n,m,param,seed,max_degree,edges,max_stretch,violations,max_probes,mean_probes,"
          "failures,budget_exceeded,sealed_breaches\n";
}

Group::~Group() {
  std::ofstream f(out_dir_ + "/sealed_" + name_ + ".txt");
  f << sealed_ << "\n";
}

void Group::info(const std::string& line) { std::cout << "  " << line << std::endl; }

void Group::verdict(int criterion, bool pass, const std::string& detail) {
  std::cout << "[criterion " << criterion << "] " << (pass ? "PASS" : "FAIL") << "  " << detail
            << std::endl;
  failed_ = failed_ || !pass;
}

void Group::record(const Run& r) {
  csv_ << r.family << "," << r.n << "," << r.m << "," << r.param << "," << r.seed << ","
       << r.max_degree << "," << r.edges << "," << r.max_stretch << "," << r.violations << ","
       << r.max_probes << "," << r.mean_probes << "," << r.failures << "," << r.budget_exceeded
       << "," << r.sealed_breaches << "\n";
  csv_.flush();
  add_sealed(r.sealed_breaches);
}

std::string fmt(double x, int digits) {
  std::ostringstream s;
  s.precision(digits);
  s << x;
  return s.str();
}

}  // namespace acceptance
