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

// Command-line driver: generate graphs, answer single queries, verify a
// materialized spanner, and sweep (n, seed) grids into CSV.

#include <atomic>
#include <chrono>
#include <cmath>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lcaspan/factory.hpp"
#include "lcaspan/generators.hpp"
#include "lcaspan/spanner5.hpp"
#include "lcaspan/verifier.hpp"

namespace {

using namespace lcaspan;
using Json = nlohmann::ordered_json;

constexpr int kExitViolation = 1;
constexpr int kExitBadInput = 2;

class BadInput : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string command;
  std::string graph_file;
  std::string gen_model;
  std::uint64_t gen_seed = 1;
  std::string algo = "spanner3";
  std::optional<unsigned> r;
  std::optional<unsigned> k;
  std::uint64_t seed = 1;
  std::vector<std::string> constants;  // KEY=VAL, as given
  std::string mode = "test";
  std::string out;
  double drop_fraction = 0.0;
  std::uint64_t fault_seed = 0;
  unsigned consistency_orders = 1;
  std::vector<std::size_t> ns;
  std::vector<std::uint64_t> seeds;
};

Json to_json(const RunConfig& c) {
  Json j;
  j["command"] = c.command;
  if (!c.graph_file.empty()) {
    j["graph"] = c.graph_file;
  } else if (!c.gen_model.empty()) {
    j["gen"] = c.gen_model;
    j["gen_seed"] = c.gen_seed;
  }
  j["algo"] = c.algo;
  j["r"] = c.r ? Json(*c.r) : Json(nullptr);
  j["k"] = c.k ? Json(*c.k) : Json(nullptr);
  j["seed"] = c.seed;
  j["constants"] = c.constants;
  j["mode"] = c.mode;
  j["out"] = c.out;
  j["drop_fraction"] = c.drop_fraction;
  j["fault_seed"] = c.fault_seed;
  if (c.command == "verify") j["consistency_orders"] = c.consistency_orders;
  if (c.command == "sweep") {
    j["ns"] = c.ns;
    j["seeds"] = c.seeds;
  }
  return j;
}

// Fields absent from the file keep their defaults. A full report is accepted
// too: its "config" member is used.
void load_config(const std::string& path, RunConfig& c) {
  std::ifstream in(path);
  if (!in) throw BadInput("cannot open config " + path);
  Json j = Json::parse(in);
  if (j.contains("config")) j = j["config"];
  auto get = [&](const char* key, auto& field) {
    if (j.contains(key) && !j[key].is_null()) j[key].get_to(field);
  };
  get("graph", c.graph_file);
  get("gen", c.gen_model);
  get("gen_seed", c.gen_seed);
  get("algo", c.algo);
  if (j.contains("r") && !j["r"].is_null()) c.r = j["r"].get<unsigned>();
  if (j.contains("k") && !j["k"].is_null()) c.k = j["k"].get<unsigned>();
  get("seed", c.seed);
  get("constants", c.constants);
  get("mode", c.mode);
  get("out", c.out);
  get("drop_fraction", c.drop_fraction);
  get("fault_seed", c.fault_seed);
  get("consistency_orders", c.consistency_orders);
  get("ns", c.ns);
  get("seeds", c.seeds);
}

std::string timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  std::ostringstream s;
  s << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return s.str();
}

struct Constants {
  ConstantOverrides overrides;
  std::optional<double> budget_multiplier;  // per-query cap = multiplier * probe shape
};

Constants split_constants(const std::vector<std::string>& given) {
  Constants c;
  for (const std::string& text : given) {
    auto [key, value] = parse_constant(text);
    if (key == "budget") {
      if (value <= 0) throw BadInput("budget multiplier must be positive");
      c.budget_multiplier = value;
    } else {
      c.overrides[key] = value;
    }
  }
  return c;
}

Graph load_graph(const RunConfig& c) {
  if (!c.graph_file.empty() && !c.gen_model.empty()) throw BadInput("give --graph or --gen, not both");
  if (!c.graph_file.empty()) return read_graph_file(c.graph_file);
  if (!c.gen_model.empty()) return generate(parse_model(c.gen_model), c.gen_seed);
  throw BadInput("need --graph FILE or --gen MODEL");
}

std::optional<unsigned> algo_param(const RunConfig& c) {
  if (c.algo == "spanner5") {
    if (c.k) throw BadInput("--k applies to k2 only");
    return c.r;
  }
  if (c.algo == "k2") {
    if (c.r) throw BadInput("--r applies to spanner5 only");
    return c.k;
  }
  if (c.r || c.k) throw BadInput(c.algo + " takes neither --r nor --k");
  return std::nullopt;
}

LcaSpec spec_for(const RunConfig& c, const Graph& g, std::uint64_t seed) {
  LcaSpec s;
  s.algo = c.algo;
  s.n = g.n();
  s.id_bits = g.id_bits();
  s.seed = seed;
  s.param = algo_param(c);
  s.constants = split_constants(c.constants).overrides;
  return s;
}

// Spanner5 with r > 3 assumes a minimum degree of MedDeg.
void check_premise(const SpannerLca& lca, const Graph& g) {
  if (lca.name() != "spanner5" || lca.param() <= 3 || g.n() == 0) return;
  const auto& p = static_cast<const Spanner5Lca&>(lca).params();
  if (g.min_degree() < p.med_deg) {
    throw BadInput("spanner5 with r=" + std::to_string(p.r) + " needs minimum degree >= " +
                   std::to_string(p.med_deg) + ", graph has " + std::to_string(g.min_degree()));
  }
}

MaterializeOptions materialize_options(const RunConfig& c, const SpannerLca& lca, const Graph& g) {
  MaterializeOptions o;
  const Constants k = split_constants(c.constants);
  if (k.budget_multiplier) {
    const double shape = lca.probe_shape(static_cast<double>(std::max<std::size_t>(g.n(), 2)),
                                         static_cast<double>(g.max_degree()));
    o.budget = static_cast<std::uint64_t>(std::ceil(*k.budget_multiplier * shape));
  }
  o.policy = c.mode == "bench" ? BudgetPolicy::kRecord : BudgetPolicy::kThrow;
  o.drop_fraction = c.drop_fraction;
  o.fault_seed = c.fault_seed;
  return o;
}

void emit(const RunConfig& c, const std::string& text) {
  if (c.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(c.out);
  if (!f) throw BadInput("cannot write " + c.out);
  f << text;
}

unsigned stretch_limit(const SpannerLca& lca) {
  return static_cast<unsigned>(std::floor(lca.stretch_bound()));
}

// ---- commands ----

int cmd_generate(const RunConfig& c) {
  if (c.gen_model.empty()) throw BadInput("generate needs --gen MODEL");
  Graph g = generate(parse_model(c.gen_model), c.gen_seed);
  std::ostringstream s;
  s << "# config: " << to_json(c).dump() << "\n";
  write_graph(s, g);
  emit(c, s.str());
  return 0;
}

int cmd_query(const RunConfig& c, std::uint64_t u, std::uint64_t v) {
  Graph g = load_graph(c);
  auto lca = make_lca(spec_for(c, g, c.seed));
  ProbeOracle base(g);
  if (!g.contains(VertexId{u}) || !g.contains(VertexId{v}) ||
      !g.has_edge(g.index_of(VertexId{u}), g.index_of(VertexId{v}))) {
    std::cerr << "(" << u << ", " << v << ") is not an edge\n";
    return kExitBadInput;
  }
  ProbeOracle session = base.fresh();
  const Constants k = split_constants(c.constants);
  if (k.budget_multiplier) {
    MaterializeOptions o = materialize_options(c, *lca, g);
    session = base.with_budget(*o.budget, o.policy);
  }
  Answer a = lca->decide(session, VertexId{u}, VertexId{v});
  Json j;
  j["config"] = to_json(c);
  j["u"] = u;
  j["v"] = v;
  j["answer"] = a.keep ? "YES" : "NO";
  j["probes"] = {{"neighbor", session.tally().neighbor_count},
                 {"degree", session.tally().degree_count},
                 {"adjacency", session.tally().adjacency_count},
                 {"total", session.tally().total()}};
  j["failure_events"] = a.failure_events;
  j["budget_exceeded"] = session.budget_exceeded();
  emit(c, j.dump() + "\n");
  return 0;
}

int cmd_verify(const RunConfig& c) {
  Graph g = load_graph(c);
  const LcaSpec spec = spec_for(c, g, c.seed);
  auto lca = make_lca(spec);
  check_premise(*lca, g);
  MaterializeOptions opt = materialize_options(c, *lca, g);

  Json j;
  j["config"] = to_json(c);
  bool ok = true;
  try {
    MaterializedSpanner h = materialize(*lca, g, opt);
    StretchResult st = stretch_check(g, h.kept_edges(), stretch_limit(*lca));
    VerificationReport rep = summarize(*lca, g, c.seed, h, st);
    LcaFactory factory = [&](std::uint64_t s) {
      LcaSpec copy = spec;
      copy.seed = s;
      return make_lca(copy);
    };
    ConsistencyResult cons = consistency_check(factory, g, c.seed, 1, c.consistency_orders);
    const double n = static_cast<double>(std::max<std::size_t>(g.n(), 2));
    const double delta = static_cast<double>(g.max_degree());
    j["report"] = lcaspan::to_json(rep);
    j["consistency"] = {{"consistent", cons.consistent},
                        {"runs", cons.runs},
                        {"disagreeing_edges", cons.disagreeing_edges}};
    j["fitted"] = {
        {"size_constant",
         fit_constant({{n, delta, static_cast<double>(rep.edge_count)}},
                      [&](double nn, double) { return lca->size_shape(nn); })},
        {"probe_constant",
         fit_constant({{n, delta, static_cast<double>(rep.max_probes)}},
                      [&](double nn, double d) { return lca->probe_shape(nn, d); })}};
    ok = rep.stretch_violations == 0 && rep.components_preserved && cons.consistent &&
         rep.sealed_breaches == 0 && (c.mode == "bench" || rep.budget_exceeded == 0);
  } catch (const ProbeBudgetExceeded& e) {
    j["error"] = std::string("probe budget exceeded: ") + e.what();
    ok = false;
  }
  j["status"] = ok ? "pass" : "fail";
  j["timestamp"] = timestamp();
  emit(c, j.dump(2) + "\n");
  return ok ? 0 : kExitViolation;
}

struct SweepRow {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::string line;
  bool ok = true;
};

SweepRow sweep_one(const RunConfig& c, std::size_t n, std::uint64_t seed) {
  SweepRow row{n, seed, "", true};
  std::ostringstream s;
  s << c.algo << "," << n << ",";
  try {
    Graph g = generate(with_vertex_count(parse_model(c.gen_model), n), seed);
    auto lca = make_lca(spec_for(c, g, seed));
    check_premise(*lca, g);
    MaterializedSpanner h = materialize(*lca, g, materialize_options(c, *lca, g));
    StretchResult st = stretch_check(g, h.kept_edges(), stretch_limit(*lca));
    VerificationReport rep = summarize(*lca, g, seed, h, st);
    s << rep.m << "," << rep.k_or_r << "," << seed << "," << rep.edge_count << ",";
    if (rep.max_stretch == kInfiniteDistance) {
      s << "inf";
    } else {
      s << rep.max_stretch;
    }
    s << "," << rep.max_probes << "," << rep.mean_probes << "," << rep.failure_events;
    row.ok = rep.stretch_violations == 0 && rep.sealed_breaches == 0;
  } catch (const std::exception& e) {
    std::cerr << "run n=" << n << " seed=" << seed << " failed: " << e.what() << "\n";
    s << ",," << seed << ",,error,,,";
    row.ok = false;
  }
  row.line = s.str();
  return row;
}

int cmd_sweep(const RunConfig& c, unsigned jobs) {
  if (c.gen_model.empty()) throw BadInput("sweep needs --gen MODEL");
  if (c.ns.empty() || c.seeds.empty()) throw BadInput("sweep needs non-empty --ns and --seeds");
  split_constants(c.constants);
  algo_param(c);
  std::vector<SweepRow> rows;
  for (std::size_t n : c.ns) {
    for (std::uint64_t seed : c.seeds) rows.push_back({n, seed, "", true});
  }
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rows.size();) rows[i] = sweep_one(c, rows[i].n, rows[i].seed);
  };
  std::vector<std::thread> pool;
  const unsigned workers = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(rows.size())));
  for (unsigned t = 0; t < workers; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();

  std::ostringstream s;
  s << "# config: " << to_json(c).dump() << "\n";
  s << "# timestamp: " << timestamp() << "\n";
  s << "algo,n,m,param,seed,edges,max_stretch,max_probes,mean_probes,failures\n";
  bool ok = true;
  for (const auto& r : rows) {
    s << r.line << "\n";
    ok = ok && r.ok;
  }
  emit(c, s.str());
  return ok ? 0 : kExitViolation;
}

void add_graph_flags(CLI::App* cmd, RunConfig& c) {
  auto* file = cmd->add_option("--graph", c.graph_file, "Edge-list file");
  auto* gen = cmd->add_option("--gen", c.gen_model,
                              "Generator: gnp:N:P, regular:N:D, clustered:N:B[:PIN:POUT], bounded:N:AVG:MAX");
  file->excludes(gen);
  cmd->add_option("--gen-seed", c.gen_seed, "Generator seed (defaults to --seed)");
}

void add_algo_flags(CLI::App* cmd, RunConfig& c) {
  cmd->add_option("--algo", c.algo, "Spanner LCA")
      ->check(CLI::IsMember({"spanner3", "spanner5", "k2"}));
  cmd->add_option("--r", c.r, "r for spanner5");
  cmd->add_option("--k", c.k, "k for k2");
  cmd->add_option("--constants", c.constants,
                  "KEY=VAL overrides; budget=M caps each query at M times the probe shape");
  cmd->add_option("--mode", c.mode, "test: budget overruns fail; bench: they are recorded")
      ->check(CLI::IsMember({"test", "bench"}));
}

// --config must be applied before parsing so that explicit flags override it.
std::string find_config_flag(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--config" && i + 1 < argc) return argv[i + 1];
    if (a.rfind("--config=", 0) == 0) return a.substr(9);
  }
  return {};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Local computation algorithms for graph spanners"};
  app.require_subcommand(1);
  RunConfig c;
  std::string config_file = find_config_flag(argc, argv);
  std::uint64_t u = 0, v = 0;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
  try {
    if (!config_file.empty()) load_config(config_file, c);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }

  app.add_option("--config", config_file, "Re-run a saved config or report; flags override it");
  app.add_option("--seed", c.seed, "Master seed");
  app.add_option("--out", c.out, "Output path (default stdout)");

  auto* gen = app.add_subcommand("generate", "Write a generated graph");
  gen->add_option("--gen", c.gen_model, "Generator spec");
  gen->add_option("--gen-seed", c.gen_seed, "Generator seed (defaults to --seed)");

  auto* query = app.add_subcommand("query", "Is (u, v) in the spanner?");
  add_graph_flags(query, c);
  add_algo_flags(query, c);
  query->add_option("u", u, "Endpoint label")->required();
  query->add_option("v", v, "Endpoint label")->required();

  auto* verify = app.add_subcommand("verify", "Materialize, check stretch and consistency");
  add_graph_flags(verify, c);
  add_algo_flags(verify, c);
  verify->add_option("--drop-fraction", c.drop_fraction, "Fault injection: drop this fraction of YES answers")
      ->check(CLI::Range(0.0, 1.0));
  verify->add_option("--fault-seed", c.fault_seed, "Seed for the dropped-answer hash");
  verify->add_option("--orders", c.consistency_orders, "Shuffled query orders for the consistency check");

  auto* sweep = app.add_subcommand("sweep", "Run an (n, seed) grid and write CSV");
  sweep->add_option("--gen", c.gen_model, "Generator spec; N is replaced per row");
  add_algo_flags(sweep, c);
  sweep->add_option("--ns", c.ns, "Vertex counts")->delimiter(',');
  sweep->add_option("--seeds", c.seeds, "Seeds")->delimiter(',');
  sweep->add_option("--jobs", jobs, "Parallel runs");

  // Flags may follow the subcommand too.
  for (CLI::App* sub : {gen, query, verify, sweep}) {
    sub->add_option("--seed", c.seed, "Master seed");
    sub->add_option("--out", c.out, "Output path (default stdout)");
    sub->add_option("--config", config_file, "Re-run a saved config or report; flags override it");
  }

  CLI11_PARSE(app, argc, argv);

  CLI::App* sub = app.get_subcommands().front();
  auto given = [&](const std::string& flag) {
    try {
      return sub->count(flag) > 0;
    } catch (const CLI::OptionNotFound&) {
      return false;
    }
  };
  // A source flag replaces whatever source the config file named.
  if (given("--graph")) c.gen_model.clear();
  if (given("--gen")) c.graph_file.clear();
  if (!given("--gen-seed") && config_file.empty()) c.gen_seed = c.seed;
  c.command = sub->get_name();

  try {
    if (sub == gen) return cmd_generate(c);
    if (sub == query) return cmd_query(c, u, v);
    if (sub == verify) return cmd_verify(c);
    return cmd_sweep(c, jobs);
  } catch (const BadInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  } catch (const ProbeBudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
}
