#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ceds/approx.hpp"
#include "ceds/ceds.hpp"
#include "ceds/enumerate.hpp"
#include "ceds/generate.hpp"
#include "ceds/io.hpp"
#include "ceds/oracle.hpp"

namespace {

using namespace ceds;
using Json = nlohmann::ordered_json;

constexpr int kUsage = 1;
constexpr int kInputError = 2;
constexpr int kAborted = 3;
constexpr int kCounterexample = 4;

enum class OutputMode { Solutions, Stats, Both };

struct RunConfig {
  std::string input = "-";
  InputFormat format = InputFormat::EdgeList;
  std::uint64_t k = 0;
  std::uint64_t max_visited = 0;
  std::uint64_t memory_budget = 0;
  OutputMode output = OutputMode::Both;
  std::string stats_file;
  bool trace = false;
  std::size_t cap = kDefaultOracleCap;
  std::size_t n = 0;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::vector<std::string> files;
};

Graph load(const std::string& path, InputFormat fmt) {
  if (path == "-") return read_graph(std::cin, fmt);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_graph(in, fmt);
}

Json stats_json(const std::string& command, const Graph& g, const EnumerationStats& st) {
  Json j;
  j["command"] = command;
  j["n"] = g.n();
  j["m"] = g.m();
  j["delta"] = g.max_degree();
  j["outputs"] = st.outputs;
  j["expansions"] = st.expansions;
  j["duplicates"] = st.duplicates;
  j["peak_visited"] = st.peak_visited;
  j["visited_bytes"] = st.visited_bytes;
  j["max_delay_s"] = st.max_delay_s;
  j["mean_delay_s"] = st.mean_delay_s;
  return j;
}

void write_stats(const RunConfig& cfg, const Json& j) {
  if (cfg.output == OutputMode::Solutions) return;
  if (!cfg.stats_file.empty()) {
    std::ofstream out(cfg.stats_file);
    out << j.dump() << '\n';
  } else {
    std::cerr << j.dump() << '\n';
  }
}

EnumerationOptions options_for(const RunConfig& cfg, const Graph& g) {
  EnumerationOptions opt;
  opt.max_visited = cfg.max_visited;
  opt.max_visited_bytes = cfg.memory_budget;
  if (cfg.trace)
    opt.on_neighbor = [&g](const Solution& origin, const Neighbor& item, bool fresh) {
      std::cerr << "trace [" << format_solution(g, origin.edges()) << "] " << to_string(item.provenance) << " -> ["
                << format_solution(g, item.solution.edges()) << "] " << (fresh ? "new" : "seen") << '\n';
    };
  return opt;
}

int run_enumeration(const RunConfig& cfg, bool kbest) {
  Graph g = load(cfg.input, cfg.format);
  auto sink = [&](const Solution& s) {
    if (cfg.output != OutputMode::Stats) std::cout << format_solution(g, s.edges()) << '\n' << std::flush;
  };
  const std::string command = kbest ? "kbest" : "enumerate";
  EnumerationOptions opt = options_for(cfg, g);
  try {
    EnumerationStats st = kbest ? enumerate_kbest(g, cfg.k, sink, opt) : enumerate_all(g, sink, opt);
    Json j = stats_json(command, g, st);
    if (kbest) {
      j["k"] = cfg.k;
      if (auto e = min_ceds_is_singleton(g)) {
        j["seed_size"] = 1;
        j["seed_lower_bound"] = 1;
        j["seed_ratio_bound"] = 1.0;
      } else {
        SeedReport seed = approx_min_ceds(g);
        j["seed_size"] = seed.solution.size();
        j["seed_lower_bound"] = seed.lower_bound;
        j["seed_ratio_bound"] = seed.observed_ratio_bound.value();
      }
    }
    j["aborted"] = false;
    write_stats(cfg, j);
    return 0;
  } catch (const VisitedLimitExceeded& e) {
    Json j = stats_json(command, g, e.stats());
    j["aborted"] = true;
    write_stats(cfg, j);
    std::cerr << "error: " << e.what() << '\n';
    return kAborted;
  }
}

struct VerifyRow {
  std::string name;
  std::optional<CheckResult> result;  // empty: not applicable
};

CheckResult oracle_equivalence(const Graph& g, const std::vector<Solution>& oracle) {
  std::vector<Solution> got;
  enumerate_all(g, [&](const Solution& s) { got.push_back(s); });
  std::sort(got.begin(), got.end());
  std::vector<Solution> missing, extra;
  std::set_difference(oracle.begin(), oracle.end(), got.begin(), got.end(), std::back_inserter(missing));
  std::set_difference(got.begin(), got.end(), oracle.begin(), oracle.end(), std::back_inserter(extra));
  if (!missing.empty()) return CheckResult::fail("missing " + format_solution(g, missing.front().edges()));
  if (!extra.empty()) return CheckResult::fail("unexpected " + format_solution(g, extra.front().edges()));
  if (got.size() != oracle.size()) return CheckResult::fail("duplicate output");
  return {};
}

CheckResult characterization(const Graph& g, const SubsetTables& t) {
  for (std::uint64_t mask = 1; mask < t.ceds.size(); ++mask) {
    if (!t.ceds[mask]) continue;
    EdgeSet s = edge_set_of_mask(g, mask);
    if (is_minimal_ceds(g, s) != static_cast<bool>(t.minimal[mask]))
      return CheckResult::fail("pendant test disagrees on " + format_solution(g, s));
  }
  return {};
}

CheckResult neighbor_closure(const Graph& g, const SupergraphSnapshot& snap) {
  if (!snap.foreign.empty()) {
    const auto& [from, sol] = snap.foreign.front();
    return CheckResult::fail("[" + format_solution(g, snap.nodes[from].edges()) + "] -> [" +
                             format_solution(g, sol.edges()) + "] is not a minimal solution");
  }
  for (const auto& x : snap.nodes)
    for (const auto& item : all_neighbors(g, x).items)
      if (!is_tree(g, item.solution.edges()))
        return CheckResult::fail("neighbour " + format_solution(g, item.solution.edges()) + " is not a tree");
  return {};
}

int cmd_verify(const RunConfig& cfg) {
  Graph g = load(cfg.input, cfg.format);
  SubsetTables tables = subset_tables(g, cfg.cap);
  std::vector<Solution> oracle = brute_force_minimal_ceds(g, cfg.cap);

  std::vector<VerifyRow> rows;
  rows.push_back({"oracle-equivalence", oracle_equivalence(g, oracle)});
  rows.push_back({"minimality-test", characterization(g, tables)});
  if (min_ceds_is_singleton(g)) {
    rows.push_back({"neighbour-closure", std::nullopt});
    rows.push_back({"strong-connectivity", std::nullopt});
    rows.push_back({"path-size-bound", std::nullopt});
  } else {
    SupergraphSnapshot snap = build_supergraph(g, cfg.cap);
    rows.push_back({"neighbour-closure", neighbor_closure(g, snap)});
    rows.push_back({"strong-connectivity", check_strong_connectivity(snap, &g)});
    rows.push_back({"path-size-bound", check_path_size_bound(g, snap)});
  }
  Ratio c = observed_seed_ratio(g, oracle);
  rows.push_back({"kbest-prefix-bound", check_kbest_prefix_bound(g, c + 2, oracle)});

  const CheckResult* first_failure = nullptr;
  for (const auto& row : rows) {
    const char* verdict = !row.result ? "n/a" : row.result->ok ? "PASS" : "FAIL";
    std::cout << std::left << std::setw(22) << row.name << verdict << '\n';
    if (row.result && !row.result->ok && !first_failure) first_failure = &*row.result;
  }
  if (first_failure) {
    std::cout << "counterexample: " << first_failure->witness << '\n';
    return kCounterexample;
  }
  return 0;
}

int cmd_gen(const RunConfig& cfg) {
  if (cfg.n < 2) {
    std::cerr << "error: gen needs at least two vertices\n";
    return kUsage;
  }
  if (!(cfg.p > 0.0) || cfg.p > 1.0) {
    std::cerr << "error: edge probability must lie in (0, 1]\n";
    return kUsage;
  }
  auto pairs = random_connected_pairs(cfg.n, cfg.p, cfg.seed);
  std::cout << "# gen n=" << cfg.n << " p=" << cfg.p << " seed=" << cfg.seed << '\n';
  for (auto [u, v] : pairs) std::cout << u << ' ' << v << '\n';
  return 0;
}

int cmd_bench(const RunConfig& cfg) {
  std::cout << "n,m,delta,outputs,max_delay_s,mean_delay_s,expansions\n";
  int status = 0;
  for (const auto& file : cfg.files) {
    try {
      Graph g = load(file, cfg.format);
      EnumerationOptions opt;
      opt.max_visited = cfg.max_visited;
      opt.max_visited_bytes = cfg.memory_budget;
      EnumerationStats st = enumerate_all(g, [](const Solution&) {}, opt);
      std::ostringstream row;
      row << g.n() << ',' << g.m() << ',' << g.max_degree() << ',' << st.outputs << ',' << std::setprecision(9)
          << st.max_delay_s << ',' << st.mean_delay_s << ',' << st.expansions;
      std::cout << row.str() << '\n' << std::flush;
    } catch (const VisitedLimitExceeded& e) {
      std::cerr << file << ": " << e.what() << '\n';
      if (status == 0) status = kAborted;
    } catch (const Error& e) {
      std::cerr << file << ": " << e.what() << '\n';
      if (status == 0) status = kInputError;
    }
  }
  return status;
}

void add_input_options(CLI::App* sub, RunConfig& cfg) {
  sub->add_option("input", cfg.input, "graph file, or - for standard input")->required();
  sub->add_option("--format", cfg.format, "input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"edgelist", InputFormat::EdgeList}, {"dimacs", InputFormat::Dimacs}}));
}

void add_enumeration_options(CLI::App* sub, RunConfig& cfg) {
  add_input_options(sub, cfg);
  sub->add_option("--max-visited", cfg.max_visited, "abort after this many distinct solutions are stored (0 = no limit)");
  sub->add_option("--memory-budget", cfg.memory_budget, "abort when the visited index exceeds this many bytes");
  sub->add_option("--output", cfg.output, "what to report")
      ->transform(CLI::CheckedTransformer(std::map<std::string, OutputMode>{
          {"solutions", OutputMode::Solutions}, {"stats", OutputMode::Stats}, {"both", OutputMode::Both}}));
  sub->add_option("--stats-file", cfg.stats_file, "write the stats JSON here instead of standard error");
  sub->add_flag("--trace", cfg.trace, "log every generated neighbour to standard error");
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  RunConfig cfg;
  CLI::App app{"Enumerate minimal connected edge dominating sets"};
  app.require_subcommand(1);

  auto* enumerate = app.add_subcommand("enumerate", "stream every minimal solution");
  add_enumeration_options(enumerate, cfg);

  auto* kbest = app.add_subcommand("kbest", "stream up to k solutions, smallest first (approximately)");
  add_enumeration_options(kbest, cfg);
  kbest->add_option("-k", cfg.k, "number of solutions")->required();

  auto* verify = app.add_subcommand("verify", "check the enumerator against brute force");
  add_input_options(verify, cfg);
  verify->add_option("--cap", cfg.cap, "largest edge count the brute force accepts")->check(CLI::Range(1, 24));

  auto* gen = app.add_subcommand("gen", "print a seeded random connected graph");
  gen->add_option("-n", cfg.n, "vertex count")->required();
  gen->add_option("-p", cfg.p, "edge probability");
  gen->add_option("--seed", cfg.seed, "random seed")->required();

  auto* bench = app.add_subcommand("bench", "enumerate each file and print CSV timings");
  bench->add_option("files", cfg.files, "graph files")->required();
  bench->add_option("--format", cfg.format, "input format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, InputFormat>{{"edgelist", InputFormat::EdgeList}, {"dimacs", InputFormat::Dimacs}}));
  bench->add_option("--max-visited", cfg.max_visited, "per-run limit on stored solutions");
  bench->add_option("--memory-budget", cfg.memory_budget, "per-run limit on visited-index bytes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*kbest && cfg.k == 0) {
      std::cerr << "error: -k must be at least 1\n";
      return kUsage;
    }
    if (*enumerate) return run_enumeration(cfg, false);
    if (*kbest) return run_enumeration(cfg, true);
    if (*verify) return cmd_verify(cfg);
    if (*gen) return cmd_gen(cfg);
    if (*bench) return cmd_bench(cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kUsage;
}
