// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ceds/enumerate.hpp"
#include "ceds/io.hpp"
#include "ceds/oracle.hpp"

namespace {

using namespace ceds;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

struct Instance {
  std::string name;
  Graph graph;
  std::vector<Solution> oracle;
  bool trivial = false;
  std::optional<SupergraphSnapshot> snap;
};

struct Verdict {
  bool ok = true;
  std::string detail;
  std::string witness;

  void fail(const std::string& w) {
    if (ok) witness = w;
    ok = false;
  }
};

int failures = 0;

void report(int id, const std::string& title, const Verdict& v, Clock::time_point start) {
  double s = std::chrono::duration<double>(Clock::now() - start).count();
  std::ostringstream line;
  line << (v.ok ? "PASS" : "FAIL") << "  criterion " << id << ": " << title << " -- " << v.detail;
  line.setf(std::ios::fixed);
  line.precision(1);
  line << " [" << s << "s]";
  std::cout << line.str() << '\n';
  if (!v.ok) {
    std::cout << "      first counterexample: " << v.witness << '\n';
    ++failures;
  }
  std::cout.flush();
}

std::string describe(const Instance& in) { return in.name + " {" + format_solution(in.graph, in.graph.all_edges()) + "}"; }

std::vector<Instance> load_corpus() {
  std::vector<Instance> out;
  auto add = [&](std::vector<CorpusGraph> graphs) {
    for (auto& c : graphs) {
      Instance in{c.name, std::move(c.graph), {}, false, std::nullopt};
      in.oracle = brute_force_minimal_ceds(in.graph);
      in.trivial = min_ceds_is_singleton(in.graph).has_value();
      if (!in.trivial) in.snap = build_supergraph(in.graph);
      out.push_back(std::move(in));
    }
  };
  add(exhaustive_corpus(5));
  add(random_corpus(200, 20240611));
  return out;
}

// ---------------------------------------------------------------------------

void oracle_equivalence(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  std::size_t total = 0;
  for (const auto& in : corpus) {
    std::vector<Solution> got;
    enumerate_all(in.graph, [&](const Solution& s) { got.push_back(s); });
    total += got.size();
    std::sort(got.begin(), got.end());
    if (got != in.oracle)
      v.fail(describe(in) + ": enumerated " + std::to_string(got.size()) + " vs oracle " +
             std::to_string(in.oracle.size()));
  }
  v.detail = std::to_string(corpus.size()) + " graphs, " + std::to_string(total) + " solutions";
  report(1, "enumerate_all equals brute force", v, start);
}

void characterization(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  std::size_t checked = 0;
  for (const auto& in : corpus) {
    SubsetTables t = subset_tables(in.graph);
    for (std::uint64_t mask = 1; mask < t.ceds.size(); ++mask) {
      if (!t.ceds[mask]) continue;
      ++checked;
      EdgeSet s = edge_set_of_mask(in.graph, mask);
      if (is_minimal_ceds(in.graph, s) != static_cast<bool>(t.minimal[mask]))
        v.fail(describe(in) + ": set {" + format_solution(in.graph, s) + "}");
    }
  }
  v.detail = std::to_string(checked) + " connected edge dominating sets";
  report(2, "pendant/private-edge test equals proper-subset test", v, start);
}

void neighbor_closure(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  std::size_t produced = 0;
  for (const auto& in : corpus) {
    if (in.trivial) continue;
    for (const auto& x : in.oracle)
      for (const auto& item : all_neighbors(in.graph, x).items) {
        ++produced;
        const EdgeSet& y = item.solution.edges();
        if (!is_minimal_ceds(in.graph, y) || !is_tree(in.graph, y))
          v.fail(describe(in) + ": neighbour {" + format_solution(in.graph, y) + "} of {" +
                 format_solution(in.graph, x.edges()) + "} via " + to_string(item.provenance));
      }
  }
  v.detail = std::to_string(produced) + " neighbours checked";
  report(3, "every neighbour is a minimal CEDS and a tree", v, start);
}

void strong_connectivity(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  std::size_t graphs = 0;
  for (const auto& in : corpus) {
    if (!in.snap) continue;
    ++graphs;
    if (auto r = check_strong_connectivity(*in.snap, &in.graph); !r) v.fail(describe(in) + ": " + r.witness);
  }
  v.detail = std::to_string(graphs) + " non-trivial supergraphs";
  report(4, "solution supergraph is strongly connected", v, start);
}

void path_bound(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  std::size_t graphs = 0;
  for (const auto& in : corpus) {
    if (!in.snap) continue;
    ++graphs;
    if (auto r = check_path_size_bound(in.graph, *in.snap); !r) v.fail(describe(in) + ": " + r.witness);
  }
  v.detail = std::to_string(graphs) + " graphs, all ordered pairs";
  report(5, "paths stay within |X| + 2|Y|", v, start);
}

void kbest_prefix(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  Ratio worst{1, 1};
  std::size_t factor4 = 0;
  for (const auto& in : corpus) {
    Ratio c = observed_seed_ratio(in.graph, in.oracle);
    if (worst <= c) worst = c;
    if (!(c <= Ratio{2, 1}))
      v.fail(describe(in) + ": seed ratio " + std::to_string(c.num) + "/" + std::to_string(c.den) + " > 2");
    if (auto r = check_kbest_prefix_bound(in.graph, c + 2, in.oracle); !r)
      v.fail(describe(in) + ": factor c+2: " + r.witness);
    if (c <= Ratio{2, 1}) {
      ++factor4;
      if (auto r = check_kbest_prefix_bound(in.graph, Ratio{4, 1}, in.oracle); !r)
        v.fail(describe(in) + ": factor 4: " + r.witness);
    }
  }
  std::ostringstream d;
  d << corpus.size() << " graphs, every k; worst seed ratio " << worst.num << "/" << worst.den
    << "; factor 4 checked on " << factor4;
  v.detail = d.str();
  report(6, "k-best prefix guarantee and seed ratio <= 2", v, start);
}

void trivial_case(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  std::size_t graphs = 0, larger = 0, mismatched = 0;
  for (const auto& in : corpus) {
    if (!in.trivial) continue;
    ++graphs;
    auto got = enumerate_trivial(in.graph);
    if (got != in.oracle) {
      ++mismatched;
      v.fail(describe(in) + ": enumerate_trivial differs from brute force");
    }
    bool counted = false;
    for (const auto& s : got)
      if (s.size() > 2) {
        if (!counted) ++larger;
        counted = true;
        v.fail(describe(in) + ": minimal solution {" + format_solution(in.graph, s.edges()) + "} has " +
               std::to_string(s.size()) + " edges");
      }
  }
  v.detail = std::to_string(graphs) + " graphs with a one-edge optimum; brute-force mismatches: " +
             std::to_string(mismatched) + "; graphs with a minimal solution above two edges: " + std::to_string(larger);
  report(7, "trivial case matches brute force, all solutions <= 2 edges", v, start);
}

void out_degree(const std::vector<Instance>& corpus) {
  auto start = Clock::now();
  Verdict v;
  double worst = 0.0;
  for (const auto& in : corpus) {
    if (in.trivial) continue;
    const Graph& g = in.graph;
    std::size_t bound = 8 * g.n() * g.m() * g.max_degree();
    for (const auto& x : in.oracle) {
      std::size_t deg = all_neighbors(g, x).items.size();
      worst = std::max(worst, static_cast<double>(deg) / static_cast<double>(bound));
      if (deg > bound) v.fail(describe(in) + ": out-degree " + std::to_string(deg) + " > " + std::to_string(bound));
    }
  }
  std::ostringstream d;
  d << "largest out-degree / (8 n m delta) = " << worst;
  v.detail = d.str();
  report(8, "out-degree <= 8 n m delta", v, start);
}

// ---------------------------------------------------------------------------
// CLI-driven criteria

struct Outcome {
  int status = -1;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome cli(const fs::path& dir, const std::string& args) {
  fs::path out = dir / "stdout", err = dir / "stderr";
  std::string cmd = std::string("'") + CEDSENUM_PATH + "' " + args + " </dev/null >'" + out.string() + "' 2>'" +
                    err.string() + "'";
  int raw = std::system(cmd.c_str());
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
}

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

constexpr std::uint64_t kMemoryBudget = std::uint64_t{1} << 30;

std::vector<fs::path> bench_inputs(const fs::path& dir) {
  std::vector<fs::path> files;
  for (int n : {10, 14, 18, 22}) {
    std::ostringstream p;
    p << 2.6 / n;
    fs::path f = dir / ("bench_n" + std::to_string(n) + ".edges");
    Outcome o = cli(dir, "gen -n " + std::to_string(n) + " -p " + p.str() + " --seed 9");
    std::ofstream(f) << o.out;
    files.push_back(f);
  }
  return files;
}

void delay_bench(const fs::path& dir) {
  auto start = Clock::now();
  Verdict v;
  auto files = bench_inputs(dir);
  std::string args = "bench --memory-budget " + std::to_string(kMemoryBudget);
  for (const auto& f : files) args += " '" + f.string() + "'";
  Outcome o = cli(dir, args);
  if (o.status != 0) v.fail("bench exited " + std::to_string(o.status) + ": " + o.err);
  auto rows = csv_rows(o.out);
  std::ostringstream d;
  if (rows.size() != files.size() + 1) {
    v.fail("expected " + std::to_string(files.size()) + " rows, got\n" + o.out);
  } else {
    const int ns[] = {10, 14, 18, 22};
    d << "n/m/outputs/max_delay_s:";
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto& r = rows[i];
      double max_delay = std::stod(r[4]), mean_delay = std::stod(r[5]);
      if (std::stoi(r[0]) != ns[i - 1]) v.fail("row " + std::to_string(i) + " is out of input order");
      if (std::stoull(r[3]) == 0) v.fail("row " + std::to_string(i) + " reports no outputs");
      if (!(max_delay >= mean_delay && mean_delay >= 0.0)) v.fail("row " + std::to_string(i) + " delays not ordered");
      d << ' ' << r[0] << '/' << r[1] << '/' << r[3] << '/' << r[4];
    }
  }
  rusage ru{};
  getrusage(RUSAGE_CHILDREN, &ru);
  d << "; peak child RSS " << ru.ru_maxrss / 1024 << " MiB";
  if (static_cast<std::uint64_t>(ru.ru_maxrss) * 1024 > kMemoryBudget) v.fail("child exceeded 1 GiB resident");
  v.detail = d.str();
  report(9, "bench completes within a 1 GiB visited budget", v, start);
}

// Timing fields are measurements, so they are excluded from the comparison.
std::string strip_stats(const std::string& text) {
  std::istringstream in(text);
  std::string line, out;
  while (std::getline(in, line)) {
    if (!line.empty() && line.front() == '{') {
      auto j = nlohmann::ordered_json::parse(line);
      j.erase("max_delay_s");
      j.erase("mean_delay_s");
      line = j.dump();
    }
    out += line + '\n';
  }
  return out;
}

std::string strip_bench(const std::string& text) {
  std::string out;
  for (const auto& r : csv_rows(text)) {
    if (r.size() == 7)
      out += r[0] + ',' + r[1] + ',' + r[2] + ',' + r[3] + ",," + ',' + r[6] + '\n';
    else
      out += "?\n";
  }
  return out;
}

void determinism(const fs::path& dir) {
  auto start = Clock::now();
  Verdict v;
  const std::string d = CEDS_DATA_DIR;
  Outcome g = cli(dir, "gen -n 9 -p 0.4 --seed 3");
  fs::path gen_file = dir / "det.edges";
  std::ofstream(gen_file) << g.out;
  const std::string gf = "'" + gen_file.string() + "'";

  struct Case {
    std::string args;
    bool bench;
  };
  std::vector<Case> cases{
      {"gen -n 9 -p 0.4 --seed 3", false},
      {"gen -n 20 -p 0.2 --seed 11", false},
      {"enumerate " + d + "/c5.edges", false},
      {"enumerate --trace " + d + "/k23.edges", false},
      {"enumerate " + gf, false},
      {"enumerate " + d + "/star.edges", false},
      {"kbest -k 7 " + gf, false},
      {"kbest -k 2 " + d + "/c5.edges", false},
      {"verify " + gf, false},
      {"verify " + d + "/p5.edges", false},
      {"bench " + d + "/c5.edges " + d + "/k23.edges " + gf, true},
  };
  for (const auto& c : cases) {
    Outcome a = cli(dir, c.args), b = cli(dir, c.args);
    bool same = a.status == b.status &&
                (c.bench ? strip_bench(a.out) == strip_bench(b.out) : a.out == b.out) &&
                strip_stats(a.err) == strip_stats(b.err);
    if (!same) v.fail("`cedsenum " + c.args + "` differs between runs");
    if (a.status != 0) v.fail("`cedsenum " + c.args + "` exited " + std::to_string(a.status));
  }
  v.detail = std::to_string(cases.size()) + " commands run twice; stdout byte-identical, stats equal up to timing";
  report(10, "CLI output is deterministic", v, start);
}

}  // namespace

int main() {
  auto start = Clock::now();
  std::vector<Instance> corpus = load_corpus();
  std::cout << "corpus: " << corpus.size() << " graphs loaded with brute-force answers in "
            << std::chrono::duration<double>(Clock::now() - start).count() << "s\n";

  oracle_equivalence(corpus);
  characterization(corpus);
  neighbor_closure(corpus);
  strong_connectivity(corpus);
  path_bound(corpus);
  kbest_prefix(corpus);
  trivial_case(corpus);
  out_degree(corpus);

  fs::path dir = fs::temp_directory_path() / ("ceds_acceptance_" + std::to_string(::getpid()));
  fs::create_directories(dir);
  delay_bench(dir);
  determinism(dir);
  fs::remove_all(dir);

  std::cout << (failures ? "acceptance: " + std::to_string(failures) + " criterion(s) failed" : "acceptance: all passed")
            << '\n';
  return failures ? 1 : 0;
}
