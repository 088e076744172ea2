#pragma once

// Brute-force ground truth and executable forms of the structural properties
// behind the supergraph traversal. Everything here is exponential and meant
// for instances with about twenty edges or fewer.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ceds/approx.hpp"
#include "ceds/ceds.hpp"
#include "ceds/enumerate.hpp"
#include "ceds/error.hpp"
#include "ceds/generate.hpp"
#include "ceds/graph.hpp"
#include "ceds/io.hpp"
#include "ceds/neighbors.hpp"

namespace ceds {

inline constexpr std::size_t kDefaultOracleCap = 18;

/// Per-subset truth tables over all 2^m edge subsets, computed directly from
/// the definitions: `ceds` is the CEDS predicate, `minimal` additionally
/// requires that no proper subset is a CEDS.
struct SubsetTables {
  std::size_t m = 0;
  std::vector<std::uint8_t> ceds;
  std::vector<std::uint8_t> minimal;
};

inline SubsetTables subset_tables(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  const std::size_t m = g.m();
  if (m > cap) throw TooLargeError("oracle limited to " + std::to_string(cap) + " edges, graph has " + std::to_string(m));
  if (g.n() > 64) throw TooLargeError("oracle limited to 64 vertices");
  std::vector<std::uint64_t> ends(m);
  for (EdgeId e = 0; e < m; ++e) ends[e] = (std::uint64_t{1} << g.edge(e).u) | (std::uint64_t{1} << g.edge(e).v);

  const std::uint64_t count = std::uint64_t{1} << m;
  SubsetTables t{m, std::vector<std::uint8_t>(count, 0), std::vector<std::uint8_t>(count, 0)};
  for (std::uint64_t s = 1; s < count; ++s) {
    std::uint64_t cover = 0;
    for (std::size_t e = 0; e < m; ++e)
      if (s >> e & 1) cover |= ends[e];
    bool dominating = true;
    for (std::size_t e = 0; e < m && dominating; ++e) dominating = (cover & ends[e]) != 0;
    if (!dominating) continue;
    // grow the vertex set reached from the lowest edge
    std::uint64_t reached = ends[static_cast<std::size_t>(std::countr_zero(s))];
    for (bool grew = true; grew;) {
      grew = false;
      for (std::size_t e = 0; e < m; ++e)
        if ((s >> e & 1) && (reached & ends[e]) && (reached | ends[e]) != reached) {
          reached |= ends[e];
          grew = true;
        }
    }
    t.ceds[s] = reached == cover;
  }
  // below[s]: some proper subset of s is a CEDS
  std::vector<std::uint8_t> below(count, 0);
  for (std::uint64_t s = 1; s < count; ++s) {
    for (std::uint64_t rest = s; rest && !below[s]; rest &= rest - 1) {
      std::uint64_t sub = s & ~(rest & (~rest + 1));
      below[s] = t.ceds[sub] || below[sub];
    }
    t.minimal[s] = t.ceds[s] && !below[s];
  }
  return t;
}

inline EdgeSet edge_set_of_mask(const Graph& g, std::uint64_t mask) {
  EdgeSet s = g.empty_set();
  for (EdgeId e = 0; e < g.m(); ++e)
    if (mask >> e & 1) s.insert(e);
  return s;
}

inline std::uint64_t mask_of(const EdgeSet& s) {
  std::uint64_t mask = 0;
  for (EdgeId e : s) mask |= std::uint64_t{1} << e;
  return mask;
}

/// All minimal CEDS by exhaustive subset search, sorted by (size, key).
inline std::vector<Solution> brute_force_minimal_ceds(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  auto t = subset_tables(g, cap);
  std::vector<Solution> out;
  for (std::uint64_t s = 1; s < t.minimal.size(); ++s)
    if (t.minimal[s]) out.push_back(Solution::trusted(edge_set_of_mask(g, s)));
  std::sort(out.begin(), out.end());
  return out;
}

/// Definitional minimality for a single set: s is a CEDS and none of its
/// proper subsets is. Exponential in |s|.
inline bool is_minimal_ceds_definitional(const Graph& g, const EdgeSet& s) {
  if (!is_ceds(g, s)) return false;
  auto members = s.to_vector();
  if (members.size() > 24) throw TooLargeError("definitional minimality limited to 24 edges");
  const std::uint64_t full = (std::uint64_t{1} << members.size()) - 1;
  for (std::uint64_t sub = 1; sub < full; ++sub) {
    EdgeSet t = g.empty_set();
    for (std::size_t i = 0; i < members.size(); ++i)
      if (sub >> i & 1) t.insert(members[i]);
    if (is_ceds(g, t)) return false;
  }
  return true;
}

/// Outcome of a structural check; `witness` describes the first failure.
struct CheckResult {
  bool ok = true;
  std::string witness;

  explicit operator bool() const { return ok; }
  static CheckResult fail(std::string why) { return {false, std::move(why)}; }
};

/// The supergraph restricted to brute-force nodes. Arcs whose head is not an
/// oracle solution are kept aside in `foreign` (they would falsify closure).
struct SupergraphSnapshot {
  std::vector<Solution> nodes;
  std::vector<std::vector<std::size_t>> arcs;
  std::map<std::vector<EdgeId>, std::size_t> index;
  std::vector<std::pair<std::size_t, Solution>> foreign;

  std::optional<std::size_t> find(const Solution& s) const {
    auto it = index.find(s.key());
    if (it == index.end()) return std::nullopt;
    return it->second;
  }
  std::size_t arc_count() const {
    std::size_t c = 0;
    for (const auto& a : arcs) c += a.size();
    return c;
  }
};

inline SupergraphSnapshot build_supergraph(const Graph& g, std::size_t cap = kDefaultOracleCap) {
  if (min_ceds_is_singleton(g)) throw Error("supergraph is not built for single-edge-optimum instances");
  SupergraphSnapshot snap;
  snap.nodes = brute_force_minimal_ceds(g, cap);
  for (std::size_t i = 0; i < snap.nodes.size(); ++i) snap.index.emplace(snap.nodes[i].key(), i);
  snap.arcs.resize(snap.nodes.size());
  for (std::size_t i = 0; i < snap.nodes.size(); ++i) {
    for (auto& item : all_neighbors(g, snap.nodes[i]).items) {
      if (auto j = snap.find(item.solution))
        snap.arcs[i].push_back(*j);
      else
        snap.foreign.emplace_back(i, std::move(item.solution));
    }
  }
  return snap;
}

namespace detail {

/// Nodes reachable from `from` using only nodes accepted by `allow`.
template <typename Allow>
std::vector<bool> reachable(const SupergraphSnapshot& s, std::size_t from, Allow allow) {
  std::vector<bool> seen(s.nodes.size(), false);
  if (!allow(from)) return seen;
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : s.arcs[v])
      if (!seen[w] && allow(w)) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  return seen;
}

}  // namespace detail

/// Every node reaches every other node.
inline CheckResult check_strong_connectivity(const SupergraphSnapshot& s, const Graph* g = nullptr) {
  const std::size_t n = s.nodes.size();
  if (n <= 1) return {};
  auto line = [&](std::size_t i) {
    return g ? format_solution(*g, s.nodes[i].edges()) : "#" + std::to_string(i);
  };
  auto all = [](std::size_t) { return true; };
  auto fwd = detail::reachable(s, 0, all);
  for (std::size_t j = 0; j < n; ++j)
    if (!fwd[j]) return CheckResult::fail("no path from [" + line(0) + "] to [" + line(j) + "]");
  SupergraphSnapshot rev;
  rev.nodes = s.nodes;
  rev.arcs.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j : s.arcs[i]) rev.arcs[j].push_back(i);
  auto back = detail::reachable(rev, 0, all);
  for (std::size_t j = 0; j < n; ++j)
    if (!back[j]) return CheckResult::fail("no path from [" + line(j) + "] to [" + line(0) + "]");
  return {};
}

/// Every solution Y is reachable from comp(E) through solutions of size at
/// most |comp(E)| + 2|Y|.
inline CheckResult check_path_size_bound(const Graph& g, const SupergraphSnapshot& s) {
  if (s.nodes.size() <= 1) return {};
  Solution x = initial_solution(g);
  auto start = s.find(x);
  if (!start) return CheckResult::fail("initial solution [" + format_solution(g, x.edges()) + "] missing from oracle");
  std::map<std::size_t, std::vector<bool>> by_bound;
  for (std::size_t j = 0; j < s.nodes.size(); ++j) {
    std::size_t bound = x.size() + 2 * s.nodes[j].size();
    auto it = by_bound.find(bound);
    if (it == by_bound.end())
      it = by_bound
               .emplace(bound, detail::reachable(s, *start, [&](std::size_t v) { return s.nodes[v].size() <= bound; }))
               .first;
    if (!it->second[j])
      return CheckResult::fail("[" + format_solution(g, s.nodes[j].edges()) + "] unreachable within size bound " +
                               std::to_string(bound));
  }
  return {};
}

/// Seed ratio |approx seed| / (minimum CEDS size), measured against the oracle.
inline Ratio observed_seed_ratio(const Graph& g, const std::vector<Solution>& oracle) {
  if (oracle.empty()) return {1, 1};
  std::size_t opt = oracle.front().size();
  std::size_t seed = min_ceds_is_singleton(g) ? opt : approx_min_ceds(g).solution.size();
  return Ratio{seed, opt}.reduced();
}

/// k-best guarantee for every k below the number of solutions: the largest
/// emitted size is at most factor * (smallest size not yet emitted). A run
/// with budget k emits exactly the first k outputs of an unbounded run, so
/// one best-first traversal checks every k. The full run must also emit the
/// oracle's set without repeats.
inline CheckResult check_kbest_prefix_bound(const Graph& g, const Ratio& factor, const std::vector<Solution>& oracle) {
  std::vector<Solution> emitted;
  enumerate_kbest(g, std::numeric_limits<std::uint64_t>::max(), [&](const Solution& s) { emitted.push_back(s); });
  {
    auto sorted = emitted;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != oracle) return CheckResult::fail("unbounded k-best run does not emit the oracle set");
  }
  // multiset of sizes not yet emitted
  std::map<std::size_t, std::size_t> remaining;
  for (const auto& s : oracle) ++remaining[s.size()];
  std::size_t largest = 0;
  for (std::size_t k = 1; k < emitted.size(); ++k) {
    const std::size_t sz = emitted[k - 1].size();
    largest = std::max(largest, sz);
    if (--remaining[sz] == 0) remaining.erase(sz);
    std::size_t smallest_left = remaining.begin()->first;
    if (!factor.bounds(largest, smallest_left))
      return CheckResult::fail("k=" + std::to_string(k) + ": emitted size " + std::to_string(largest) + " > " +
                               std::to_string(factor.num) + "/" + std::to_string(factor.den) + " * " +
                               std::to_string(smallest_left));
  }
  return {};
}

inline CheckResult check_kbest_prefix_bound(const Graph& g, const Ratio& factor, std::size_t cap = kDefaultOracleCap) {
  return check_kbest_prefix_bound(g, factor, brute_force_minimal_ceds(g, cap));
}

/// One-step progress: whenever G[X ∪ Y] has a cycle, some direct neighbour Z
/// of X satisfies |Z ∪ Y| < |X ∪ Y|. Quadratic in the node count.
inline CheckResult check_cycle_progress(const Graph& g, const SupergraphSnapshot& s) {
  for (std::size_t i = 0; i < s.nodes.size(); ++i)
    for (std::size_t j = 0; j < s.nodes.size(); ++j) {
      if (i == j) continue;
      EdgeSet uni = s.nodes[i].edges() | s.nodes[j].edges();
      if (uni.size() + components_of(g, uni).size() <= induced_vertices(g, uni).size()) continue;  // forest
      std::size_t d = uni.size();
      bool found = std::any_of(s.arcs[i].begin(), s.arcs[i].end(), [&](std::size_t z) {
        return (s.nodes[z].edges() | s.nodes[j].edges()).size() < d;
      });
      if (!found)
        return CheckResult::fail("no closer neighbour of [" + format_solution(g, s.nodes[i].edges()) + "] towards [" +
                                 format_solution(g, s.nodes[j].edges()) + "]");
    }
  return {};
}

/// Textual adjacency list: one line per node, `[i] <solution> -> j k ...`.
inline std::string export_supergraph(const Graph& g, const SupergraphSnapshot& s) {
  std::ostringstream out;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    out << '[' << i << "] " << format_solution(g, s.nodes[i].edges()) << " ->";
    for (std::size_t j : s.arcs[i]) out << ' ' << j;
    out << '\n';
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// Test corpus

struct CorpusGraph {
  std::string name;
  Graph graph;
};

/// All labelled connected graphs on 2..max_n vertices (at least one edge).
inline std::vector<CorpusGraph> exhaustive_corpus(std::size_t max_n = 5) {
  std::vector<CorpusGraph> out;
  for (std::size_t n = 2; n <= max_n; ++n) {
    std::size_t i = 0;
    for (auto& pairs : all_connected_pair_lists(n))
      out.push_back({"n" + std::to_string(n) + "#" + std::to_string(i++), graph_from_pairs(n, pairs)});
  }
  return out;
}

/// Seeded random connected graphs with n cycling through 6..9 and edge
/// probability through {0.3, 0.5, 0.8}. Samples above the oracle cap are
/// thinned by deleting random non-bridge edges.
inline std::vector<CorpusGraph> random_corpus(std::size_t count = 200, std::uint64_t seed = 20240611,
                                              std::size_t cap = kDefaultOracleCap) {
  static constexpr double kProbs[] = {0.3, 0.5, 0.8};
  std::mt19937_64 rng(seed);
  std::vector<CorpusGraph> out;
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t n = 6 + i % 4;
    double p = kProbs[(i / 4) % 3];
    auto pairs = random_connected_pairs(n, p, rng);
    thin_to(n, pairs, cap, rng);
    std::ostringstream name;
    name << "rand#" << i << "(n=" << n << ",p=" << p << ")";
    out.push_back({name.str(), graph_from_pairs(n, pairs)});
  }
  return out;
}

}  // namespace ceds
