#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <vector>

#include "ceds/ceds.hpp"
#include "ceds/graph.hpp"

namespace ceds {

/// Exact non-negative fraction for approximation ratios.
struct Ratio {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  Ratio reduced() const {
    auto d = std::gcd(num, den);
    return d ? Ratio{num / d, den / d} : *this;
  }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  Ratio operator+(std::uint64_t k) const { return {num + k * den, den}; }
  /// lhs <= this * rhs
  bool bounds(std::uint64_t lhs, std::uint64_t rhs) const { return lhs * den <= num * rhs; }
  friend bool operator<=(const Ratio& a, const Ratio& b) { return a.num * b.den <= b.num * a.den; }
};

struct SeedReport {
  Solution solution;
  std::size_t lower_bound;  // lower bound on the minimum CEDS size
  Ratio observed_ratio_bound;
};

/// Greedy maximal matching size; every vertex cover has at least this many
/// vertices.
inline std::size_t maximal_matching_size(const Graph& g) {
  std::vector<bool> used(g.n(), false);
  std::size_t size = 0;
  for (const Edge& e : g.edges())
    if (!used[e.u] && !used[e.v]) {
      used[e.u] = used[e.v] = true;
      ++size;
    }
  return size;
}

/// Seed for k-best enumeration: the internal vertices of a DFS tree from
/// vertex 0 form a connected vertex cover; the tree edges among them form a
/// CEDS, which is then minimalized.
///
/// The vertex set of a CEDS is a connected vertex cover, so minimum CEDS size
/// >= (maximal matching size) - 1, and >= 2 on non-trivial instances.
inline SeedReport approx_min_ceds(const Graph& g) {
  std::vector<VertexId> parent(g.n(), static_cast<VertexId>(g.n()));
  std::vector<EdgeId> parent_edge(g.n(), static_cast<EdgeId>(g.m()));
  std::vector<bool> visited(g.n(), false), internal(g.n(), false);
  std::vector<std::pair<VertexId, std::size_t>> stack{{0, 0}};
  visited[0] = true;
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto inc = g.incident(v);
    while (pos < inc.size() && visited[inc[pos].neighbor]) ++pos;
    if (pos == inc.size()) {
      stack.pop_back();
      continue;
    }
    auto next = inc[pos++];
    visited[next.neighbor] = true;
    parent[next.neighbor] = v;
    parent_edge[next.neighbor] = next.edge;
    internal[v] = true;
    stack.emplace_back(next.neighbor, 0);
  }

  EdgeSet cover = g.empty_set();
  for (VertexId v = 1; v < g.n(); ++v)
    if (internal[v]) cover.insert(parent_edge[v]);  // parent of an internal vertex is internal
  if (cover.empty()) {
    // Only the root is internal: g is a star and any edge is a CEDS.
    cover.insert(0);
  }
  Solution sol = minimalize(g, cover);
  std::size_t lb = std::max<std::size_t>(1, maximal_matching_size(g) > 0 ? maximal_matching_size(g) - 1 : 0);
  if (!min_ceds_is_singleton(g)) lb = std::max<std::size_t>(lb, 2);
  Ratio r{sol.size(), lb};
  return {std::move(sol), lb, r.reduced()};
}

}  // namespace ceds
