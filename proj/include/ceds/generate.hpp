#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ceds/graph.hpp"

namespace ceds {

using PairList = std::vector<std::pair<VertexId, VertexId>>;

namespace detail {

// mt19937_64's output sequence is fixed by the standard; the distributions
// in <random> are not, so draws are derived from raw words.
inline bool bernoulli(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline std::size_t below(std::mt19937_64& rng, std::size_t bound) { return static_cast<std::size_t>(rng() % bound); }

inline bool pairs_connected(std::size_t n, const PairList& edges) {
  if (n == 0) return false;
  std::vector<std::vector<VertexId>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<bool> seen(n, false);
  std::vector<VertexId> stack{0};
  seen[0] = true;
  std::size_t count = 1;
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId w : adj[v])
      if (!seen[w]) {
        seen[w] = true;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n;
}

}  // namespace detail

/// G(n, p) sample conditioned on connectivity (rejection sampling). Edges
/// come out in lexicographic (u, v) order with u < v.
inline PairList random_connected_pairs(std::size_t n, double p, std::mt19937_64& rng) {
  if (n < 2) throw std::invalid_argument("need at least two vertices");
  if (!(p > 0.0) || p > 1.0) throw std::invalid_argument("edge probability must lie in (0, 1]");
  for (;;) {
    PairList edges;
    for (VertexId u = 0; u < n; ++u)
      for (VertexId v = u + 1; v < n; ++v)
        if (detail::bernoulli(rng, p)) edges.emplace_back(u, v);
    if (detail::pairs_connected(n, edges)) return edges;
  }
}

inline PairList random_connected_pairs(std::size_t n, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_connected_pairs(n, p, rng);
}

/// Removes uniformly chosen non-bridge edges until at most max_edges remain.
inline void thin_to(std::size_t n, PairList& edges, std::size_t max_edges, std::mt19937_64& rng) {
  while (edges.size() > max_edges) {
    std::vector<std::size_t> removable;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      PairList rest = edges;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      if (detail::pairs_connected(n, rest)) removable.push_back(i);
    }
    if (removable.empty()) throw std::invalid_argument("cannot thin a tree");
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(removable[detail::below(rng, removable.size())]));
  }
}

/// Every connected simple graph on vertex set {0..n-1}, edge sets drawn from
/// the lexicographic pair list in increasing bitmask order.
inline std::vector<PairList> all_connected_pair_lists(std::size_t n) {
  PairList slots;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v) slots.emplace_back(u, v);
  std::vector<PairList> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    PairList edges;
    for (std::size_t i = 0; i < slots.size(); ++i)
      if (mask >> i & 1) edges.push_back(slots[i]);
    if (detail::pairs_connected(n, edges)) out.push_back(std::move(edges));
  }
  return out;
}

inline Graph graph_from_pairs(std::size_t n, const PairList& edges) {
  return Graph::from_indexed(n, std::span<const std::pair<VertexId, VertexId>>(edges));
}

}  // namespace ceds
