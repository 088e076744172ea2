#pragma once

#include <algorithm>
#include <cassert>
#include <compare>
#include <optional>
#include <queue>
#include <vector>

#include "ceds/edge_set.hpp"
#include "ceds/error.hpp"
#include "ceds/graph.hpp"

namespace ceds {

/// A minimal connected edge dominating set together with its canonical key
/// (ascending edge indices). Produced by minimalize(), enumerate_trivial() or
/// certify(); the invariants are not re-checked on copy.
class Solution {
 public:
  Solution() = default;

  const EdgeSet& edges() const noexcept { return edges_; }
  const std::vector<EdgeId>& key() const noexcept { return key_; }
  std::size_t size() const noexcept { return key_.size(); }

  /// Order used by the k-best frontier: cardinality, then canonical key.
  friend std::strong_ordering operator<=>(const Solution& a, const Solution& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    return a.key_ <=> b.key_;
  }
  friend bool operator==(const Solution& a, const Solution& b) { return a.key_ == b.key_; }

  /// For independent producers (the brute-force oracle) that establish
  /// minimality by other means.
  static Solution trusted(EdgeSet edges) { return Solution(std::move(edges)); }

 private:
  explicit Solution(EdgeSet edges) : edges_(std::move(edges)), key_(edges_.to_vector()) {}

  friend Solution certify(const Graph&, EdgeSet);
  friend Solution minimalize(const Graph&, const EdgeSet&);
  friend std::vector<Solution> enumerate_trivial(const Graph&);

  EdgeSet edges_;
  std::vector<EdgeId> key_;
};

/// e and f share an endpoint. Every edge dominates itself.
inline bool dominates(const Graph& g, EdgeId e, EdgeId f) {
  const Edge& a = g.edge(e);
  const Edge& b = g.edge(f);
  return a.touches(b.u) || a.touches(b.v);
}

/// Every edge of g has an endpoint in V(G[s]).
inline bool is_edge_dominating(const Graph& g, const EdgeSet& s) {
  auto mask = vertex_mask(g, s);
  for (const Edge& e : g.edges())
    if (!mask[e.u] && !mask[e.v]) return false;
  return true;
}

/// s is nonempty, G[s] is connected and s dominates every edge of g.
inline bool is_ceds(const Graph& g, const EdgeSet& s) {
  if (s.empty()) return false;
  return is_edge_dominating(g, s) && is_connected(g, s);
}

/// Edges outside s whose only incident s-edge, over both endpoints, is f.
inline EdgeSet private_edges(const Graph& g, const EdgeSet& s, EdgeId f) {
  assert(s.contains(f));
  auto deg = degrees_in(g, s);
  EdgeSet out = g.empty_set();
  const Edge& fe = g.edge(f);
  // In a simple graph no s-edge other than the edge itself touches both ends,
  // so the incident s-edges number deg[u] + deg[v].
  for (VertexId w : {fe.u, fe.v})
    for (auto inc : g.incident(w)) {
      if (s.contains(inc.edge)) continue;
      const Edge& h = g.edge(inc.edge);
      if (deg[h.u] + deg[h.v] == 1) out.insert(inc.edge);
    }
  return out;
}

/// Minimality through the pendant-edge characterization: a CEDS is minimal
/// iff G[s] is a tree and each pendant edge of G[s] has a private edge. A
/// single edge has no nonempty proper subset, so it is minimal whenever it is
/// a CEDS.
inline bool is_minimal_ceds(const Graph& g, const EdgeSet& s) {
  if (!is_ceds(g, s)) return false;
  if (s.size() == 1) return true;
  // A cycle edge can be dropped without losing connectivity or domination.
  if (!is_tree(g, s)) return false;
  for (auto p : pendant_edges(g, s))
    if (private_edges(g, s, p.edge).empty()) return false;
  return true;
}

/// Wraps an edge set known to be a minimal CEDS.
inline Solution certify(const Graph& g, EdgeSet s) {
  if (!is_minimal_ceds(g, s)) throw NotCedsError("edge set is not a minimal connected edge dominating set");
  return Solution(std::move(s));
}

/// Deterministic minimal CEDS contained in x: a DFS spanning tree of G[x] is
/// pruned by repeatedly dropping the smallest-index pendant edge whose
/// pendant vertex has all its G-neighbours inside the current tree.
inline Solution minimalize(const Graph& g, const EdgeSet& x) {
  if (!is_ceds(g, x)) throw NotCedsError("minimalize: input is not a connected edge dominating set");
  EdgeSet tree = spanning_tree_of(g, x);
  auto deg = degrees_in(g, tree);
  std::size_t size = tree.size();

  std::priority_queue<EdgeId, std::vector<EdgeId>, std::greater<>> work;
  for (EdgeId e : tree) {
    const Edge& ed = g.edge(e);
    if (deg[ed.u] == 1 || deg[ed.v] == 1) work.push(e);
  }
  while (!work.empty() && size > 1) {
    EdgeId e = work.top();
    work.pop();
    const Edge& ed = g.edge(e);
    VertexId leaf = deg[ed.u] == 1 ? ed.u : ed.v;
    bool has_private = false;
    for (auto inc : g.incident(leaf))
      if (deg[inc.neighbor] == 0) {
        has_private = true;
        break;
      }
    if (has_private) continue;

    tree.erase(e);
    --size;
    --deg[ed.u];
    --deg[ed.v];
    VertexId inner = ed.other(leaf);
    if (deg[inner] == 1) {
      for (auto inc : g.incident(inner))
        if (tree.contains(inc.edge)) {
          work.push(inc.edge);
          break;
        }
    }
  }
  Solution sol(std::move(tree));
#ifndef NDEBUG
  assert(is_minimal_ceds(g, sol.edges()));
#endif
  return sol;
}

/// Some edge whose endpoints together touch every edge (smallest index), i.e.
/// a minimum CEDS of cardinality one.
inline std::optional<EdgeId> min_ceds_is_singleton(const Graph& g) {
  for (EdgeId e = 0; e < g.m(); ++e) {
    const Edge& ed = g.edge(e);
    if (g.degree(ed.u) + g.degree(ed.v) - 1 == g.m()) return e;
  }
  return std::nullopt;
}

/// All minimal CEDS of a graph with a single-edge CEDS e* = {a, b}. Every
/// edge touches a or b, so a minimal solution is one of: a single edge; two
/// edges a-c, c-b; or the star from one endpoint x to every neighbour of the
/// other endpoint y except x, which needs N(y) - x inside N(x). The star can
/// have any size. Sorted by (size, key).
inline std::vector<Solution> enumerate_trivial(const Graph& g) {
  auto star = min_ceds_is_singleton(g);
  assert(star.has_value());
  std::vector<Solution> out;
  auto consider = [&](EdgeSet s) {
    if (is_minimal_ceds(g, s)) out.push_back(Solution(std::move(s)));
  };
  for (EdgeId e = 0; e < g.m(); ++e) {
    EdgeSet s = g.empty_set();
    s.insert(e);
    consider(std::move(s));
  }
  for (EdgeId e = 0; e < g.m(); ++e)
    for (VertexId w : {g.edge(e).u, g.edge(e).v})
      for (auto inc : g.incident(w)) {
        if (inc.edge <= e) continue;
        EdgeSet s = g.empty_set();
        s.insert(e);
        s.insert(inc.edge);
        consider(std::move(s));
      }
  const Edge& opt = g.edge(*star);
  for (auto [x, y] : {std::pair{opt.u, opt.v}, std::pair{opt.v, opt.u}}) {
    EdgeSet s = g.empty_set();
    bool ok = true;
    for (auto inc : g.incident(y)) {
      if (inc.neighbor == x) continue;
      EdgeId f = g.find_edge(x, inc.neighbor);
      if (f == g.m()) {
        ok = false;
        break;
      }
      s.insert(f);
    }
    if (ok && !s.empty()) consider(std::move(s));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace ceds
