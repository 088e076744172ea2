#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "ceds/edge_set.hpp"
#include "ceds/error.hpp"

namespace ceds {

using Label = std::int64_t;

struct Edge {
  VertexId u;  // u < v
  VertexId v;

  VertexId other(VertexId w) const { return w == u ? v : u; }
  bool touches(VertexId w) const { return w == u || w == v; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

/// Immutable connected simple undirected graph. Vertices and edges are dense
/// indices; each vertex also remembers the label it was given in the input.
class Graph {
 public:
  /// Builds a graph from labelled pairs; vertices are numbered in order of
  /// first appearance and edges in input order.
  static Graph from_edge_list(std::span<const std::pair<Label, Label>> pairs) {
    std::map<Label, VertexId> ids;
    std::vector<Label> labels;
    std::vector<std::pair<VertexId, VertexId>> indexed;
    indexed.reserve(pairs.size());
    auto id_of = [&](Label l) {
      auto [it, fresh] = ids.try_emplace(l, static_cast<VertexId>(labels.size()));
      if (fresh) labels.push_back(l);
      return it->second;
    };
    for (auto [a, b] : pairs) {
      VertexId x = id_of(a);
      VertexId y = id_of(b);
      indexed.emplace_back(x, y);
    }
    return Graph(std::move(labels), indexed);
  }

  static Graph from_edge_list(std::initializer_list<std::pair<Label, Label>> pairs) {
    std::vector<std::pair<Label, Label>> v(pairs);
    return from_edge_list(std::span<const std::pair<Label, Label>>(v));
  }

  /// Vertices are exactly 0..n-1 (labels equal ids); unused ids make the
  /// graph disconnected.
  static Graph from_indexed(std::size_t n, std::span<const std::pair<VertexId, VertexId>> pairs) {
    std::vector<Label> labels(n);
    std::iota(labels.begin(), labels.end(), Label{0});
    return Graph(std::move(labels), pairs);
  }

  std::size_t n() const noexcept { return labels_.size(); }
  std::size_t m() const noexcept { return edges_.size(); }
  std::size_t max_degree() const noexcept { return max_degree_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }
  std::span<const Incidence> incident(VertexId v) const { return adjacency_[v]; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  Label label(VertexId v) const { return labels_[v]; }

  /// Edge joining a and b, or m() if none.
  EdgeId find_edge(VertexId a, VertexId b) const {
    if (degree(a) > degree(b)) std::swap(a, b);
    for (auto inc : adjacency_[a])
      if (inc.neighbor == b) return inc.edge;
    return static_cast<EdgeId>(m());
  }

  bool is_pendant_edge(EdgeId e) const { return degree(edges_[e].u) == 1 || degree(edges_[e].v) == 1; }

  EdgeSet empty_set() const { return EdgeSet(m()); }
  EdgeSet all_edges() const { return EdgeSet::full(m()); }

 private:
  Graph(std::vector<Label> labels, std::span<const std::pair<VertexId, VertexId>> pairs)
      : labels_(std::move(labels)), adjacency_(labels_.size()) {
    if (pairs.empty()) throw GraphError(GraphError::Kind::Empty, "graph has no edges");
    std::set<std::pair<VertexId, VertexId>> seen;
    for (auto [a, b] : pairs) {
      if (a == b)
        throw GraphError(GraphError::Kind::SelfLoop,
                         "self-loop (" + std::to_string(labels_[a]) + "," + std::to_string(labels_[b]) + ")");
      Edge e{std::min(a, b), std::max(a, b)};
      if (!seen.emplace(e.u, e.v).second)
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate edge (" + std::to_string(labels_[a]) + "," + std::to_string(labels_[b]) + ")");
      auto id = static_cast<EdgeId>(edges_.size());
      edges_.push_back(e);
      adjacency_[e.u].push_back({e.v, id});
      adjacency_[e.v].push_back({e.u, id});
    }
    for (const auto& adj : adjacency_) max_degree_ = std::max(max_degree_, adj.size());

    std::vector<bool> reached(n(), false);
    std::vector<VertexId> stack{0};
    reached[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (auto inc : adjacency_[v])
        if (!reached[inc.neighbor]) {
          reached[inc.neighbor] = true;
          ++count;
          stack.push_back(inc.neighbor);
        }
    }
    if (count != n()) {
      auto missing = static_cast<VertexId>(std::find(reached.begin(), reached.end(), false) - reached.begin());
      throw GraphError(GraphError::Kind::Disconnected,
                       "graph is disconnected: vertex " + std::to_string(labels_[missing]) +
                           " is not reachable from vertex " + std::to_string(labels_[0]) + " (" +
                           std::to_string(n() - count) + " of " + std::to_string(n()) + " vertices unreachable)");
    }
  }

  std::vector<Label> labels_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Incidence>> adjacency_;
  std::size_t max_degree_ = 0;
};

// ---------------------------------------------------------------------------
// Edge-set utilities

/// V(G[s]) as a membership mask over vertices.
inline std::vector<bool> vertex_mask(const Graph& g, const EdgeSet& s) {
  std::vector<bool> mask(g.n(), false);
  for (EdgeId e : s) {
    mask[g.edge(e).u] = true;
    mask[g.edge(e).v] = true;
  }
  return mask;
}

/// V(G[s]) in ascending order.
inline std::vector<VertexId> induced_vertices(const Graph& g, const EdgeSet& s) {
  auto mask = vertex_mask(g, s);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.n(); ++v)
    if (mask[v]) out.push_back(v);
  return out;
}

/// Number of s-edges at every vertex.
inline std::vector<std::uint32_t> degrees_in(const Graph& g, const EdgeSet& s) {
  std::vector<std::uint32_t> deg(g.n(), 0);
  for (EdgeId e : s) {
    ++deg[g.edge(e).u];
    ++deg[g.edge(e).v];
  }
  return deg;
}

/// Edge sets of the connected components of G[s], ordered by smallest edge.
inline std::vector<EdgeSet> components_of(const Graph& g, const EdgeSet& s) {
  std::vector<EdgeSet> out;
  EdgeSet seen = g.empty_set();
  std::vector<EdgeId> stack;
  for (EdgeId start : s) {
    if (seen.contains(start)) continue;
    EdgeSet comp = g.empty_set();
    seen.insert(start);
    stack.push_back(start);
    while (!stack.empty()) {
      EdgeId e = stack.back();
      stack.pop_back();
      comp.insert(e);
      for (VertexId w : {g.edge(e).u, g.edge(e).v})
        for (auto inc : g.incident(w))
          if (s.contains(inc.edge) && !seen.contains(inc.edge)) {
            seen.insert(inc.edge);
            stack.push_back(inc.edge);
          }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g, const EdgeSet& s) {
  if (s.empty()) return false;
  return components_of(g, s).size() == 1;
}

/// G[s] connected and acyclic. The empty set is not a tree.
inline bool is_tree(const Graph& g, const EdgeSet& s) {
  if (s.empty()) return false;
  return s.size() + 1 == induced_vertices(g, s).size() && is_connected(g, s);
}

struct PendantEdge {
  EdgeId edge;
  VertexId pendant;  // the degree-1 endpoint in G[s]
  friend bool operator==(const PendantEdge&, const PendantEdge&) = default;
};

/// Edges of s with a degree-1 endpoint in G[s], ascending by edge. An
/// isolated edge reports its smaller endpoint.
inline std::vector<PendantEdge> pendant_edges(const Graph& g, const EdgeSet& s) {
  auto deg = degrees_in(g, s);
  std::vector<PendantEdge> out;
  for (EdgeId e : s) {
    const Edge& ed = g.edge(e);
    if (deg[ed.u] == 1)
      out.push_back({e, ed.u});
    else if (deg[ed.v] == 1)
      out.push_back({e, ed.v});
  }
  return out;
}

/// Depth-first spanning tree of G[s], rooted at the smallest vertex of
/// V(G[s]), scanning incident edges in ascending index order.
inline EdgeSet spanning_tree_of(const Graph& g, const EdgeSet& s) {
  if (s.empty()) throw NotConnectedError("spanning tree of an empty edge set");
  EdgeSet tree = g.empty_set();
  VertexId root = std::min(g.edge(s.front()).u, g.edge(s.front()).v);
  for (EdgeId e : s) root = std::min(root, g.edge(e).u);

  std::vector<bool> visited(g.n(), false);
  // (vertex, position in its incidence list)
  std::vector<std::pair<VertexId, std::size_t>> stack{{root, 0}};
  visited[root] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    auto& [v, pos] = stack.back();
    auto inc = g.incident(v);
    while (pos < inc.size() && (!s.contains(inc[pos].edge) || visited[inc[pos].neighbor])) ++pos;
    if (pos == inc.size()) {
      stack.pop_back();
      continue;
    }
    auto next = inc[pos++];
    visited[next.neighbor] = true;
    ++reached;
    tree.insert(next.edge);
    stack.emplace_back(next.neighbor, 0);
  }
  if (tree.size() + 1 != reached || reached != induced_vertices(g, s).size())
    throw NotConnectedError("edge set does not induce a connected subgraph");
  return tree;
}

}  // namespace ceds
