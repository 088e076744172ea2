#pragma once

#include <algorithm>
#include <array>
#include <cassert>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "ceds/ceds.hpp"
#include "ceds/edge_set.hpp"
#include "ceds/error.hpp"
#include "ceds/graph.hpp"

namespace ceds {

// How a neighbour was produced. Edge indices refer to the input graph.
struct TypeI {
  EdgeId removed;
  EdgeId f;
  EdgeId g;  // may equal f
};
struct TypeII {
  EdgeId removed;
  std::vector<EdgeId> path;  // one or two edges, starting at the pendant vertex
};
struct TypeIII {
  EdgeId removed;
  std::vector<EdgeId> added;
};
using Provenance = std::variant<TypeI, TypeII, TypeIII>;

inline std::string to_string(const Provenance& p) {
  auto join = [](const std::vector<EdgeId>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
  };
  struct Visitor {
    decltype(join)& list;
    std::string operator()(const TypeI& t) const {
      return "TYPE1 e=" + std::to_string(t.removed) + " f=" + std::to_string(t.f) + " g=" + std::to_string(t.g);
    }
    std::string operator()(const TypeII& t) const {
      return "TYPE2 e=" + std::to_string(t.removed) + " path=" + list(t.path);
    }
    std::string operator()(const TypeIII& t) const {
      return "TYPE3 e=" + std::to_string(t.removed) + " F=" + list(t.added);
    }
  };
  return std::visit(Visitor{join}, p);
}

struct Neighbor {
  Solution solution;
  Provenance provenance;
};

struct NeighborBatch {
  Solution origin;
  std::vector<Neighbor> items;
};

namespace detail {

/// Checks the candidate and appends comp(candidate). Candidates that are not
/// connected edge dominating sets are dropped.
inline void emit(const Graph& g, const EdgeSet& candidate, Provenance prov, std::vector<Neighbor>& out) {
  if (!is_ceds(g, candidate)) return;
  Solution y = minimalize(g, candidate);
  assert(is_minimal_ceds(g, y.edges()));
  out.push_back({std::move(y), std::move(prov)});
}

inline PendantEdge require_pendant(const Graph& g, const EdgeSet& x, EdgeId e) {
  if (x.size() < 2) throw NotPendantError("solution has a single edge; pendant edges need at least two");
  for (auto p : pendant_edges(g, x))
    if (p.edge == e) return p;
  throw NotPendantError("edge " + std::to_string(e) + " is not a pendant edge of the solution");
}

}  // namespace detail

/// W(X, e): vertices off e that lie on a private edge of e which is not a
/// pendant edge of G.
inline std::vector<VertexId> w_set(const Graph& g, const Solution& x, EdgeId e) {
  detail::require_pendant(g, x.edges(), e);
  const Edge& ed = g.edge(e);
  std::set<VertexId> w;
  for (EdgeId h : private_edges(g, x.edges(), e)) {
    if (g.is_pendant_edge(h)) continue;
    const Edge& he = g.edge(h);
    for (VertexId z : {he.u, he.v})
      if (!ed.touches(z)) w.insert(z);
  }
  return {w.begin(), w.end()};
}

/// Remove an internal edge e of X (splitting G[X] into two edge-carrying
/// trees) and reconnect through f and g, where f leaves one side at some
/// vertex and g joins f's outer endpoint v to the other side.
inline std::vector<Neighbor> type1_neighbors(const Graph& g, const Solution& x) {
  std::vector<Neighbor> out;
  const EdgeSet& xs = x.edges();
  for (EdgeId e : xs) {
    EdgeSet rest = xs;
    rest.erase(e);
    auto comps = components_of(g, rest);
    if (comps.size() != 2) continue;
    std::array<std::vector<bool>, 2> side{vertex_mask(g, comps[0]), vertex_mask(g, comps[1])};
    for (int i = 0; i < 2; ++i) {
      const auto& mine = side[i];
      const auto& theirs = side[1 - i];
      for (VertexId p = 0; p < g.n(); ++p) {
        if (!mine[p]) continue;
        for (auto finc : g.incident(p)) {
          VertexId v = finc.neighbor;
          if (mine[v]) continue;
          if (theirs[v]) {
            EdgeSet cand = rest;
            cand.insert(finc.edge);
            detail::emit(g, cand, TypeI{e, finc.edge, finc.edge}, out);
          }
          for (auto ginc : g.incident(v)) {
            if (ginc.edge == finc.edge || !theirs[ginc.neighbor]) continue;
            EdgeSet cand = rest;
            cand.insert(finc.edge);
            cand.insert(ginc.edge);
            detail::emit(g, cand, TypeI{e, finc.edge, ginc.edge}, out);
          }
        }
      }
    }
  }
  return out;
}

/// Drop a pendant edge e = {u, v} (v pendant) and reattach v through a path
/// of length one or two that meets V(G[X \ {e}]) only at its far end.
inline std::vector<Neighbor> type2_neighbors(const Graph& g, const Solution& x) {
  std::vector<Neighbor> out;
  const EdgeSet& xs = x.edges();
  if (xs.size() < 2) return out;
  for (auto [e, v] : pendant_edges(g, xs)) {
    EdgeSet rest = xs;
    rest.erase(e);
    auto inside = vertex_mask(g, rest);
    for (auto first : g.incident(v)) {
      VertexId w = first.neighbor;
      if (inside[w]) {
        EdgeSet cand = rest;
        cand.insert(first.edge);
        detail::emit(g, cand, TypeII{e, {first.edge}}, out);
        continue;
      }
      for (auto second : g.incident(w)) {
        if (second.neighbor == v || !inside[second.neighbor]) continue;
        EdgeSet cand = rest;
        cand.insert(first.edge);
        cand.insert(second.edge);
        detail::emit(g, cand, TypeII{e, {first.edge, second.edge}}, out);
      }
    }
  }
  return out;
}

/// Drop pendant edge e and re-dominate its private edges by linking every
/// vertex of W(X, e) to V(G[X \ {e}]) through its smallest-index such edge.
/// None when the pendant vertex carries a pendant edge of G.
inline std::optional<Neighbor> type3_neighbor(const Graph& g, const Solution& x, EdgeId e) {
  PendantEdge pe = detail::require_pendant(g, x.edges(), e);
  for (auto inc : g.incident(pe.pendant))
    if (g.is_pendant_edge(inc.edge)) return std::nullopt;

  auto w = w_set(g, x, e);
  // x is minimal, so e has a private edge {v, z}; with no G-pendant edge at v
  // that z has degree >= 2 and lands in W.
  if (w.empty()) throw std::logic_error("type-III neighbour with empty W(X, e)");

  EdgeSet rest = x.edges();
  rest.erase(e);
  auto inside = vertex_mask(g, rest);
  std::vector<EdgeId> added;
  for (VertexId z : w) {
    EdgeId best = static_cast<EdgeId>(g.m());
    for (auto inc : g.incident(z))
      if (inside[inc.neighbor]) best = std::min(best, inc.edge);
    if (best == g.m()) throw std::logic_error("W(X, e) vertex without an edge into V(G[X \\ {e}])");
    added.push_back(best);
  }
  EdgeSet cand = rest;
  for (EdgeId f : added) cand.insert(f);
  std::vector<Neighbor> out;
  detail::emit(g, cand, TypeIII{e, std::move(added)}, out);
  if (out.empty()) return std::nullopt;
  return std::move(out.front());
}

/// N(X): all type-I/II/III neighbours, first occurrence kept, X removed.
inline NeighborBatch all_neighbors(const Graph& g, const Solution& x) {
  NeighborBatch batch{x, {}};
  std::vector<Neighbor> raw = type1_neighbors(g, x);
  {
    auto t2 = type2_neighbors(g, x);
    raw.insert(raw.end(), std::make_move_iterator(t2.begin()), std::make_move_iterator(t2.end()));
  }
  if (x.size() >= 2)
    for (auto p : pendant_edges(g, x.edges()))
      if (auto t3 = type3_neighbor(g, x, p.edge)) raw.push_back(std::move(*t3));

  std::set<std::vector<EdgeId>> seen{x.key()};
  for (auto& item : raw)
    if (seen.insert(item.solution.key()).second) batch.items.push_back(std::move(item));
  return batch;
}

}  // namespace ceds
