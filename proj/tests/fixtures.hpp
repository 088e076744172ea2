#pragma once

#include <string>
#include <vector>

#include "ceds/graph.hpp"
#include "ceds/io.hpp"

namespace ceds::testing {

// Path P_n with e_i = {i, i+1}.
inline Graph path(int n) {
  std::vector<std::pair<Label, Label>> p;
  for (int i = 0; i + 1 < n; ++i) p.emplace_back(i, i + 1);
  return Graph::from_edge_list(std::span<const std::pair<Label, Label>>(p));
}

// Cycle C_n with e_i = {i, i+1 mod n}.
inline Graph cycle(int n) {
  std::vector<std::pair<Label, Label>> p;
  for (int i = 0; i < n; ++i) p.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(std::span<const std::pair<Label, Label>>(p));
}

// K_{1,k} with centre 0 and e_i = {0, i+1}.
inline Graph star(int k) {
  std::vector<std::pair<Label, Label>> p;
  for (int i = 1; i <= k; ++i) p.emplace_back(0, i);
  return Graph::from_edge_list(std::span<const std::pair<Label, Label>>(p));
}

inline Graph complete(int n) {
  std::vector<std::pair<Label, Label>> p;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) p.emplace_back(i, j);
  return Graph::from_edge_list(std::span<const std::pair<Label, Label>>(p));
}

inline Graph k23() { return Graph::from_edge_list({{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}}); }

inline EdgeSet set_of(const Graph& g, std::initializer_list<EdgeId> es) { return EdgeSet(g.m(), es); }

}  // namespace ceds::testing
