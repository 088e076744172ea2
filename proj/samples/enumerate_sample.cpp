// Lists every minimal connected edge dominating set of a small graph, then
// the three smallest found by the best-first variant.
#include <iostream>

#include "ceds/enumerate.hpp"
#include "ceds/io.hpp"

int main() {
  ceds::Graph g = ceds::Graph::from_edge_list({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}});

  auto stats = ceds::enumerate_all(g, [&](const ceds::Solution& s) { std::cout << ceds::format_solution(g, s.edges()) << '\n'; });
  std::cout << stats.outputs << " solutions, " << stats.expansions << " expansions\n\n";

  ceds::enumerate_kbest(g, 3, [&](const ceds::Solution& s) {
    std::cout << s.size() << ": " << ceds::format_solution(g, s.edges()) << '\n';
  });
}
