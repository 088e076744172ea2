#pragma once

#include <chrono>
#include <cstdint>
#include <deque>
#include <functional>
#include <limits>
#include <queue>
#include <stdexcept>
#include <string>
#include <vector>

#include "ceds/approx.hpp"
#include "ceds/ceds.hpp"
#include "ceds/error.hpp"
#include "ceds/graph.hpp"
#include "ceds/neighbors.hpp"
#include "ceds/visited_index.hpp"

namespace ceds {

struct EnumerationStats {
  std::uint64_t outputs = 0;
  std::uint64_t expansions = 0;
  std::uint64_t duplicates = 0;
  double max_delay_s = 0.0;
  double mean_delay_s = 0.0;
  std::uint64_t peak_visited = 0;
  std::uint64_t visited_bytes = 0;
};

struct EnumerationOptions {
  /// Abort once the visited index would exceed this many solutions; 0 = no limit.
  std::uint64_t max_visited = 0;
  /// Abort once the visited index's footprint exceeds this many bytes; 0 = no limit.
  std::uint64_t max_visited_bytes = 0;
  /// Called for every neighbour generated during an expansion; `fresh` is
  /// false for neighbours already seen.
  std::function<void(const Solution& origin, const Neighbor& item, bool fresh)> on_neighbor;
};

class VisitedLimitExceeded : public Error {
 public:
  VisitedLimitExceeded(const std::string& what, EnumerationStats stats) : Error(what), stats_(stats) {}
  const EnumerationStats& stats() const noexcept { return stats_; }

 private:
  EnumerationStats stats_;
};

/// Starting point of the full enumeration: comp(E).
inline Solution initial_solution(const Graph& g) { return minimalize(g, g.all_edges()); }

namespace detail {

/// Tracks inter-output delay at the sink boundary.
class DelayClock {
  using Clock = std::chrono::steady_clock;

 public:
  DelayClock() : last_(Clock::now()) {}

  void tick(EnumerationStats& st) {
    auto now = Clock::now();
    double d = std::chrono::duration<double>(now - last_).count();
    last_ = now;
    total_ += d;
    st.max_delay_s = std::max(st.max_delay_s, d);
    ++st.outputs;
    st.mean_delay_s = total_ / static_cast<double>(st.outputs);
  }

 private:
  Clock::time_point last_;
  double total_ = 0.0;
};

template <typename Frontier, typename Sink>
EnumerationStats traverse(const Graph& g, Solution start, Frontier& frontier, std::uint64_t k, Sink&& sink,
                          const EnumerationOptions& opt) {
  EnumerationStats st;
  DelayClock clock;
  VisitedIndex visited;
  auto note_visited = [&] {
    st.peak_visited = visited.size();
    st.visited_bytes = visited.memory_bytes();
  };

  visited.insert(start.key());
  note_visited();
  frontier.push(std::move(start));
  while (!frontier.empty() && st.outputs < k) {
    Solution t = frontier.pop();
    clock.tick(st);
    sink(static_cast<const Solution&>(t));
    if (st.outputs == k) break;

    ++st.expansions;
    NeighborBatch batch = all_neighbors(g, t);
    for (auto& item : batch.items) {
      bool fresh = !visited.contains(item.solution.key());
      if (opt.on_neighbor) opt.on_neighbor(t, item, fresh);
      if (!fresh) {
        ++st.duplicates;
        continue;
      }
      if (opt.max_visited != 0 && visited.size() >= opt.max_visited) {
        note_visited();
        throw VisitedLimitExceeded("visited-solution limit of " + std::to_string(opt.max_visited) + " exceeded", st);
      }
      visited.insert(item.solution.key());
      if (opt.max_visited_bytes != 0 && visited.memory_bytes() > opt.max_visited_bytes) {
        note_visited();
        throw VisitedLimitExceeded("visited-index memory budget of " + std::to_string(opt.max_visited_bytes) +
                                       " bytes exceeded",
                                   st);
      }
      frontier.push(std::move(item.solution));
    }
    note_visited();
  }
  return st;
}

struct FifoFrontier {
  std::deque<Solution> q;
  void push(Solution s) { q.push_back(std::move(s)); }
  Solution pop() {
    Solution s = std::move(q.front());
    q.pop_front();
    return s;
  }
  bool empty() const { return q.empty(); }
};

struct BestFirstFrontier {
  std::priority_queue<Solution, std::vector<Solution>, std::greater<>> q;
  void push(Solution s) { q.push(std::move(s)); }
  Solution pop() {
    Solution s = q.top();
    q.pop();
    return s;
  }
  bool empty() const { return q.empty(); }
};

template <typename Sink>
EnumerationStats emit_trivial(const Graph& g, std::uint64_t k, Sink&& sink) {
  EnumerationStats st;
  DelayClock clock;
  auto all = enumerate_trivial(g);
  for (const auto& s : all) {
    if (st.outputs == k) break;
    clock.tick(st);
    ++st.expansions;  // one candidate batch per emitted solution
    sink(s);
  }
  st.peak_visited = all.size();
  return st;
}

}  // namespace detail

/// Breadth-first traversal of the solution supergraph from comp(E). Every
/// minimal CEDS reaches `sink` exactly once. Graphs whose minimum CEDS is a
/// single edge are answered directly by enumerate_trivial().
template <typename Sink>
EnumerationStats enumerate_all(const Graph& g, Sink&& sink, const EnumerationOptions& opt = {}) {
  constexpr auto unlimited = std::numeric_limits<std::uint64_t>::max();
  if (min_ceds_is_singleton(g)) return detail::emit_trivial(g, unlimited, sink);
  detail::FifoFrontier frontier;
  return detail::traverse(g, initial_solution(g), frontier, unlimited, sink, opt);
}

/// Best-first traversal by (size, key) from the approximate seed, stopping
/// after k outputs. With a c-approximate seed each emitted solution has size
/// at most (c + 2) times the smallest solution not yet emitted.
template <typename Sink>
EnumerationStats enumerate_kbest(const Graph& g, std::uint64_t k, Sink&& sink, const EnumerationOptions& opt = {}) {
  if (k == 0) throw std::invalid_argument("enumerate_kbest: k must be positive");
  if (min_ceds_is_singleton(g)) return detail::emit_trivial(g, k, sink);
  detail::BestFirstFrontier frontier;
  return detail::traverse(g, approx_min_ceds(g).solution, frontier, k, sink, opt);
}

}  // namespace ceds
