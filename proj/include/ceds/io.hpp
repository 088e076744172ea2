#pragma once

#include <charconv>
#include <cstdint>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ceds/edge_set.hpp"
#include "ceds/error.hpp"
#include "ceds/graph.hpp"

namespace ceds {

enum class InputFormat { EdgeList, Dimacs };

namespace detail {

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && !(s[j] == ' ' || s[j] == '\t' || s[j] == '\r')) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline bool parse_uint(std::string_view tok, std::uint64_t& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size();
}

}  // namespace detail

/// Edge-list text: one `u v` pair of non-negative integers per line; `#`
/// starts a comment. Vertices are numbered by first appearance.
inline Graph read_edge_list(std::istream& in) {
  std::vector<std::pair<Label, Label>> pairs;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view body(line);
    if (auto hash = body.find('#'); hash != std::string_view::npos) body = body.substr(0, hash);
    auto tok = detail::split_ws(body);
    if (tok.empty()) continue;
    if (tok.size() != 2) throw ParseError(lineno, "expected two vertex ids, got " + std::to_string(tok.size()) + " tokens");
    std::uint64_t a = 0, b = 0;
    if (!detail::parse_uint(tok[0], a) || !detail::parse_uint(tok[1], b))
      throw ParseError(lineno, "vertex ids must be non-negative integers");
    pairs.emplace_back(static_cast<Label>(a), static_cast<Label>(b));
  }
  if (pairs.empty()) throw ParseError(lineno, "no edges in input");
  return Graph::from_edge_list(std::span<const std::pair<Label, Label>>(pairs));
}

/// DIMACS: `c` comments, one `p <kind> n m` line, then `e u v` lines with
/// 1-indexed vertices; vertex k becomes k-1.
inline Graph read_dimacs(std::istream& in) {
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::string line;
  std::size_t lineno = 0, p_line = 0;
  std::uint64_t n = 0, m = 0;
  bool have_p = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto tok = detail::split_ws(line);
    if (tok.empty() || tok[0] == "c") continue;
    if (tok[0] == "p") {
      if (have_p) throw ParseError(lineno, "duplicate problem line");
      if (tok.size() != 4 || !detail::parse_uint(tok[2], n) || !detail::parse_uint(tok[3], m))
        throw ParseError(lineno, "expected `p edge <n> <m>`");
      have_p = true;
      p_line = lineno;
      continue;
    }
    if (tok[0] == "e") {
      if (!have_p) throw ParseError(lineno, "edge line before problem line");
      std::uint64_t a = 0, b = 0;
      if (tok.size() != 3 || !detail::parse_uint(tok[1], a) || !detail::parse_uint(tok[2], b))
        throw ParseError(lineno, "expected `e <u> <v>`");
      if (a < 1 || a > n || b < 1 || b > n) throw ParseError(lineno, "vertex out of range 1.." + std::to_string(n));
      pairs.emplace_back(static_cast<VertexId>(a - 1), static_cast<VertexId>(b - 1));
      continue;
    }
    throw ParseError(lineno, "unrecognised line type `" + std::string(tok[0]) + "`");
  }
  if (!have_p) throw ParseError(lineno, "missing problem line");
  if (pairs.size() != m)
    throw ParseError(p_line, "problem line declares " + std::to_string(m) + " edges but " + std::to_string(pairs.size()) +
                                 " were given");
  return Graph::from_indexed(n, std::span<const std::pair<VertexId, VertexId>>(pairs));
}

inline Graph read_graph(std::istream& in, InputFormat fmt) {
  return fmt == InputFormat::Dimacs ? read_dimacs(in) : read_edge_list(in);
}

inline Graph parse_graph(const std::string& text, InputFormat fmt = InputFormat::EdgeList) {
  std::istringstream in(text);
  return read_graph(in, fmt);
}

/// Edge-list text of g in edge-index order, using vertex labels.
inline void write_edge_list(std::ostream& out, const Graph& g) {
  for (const Edge& e : g.edges()) out << g.label(e.u) << ' ' << g.label(e.v) << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

/// Solution line: space-separated `u-v` label pairs (smaller label first) in
/// ascending edge index.
inline std::string format_solution(const Graph& g, const EdgeSet& s) {
  std::string out;
  for (EdgeId e : s) {
    Label a = g.label(g.edge(e).u), b = g.label(g.edge(e).v);
    if (b < a) std::swap(a, b);
    if (!out.empty()) out += ' ';
    out += std::to_string(a);
    out += '-';
    out += std::to_string(b);
  }
  return out;
}

/// Inverse of format_solution. Throws ParseError (line 1) on unknown edges.
inline EdgeSet parse_solution(const Graph& g, std::string_view line) {
  std::map<Label, VertexId> by_label;
  for (VertexId v = 0; v < g.n(); ++v) by_label.emplace(g.label(v), v);
  EdgeSet s = g.empty_set();
  for (auto tok : detail::split_ws(line)) {
    auto dash = tok.find('-');
    std::uint64_t a = 0, b = 0;
    if (dash == std::string_view::npos || !detail::parse_uint(tok.substr(0, dash), a) ||
        !detail::parse_uint(tok.substr(dash + 1), b))
      throw ParseError(1, "malformed edge token `" + std::string(tok) + "`");
    auto ia = by_label.find(static_cast<Label>(a));
    auto ib = by_label.find(static_cast<Label>(b));
    EdgeId e = static_cast<EdgeId>(g.m());
    if (ia != by_label.end() && ib != by_label.end()) e = g.find_edge(ia->second, ib->second);
    if (e == g.m()) throw ParseError(1, "edge `" + std::string(tok) + "` is not in the graph");
    s.insert(e);
  }
  return s;
}

}  // namespace ceds
