#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "ceds/edge_set.hpp"

namespace ceds {

/// Trie over canonical keys (ascending edge-index sequences). insert and
/// contains walk one node per key element, so both run in O(|key| log m).
class VisitedIndex {
  struct Node {
    std::vector<std::pair<EdgeId, std::uint32_t>> children;  // sorted by edge
    bool terminal = false;
  };

 public:
  VisitedIndex() : nodes_(1) {}

  /// Returns true if the key was not present before.
  bool insert(std::span<const EdgeId> key) {
    std::uint32_t cur = 0;
    for (EdgeId e : key) {
      auto& ch = nodes_[cur].children;
      auto it = std::lower_bound(ch.begin(), ch.end(), e, [](const auto& p, EdgeId x) { return p.first < x; });
      if (it != ch.end() && it->first == e) {
        cur = it->second;
        continue;
      }
      auto next = static_cast<std::uint32_t>(nodes_.size());
      std::size_t before = ch.capacity();
      ch.insert(it, {e, next});
      bytes_ += (ch.capacity() - before) * sizeof(std::pair<EdgeId, std::uint32_t>);
      nodes_.emplace_back();
      cur = next;
    }
    if (nodes_[cur].terminal) return false;
    nodes_[cur].terminal = true;
    ++size_;
    return true;
  }

  bool contains(std::span<const EdgeId> key) const {
    std::uint32_t cur = 0;
    for (EdgeId e : key) {
      const auto& ch = nodes_[cur].children;
      auto it = std::lower_bound(ch.begin(), ch.end(), e, [](const auto& p, EdgeId x) { return p.first < x; });
      if (it == ch.end() || it->first != e) return false;
      cur = it->second;
    }
    return nodes_[cur].terminal;
  }

  std::size_t size() const noexcept { return size_; }

  /// Approximate heap footprint in bytes.
  std::size_t memory_bytes() const noexcept { return nodes_.capacity() * sizeof(Node) + bytes_; }

 private:
  std::vector<Node> nodes_;
  std::size_t size_ = 0;
  std::size_t bytes_ = 0;
};

}  // namespace ceds
