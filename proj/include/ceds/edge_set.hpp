#pragma once

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

namespace ceds {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Set of edge indices over a fixed universe [0, m), stored as a dense bitset.
/// Iteration is always in ascending index order, which is the canonical order
/// used for keys, tie-breaks and serialization.
class EdgeSet {
  using Word = std::uint64_t;
  static constexpr std::size_t kBits = 64;

 public:
  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = EdgeId;
    using difference_type = std::ptrdiff_t;
    using pointer = const EdgeId*;
    using reference = EdgeId;

    const_iterator() = default;
    const_iterator(const EdgeSet* set, std::size_t pos) : set_(set), pos_(pos) { seek(); }

    EdgeId operator*() const { return static_cast<EdgeId>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const const_iterator& o) const { return pos_ == o.pos_; }

   private:
    void seek() {
      const std::size_t n = set_->universe_;
      while (pos_ < n) {
        const std::size_t w = pos_ / kBits;
        const Word rest = set_->words_[w] >> (pos_ % kBits);
        if (rest != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(rest));
          return;
        }
        pos_ = (w + 1) * kBits;
      }
      pos_ = n;
    }

    const EdgeSet* set_ = nullptr;
    std::size_t pos_ = 0;
  };

  EdgeSet() = default;
  explicit EdgeSet(std::size_t universe) : universe_(universe), words_((universe + kBits - 1) / kBits, 0) {}
  EdgeSet(std::size_t universe, std::initializer_list<EdgeId> members) : EdgeSet(universe) {
    for (EdgeId e : members) insert(e);
  }
  template <typename Range>
  static EdgeSet from_range(std::size_t universe, const Range& members) {
    EdgeSet s(universe);
    for (auto e : members) s.insert(static_cast<EdgeId>(e));
    return s;
  }
  static EdgeSet full(std::size_t universe) {
    EdgeSet s(universe);
    for (std::size_t e = 0; e < universe; ++e) s.insert(static_cast<EdgeId>(e));
    return s;
  }

  std::size_t universe() const noexcept { return universe_; }

  bool contains(EdgeId e) const {
    assert(e < universe_);
    return (words_[e / kBits] >> (e % kBits)) & 1u;
  }
  void insert(EdgeId e) {
    assert(e < universe_);
    words_[e / kBits] |= Word{1} << (e % kBits);
  }
  void erase(EdgeId e) {
    assert(e < universe_);
    words_[e / kBits] &= ~(Word{1} << (e % kBits));
  }

  std::size_t size() const noexcept {
    std::size_t c = 0;
    for (Word w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const noexcept {
    return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
  }

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, universe_); }

  /// Smallest member, or universe() when empty.
  EdgeId front() const { return *begin(); }

  EdgeSet& operator|=(const EdgeSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  EdgeSet& operator&=(const EdgeSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  EdgeSet& operator-=(const EdgeSet& o) {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
  friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
  friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

  bool is_subset_of(const EdgeSet& o) const {
    assert(o.universe_ == universe_);
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }

  /// Ascending member list; the canonical key of the set.
  std::vector<EdgeId> to_vector() const { return {begin(), end()}; }

  friend bool operator==(const EdgeSet& a, const EdgeSet& b) = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace ceds
