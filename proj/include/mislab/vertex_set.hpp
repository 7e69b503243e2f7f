#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <vector>

#ifndef MISLAB_MAX_VERTICES
#define MISLAB_MAX_VERTICES 128
#endif

namespace mislab {

inline constexpr int kMaxVertices = MISLAB_MAX_VERTICES;

/// Fixed-width bitset over vertex ids 0..kMaxVertices-1.
///
/// All graph kernels work on these; with the default cap a set is two
/// machine words, so copies are cheap and passed by value in the search
/// recursions.
class VertexSet {
 public:
  static constexpr std::size_t kWords = (kMaxVertices + 63) / 64;

  constexpr VertexSet() = default;
  VertexSet(std::initializer_list<int> vs) {
    for (int v : vs) set(v);
  }

  /// {0, ..., n-1}
  static constexpr VertexSet prefix(int n) {
    VertexSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w, n -= 64) {
      s.words_[w] = n >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1);
    }
    return s;
  }

  static VertexSet from(const std::vector<int>& vs) {
    VertexSet s;
    for (int v : vs) s.set(v);
    return s;
  }

  constexpr void set(int v) { words_[v >> 6] |= bit(v); }
  constexpr void reset(int v) { words_[v >> 6] &= ~bit(v); }
  constexpr void flip(int v) { words_[v >> 6] ^= bit(v); }
  [[nodiscard]] constexpr bool test(int v) const { return (words_[v >> 6] & bit(v)) != 0; }

  [[nodiscard]] constexpr int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }
  [[nodiscard]] constexpr bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  [[nodiscard]] constexpr bool any() const { return !empty(); }

  /// Smallest element, or -1.
  [[nodiscard]] constexpr int first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w]) return static_cast<int>(w * 64) + std::countr_zero(words_[w]);
    return -1;
  }
  /// Largest element, or -1.
  [[nodiscard]] constexpr int last() const {
    for (std::size_t w = kWords; w-- > 0;)
      if (words_[w]) return static_cast<int>(w * 64) + 63 - std::countl_zero(words_[w]);
    return -1;
  }
  /// Smallest element strictly greater than v, or -1.
  [[nodiscard]] constexpr int next(int v) const {
    ++v;
    if (v >= kMaxVertices) return -1;
    std::size_t w = static_cast<std::size_t>(v >> 6);
    std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (v & 63));
    while (true) {
      if (cur) return static_cast<int>(w * 64) + std::countr_zero(cur);
      if (++w == kWords) return -1;
      cur = words_[w];
    }
  }

  [[nodiscard]] constexpr bool intersects(const VertexSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & o.words_[w]) return true;
    return false;
  }
  [[nodiscard]] constexpr bool is_subset_of(const VertexSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  constexpr VertexSet& operator&=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  constexpr VertexSet& operator|=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  constexpr VertexSet& operator^=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] ^= o.words_[w];
    return *this;
  }
  /// Set difference.
  constexpr VertexSet& operator-=(const VertexSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend constexpr VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend constexpr VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend constexpr VertexSet operator^(VertexSet a, const VertexSet& b) { return a ^= b; }
  friend constexpr VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend constexpr bool operator==(const VertexSet&, const VertexSet&) = default;
  // Orders by highest differing word first, i.e. as a big binary number.
  friend constexpr std::strong_ordering operator<=>(const VertexSet& a, const VertexSet& b) {
    for (std::size_t w = kWords; w-- > 0;)
      if (a.words_[w] != b.words_[w]) return a.words_[w] <=> b.words_[w];
    return std::strong_ordering::equal;
  }

  [[nodiscard]] std::vector<int> to_vector() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(count()));
    for (int v : *this) out.push_back(v);
    return out;
  }

  class iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = int;
    using difference_type = std::ptrdiff_t;
    using pointer = const int*;
    using reference = int;

    iterator() = default;
    iterator(const VertexSet* s, int v) : set_(s), v_(v) {}
    int operator*() const { return v_; }
    iterator& operator++() {
      v_ = set_->next(v_);
      return *this;
    }
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    bool operator==(const iterator& o) const { return v_ == o.v_; }

   private:
    const VertexSet* set_ = nullptr;
    int v_ = -1;
  };
  [[nodiscard]] iterator begin() const { return {this, first()}; }
  [[nodiscard]] iterator end() const { return {this, -1}; }

 private:
  static constexpr std::uint64_t bit(int v) { return std::uint64_t{1} << (v & 63); }
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace mislab
