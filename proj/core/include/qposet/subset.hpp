#pragma once

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>

namespace qposet {

/// Index of an element inside one poset's element table.
using Element = std::uint32_t;

/// Hard capacity of every structure handled by the library.
inline constexpr std::size_t kMaxElements = 256;

/// Fixed-capacity bitset over element indices of a single poset.
///
/// Value type, 32 bytes, no allocation. Iteration yields members in
/// increasing index order, which every algorithm relies on for
/// deterministic witnesses.
class Subset {
 public:
  static constexpr std::size_t kWords = kMaxElements / 64;

  class const_iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Element;
    using difference_type = std::ptrdiff_t;
    using pointer = const Element*;
    using reference = Element;

    const_iterator() = default;
    const_iterator(const Subset* set, std::size_t pos) : set_(set), pos_(pos) { seek(); }

    Element operator*() const { return static_cast<Element>(pos_); }
    const_iterator& operator++() {
      ++pos_;
      seek();
      return *this;
    }
    const_iterator operator++(int) {
      auto copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const const_iterator& other) const { return pos_ == other.pos_; }

   private:
    void seek() {
      while (pos_ < kMaxElements) {
        std::size_t w = pos_ / 64;
        std::uint64_t bits = set_->words_[w] >> (pos_ % 64);
        if (bits != 0) {
          pos_ += static_cast<std::size_t>(std::countr_zero(bits));
          return;
        }
        pos_ = (w + 1) * 64;
      }
      pos_ = kMaxElements;
    }

    const Subset* set_ = nullptr;
    std::size_t pos_ = kMaxElements;
  };

  constexpr Subset() = default;
  Subset(std::initializer_list<Element> members) {
    for (Element e : members) insert(e);
  }

  static Subset singleton(Element e) {
    Subset s;
    s.insert(e);
    return s;
  }

  /// {0, ..., n-1}
  static Subset first(std::size_t n) {
    Subset s;
    for (std::size_t w = 0; w < kWords; ++w) {
      if (n >= (w + 1) * 64) {
        s.words_[w] = ~std::uint64_t{0};
      } else if (n > w * 64) {
        s.words_[w] = (std::uint64_t{1} << (n - w * 64)) - 1;
      }
    }
    return s;
  }

  bool contains(Element e) const { return (words_[e / 64] >> (e % 64)) & 1U; }
  void insert(Element e) { words_[e / 64] |= std::uint64_t{1} << (e % 64); }
  void erase(Element e) { words_[e / 64] &= ~(std::uint64_t{1} << (e % 64)); }

  bool empty() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }

  /// Smallest member, if any.
  std::optional<Element> front() const {
    auto it = begin();
    if (it == end()) return std::nullopt;
    return *it;
  }

  /// The sole member when size() == 1.
  std::optional<Element> only() const {
    if (size() != 1) return std::nullopt;
    return front();
  }

  bool is_subset_of(const Subset& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & ~other.words_[w]) != 0) return false;
    return true;
  }

  bool intersects(const Subset& other) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if ((words_[w] & other.words_[w]) != 0) return true;
    return false;
  }

  Subset& operator&=(const Subset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  Subset& operator|=(const Subset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  Subset& operator-=(const Subset& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }

  friend Subset operator&(Subset a, const Subset& b) { return a &= b; }
  friend Subset operator|(Subset a, const Subset& b) { return a |= b; }
  friend Subset operator-(Subset a, const Subset& b) { return a -= b; }

  friend bool operator==(const Subset&, const Subset&) = default;
  friend auto operator<=>(const Subset&, const Subset&) = default;

  const_iterator begin() const { return const_iterator(this, 0); }
  const_iterator end() const { return const_iterator(this, kMaxElements); }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

}  // namespace qposet
