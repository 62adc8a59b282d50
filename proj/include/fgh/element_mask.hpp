#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fgh {

/// Element index inside a Group. Index 0 is always the identity.
using Elem = std::uint16_t;

/// Fixed-size bitset over the elements of one group.
class ElementMask {
 public:
  ElementMask() = default;
  explicit ElementMask(std::size_t size) : words_((size + 63) / 64, 0), size_(size) {}

  std::size_t size() const noexcept { return size_; }

  bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) noexcept { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(const ElementMask& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if (words_[i] & ~other.words_[i]) return false;
    }
    return true;
  }

  std::size_t intersection_count(const ElementMask& other) const noexcept {
    std::size_t c = 0;
    for (std::size_t i = 0; i < words_.size(); ++i) {
      c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
    }
    return c;
  }

  ElementMask& operator&=(const ElementMask& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
  }

  ElementMask& operator|=(const ElementMask& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
  }

  friend ElementMask operator&(ElementMask a, const ElementMask& b) { return a &= b; }
  friend ElementMask operator|(ElementMask a, const ElementMask& b) { return a |= b; }

  std::vector<Elem> elements() const {
    std::vector<Elem> out;
    out.reserve(count());
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        int b = std::countr_zero(bits);
        out.push_back(static_cast<Elem>(w * 64 + static_cast<std::size_t>(b)));
        bits &= bits - 1;
      }
    }
    return out;
  }

  std::size_t hash() const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return h;
  }

  friend bool operator==(const ElementMask&, const ElementMask&) = default;

 private:
  std::vector<std::uint64_t> words_;
  std::size_t size_ = 0;
};

struct ElementMaskHash {
  std::size_t operator()(const ElementMask& m) const noexcept { return m.hash(); }
};

}  // namespace fgh
