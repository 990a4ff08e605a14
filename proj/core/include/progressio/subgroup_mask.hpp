#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace progressio {

using ElementId = std::uint32_t;

/// Fixed-length bitset over the element indices of one FiniteGroup. Bit i
/// set means elements[i] belongs to the set. Masks are only meaningful
/// relative to the group they were built against.
class SubgroupMask {
 public:
  SubgroupMask() = default;
  explicit SubgroupMask(std::size_t size)
      : size_(size), words_((size + 63) / 64, 0) {}

  static SubgroupMask full(std::size_t size) {
    SubgroupMask m(size);
    for (std::size_t i = 0; i < size; ++i) m.set(static_cast<ElementId>(i));
    return m;
  }

  std::size_t size() const noexcept { return size_; }

  bool test(ElementId i) const noexcept {
    return (words_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(ElementId i) noexcept { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(ElementId i) noexcept {
    words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool is_subset_of(SubgroupMask const& other) const noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k] & ~other.words_[k]) return false;
    return true;
  }

  SubgroupMask& operator&=(SubgroupMask const& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] &= other.words_[k];
    return *this;
  }
  SubgroupMask& operator|=(SubgroupMask const& other) noexcept {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] |= other.words_[k];
    return *this;
  }
  friend SubgroupMask operator&(SubgroupMask a, SubgroupMask const& b) noexcept {
    return a &= b;
  }
  friend SubgroupMask operator|(SubgroupMask a, SubgroupMask const& b) noexcept {
    return a |= b;
  }

  /// Calls f(i) for every set bit in increasing order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        auto bit = static_cast<std::size_t>(std::countr_zero(w));
        f(static_cast<ElementId>(k * 64 + bit));
        w &= w - 1;
      }
    }
  }

  std::vector<ElementId> indices() const {
    std::vector<ElementId> out;
    out.reserve(count());
    for_each([&](ElementId i) { out.push_back(i); });
    return out;
  }

  std::vector<std::uint64_t> const& words() const noexcept { return words_; }

  friend bool operator==(SubgroupMask const&, SubgroupMask const&) = default;

  /// Orders by the ascending list of member indices.
  friend std::strong_ordering operator<=>(SubgroupMask const& a,
                                          SubgroupMask const& b) noexcept {
    for (std::size_t k = 0; k < a.words_.size() && k < b.words_.size(); ++k) {
      if (a.words_[k] == b.words_[k]) continue;
      std::uint64_t diff = a.words_[k] ^ b.words_[k];
      std::uint64_t low = diff & (~diff + 1);
      // whoever owns the lowest differing index comes first
      return (a.words_[k] & low) ? std::strong_ordering::less
                                 : std::strong_ordering::greater;
    }
    return a.size_ <=> b.size_;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

struct SubgroupMaskHash {
  std::size_t operator()(SubgroupMask const& m) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    for (auto w : m.words()) {
      h ^= w + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace progressio
