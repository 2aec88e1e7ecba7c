#pragma once

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace formalab {

using Element = std::uint32_t;

/// Fixed-capacity bitset over the element indices of one group.
///
/// The owning group is never stored; every API that interprets an ElementSet
/// takes the group alongside it.
class ElementSet {
 public:
  static constexpr std::size_t kWords = 16;
  static constexpr std::size_t kCapacity = kWords * 64;

  ElementSet() = default;

  static ElementSet range(std::size_t n) {
    ElementSet s;
    for (std::size_t w = 0; w < kWords && n > 0; ++w) {
      const std::size_t take = n >= 64 ? 64 : n;
      s.words_[w] = take == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << take) - 1);
      n -= take;
    }
    return s;
  }

  static ElementSet single(Element x) {
    ElementSet s;
    s.set(x);
    return s;
  }

  void set(Element i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(Element i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  [[nodiscard]] bool test(Element i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }

  [[nodiscard]] std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  [[nodiscard]] bool none() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  [[nodiscard]] bool any() const { return !none(); }

  [[nodiscard]] bool is_subset_of(const ElementSet& o) const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }

  /// Smallest member, or -1 when empty.
  [[nodiscard]] long first() const {
    for (std::size_t w = 0; w < kWords; ++w)
      if (words_[w]) return static_cast<long>(w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w])));
    return -1;
  }

  template <typename Fn>
  void for_each(Fn&& fn) const {
    for (std::size_t w = 0; w < kWords; ++w) {
      std::uint64_t bits = words_[w];
      while (bits) {
        const auto b = static_cast<Element>(std::countr_zero(bits));
        fn(static_cast<Element>(w * 64) + b);
        bits &= bits - 1;
      }
    }
  }

  [[nodiscard]] std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(count());
    for_each([&](Element x) { out.push_back(x); });
    return out;
  }

  ElementSet& operator&=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= o.words_[w];
    return *this;
  }
  ElementSet& operator|=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] |= o.words_[w];
    return *this;
  }
  ElementSet& operator-=(const ElementSet& o) {
    for (std::size_t w = 0; w < kWords; ++w) words_[w] &= ~o.words_[w];
    return *this;
  }
  friend ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }
  friend ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
  friend ElementSet operator-(ElementSet a, const ElementSet& b) { return a -= b; }
  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  [[nodiscard]] std::size_t hash() const {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto w : words_) {
      h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
  }

  /// Little-endian hex of the first n bits, most significant nibble first.
  [[nodiscard]] std::string to_hex(std::size_t n) const {
    static constexpr char kDigits[] = "0123456789abcdef";
    const std::size_t nibbles = n == 0 ? 1 : (n + 3) / 4;
    std::string out(nibbles, '0');
    for (std::size_t k = 0; k < nibbles; ++k) {
      unsigned v = 0;
      for (unsigned b = 0; b < 4; ++b) {
        const std::size_t i = k * 4 + b;
        if (i < n && test(static_cast<Element>(i))) v |= 1U << b;
      }
      out[nibbles - 1 - k] = kDigits[v];
    }
    return out;
  }

  /// Canonical order: by cardinality, then lexicographically by sorted
  /// element lists.
  friend bool canonical_less(const ElementSet& a, const ElementSet& b) {
    const auto ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t w = 0; w < kWords; ++w) {
      const std::uint64_t diff = a.words_[w] ^ b.words_[w];
      if (diff) {
        const std::uint64_t low = diff & (~diff + 1);
        return (a.words_[w] & low) != 0;
      }
    }
    return false;
  }

 private:
  std::array<std::uint64_t, kWords> words_{};
};

/// A subset of a group known to be a subgroup.
using SubgroupSet = ElementSet;

struct ElementSetHash {
  std::size_t operator()(const ElementSet& s) const { return s.hash(); }
};

}  // namespace formalab
