#pragma once

#include <algorithm>
#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <vector>

namespace gradedspec {

namespace detail {

template <class Words>
struct WordStorage;

template <std::size_t N>
struct WordStorage<std::array<std::uint64_t, N>> {
  static std::array<std::uint64_t, N> make(std::size_t) { return {}; }
};

template <>
struct WordStorage<std::vector<std::uint64_t>> {
  static std::vector<std::uint64_t> make(std::size_t universe) {
    return std::vector<std::uint64_t>((universe + 63) / 64, 0);
  }
};

}  // namespace detail

// Bit set over indices [0, universe). The fixed-capacity flavour holds carrier
// subsets (elements of a ring or module), the dynamic flavour holds subsets of
// spectra whose size is only known at run time.
template <class Words>
class BasicBitSet {
 public:
  BasicBitSet() : words_(detail::WordStorage<Words>::make(0)) {}
  explicit BasicBitSet(std::size_t universe)
      : words_(detail::WordStorage<Words>::make(universe)) {}

  static BasicBitSet full(std::size_t n) {
    BasicBitSet s(n);
    for (std::size_t i = 0; i < n; ++i) s.insert(i);
    return s;
  }

  template <class Range>
  static BasicBitSet of(std::size_t universe, const Range& items) {
    BasicBitSet s(universe);
    for (auto i : items) s.insert(static_cast<std::size_t>(i));
    return s;
  }

  void insert(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void erase(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool contains(std::size_t i) const {
    return (i >> 6) < words_.size() && ((words_[i >> 6] >> (i & 63)) & 1U) != 0;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
  }

  BasicBitSet& operator|=(const BasicBitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  BasicBitSet& operator&=(const BasicBitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  BasicBitSet& operator-=(const BasicBitSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend BasicBitSet operator|(BasicBitSet a, const BasicBitSet& b) { return a |= b; }
  friend BasicBitSet operator&(BasicBitSet a, const BasicBitSet& b) { return a &= b; }
  friend BasicBitSet operator-(BasicBitSet a, const BasicBitSet& b) { return a -= b; }

  bool is_subset_of(const BasicBitSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & ~o.words_[i]) != 0) return false;
    return true;
  }
  bool intersects(const BasicBitSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
  }

  // Visits members in ascending order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        const auto bit = static_cast<std::size_t>(std::countr_zero(bits));
        f(w * 64 + bit);
        bits &= bits - 1;
      }
    }
  }

  std::vector<std::size_t> to_vector() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(i); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (auto w : words_) h = (h ^ static_cast<std::size_t>(w)) * 0x100000001b3ULL;
    return h;
  }

  friend bool operator==(const BasicBitSet& a, const BasicBitSet& b) { return a.words_ == b.words_; }

  // Canonical order: cardinality first, then lexicographic on the sorted
  // member lists. With equal cardinality the set owning the lowest index of
  // the symmetric difference comes first.
  friend bool canonical_less(const BasicBitSet& a, const BasicBitSet& b) {
    const auto ca = a.count();
    const auto cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.words_.size(); ++i) {
      const std::uint64_t diff = a.words_[i] ^ b.words_[i];
      if (diff != 0) {
        const std::uint64_t low = diff & (~diff + 1);
        return (a.words_[i] & low) != 0;
      }
    }
    return false;
  }

 private:
  Words words_;
};

inline constexpr std::size_t kMaxCarrier = 256;

using ElementSet = BasicBitSet<std::array<std::uint64_t, kMaxCarrier / 64>>;
using PointSet = BasicBitSet<std::vector<std::uint64_t>>;

struct BitSetHash {
  template <class W>
  std::size_t operator()(const BasicBitSet<W>& s) const {
    return s.hash();
  }
};

struct CanonicalLess {
  template <class W>
  bool operator()(const BasicBitSet<W>& a, const BasicBitSet<W>& b) const {
    return canonical_less(a, b);
  }
};

}  // namespace gradedspec
