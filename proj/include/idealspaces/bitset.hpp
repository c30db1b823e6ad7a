#pragma once

#include <bit>
#include <cassert>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace idealspaces {

/// Set over a fixed universe {0, ..., n-1}, packed into 64-bit words.
/// Used for element sets of a ring, ideal-index sets of a lattice and
/// point sets of a finite poset.
class BitSet {
 public:
  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  BitSet() = default;
  explicit BitSet(std::size_t universe) : n_(universe), w_((universe + 63) / 64, 0) {}

  static BitSet full(std::size_t universe) {
    BitSet b(universe);
    for (auto& w : b.w_) w = ~std::uint64_t{0};
    b.trim();
    return b;
  }
  static BitSet single(std::size_t universe, std::size_t i) {
    BitSet b(universe);
    b.set(i);
    return b;
  }

  std::size_t universe_size() const { return n_; }

  bool test(std::size_t i) const {
    assert(i < n_);
    return (w_[i >> 6] >> (i & 63)) & 1u;
  }
  void set(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] |= std::uint64_t{1} << (i & 63);
  }
  void reset(std::size_t i) {
    assert(i < n_);
    w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool empty() const {
    for (auto w : w_)
      if (w) return false;
    return true;
  }
  bool any() const { return !empty(); }

  BitSet& operator|=(const BitSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  BitSet& operator&=(const BitSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  /// Set difference: removes every member of `o`.
  BitSet& subtract(const BitSet& o) {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }
  friend BitSet operator|(BitSet a, const BitSet& b) { return a |= b; }
  friend BitSet operator&(BitSet a, const BitSet& b) { return a &= b; }

  bool operator==(const BitSet& o) const = default;

  bool subset_of(const BitSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const BitSet& o) const {
    assert(n_ == o.n_);
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }

  std::size_t min_element() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i]) return (i << 6) + static_cast<std::size_t>(std::countr_zero(w_[i]));
    return npos;
  }
  std::size_t max_element() const {
    for (std::size_t i = w_.size(); i-- > 0;)
      if (w_[i]) return (i << 6) + 63 - static_cast<std::size_t>(std::countl_zero(w_[i]));
    return npos;
  }

  /// Canonical order: by cardinality, then lexicographic on the ascending
  /// member list. For equal cardinality the lexicographically smaller list is
  /// the one owning the lowest differing element.
  static bool canonical_less(const BitSet& a, const BitSet& b) {
    std::size_t ca = a.count(), cb = b.count();
    if (ca != cb) return ca < cb;
    for (std::size_t i = 0; i < a.w_.size(); ++i) {
      std::uint64_t diff = a.w_[i] ^ b.w_[i];
      if (diff) {
        std::uint64_t low = diff & (~diff + 1);
        return (a.w_[i] & low) != 0;
      }
    }
    return false;
  }

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      std::uint64_t w = w_[i];
      while (w) {
        std::size_t bit = static_cast<std::size_t>(std::countr_zero(w));
        f((i << 6) + bit);
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> members() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<std::uint32_t>(i)); });
    return out;
  }

  std::size_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull ^ n_;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ull;
      h ^= h >> 29;
    }
    return static_cast<std::size_t>(h);
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for_each([&](std::size_t i) {
      if (!first) s += ",";
      s += std::to_string(i);
      first = false;
    });
    s += "}";
    return s;
  }

 private:
  void trim() {
    if (n_ & 63) w_.back() &= (std::uint64_t{1} << (n_ & 63)) - 1;
  }

  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

struct BitSetHash {
  std::size_t operator()(const BitSet& b) const { return b.hash(); }
};

}  // namespace idealspaces
