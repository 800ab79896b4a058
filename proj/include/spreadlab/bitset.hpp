#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace spreadlab {

// Dynamic bitset with the word-level operations the search code leans on.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

  std::size_t size() const { return n_; }
  bool empty() const { return n_ == 0; }

  void set(std::size_t i) { w_[i >> 6] |= std::uint64_t(1) << (i & 63); }
  void reset(std::size_t i) { w_[i >> 6] &= ~(std::uint64_t(1) << (i & 63)); }
  bool test(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(w_.begin(), w_.end(), 0); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::size_t(__builtin_popcountll(w));
    return c;
  }
  bool any() const {
    for (auto w : w_)
      if (w) return true;
    return false;
  }
  bool none() const { return !any(); }

  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] |= o.w_[i];
    return *this;
  }
  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= o.w_[i];
    return *this;
  }
  // this := this & ~o
  Bitset& and_not(const Bitset& o) {
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] &= ~o.w_[i];
    return *this;
  }

  bool is_subset_of(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & ~o.w_[i]) return false;
    return true;
  }
  bool intersects(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i)
      if (w_[i] & o.w_[i]) return true;
    return false;
  }
  std::size_t count_and(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::size_t(__builtin_popcountll(w_[i] & o.w_[i]));
    return c;
  }
  // popcount of this & ~o
  std::size_t count_and_not(const Bitset& o) const {
    std::size_t c = 0;
    for (std::size_t i = 0; i < w_.size(); ++i)
      c += std::size_t(__builtin_popcountll(w_[i] & ~o.w_[i]));
    return c;
  }

  bool operator==(const Bitset& o) const { return n_ == o.n_ && w_ == o.w_; }

  // index of first set bit, or size() if none
  std::size_t first_set() const { return next_set(0); }
  // first set bit at position >= i, or size() if none
  std::size_t next_set(std::size_t i) const {
    if (i >= n_) return n_;
    std::size_t word = i >> 6;
    std::uint64_t w = w_[word] & (~std::uint64_t(0) << (i & 63));
    while (true) {
      if (w) return (word << 6) + std::size_t(__builtin_ctzll(w));
      if (++word == w_.size()) return n_;
      w = w_[word];
    }
  }

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t word = 0; word < w_.size(); ++word) {
      std::uint64_t w = w_[word];
      while (w) {
        f((word << 6) + std::size_t(__builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  std::vector<std::uint32_t> to_indices() const {
    std::vector<std::uint32_t> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(std::uint32_t(i)); });
    return out;
  }

  std::uint64_t hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (auto w : w_) {
      h ^= w;
      h *= 0x100000001b3ULL;
    }
    return h;
  }

  // lexicographic comparison as a sequence of bits (bit 0 most significant)
  bool lex_less(const Bitset& o) const {
    for (std::size_t i = 0; i < w_.size(); ++i) {
      if (w_[i] != o.w_[i]) {
        std::uint64_t diff = w_[i] ^ o.w_[i];
        std::uint64_t low = diff & (~diff + 1);
        return (w_[i] & low) != 0;  // the set bit at the first difference wins
      }
    }
    return false;
  }

  const std::vector<std::uint64_t>& words() const { return w_; }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> w_;
};

}  // namespace spreadlab
