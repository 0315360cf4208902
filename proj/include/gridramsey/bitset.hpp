#pragma once

#include <cstdint>
#include <vector>

namespace gridramsey {

// Fixed-size bit vector sized at construction. Small and cache-friendly;
// used for adjacency rows, candidate sets and color masks.
class DynBitset {
 public:
  DynBitset() = default;
  explicit DynBitset(int nbits)
      : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

  int size() const { return nbits_; }

  void set(int i) { words_[i >> 6] |= uint64_t(1) << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(uint64_t(1) << (i & 63)); }
  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  bool any() const {
    for (uint64_t w : words_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (uint64_t w : words_) c += __builtin_popcountll(w);
    return c;
  }

  int count_and(const DynBitset& o) const {
    int c = 0;
    for (size_t i = 0; i < words_.size(); ++i)
      c += __builtin_popcountll(words_[i] & o.words_[i]);
    return c;
  }

  bool intersects(const DynBitset& o) const {
    for (size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & o.words_[i]) return true;
    return false;
  }

  DynBitset& operator|=(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  DynBitset& operator&=(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  // this &= ~o
  DynBitset& and_not(const DynBitset& o) {
    for (size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }

  // First set bit at position >= from, or -1.
  int next_bit(int from = 0) const {
    if (from >= nbits_) return -1;
    size_t wi = from >> 6;
    uint64_t w = words_[wi] & (~uint64_t(0) << (from & 63));
    while (true) {
      if (w) {
        int bit = int(wi) * 64 + __builtin_ctzll(w);
        return bit < nbits_ ? bit : -1;
      }
      if (++wi >= words_.size()) return -1;
      w = words_[wi];
    }
  }

  template <class Fn>
  void for_each_bit(Fn&& fn) const {
    for (size_t wi = 0; wi < words_.size(); ++wi) {
      uint64_t w = words_[wi];
      while (w) {
        int bit = int(wi) * 64 + __builtin_ctzll(w);
        fn(bit);
        w &= w - 1;
      }
    }
  }

  bool operator==(const DynBitset& o) const {
    return nbits_ == o.nbits_ && words_ == o.words_;
  }

 private:
  int nbits_ = 0;
  std::vector<uint64_t> words_;
};

}  // namespace gridramsey
