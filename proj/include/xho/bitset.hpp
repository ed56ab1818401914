#ifndef XHO_BITSET_HPP
#define XHO_BITSET_HPP

#include <cstdint>
#include <vector>

#include "xho/types.hpp"

namespace xho {

// Fixed-capacity dynamic bitset used for face masks and adjacency rows.
class BitMask {
 public:
  BitMask() = default;
  explicit BitMask(int n) : n_(n), words_((n + 63) / 64, 0) {}

  static BitMask from_vset(int n, const VSet& s) {
    BitMask m(n);
    for (int v : s) m.set(v);
    return m;
  }

  int size() const { return n_; }

  void set(int i) { words_[i >> 6] |= (std::uint64_t{1} << (i & 63)); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  bool test(int i) const {
    return (words_[i >> 6] >> (i & 63)) & 1;
  }

  bool subset_of(const BitMask& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~other.words_[w]) return false;
    return true;
  }

  bool intersects(const BitMask& other) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & other.words_[w]) return true;
    return false;
  }

  BitMask& operator|=(const BitMask& other) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] |= other.words_[w];
    return *this;
  }

  BitMask& operator&=(const BitMask& other) {
    for (std::size_t w = 0; w < words_.size(); ++w)
      words_[w] &= other.words_[w];
    return *this;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += __builtin_popcountll(w);
    return c;
  }

  bool operator==(const BitMask& other) const {
    return n_ == other.n_ && words_ == other.words_;
  }

  VSet to_vset() const {
    VSet out;
    for (int i = 0; i < n_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace xho

#endif  // XHO_BITSET_HPP
