#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace dposet {

// Fixed-width bit vector over GF(2) backed by 64-bit words. XOR is the only
// arithmetic; bit indices address matrix rows or columns.
class Gf2Vector {
 public:
  Gf2Vector() = default;
  explicit Gf2Vector(int bits) : nbits_(bits), words_((bits + 63) / 64, 0) {}

  int bits() const { return nbits_; }

  bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(int i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(int i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(int i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  void clear() { std::fill(words_.begin(), words_.end(), 0); }

  bool any() const {
    for (auto w : words_)
      if (w) return true;
    return false;
  }

  int count() const {
    int c = 0;
    for (auto w : words_) c += std::popcount(w);
    return c;
  }

  // Index of the least set bit, -1 when empty.
  int lowest_set() const {
    for (std::size_t k = 0; k < words_.size(); ++k)
      if (words_[k]) return int(k * 64 + std::countr_zero(words_[k]));
    return -1;
  }

  // Index of the greatest set bit, -1 when empty.
  int highest_set() const {
    for (std::size_t k = words_.size(); k-- > 0;)
      if (words_[k]) return int(k * 64 + 63 - std::countl_zero(words_[k]));
    return -1;
  }

  void xor_with(const Gf2Vector& other) {
    for (std::size_t k = 0; k < words_.size(); ++k) words_[k] ^= other.words_[k];
  }

  std::vector<int> set_bits() const {
    std::vector<int> out;
    for (std::size_t k = 0; k < words_.size(); ++k) {
      std::uint64_t w = words_[k];
      while (w) {
        out.push_back(int(k * 64 + std::countr_zero(w)));
        w &= w - 1;
      }
    }
    return out;
  }

  bool operator==(const Gf2Vector&) const = default;

 private:
  int nbits_ = 0;
  std::vector<std::uint64_t> words_;
};

// Rank of the span of `columns`; consumes its own copy.
int gf2_rank(std::vector<Gf2Vector> columns);

}  // namespace dposet
