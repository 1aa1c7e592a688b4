#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace cubetight {

/// Fixed-size dynamic bitset. Bits beyond size() are always zero, so word-wise
/// comparisons and popcounts need no masking.
class Bitset {
 public:
  Bitset() = default;
  explicit Bitset(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

  std::size_t size() const { return size_; }
  bool empty_set() const;
  std::size_t count() const;

  bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1U; }
  void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
  void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }
  void assign(std::size_t i, bool value) { value ? set(i) : reset(i); }

  Bitset& operator&=(const Bitset& o);
  Bitset& operator|=(const Bitset& o);
  Bitset& operator^=(const Bitset& o);
  /// Complement within size().
  Bitset complement() const;

  bool is_subset_of(const Bitset& o) const;
  bool intersects(const Bitset& o) const;

  /// Index of the first set bit, or size() when none.
  std::size_t first() const;
  /// Index of the next set bit after i, or size().
  std::size_t next(std::size_t i) const;

  std::span<const std::uint64_t> words() const { return words_; }

  /// '0'/'1' characters, bit 0 first.
  std::string to_string() const;
  std::size_t hash() const;

  friend bool operator==(const Bitset& a, const Bitset& b) = default;
  friend bool operator<(const Bitset& a, const Bitset& b);

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

inline Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
inline Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
inline Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

/// popcount(a XOR b) through the dispatched kernel.
std::size_t hamming(const Bitset& a, const Bitset& b);

struct BitsetHash {
  std::size_t operator()(const Bitset& b) const { return b.hash(); }
};

/// Calls fn(i) for every set bit in increasing order.
template <class Fn>
void for_each_bit(const Bitset& b, Fn&& fn) {
  for (std::size_t i = b.first(); i < b.size(); i = b.next(i)) fn(i);
}

}  // namespace cubetight
