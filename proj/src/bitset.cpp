#include "cubetight/bitset.hpp"

#include <bit>

#include "cubetight/kernels.hpp"

namespace cubetight {

bool Bitset::empty_set() const {
  for (auto w : words_)
    if (w) return false;
  return true;
}

std::size_t Bitset::count() const {
  std::size_t total = 0;
  for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

Bitset& Bitset::operator&=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
  return *this;
}

Bitset& Bitset::operator|=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
  return *this;
}

Bitset& Bitset::operator^=(const Bitset& o) {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

Bitset Bitset::complement() const {
  Bitset out(size_);
  for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
  if (size_ & 63) out.words_.back() &= (std::uint64_t{1} << (size_ & 63)) - 1;
  return out;
}

bool Bitset::is_subset_of(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~o.words_[i]) return false;
  return true;
}

bool Bitset::intersects(const Bitset& o) const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & o.words_[i]) return true;
  return false;
}

std::size_t Bitset::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w]) return w * 64 + static_cast<std::size_t>(std::countr_zero(words_[w]));
  return size_;
}

std::size_t Bitset::next(std::size_t i) const {
  ++i;
  if (i >= size_) return size_;
  std::size_t w = i >> 6;
  std::uint64_t word = words_[w] & (~std::uint64_t{0} << (i & 63));
  while (true) {
    if (word) return w * 64 + static_cast<std::size_t>(std::countr_zero(word));
    if (++w == words_.size()) return size_;
    word = words_[w];
  }
}

std::string Bitset::to_string() const {
  std::string s(size_, '0');
  for (std::size_t i = 0; i < size_; ++i)
    if (test(i)) s[i] = '1';
  return s;
}

std::size_t Bitset::hash() const {
  std::size_t h = size_ * 0x9e3779b97f4a7c15ULL;
  for (auto w : words_) h = (h ^ std::hash<std::uint64_t>{}(w)) * 0x100000001b3ULL + (h >> 29);
  return h;
}

bool operator<(const Bitset& a, const Bitset& b) {
  if (a.size_ != b.size_) return a.size_ < b.size_;
  // lexicographic on bit order: compare lowest differing bit
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t diff = a.words_[w] ^ b.words_[w];
    if (diff) {
      std::uint64_t low = diff & (~diff + 1);
      // the set with the 0 at the first differing position is smaller
      return (a.words_[w] & low) == 0;
    }
  }
  return false;
}

std::size_t hamming(const Bitset& a, const Bitset& b) { return kernels::xor_popcount(a.words(), b.words()); }

}  // namespace cubetight
