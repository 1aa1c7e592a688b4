#include <algorithm>
#include <bit>
#include <limits>

#include "cubetight/kernels.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace cubetight::kernels::avx2 {

#if defined(__AVX2__)

namespace {

// Nibble-table popcount of a 256-bit lane, summed into four 64-bit counters.
inline __m256i popcount_epi64(__m256i v) {
  const __m256i table = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
  const __m256i low_mask = _mm256_set1_epi8(0x0f);
  __m256i lo = _mm256_and_si256(v, low_mask);
  __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
  __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(table, lo), _mm256_shuffle_epi8(table, hi));
  return _mm256_sad_epu8(counts, _mm256_setzero_si256());
}

inline std::size_t horizontal_sum(__m256i acc) {
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

bool compiled() { return true; }

std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_xor_si256(va, vb)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::size_t and3_popcount(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                          std::size_t words) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i vc = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
    acc = _mm256_add_epi64(acc, popcount_epi64(_mm256_and_si256(_mm256_and_si256(va, vb), vc)));
  }
  std::size_t total = horizontal_sum(acc);
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
  return total;
}

void max_plus_conjugate(const double* d, const double* f, double* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    const double* row = d + x * n;
    __m256d best = _mm256_set1_pd(-std::numeric_limits<double>::infinity());
    std::size_t y = 0;
    for (; y + 4 <= n; y += 4)
      best = _mm256_max_pd(best, _mm256_sub_pd(_mm256_loadu_pd(row + y), _mm256_loadu_pd(f + y)));
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, best);
    double m = std::max(std::max(lanes[0], lanes[1]), std::max(lanes[2], lanes[3]));
    for (; y < n; ++y) m = std::max(m, row[y] - f[y]);
    out[x] = m;
  }
}

#else

bool compiled() { return false; }

std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  return scalar::xor_popcount(a, b, words);
}
std::size_t and3_popcount(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                          std::size_t words) {
  return scalar::and3_popcount(a, b, c, words);
}
void max_plus_conjugate(const double* d, const double* f, double* out, std::size_t n) {
  scalar::max_plus_conjugate(d, f, out, n);
}

#endif

}  // namespace cubetight::kernels::avx2
