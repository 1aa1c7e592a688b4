#include <algorithm>
#include <bit>
#include <limits>

#include "cubetight/kernels.hpp"

#if defined(__aarch64__) && defined(__ARM_NEON)
#include <arm_neon.h>
#define CUBETIGHT_HAVE_NEON 1
#endif

namespace cubetight::kernels::neon {

#if defined(CUBETIGHT_HAVE_NEON)

bool compiled() { return true; }

std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint8x16_t v = vreinterpretq_u8_u64(veorq_u64(vld1q_u64(a + i), vld1q_u64(b + i)));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(v)))));
  }
  std::size_t total = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::size_t and3_popcount(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                          std::size_t words) {
  uint64x2_t acc = vdupq_n_u64(0);
  std::size_t i = 0;
  for (; i + 2 <= words; i += 2) {
    uint64x2_t w = vandq_u64(vandq_u64(vld1q_u64(a + i), vld1q_u64(b + i)), vld1q_u64(c + i));
    acc = vaddq_u64(acc, vpaddlq_u32(vpaddlq_u16(vpaddlq_u8(vcntq_u8(vreinterpretq_u8_u64(w))))));
  }
  std::size_t total = static_cast<std::size_t>(vgetq_lane_u64(acc, 0) + vgetq_lane_u64(acc, 1));
  for (; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
  return total;
}

void max_plus_conjugate(const double* d, const double* f, double* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    const double* row = d + x * n;
    float64x2_t best = vdupq_n_f64(-std::numeric_limits<double>::infinity());
    std::size_t y = 0;
    for (; y + 2 <= n; y += 2) best = vmaxq_f64(best, vsubq_f64(vld1q_f64(row + y), vld1q_f64(f + y)));
    double m = std::max(vgetq_lane_f64(best, 0), vgetq_lane_f64(best, 1));
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

}  // namespace cubetight::kernels::neon
