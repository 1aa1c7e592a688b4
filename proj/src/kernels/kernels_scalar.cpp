#include <algorithm>
#include <bit>
#include <limits>

#include "cubetight/kernels.hpp"

namespace cubetight::kernels::scalar {

std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return total;
}

std::size_t and3_popcount(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                          std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += static_cast<std::size_t>(std::popcount(a[i] & b[i] & c[i]));
  return total;
}

void max_plus_conjugate(const double* d, const double* f, double* out, std::size_t n) {
  for (std::size_t x = 0; x < n; ++x) {
    const double* row = d + x * n;
    double best = -std::numeric_limits<double>::infinity();
    for (std::size_t y = 0; y < n; ++y) best = std::max(best, row[y] - f[y]);
    out[x] = best;
  }
}

}  // namespace cubetight::kernels::scalar
