#pragma once

// Data-parallel inner loops. Each kernel has a scalar reference version and
// vector variants; the active variant is picked once at startup from the CPU
// features (override with CUBETIGHT_SIMD=scalar|avx2|neon).

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace cubetight::kernels {

enum class Backend { scalar, avx2, neon };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);
Backend active_backend();
/// Switches the dispatch table. Throws InputError if the backend is unavailable.
void set_backend(Backend b);

/// popcount(a XOR b) over equal-length word spans.
std::size_t xor_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b);

/// popcount(a AND b AND c).
std::size_t and3_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                          std::span<const std::uint64_t> c);

/// out[x] = max_y (d[x*n + y] - f[y]) for an n x n row-major matrix d.
void max_plus_conjugate(std::span<const double> d, std::span<const double> f, std::span<double> out);

namespace scalar {
std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t and3_popcount(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                          std::size_t words);
void max_plus_conjugate(const double* d, const double* f, double* out, std::size_t n);
}  // namespace scalar

namespace avx2 {
bool compiled();
std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t and3_popcount(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                          std::size_t words);
void max_plus_conjugate(const double* d, const double* f, double* out, std::size_t n);
}  // namespace avx2

namespace neon {
bool compiled();
std::size_t xor_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t and3_popcount(const std::uint64_t* a, const std::uint64_t* b, const std::uint64_t* c,
                          std::size_t words);
void max_plus_conjugate(const double* d, const double* f, double* out, std::size_t n);
}  // namespace neon

}  // namespace cubetight::kernels
