#include <atomic>
#include <cstdlib>
#include <string>

#include "cubetight/errors.hpp"
#include "cubetight/kernels.hpp"

namespace cubetight::kernels {

namespace {

bool cpu_has_avx2() {
#if defined(__x86_64__) || defined(__i386__)
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
  return false;
#endif
}

Backend detect() {
  if (const char* env = std::getenv("CUBETIGHT_SIMD")) {
    std::string want(env);
    if (want == "scalar") return Backend::scalar;
    if (want == "avx2" && backend_available(Backend::avx2)) return Backend::avx2;
    if (want == "neon" && backend_available(Backend::neon)) return Backend::neon;
  }
  if (backend_available(Backend::avx2)) return Backend::avx2;
  if (backend_available(Backend::neon)) return Backend::neon;
  return Backend::scalar;
}

std::atomic<Backend>& current() {
  static std::atomic<Backend> backend{detect()};
  return backend;
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::scalar: return "scalar";
    case Backend::avx2: return "avx2";
    case Backend::neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar: return true;
    case Backend::avx2: return avx2::compiled() && cpu_has_avx2();
    case Backend::neon: return neon::compiled();
  }
  return false;
}

Backend active_backend() { return current().load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) throw InputError("SIMD backend '" + std::string(backend_name(b)) + "' is not available");
  current().store(b, std::memory_order_relaxed);
}

std::size_t xor_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
  const std::size_t words = a.size() < b.size() ? a.size() : b.size();
  switch (active_backend()) {
    case Backend::avx2: return avx2::xor_popcount(a.data(), b.data(), words);
    case Backend::neon: return neon::xor_popcount(a.data(), b.data(), words);
    case Backend::scalar: break;
  }
  return scalar::xor_popcount(a.data(), b.data(), words);
}

std::size_t and3_popcount(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b,
                          std::span<const std::uint64_t> c) {
  std::size_t words = a.size();
  if (b.size() < words) words = b.size();
  if (c.size() < words) words = c.size();
  switch (active_backend()) {
    case Backend::avx2: return avx2::and3_popcount(a.data(), b.data(), c.data(), words);
    case Backend::neon: return neon::and3_popcount(a.data(), b.data(), c.data(), words);
    case Backend::scalar: break;
  }
  return scalar::and3_popcount(a.data(), b.data(), c.data(), words);
}

void max_plus_conjugate(std::span<const double> d, std::span<const double> f, std::span<double> out) {
  const std::size_t n = f.size();
  if (d.size() != n * n || out.size() != n) throw InputError("max_plus_conjugate: shape mismatch");
  switch (active_backend()) {
    case Backend::avx2: avx2::max_plus_conjugate(d.data(), f.data(), out.data(), n); return;
    case Backend::neon: neon::max_plus_conjugate(d.data(), f.data(), out.data(), n); return;
    case Backend::scalar: break;
  }
  scalar::max_plus_conjugate(d.data(), f.data(), out.data(), n);
}

}  // namespace cubetight::kernels
