#include <atomic>
#include <cstdlib>
#include <cstring>

#include "matring/kernels.hpp"

namespace matring::kernels {

bool avx2_available() {
#if (defined(__x86_64__) || defined(_M_X64)) && defined(MATRING_HAVE_AVX2) && defined(__GNUC__)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const Backend& select_default() {
  if (const char* env = std::getenv("MATRING_KERNEL")) {
    if (std::strcmp(env, "scalar") == 0) return scalar_backend();
#if defined(MATRING_HAVE_AVX2)
    if (std::strcmp(env, "avx2") == 0 && avx2_available()) return avx2_backend();
#endif
  }
#if defined(MATRING_HAVE_AVX2)
  if (avx2_available()) return avx2_backend();
#endif
  return scalar_backend();
}

std::atomic<const Backend*> g_active{nullptr};

}  // namespace

const Backend& active() {
  const Backend* b = g_active.load(std::memory_order_acquire);
  if (!b) {
    b = &select_default();
    g_active.store(b, std::memory_order_release);
  }
  return *b;
}

void set_active(const Backend& b) { g_active.store(&b, std::memory_order_release); }

}  // namespace matring::kernels
