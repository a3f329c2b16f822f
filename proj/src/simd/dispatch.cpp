#include <cstdlib>
#include <cstring>

#include "covermeasure/simd/kernels.hpp"

namespace covermeasure::simd {

std::string_view to_string(Backend backend) noexcept {
  switch (backend) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

#if !defined(COVERMEASURE_HAS_AVX2)
const KernelTable* avx2_kernels() noexcept { return nullptr; }
#endif

#if !defined(COVERMEASURE_HAS_NEON)
const KernelTable* neon_kernels() noexcept { return nullptr; }
#endif

const KernelTable& active_kernels() noexcept {
  static const KernelTable& chosen = []() -> const KernelTable& {
    const char* forced = std::getenv("COVERMEASURE_SIMD");
    if (forced != nullptr && std::strcmp(forced, "scalar") == 0) return scalar_kernels();
    if (const KernelTable* t = avx2_kernels()) return *t;
    if (const KernelTable* t = neon_kernels()) return *t;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace covermeasure::simd
