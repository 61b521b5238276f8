#include <cstdlib>
#include <cstring>

#include "bent/kernels.h"

namespace bent::kernels {

#if BENT_HAVE_AVX2_TU
namespace detail {
const Dispatch& avx2_table();
}
#endif

const Dispatch* avx2() {
#if BENT_HAVE_AVX2_TU
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &detail::avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Dispatch& active() {
  static const Dispatch* chosen = [] {
    const char* env = std::getenv("BENT_KERNELS");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return &scalar();
    const Dispatch* v = avx2();
    return v != nullptr ? v : &scalar();
  }();
  return *chosen;
}

void fwht(std::span<std::int64_t> data) { active().fwht(data.data(), data.size()); }

void translate(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, int n,
               std::uint64_t shift) {
  active().translate(src.data(), dst.data(), n, shift);
}

bool translate_invariant(std::span<const std::uint64_t> t, int n, std::uint64_t shift) {
  return active().translate_invariant(t.data(), n, shift);
}

void moebius(std::span<std::uint64_t> t, int n) { active().moebius(t.data(), n); }

void expand_signs(std::span<const std::uint64_t> t, std::span<std::int64_t> out, int n) {
  active().expand_signs(t.data(), out.data(), n);
}

}  // namespace bent::kernels
