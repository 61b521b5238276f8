#include "bent/kernels.h"
#include "masks.h"

namespace bent::kernels {
namespace {

using detail::kLowHalf;

void fwht_scalar(std::int64_t* data, std::size_t len) {
  for (std::size_t h = 1; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) {
        const std::int64_t a = data[j];
        const std::int64_t b = data[j + h];
        data[j] = a + b;
        data[j + h] = a - b;
      }
    }
  }
}

void translate_scalar(const std::uint64_t* src, std::uint64_t* dst, int n, std::uint64_t shift) {
  const std::size_t words = words_for(n);
  const std::uint64_t hi = shift >> 6;
  for (std::size_t w = 0; w < words; ++w) {
    dst[w] = detail::permute_in_word(src[w ^ hi], shift);
  }
  if (n < 6) dst[0] &= detail::valid_mask(n);
}

bool translate_invariant_scalar(const std::uint64_t* t, int n, std::uint64_t shift) {
  const std::size_t words = words_for(n);
  const std::uint64_t hi = shift >> 6;
  const std::uint64_t mask = detail::valid_mask(n);
  for (std::size_t w = 0; w < words; ++w) {
    if (((detail::permute_in_word(t[w ^ hi], shift) ^ t[w]) & mask) != 0) return false;
  }
  return true;
}

void moebius_scalar(std::uint64_t* t, int n) {
  const std::size_t words = words_for(n);
  const int in_word = n < 6 ? n : 6;
  for (std::size_t w = 0; w < words; ++w) {
    std::uint64_t x = t[w];
    for (int i = 0; i < in_word; ++i) x ^= (x & kLowHalf[i]) << (1 << i);
    t[w] = x;
  }
  for (std::size_t h = 1; h < words; h <<= 1) {
    for (std::size_t i = 0; i < words; i += h << 1) {
      for (std::size_t j = i; j < i + h; ++j) t[j + h] ^= t[j];
    }
  }
}

void expand_signs_scalar(const std::uint64_t* t, std::int64_t* out, int n) {
  const std::size_t len = std::size_t{1} << n;
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = 1 - 2 * static_cast<std::int64_t>((t[i >> 6] >> (i & 63)) & 1);
  }
}

}  // namespace

const Dispatch& scalar() {
  static const Dispatch table{"scalar", fwht_scalar, translate_scalar, translate_invariant_scalar,
                              moebius_scalar, expand_signs_scalar};
  return table;
}

}  // namespace bent::kernels
