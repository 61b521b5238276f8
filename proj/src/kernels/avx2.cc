// Compiled with -mavx2; only reached after a runtime CPU check.
#include <immintrin.h>

#include "bent/kernels.h"
#include "masks.h"

namespace bent::kernels {
namespace {

using detail::kLowHalf;

void fwht_avx2(std::int64_t* data, std::size_t len) {
  if (len < 4) {
    scalar().fwht(data, len);
    return;
  }
  for (std::size_t i = 0; i < len; i += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + i));
    __m256i sw = _mm256_permute4x64_epi64(v, 0b10110001);
    v = _mm256_blend_epi32(_mm256_add_epi64(v, sw), _mm256_sub_epi64(sw, v), 0b11001100);
    sw = _mm256_permute4x64_epi64(v, 0b01001110);
    v = _mm256_blend_epi32(_mm256_add_epi64(v, sw), _mm256_sub_epi64(sw, v), 0b11110000);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + i), v);
  }
  for (std::size_t h = 4; h < len; h <<= 1) {
    for (std::size_t i = 0; i < len; i += h << 1) {
      for (std::size_t j = i; j < i + h; j += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + j));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(data + j + h));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + j), _mm256_add_epi64(a, b));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(data + j + h), _mm256_sub_epi64(a, b));
      }
    }
  }
}

inline __m256i permute_lanes(__m256i v, unsigned q) {
  switch (q & 3) {
    case 1: return _mm256_permute4x64_epi64(v, 0b10110001);
    case 2: return _mm256_permute4x64_epi64(v, 0b01001110);
    case 3: return _mm256_permute4x64_epi64(v, 0b00011011);
    default: return v;
  }
}

inline __m256i permute_bits(__m256i v, std::uint64_t shift) {
  for (int i = 0; i < 6; ++i) {
    if ((shift >> i) & 1) {
      const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kLowHalf[i]));
      const __m128i s = _mm_cvtsi32_si128(1 << i);
      v = _mm256_or_si256(_mm256_sll_epi64(_mm256_and_si256(v, m), s),
                          _mm256_and_si256(_mm256_srl_epi64(v, s), m));
    }
  }
  return v;
}

void translate_avx2(const std::uint64_t* src, std::uint64_t* dst, int n, std::uint64_t shift) {
  const std::size_t words = words_for(n);
  if (words < 4) {
    scalar().translate(src, dst, n, shift);
    return;
  }
  const std::uint64_t hi = shift >> 6;
  const std::uint64_t block = hi & ~std::uint64_t{3};
  const unsigned q = static_cast<unsigned>(hi & 3);
  for (std::size_t w = 0; w < words; w += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + (w ^ block)));
    v = permute_bits(permute_lanes(v, q), shift);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + w), v);
  }
}

bool translate_invariant_avx2(const std::uint64_t* t, int n, std::uint64_t shift) {
  const std::size_t words = words_for(n);
  if (words < 4) return scalar().translate_invariant(t, n, shift);
  const std::uint64_t hi = shift >> 6;
  const std::uint64_t block = hi & ~std::uint64_t{3};
  const unsigned q = static_cast<unsigned>(hi & 3);
  for (std::size_t w = 0; w < words; w += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + (w ^ block)));
    v = permute_bits(permute_lanes(v, q), shift);
    const __m256i x = _mm256_xor_si256(v, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + w)));
    if (!_mm256_testz_si256(x, x)) return false;
  }
  return true;
}

void moebius_avx2(std::uint64_t* t, int n) {
  const std::size_t words = words_for(n);
  if (words < 4) {
    scalar().moebius(t, n);
    return;
  }
  const __m256i zero = _mm256_setzero_si256();
  for (std::size_t w = 0; w < words; w += 4) {
    __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + w));
    for (int i = 0; i < 6; ++i) {
      const __m256i m = _mm256_set1_epi64x(static_cast<long long>(kLowHalf[i]));
      v = _mm256_xor_si256(v, _mm256_sll_epi64(_mm256_and_si256(v, m), _mm_cvtsi32_si128(1 << i)));
    }
    // word stride 1 and 2 inside the register
    v = _mm256_xor_si256(v, _mm256_blend_epi32(zero, _mm256_permute4x64_epi64(v, 0b10100000), 0b11001100));
    v = _mm256_xor_si256(v, _mm256_blend_epi32(zero, _mm256_permute4x64_epi64(v, 0b01000100), 0b11110000));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(t + w), v);
  }
  for (std::size_t h = 4; h < words; h <<= 1) {
    for (std::size_t i = 0; i < words; i += h << 1) {
      for (std::size_t j = i; j < i + h; j += 4) {
        __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + j));
        __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(t + j + h));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(t + j + h), _mm256_xor_si256(a, b));
      }
    }
  }
}

void expand_signs_avx2(const std::uint64_t* t, std::int64_t* out, int n) {
  if (n < 2) {
    scalar().expand_signs(t, out, n);
    return;
  }
  const std::size_t len = std::size_t{1} << n;
  const __m256i one = _mm256_set1_epi64x(1);
  const __m256i base = _mm256_setr_epi64x(0, 1, 2, 3);
  for (std::size_t i = 0; i < len; i += 4) {
    const __m256i word = _mm256_set1_epi64x(static_cast<long long>(t[i >> 6]));
    const __m256i cnt = _mm256_add_epi64(base, _mm256_set1_epi64x(static_cast<long long>(i & 63)));
    const __m256i bit = _mm256_and_si256(_mm256_srlv_epi64(word, cnt), one);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_sub_epi64(one, _mm256_add_epi64(bit, bit)));
  }
}

}  // namespace

namespace detail {
const Dispatch& avx2_table() {
  static const Dispatch table{"avx2", fwht_avx2, translate_avx2, translate_invariant_avx2,
                              moebius_avx2, expand_signs_avx2};
  return table;
}
}  // namespace detail

}  // namespace bent::kernels
