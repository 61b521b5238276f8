#pragma once

#include <cstdint>

namespace bent::kernels::detail {

// kLowHalf[i] selects the bit positions p (mod 64) whose bit i is zero.
inline constexpr std::uint64_t kLowHalf[6] = {
    0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
    0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
};

// Swap the two halves of every 2^(i+1)-bit group for each bit i set in `shift`
// (restricted to i < 6).
inline std::uint64_t permute_in_word(std::uint64_t w, std::uint64_t shift) {
  for (int i = 0; i < 6; ++i) {
    if ((shift >> i) & 1) {
      const int s = 1 << i;
      w = ((w & kLowHalf[i]) << s) | ((w >> s) & kLowHalf[i]);
    }
  }
  return w;
}

inline std::uint64_t valid_mask(int n) {
  return n >= 6 ? ~std::uint64_t{0} : ((std::uint64_t{1} << (1u << n)) - 1);
}

}  // namespace bent::kernels::detail
