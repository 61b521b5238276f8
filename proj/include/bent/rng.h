#pragma once

#include <cstdint>

namespace bent {

// xorshift64* generator. State update, for reproduction in other languages:
//   x ^= x >> 12;  x ^= x << 25;  x ^= x >> 27;
//   output = x * 0x2545F4914F6CDD1D   (mod 2^64)
// The initial state is seed + 0x9E3779B97F4A7C15 (mod 2^64), replaced by
// 0x9E3779B97F4A7C15 itself if that sum is zero.
class Xorshift64Star {
 public:
  explicit Xorshift64Star(std::uint64_t seed = 0) : state_(seed + kOffset) {
    if (state_ == 0) state_ = kOffset;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  // Uniform in [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % bound;
  }

 private:
  static constexpr std::uint64_t kOffset = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

}  // namespace bent
