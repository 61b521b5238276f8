#pragma once

// Data-parallel inner loops over truth tables and spectra.
//
// Every routine has a portable scalar reference and, on x86-64 hosts that
// report AVX2 at runtime, a vectorized variant. `active()` picks the AVX2
// table unless the environment variable BENT_KERNELS=scalar is set. The two
// variants must agree bit for bit; kernels_test checks this.
//
// Bit tables are packed little-endian: bit i of the table lives in word i/64
// at position i%64. Tables with n < 6 occupy the low 2^n bits of one word.

#include <cstddef>
#include <cstdint>
#include <span>

namespace bent::kernels {

struct Dispatch {
  const char* name;
  // In-place Walsh-Hadamard butterfly over len = 2^n signed values.
  void (*fwht)(std::int64_t* data, std::size_t len);
  // dst[x] = src[x ^ shift] over the 2^n-bit table.
  void (*translate)(const std::uint64_t* src, std::uint64_t* dst, int n, std::uint64_t shift);
  // True iff t[x] == t[x ^ shift] for every x.
  bool (*translate_invariant)(const std::uint64_t* t, int n, std::uint64_t shift);
  // In-place binary Moebius (ANF) transform; an involution.
  void (*moebius)(std::uint64_t* t, int n);
  // out[i] = 1 - 2*bit_i for the 2^n bits of t.
  void (*expand_signs)(const std::uint64_t* t, std::int64_t* out, int n);
};

const Dispatch& scalar();
// nullptr when the CPU (or the build) lacks AVX2.
const Dispatch* avx2();
const Dispatch& active();

inline std::size_t words_for(int n) { return n >= 6 ? std::size_t{1} << (n - 6) : 1; }

// Convenience wrappers over active().
void fwht(std::span<std::int64_t> data);
void translate(std::span<const std::uint64_t> src, std::span<std::uint64_t> dst, int n,
               std::uint64_t shift);
bool translate_invariant(std::span<const std::uint64_t> t, int n, std::uint64_t shift);
void moebius(std::span<std::uint64_t> t, int n);
void expand_signs(std::span<const std::uint64_t> t, std::span<std::int64_t> out, int n);

}  // namespace bent::kernels
