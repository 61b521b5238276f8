#pragma once

// Inner products on V_n built from blocks. A dot block of width w pairs its
// coordinates by the dot product; a trace block over GF(2^m) pairs u, x by
// Tr_1^m(u x). Every such pairing is <u, x> = (M u) . x for an invertible
// M, so spectra and duals under it are dot-product ones read at M b.

#include <cstdint>
#include <memory>
#include <vector>

#include "bent/gf2m.h"

namespace bent {

class Pairing {
 public:
  static Pairing dot(int n);
  // Tr(ux) on F, Tr(u1 x1 + u2 x2) on F x F.
  static Pairing trace(const Field& f);
  static Pairing trace2(const Field& f);

  Pairing& add_dot(int width);
  Pairing& add_trace(const Field& f);

  int n() const { return n_; }
  bool is_dot() const;
  std::uint64_t map(std::uint64_t u) const;
  int inner(std::uint64_t u, std::uint64_t x) const;

 private:
  struct Block {
    int offset;
    int width;
    std::shared_ptr<const std::vector<std::uint32_t>> table;  // null for dot
  };
  int n_ = 0;
  std::vector<Block> blocks_;
};

}  // namespace bent
