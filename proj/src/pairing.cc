#include "bent/pairing.h"

#include <bit>

namespace bent {

Pairing Pairing::dot(int n) {
  Pairing p;
  p.add_dot(n);
  return p;
}

Pairing Pairing::trace(const Field& f) {
  Pairing p;
  p.add_trace(f);
  return p;
}

Pairing Pairing::trace2(const Field& f) {
  Pairing p;
  p.add_trace(f).add_trace(f);
  return p;
}

Pairing& Pairing::add_dot(int width) {
  if (!blocks_.empty() && blocks_.back().table == nullptr) {
    blocks_.back().width += width;
  } else {
    blocks_.push_back({n_, width, nullptr});
  }
  n_ += width;
  return *this;
}

Pairing& Pairing::add_trace(const Field& f) {
  auto table = std::make_shared<std::vector<std::uint32_t>>(f.size());
  for (Elem u = 0; u < f.size(); ++u) {
    std::uint32_t col = 0;
    for (int j = 0; j < f.m(); ++j) col |= static_cast<std::uint32_t>(f.trace(f.mul(u, Elem{1} << j))) << j;
    (*table)[u] = col;
  }
  blocks_.push_back({n_, f.m(), std::move(table)});
  n_ += f.m();
  return *this;
}

bool Pairing::is_dot() const {
  for (const Block& b : blocks_) {
    if (b.table != nullptr) return false;
  }
  return true;
}

std::uint64_t Pairing::map(std::uint64_t u) const {
  std::uint64_t out = 0;
  for (const Block& b : blocks_) {
    const std::uint64_t mask = (std::uint64_t{1} << b.width) - 1;
    const std::uint64_t part = (u >> b.offset) & mask;
    out |= (b.table ? std::uint64_t{(*b.table)[part]} : part) << b.offset;
  }
  return out;
}

int Pairing::inner(std::uint64_t u, std::uint64_t x) const {
  return std::popcount(map(u) & x) & 1;
}

}  // namespace bent
