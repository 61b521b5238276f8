#include "bent/subspace.h"

#include <algorithm>
#include <bit>
#include <string>

#include "bent/errors.h"

namespace bent {

std::vector<std::uint64_t> rref(std::vector<std::uint64_t> rows) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t r : rows) {
    r = reduce(r, out);
    if (r == 0) continue;
    const std::uint64_t pivot = std::bit_floor(r);
    for (std::uint64_t& b : out) {
      if (b & pivot) b ^= r;
    }
    out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t reduce(std::uint64_t x, std::span<const std::uint64_t> rref_rows) {
  for (std::uint64_t b : rref_rows) x = std::min(x, x ^ b);
  return x;
}

int rank(std::span<const std::uint64_t> rows) {
  return static_cast<int>(rref(std::vector<std::uint64_t>(rows.begin(), rows.end())).size());
}

std::vector<std::uint64_t> orthogonal_complement(std::span<const std::uint64_t> rows, int n) {
  const auto r = rref(std::vector<std::uint64_t>(rows.begin(), rows.end()));
  std::uint64_t pivots = 0;
  for (std::uint64_t b : r) pivots |= std::bit_floor(b);
  std::vector<std::uint64_t> out;
  for (int j = 0; j < n; ++j) {
    const std::uint64_t col = std::uint64_t{1} << j;
    if (pivots & col) continue;
    std::uint64_t x = col;
    for (std::uint64_t b : r) {
      if (b & col) x |= std::bit_floor(b);
    }
    out.push_back(x);
  }
  return rref(std::move(out));
}

Subspace::Subspace(int n, std::vector<std::uint64_t> basis) : n_(n), basis_(std::move(basis)) {
  if (n < 1 || n > 63) throw ParameterError("subspace ambient dimension out of range");
  for (std::uint64_t b : basis_) {
    if (b == 0 || (b >> n) != 0) {
      throw ParameterError("basis vector " + std::to_string(b) + " is zero or exceeds " +
                           std::to_string(n) + " bits");
    }
  }
  echelon_ = rref(basis_);
  if (echelon_.size() != basis_.size()) throw ParameterError("basis vectors are linearly dependent");
}

std::vector<std::uint64_t> Subspace::elements() const {
  std::vector<std::uint64_t> span{0};
  span.reserve(std::size_t{1} << basis_.size());
  for (std::uint64_t b : basis_) {
    const std::size_t sz = span.size();
    for (std::size_t i = 0; i < sz; ++i) span.push_back(span[i] ^ b);
  }
  std::sort(span.begin(), span.end());
  return span;
}

LinearMap LinearMap::identity(int n) {
  LinearMap l{n, {}};
  for (int j = 0; j < n; ++j) l.cols.push_back(std::uint64_t{1} << j);
  return l;
}

LinearMap LinearMap::random_invertible(int n, Xorshift64Star& rng) {
  const std::uint64_t mask = n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
  LinearMap l{n, std::vector<std::uint64_t>(static_cast<std::size_t>(n))};
  do {
    for (auto& c : l.cols) c = rng.next() & mask;
  } while (!l.invertible());
  return l;
}

std::uint64_t LinearMap::apply(std::uint64_t x) const {
  std::uint64_t y = 0;
  for (int j = 0; x != 0; ++j, x >>= 1) {
    if (x & 1) y ^= cols[static_cast<std::size_t>(j)];
  }
  return y;
}

LinearMap LinearMap::inverse() const {
  if (!invertible()) throw ParameterError("linear map is singular");
  // Row-reduce A^T (rows = columns of A) to I; the accumulated operations
  // E = (A^T)^-1 have rows equal to the columns of A^-1.
  std::vector<std::uint64_t> a(cols), inv;
  for (int j = 0; j < n; ++j) inv.push_back(std::uint64_t{1} << j);
  for (std::size_t bit = 0; bit < a.size(); ++bit) {
    std::size_t p = bit;
    while (!((a[p] >> bit) & 1)) ++p;
    std::swap(a[p], a[bit]);
    std::swap(inv[p], inv[bit]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r != bit && ((a[r] >> bit) & 1)) {
        a[r] ^= a[bit];
        inv[r] ^= inv[bit];
      }
    }
  }
  LinearMap out{n, std::move(inv)};
  return out;
}

}  // namespace bent
