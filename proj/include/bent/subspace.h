#pragma once

// Linear algebra over GF(2) on vectors packed into 64-bit words.

#include <cstdint>
#include <span>
#include <vector>

#include "bent/rng.h"

namespace bent {

// Reduced row echelon form with leading bits as pivots: every pivot column
// is zero in all other rows. Zero rows are dropped; rows sorted ascending.
std::vector<std::uint64_t> rref(std::vector<std::uint64_t> rows);
int rank(std::span<const std::uint64_t> rows);
// RREF basis of {x in V_n : x . r = 0 for every r in rows}.
std::vector<std::uint64_t> orthogonal_complement(std::span<const std::uint64_t> rows, int n);
// Reduces x against RREF rows; zero iff x lies in their span.
std::uint64_t reduce(std::uint64_t x, std::span<const std::uint64_t> rref_rows);

class Subspace {
 public:
  Subspace() = default;
  // ParameterError if a vector is zero, exceeds n bits, or the list is dependent.
  Subspace(int n, std::vector<std::uint64_t> basis);

  int n() const { return n_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  std::span<const std::uint64_t> basis() const { return basis_; }
  // All 2^dim members, ascending.
  std::vector<std::uint64_t> elements() const;
  bool contains(std::uint64_t x) const { return reduce(x, echelon_) == 0; }
  Subspace canonical() const { return Subspace(n_, echelon_); }

  bool operator==(const Subspace& o) const { return n_ == o.n_ && echelon_ == o.echelon_; }
  bool operator<(const Subspace& o) const { return echelon_ < o.echelon_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> basis_;
  std::vector<std::uint64_t> echelon_;
};

// A linear map of V_n given by the images of the unit vectors.
struct LinearMap {
  int n = 0;
  std::vector<std::uint64_t> cols;

  static LinearMap identity(int n);
  // Uniformly random invertible map (rejection on singular draws).
  static LinearMap random_invertible(int n, Xorshift64Star& rng);

  std::uint64_t apply(std::uint64_t x) const;
  bool invertible() const { return rank(cols) == n; }
  // ParameterError if singular.
  LinearMap inverse() const;
};

}  // namespace bent
