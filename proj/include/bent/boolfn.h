#pragma once

// Boolean functions as packed truth tables and their Walsh analysis.
//
// Bit x of the table is f(vec(x)), coordinate j of the input being bit j of x.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "bent/pairing.h"

namespace bent {

inline constexpr int kMaxVars = 26;

class BoolFn {
 public:
  BoolFn() = default;
  // The zero function on n variables; ParameterError unless 1 <= n <= kMaxVars.
  explicit BoolFn(int n);

  template <typename F>
  static BoolFn from(int n, F&& f) {
    BoolFn g(n);
    for (std::uint64_t x = 0; x < g.size(); ++x) {
      if (f(x)) g.set(x, true);
    }
    return g;
  }

  int n() const { return n_; }
  std::uint64_t size() const { return std::uint64_t{1} << n_; }
  bool operator()(std::uint64_t x) const { return (words_[x >> 6] >> (x & 63)) & 1; }
  void set(std::uint64_t x, bool v) {
    const std::uint64_t bit = std::uint64_t{1} << (x & 63);
    if (v) {
      words_[x >> 6] |= bit;
    } else {
      words_[x >> 6] &= ~bit;
    }
  }

  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  std::uint64_t weight() const;
  bool is_constant() const;

  BoolFn& operator^=(const BoolFn& o);
  friend BoolFn operator^(BoolFn a, const BoolFn& b) { return a ^= b; }
  BoolFn complement() const;
  bool operator==(const BoolFn& o) const { return n_ == o.n_ && words_ == o.words_; }

 private:
  int n_ = 0;
  std::vector<std::uint64_t> words_;
};

// W_f(b) = sum_x (-1)^(f(x) + <b,x>), b = 0 .. 2^n - 1.
std::vector<std::int64_t> walsh_transform(const BoolFn& f);
std::vector<std::int64_t> walsh_transform(const BoolFn& f, const Pairing& p);
// O(4^n) double sum, for cross-checks only.
std::vector<std::int64_t> walsh_naive(const BoolFn& f, const Pairing& p);

bool is_bent(const BoolFn& f);
bool is_bent_spectrum(std::span<const std::int64_t> w, int n);
bool is_balanced(const BoolFn& f);
// s with |W| in {0, 2^((n+s)/2)}, if f is plateaued.
std::optional<int> plateaued_order(const BoolFn& f);
std::optional<int> plateaued_order_spectrum(std::span<const std::int64_t> w, int n);
bool is_semibent(const BoolFn& f);

// Throws DomainError unless f is bent.
BoolFn dual(const BoolFn& f);
BoolFn dual(const BoolFn& f, const Pairing& p);

// |W| value -> multiplicity.
std::map<std::int64_t, std::uint64_t> ext_walsh_spectrum(const BoolFn& f);

// Coefficient of prod_{j in S} x_j is bit S of the result.
BoolFn anf(const BoolFn& f);
int anf_degree(const BoolFn& f);

// Affine function <c,x> + b.
BoolFn linear_fn(int n, std::uint64_t c, bool b = false);

}  // namespace bent
