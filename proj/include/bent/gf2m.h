#pragma once

// Arithmetic in GF(2^m), 1 <= m <= 16, over a polynomial basis.
//
// Elements are bitmasks: bit j is the coefficient of x^j. A Field is
// immutable after construction and cheap to copy (tables are shared).

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace bent {

using Elem = std::uint32_t;

inline constexpr int kMaxFieldDegree = 16;

class Field {
 public:
  // Validates `irred` (degree m, constant term 1, irreducible by trial
  // division). Without `irred`, picks the smallest irreducible of degree m.
  static Field make(int m, std::optional<std::uint32_t> irred = std::nullopt);

  int m() const { return m_; }
  std::uint32_t irred() const { return irred_; }
  std::uint32_t size() const { return std::uint32_t{1} << m_; }
  std::uint32_t order() const { return size() - 1; }

  Elem add(Elem a, Elem b) const { return a ^ b; }
  Elem mul(Elem a, Elem b) const {
    if (a == 0 || b == 0) return 0;
    std::uint32_t s = t_->log[a] + t_->log[b];
    if (s >= order()) s -= order();
    return t_->exp[s];
  }
  Elem square(Elem a) const { return mul(a, a); }
  // Throws DomainError for a == 0.
  Elem inv(Elem a) const;
  // Nonzero a: exponent reduced mod 2^m - 1 (negative allowed).
  // Zero a: pow(0, 0) = 1, otherwise 0 -- so 0^(2^m-2) = 0 and 0^(-e) = 0.
  Elem pow(Elem a, std::int64_t e) const;
  // a^(2^i)
  Elem frobenius(Elem a, int i) const;

  // Tr_k^m(x) = sum_{i < m/k} x^(2^(k i)). Throws ParameterError unless k | m.
  Elem trace_rel(Elem x, int k) const;
  // Absolute trace Tr_1^m as a bit.
  int trace(Elem x) const { return static_cast<int>(t_->abs_trace[x]); }

  bool operator==(const Field& o) const { return m_ == o.m_ && irred_ == o.irred_; }

 private:
  struct Tables {
    std::vector<Elem> exp;
    std::vector<std::uint32_t> log;
    std::vector<std::uint8_t> abs_trace;
  };
  Field(int m, std::uint32_t irred, std::shared_ptr<const Tables> t)
      : m_(m), irred_(irred), t_(std::move(t)) {}

  int m_;
  std::uint32_t irred_;
  std::shared_ptr<const Tables> t_;
};

namespace gf2poly {
// Schoolbook carry-less arithmetic on GF(2)[x] polynomials, used for
// validation and as an independent reference path in tests.
int degree(std::uint64_t p);
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t modulus);
std::uint64_t mod(std::uint64_t a, std::uint64_t modulus);
bool is_irreducible(std::uint64_t p);
// Smallest p of degree m with constant term 1 that is irreducible.
std::uint32_t default_irreducible(int m);
}  // namespace gf2poly

// The subfield S_k = {z : z^(2^k) = z} of a field of degree m, k | m,
// with an F_2-coordinate system used when values in S_k are packed into
// k-bit words.
class Subfield {
 public:
  Subfield(const Field& field, int k);

  int k() const { return k_; }
  const Field& field() const { return field_; }
  // The 2^k members in ascending bitmask order.
  std::span<const Elem> elements() const { return elements_; }
  bool contains(Elem z) const { return index_[z] >= 0; }
  // Position of z in elements(); throws DomainError if z is not in S_k.
  std::size_t index_of(Elem z) const;
  // Reduced echelon basis of S_k as an F_2-space, ascending.
  std::span<const Elem> basis() const { return basis_; }
  // Coordinates of z with respect to basis(), as a k-bit word, and back.
  std::uint32_t encode(Elem z) const;
  Elem decode(std::uint32_t coords) const;
  // Tr_1^k restricted to S_k.
  int trace(Elem z) const;

 private:
  Field field_;
  int k_;
  std::vector<Elem> elements_;
  std::vector<std::int32_t> index_;
  std::vector<Elem> basis_;
  std::vector<std::uint32_t> coords_;
};

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b);

// eta with 1 <= eta < 2^m - 1 and eta * e = 1 mod 2^m - 1.
// Throws ParameterError when gcd(e, 2^m - 1) != 1.
std::uint64_t mod_inverse_exponent(std::uint64_t e, int m);

// Parameters of the generalized Desarguesian spread.
struct GpsParams {
  int m = 0;
  int k = 0;
  std::uint64_t e = 0;
  int ell = 0;
  std::uint64_t eta = 0;
};

// Checks k | m, gcd(e, 2^m - 1) = 1 and e = 2^ell mod (2^k - 1) with
// 0 <= ell < k; fills ell and eta. Throws ParameterError naming the first
// failed condition.
GpsParams validate_gps_params(int m, int k, std::uint64_t e);

}  // namespace bent
