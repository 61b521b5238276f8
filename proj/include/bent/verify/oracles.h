#pragma once

// Slow reference computations sharing no code path with the library's fast
// routines: schoolbook field arithmetic, double-sum spectra, direct
// derivative evaluation. Used to freeze expected values and cross-check.

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "bent/boolfn.h"

namespace bent::oracle {

// GF(2^m) by shift-and-add multiplication modulo `irred`.
struct SlowField {
  int m;
  std::uint32_t irred;

  std::uint32_t size() const { return std::uint32_t{1} << m; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  // 0 maps to 0.
  std::uint32_t inv(std::uint32_t a) const { return pow(a, size() - 2); }
  std::uint32_t frob(std::uint32_t a, int i) const;
  std::uint32_t trace_rel(std::uint32_t a, int k) const;
  int trace(std::uint32_t a) const { return static_cast<int>(trace_rel(a, 1) & 1); }
};

// Smallest irreducible of degree m with constant term 1, by exhaustive product search.
std::uint32_t smallest_irreducible(int m);

std::vector<std::int64_t> walsh_dot(const BoolFn& f);
// Walsh under Tr(u1 x1 + u2 x2) for f indexed bits(x1) + 2^m bits(x2).
std::vector<std::int64_t> walsh_trace2(const BoolFn& f, const SlowField& fld);
// Sign read of a bent spectrum.
BoolFn dual_from(const std::vector<std::int64_t>& w, int n);
// Every nonzero derivative balanced.
bool bent_by_derivatives(const BoolFn& f);
// Degree from the explicit subset sums a_S = sum_{x subset of S} f(x).
int anf_degree_subset_sum(const BoolFn& f);
// 0, 1 for constant second derivative, -1 otherwise.
int second_derivative_constant(const BoolFn& f, std::uint64_t a, std::uint64_t b);

// Exhaustive Property (P) check with early exit per tuple.
std::optional<std::array<std::uint32_t, 4>> property_p_counterexample(
    const SlowField& fld, const std::vector<std::uint32_t>& pi);
bool property_p_equations_hold(const SlowField& fld, const std::vector<std::uint32_t>& pi,
                               std::uint32_t a1, std::uint32_t a2, std::uint32_t b1,
                               std::uint32_t b2);

// Bent/semibent status of f on each coset {x : (<u,x>, <v,x>) = (i >> 1, i & 1)},
// from character sums over the coset. O(4^n); small n only.
struct RestrictionClass {
  std::array<bool, 4> bent;
  std::array<bool, 4> semibent;
};
RestrictionClass classify_by_enumeration(const BoolFn& f, std::uint64_t u, std::uint64_t v);

}  // namespace bent::oracle
