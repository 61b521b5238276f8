#pragma once

// 4-decompositions along codimension-2 subspaces S = <u, v>^perp (dot
// product) and the concatenation constructions.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "bent/boolfn.h"
#include "bent/construct.h"

namespace bent {

struct Restrictions {
  // f on w_i + S, entry j standing for w_i + sum of s_basis[t] over bits t of j.
  std::array<BoolFn, 4> parts;
  // Smallest x with (<u,x>, <v,x>) = (0,0), (0,1), (1,0), (1,1).
  std::array<std::uint64_t, 4> reps{};
  // RREF basis of S, ascending.
  std::vector<std::uint64_t> s_basis;
};

// ParameterError if u, v are dependent (or zero).
Restrictions restrict_to_cosets(const BoolFn& f, std::uint64_t u, std::uint64_t v);

enum class DecompClass { kAllBent, kAllSemibent, kMixed };
enum class SecondDerivativeKind { kConstantOne, kConstantZero, kNonConstant };

const char* to_string(DecompClass c);
const char* to_string(SecondDerivativeKind k);
SecondDerivativeKind second_derivative_kind(const BoolFn& f, std::uint64_t a, std::uint64_t b);

struct DecompositionReport {
  std::uint64_t u = 0;
  std::uint64_t v = 0;
  Restrictions restrictions;
  std::array<bool, 4> bent{};
  std::array<bool, 4> semibent{};
  std::array<std::map<std::int64_t, std::uint64_t>, 4> spectra;
  DecompClass classification = DecompClass::kMixed;
  // D_u D_v f* and whether it agrees with the classification; bent f only.
  std::optional<SecondDerivativeKind> dual_second_derivative;
  std::optional<bool> criterion_agrees;
};

DecompositionReport classify_decomposition(const BoolFn& f, std::uint64_t u, std::uint64_t v);

struct ScanOptions {
  bool allow_large = false;  // lift the n <= 12 guard
  bool keep_mixed = false;   // also list Mixed planes
};

struct ScanEntry {
  std::uint64_t u;  // RREF basis of the plane, u < v
  std::uint64_t v;
  DecompClass classification;
};

struct ScanSummary {
  int n = 0;
  std::uint64_t planes = 0;
  std::uint64_t all_bent = 0;
  std::uint64_t all_semibent = 0;
  std::uint64_t mixed = 0;
  std::vector<ScanEntry> entries;  // ordered by (v, u)
};

// Classifies every 2-dimensional <u, v>; restriction spectra are taken from
// W_f through the four-point transform over <u, v>. DomainError unless f is
// bent; ResourceError above n = 12 unless allowed.
ScanSummary scan_decompositions(const BoolFn& f, const ScanOptions& opts = {});

// The classification of one plane along the same spectral route.
DecompClass classify_plane_spectral(std::span<const std::int64_t> walsh, int n, std::uint64_t u,
                                    std::uint64_t v);

// Compares the constancy of D_(a,b) D_(c,d) f* (trace pairing) with that of
// D_(1,0) D_(0,1) f^ for f = Tr(Q(x y^-eta)). DomainError if ad + bc = 0.
bool check_ftof_equivalence(const Field& f, const GpsParams& params, const PermTable& q, Elem a,
                            Elem b, Elem c, Elem d);

// f1(x) + yz (f1+f2+f3+f4)(x) + y (f1+f3)(x) + z (f1+f2)(x); index
// bits(x) + 2^n y + 2^(n+1) z.
BoolFn concat4(const BoolFn& f1, const BoolFn& f2, const BoolFn& f3, const BoolFn& f4);
// f1* + f2* + f3* + f4* == 1. DomainError unless all four are bent.
bool concat_bent_check(const BoolFn& f1, const BoolFn& f2, const BoolFn& f3, const BoolFn& f4);

// Tr_1^k(((1+z1+z2) a + z2 b + z1 c) P(Tr_k^m(y x^-e))) + z1 z2 with
// e = 2^k + 1; z1 is bit 2m and z2 bit 2m+1 of the index.
BoolFn psffff(const Field& f, int k, const SubfieldFn& p, Elem alpha, Elem beta, Elem gamma);

// Assignment entry i (for the i-th member of S_k, ascending) is the quadruple
// a0 | a1 << 1 | a2 << 2 | a3 << 3.
std::vector<std::uint8_t> default_partition_assignment(int k);
BoolFn partition_bent(const Field& f, const GpsParams& params,
                      std::span<const std::uint8_t> assignment);

}  // namespace bent
