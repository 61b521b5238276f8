#pragma once

// Builders for the bent families. Functions on F x F are indexed
// bits(x) + 2^m bits(y); see each builder for wider layouts.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "bent/boolfn.h"
#include "bent/gf2m.h"
#include "bent/vectorial.h"

namespace bent {

// A bijection of GF(2^m), value per element bitmask.
struct PermTable {
  int m = 0;
  std::vector<Elem> table;
};

// A function on S_k inside GF(2^m), value per member of S_k in ascending
// bitmask order. Balanced form holds bits; permutation form holds members of S_k.
struct SubfieldFn {
  int m = 0;
  int k = 0;
  std::vector<Elem> table;
};

// ParameterError unless `table` is a bijection of the field.
PermTable make_perm(const Field& f, std::vector<Elem> table);
PermTable identity_perm(const Field& f);
// x -> x^e; ParameterError if not a permutation.
PermTable power_perm(const Field& f, std::uint64_t e);
PermTable inverse_perm(const PermTable& p);

SubfieldFn subfield_trace_fn(const Subfield& s);
// Tr_1^k(z^-1), 0 -> 0: balanced, and not affine once k >= 3.
SubfieldFn subfield_inverse_trace_fn(const Subfield& s);
SubfieldFn subfield_identity(const Subfield& s);
bool is_balanced_form(const SubfieldFn& p);
bool is_permutation_form(const Subfield& s, const SubfieldFn& p);

// Tr(x pi(y)) + g(y); g is a function of y on m variables (zero if absent).
BoolFn mm(const Field& f, const PermTable& pi, const std::optional<BoolFn>& g = std::nullopt);

// f(x, z) = f_z(x), index bits(x) + 2^m z, from 2^k functions on V_m that
// are k-plateaued with pairwise disjoint Walsh supports.
BoolFn gmm_general(std::span<const BoolFn> family);

// f(x,y,z) = f^(z)(x) + Tr_1^k(yz) with y, z in GF(2^k) = fk. The family has
// 2^k bent members on n variables, indexed by z. Index: bits(x) + 2^n bits(y)
// + 2^(n+k) bits(z).
BoolFn gmm(const Field& fk, std::span<const BoolFn> family);
// (f^(y))*(x) + Tr_1^k(yz), the dual under gmm_pairing.
BoolFn gmm_dual(const Field& fk, std::span<const BoolFn> family);
// Dot product on x, trace pairing on y and on z.
Pairing gmm_pairing(int n, const Field& fk);

// P(y x^(2^m - 2)); P is a balanced function on GF(2^m) (SubfieldFn with k = m).
BoolFn psap(const Field& f, const SubfieldFn& p);

enum class GpsForm { kF, kG };

// f-form: P(Tr_k^m(y x^-e)) + c0 [x = 0];  g-form: P(Tr_k^m(x y^-eta)) + c0 [y = 0].
BoolFn gpsap(const Field& f, const GpsParams& params, const SubfieldFn& p, bool c0,
             GpsForm form = GpsForm::kF);
// Tr(Q(x y^-eta)), Q a permutation with Q(0) = 0.
BoolFn gpsap_trace_form(const Field& f, const GpsParams& params, const PermTable& q);
// Tr(Q(y~ x~^-e)) with x~ = x^(2^(m - ell)); the dual of the trace form under
// the trace pairing on both coordinates.
BoolFn gpsap_dual_formula(const Field& f, const GpsParams& params, const PermTable& q);
// P(Tr_k^m(y x^-e)) + c0 [x = 0] with P a permutation of S_k, c0 in S_k;
// outputs stored as Subfield::encode coordinates.
VecFn gpsap_vectorial(const Field& f, const GpsParams& params, const SubfieldFn& p, Elem c0);

// The generalized spread: U = {(0,y)}, A(g) = {x != 0, Tr_k^m(y x^-e) = g};
// V = {(x,0)}, B(g) = {y != 0, Tr_k^m(x y^-eta) = g}. Parts are -1 for U/V
// and the index of g among the members of S_k otherwise.
struct SpreadSets {
  int m = 0;
  int k = 0;
  std::vector<std::int32_t> a_part;
  std::vector<std::int32_t> b_part;

  std::uint64_t count_a(std::int32_t part) const;
  std::uint64_t count_b(std::int32_t part) const;
};
SpreadSets spread_sets(const Field& f, const GpsParams& params);

struct PropertyPResult {
  bool holds = false;
  // (a1, a2, b1, b2) of the first non-trivial tuple satisfying both equations.
  std::optional<std::array<Elem, 4>> counterexample;
};
bool property_p_trivial(Elem a1, Elem a2, Elem b1, Elem b2);
PropertyPResult check_property_p(const Field& f, const PermTable& pi);

struct CorExVariant {
  enum Kind { kInverse, kGold } kind = kInverse;
  int kprime = 1;  // Gold exponent 2^k' + 1
};
// f(x1,x2,y,z) = f^(z)(x1,x2) + Tr_1^k(yz) where f^(z) is Tr(x1 pi(x2)) when
// Tr_1^k(z) = 0 and Tr(x2 pi(x1)) otherwise. Index: bits(x1) + 2^m bits(x2)
// + 2^(2m) bits(y) + 2^(2m+k) bits(z).
BoolFn build_cor_ex(int m, int k, CorExVariant variant);

// Tr(d (1/x + 1/(x + c))) over x != 0, c takes both values.
bool trace_sum_nonconstant(const Field& f, Elem c, Elem d);

// Weight of g_l(x) = Tr(Q((1+l) x^-e) + Q(x^-e) + Q(l x^-e)) for every
// l outside GF(2), in ascending order of l (so entry i is l = i + 2).
std::vector<std::uint64_t> glambda_weights(const Field& f, const GpsParams& params,
                                           const PermTable& q);
bool glambda_nonconstant(const Field& f, const GpsParams& params, const PermTable& q);

}  // namespace bent
