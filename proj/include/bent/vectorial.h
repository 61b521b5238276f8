#pragma once

#include <cstdint>
#include <vector>

#include "bent/boolfn.h"
#include "bent/gf2m.h"

namespace bent {

// F : V_n -> V_k as 2^n values of k bits. Builders with field-valued output in
// S_k store Subfield::encode(F(x)).
struct VecFn {
  int n = 0;
  int k = 0;
  std::vector<std::uint32_t> table;

  // Checks table size and value range; ParameterError otherwise.
  void validate() const;
};

// x -> alpha . F(x). DomainError for alpha == 0.
BoolFn component(const VecFn& f, std::uint32_t alpha);
// x -> Tr_1^k(alpha * z(x)) where z(x) = s.decode(F(x)) and alpha is in S_k.
BoolFn component_trace(const VecFn& f, const Subfield& s, Elem alpha);

bool is_vectorial_bent(const VecFn& f);
// (F_a)* + (F_b)* = (F_{a^b})* for all nonzero a != b. DomainError if F is
// not vectorial bent.
bool check_component_dual_linearity(const VecFn& f);

}  // namespace bent
