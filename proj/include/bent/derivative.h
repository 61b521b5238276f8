#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bent/boolfn.h"
#include "bent/subspace.h"

namespace bent {

// D_a f(x) = f(x + a) + f(x).
BoolFn derivative(const BoolFn& f, std::uint64_t a);
// D_a D_b f.
BoolFn second_derivative(const BoolFn& f, std::uint64_t a, std::uint64_t b);

// RREF basis of {b : g(x + b) = g(x) for all x}, read off the Walsh support.
std::vector<std::uint64_t> invariant_directions(const BoolFn& g);

// D_a D_b f == 0 for every a, b in U. DomainError on dimension mismatch.
bool is_m_subspace(const BoolFn& f, const Subspace& u);

// Maximal dimension of an M-subspace, searching no further than dim_cap
// (the result is then min(index, dim_cap)).
int linearity_index(const BoolFn& f, std::optional<int> dim_cap = std::nullopt);
// Every M-subspace of exactly `dim` dimensions, in canonical form, sorted.
std::vector<Subspace> enumerate_m_subspaces(const BoolFn& f, int dim);
// Bent f has an (n/2)-dimensional M-subspace. DomainError if f is not bent.
bool in_mm_completed(const BoolFn& f);

// g(x) = f(L x + a) + <c, x> + b. ParameterError if L is singular.
BoolFn ea_transform(const BoolFn& f, const LinearMap& l, std::uint64_t a, std::uint64_t c,
                    bool b);

}  // namespace bent
