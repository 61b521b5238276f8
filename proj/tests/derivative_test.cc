#include <algorithm>
#include <bit>

#include <gtest/gtest.h>

#include "bent/construct.h"
#include "bent/derivative.h"
#include "bent/errors.h"
#include "bent/rng.h"
#include "bent/verify/oracles.h"

namespace {

using namespace bent;

BoolFn inner_product(int n) {
  return BoolFn::from(n, [n](std::uint64_t x) {
    int v = 0;
    for (int i = 0; i < n; i += 2) v ^= static_cast<int>((x >> i) & (x >> (i + 1)) & 1);
    return v != 0;
  });
}

BoolFn random_fn(int n, Xorshift64Star& rng) {
  return BoolFn::from(n, [&](std::uint64_t) { return (rng.next() & 1) != 0; });
}

TEST(Derivative, Basics) {
  const BoolFn lin = linear_fn(4, 0b0110, true);
  for (std::uint64_t a = 0; a < 16; ++a) EXPECT_TRUE(derivative(lin, a).is_constant());
  const BoolFn q = inner_product(2);
  EXPECT_EQ(second_derivative(q, 1, 2), BoolFn(2).complement());
  Xorshift64Star rng(1);
  for (int t = 0; t < 20; ++t) {
    const int n = 2 + t % 7;
    const BoolFn f = random_fn(n, rng);
    const std::uint64_t a = rng.below(f.size()), b = rng.below(f.size());
    EXPECT_EQ(second_derivative(f, a, b), second_derivative(f, b, a));
    EXPECT_TRUE(second_derivative(f, a, a).is_constant());
    EXPECT_FALSE(second_derivative(f, a, a)(0));
  }
  const BoolFn g = inner_product(6) ^ BoolFn::from(6, [](std::uint64_t x) { return (x & 7) == 7; });
  EXPECT_FALSE(second_derivative(g, 1, 2).is_constant());
  for (std::uint64_t a = 0; a < 64; ++a) {
    for (std::uint64_t b = 0; b < 64; ++b) {
      EXPECT_TRUE(second_derivative(inner_product(6), a, b).is_constant());
    }
  }
}

TEST(Derivative, InvariantDirections) {
  // f(x) = x1 x2 + x3 on 5 variables is invariant under e4, e5
  const BoolFn g = BoolFn::from(5, [](std::uint64_t x) { return ((x & 3) == 3) ^ ((x >> 2) & 1); });
  EXPECT_EQ(invariant_directions(g), (std::vector<std::uint64_t>{8, 16}));
  EXPECT_TRUE(invariant_directions(inner_product(4)).empty());
}

TEST(MSubspace, Membership) {
  const Field f = Field::make(3);
  const BoolFn h = mm(f, power_perm(f, 6));
  EXPECT_TRUE(is_m_subspace(h, Subspace(6, {1, 2, 4})));
  EXPECT_FALSE(is_m_subspace(h, Subspace(6, {8, 16, 32})));
  const BoolFn q = inner_product(2);
  EXPECT_TRUE(is_m_subspace(q, Subspace(2, {3})));
  EXPECT_FALSE(is_m_subspace(q, Subspace(2, {1, 2})));
  EXPECT_THROW(is_m_subspace(q, Subspace(4, {1})), DomainError);
}

TEST(LinearityIndex, KnownValues) {
  EXPECT_EQ(linearity_index(inner_product(2)), 1);
  EXPECT_EQ(linearity_index(inner_product(4)), 2);
  const Field f4 = Field::make(4);
  EXPECT_EQ(linearity_index(mm(f4, power_perm(f4, 14))), 4);
  const Field f3 = Field::make(3);
  const BoolFn h = mm(f3, power_perm(f3, 6));
  EXPECT_EQ(linearity_index(h), 3);
  EXPECT_TRUE(in_mm_completed(h));
  EXPECT_EQ(linearity_index(h, 2), 2);
  EXPECT_TRUE(in_mm_completed(inner_product(4)));
  EXPECT_THROW(in_mm_completed(linear_fn(4, 1)), DomainError);
}

TEST(LinearityIndex, OutsideCompletedClass) {
  const BoolFn f = build_cor_ex(4, 1, {CorExVariant::kInverse, 1});
  EXPECT_LE(linearity_index(f, 5), 4);
  EXPECT_FALSE(in_mm_completed(f));
}

TEST(LinearityIndex, BoundsOnBentFunctions) {
  Xorshift64Star rng(2);
  for (int m = 2; m <= 4; ++m) {
    const Field f = Field::make(m);
    std::vector<Elem> t(f.size());
    for (Elem i = 0; i < f.size(); ++i) t[i] = i;
    for (int s = 0; s < 3; ++s) {
      for (std::size_t i = t.size() - 1; i > 0; --i) std::swap(t[i], t[rng.below(i + 1)]);
      const int idx = linearity_index(mm(f, make_perm(f, t)));
      EXPECT_EQ(idx, m);
    }
    const BoolFn ps = psap(f, subfield_trace_fn(Subfield(f, m)));
    const int idx = linearity_index(ps);
    EXPECT_GE(idx, 1);
    EXPECT_LE(idx, m);
  }
}

TEST(MSubspace, Enumeration) {
  // x1x2 + x3x4: 2-dimensional M-subspaces
  const auto subs = enumerate_m_subspaces(inner_product(4), 2);
  ASSERT_FALSE(subs.empty());
  EXPECT_TRUE(std::is_sorted(subs.begin(), subs.end()));
  for (const Subspace& s : subs) EXPECT_TRUE(is_m_subspace(inner_product(4), s));
  EXPECT_NE(std::find(subs.begin(), subs.end(), Subspace(4, {1, 4}).canonical()), subs.end());
  // brute force count over all canonical pairs
  std::size_t count = 0;
  for (std::uint64_t v = 1; v < 16; ++v) {
    for (std::uint64_t u = 1; u < std::bit_floor(v); ++u) {
      if (v & std::bit_floor(u)) continue;
      count += oracle::second_derivative_constant(inner_product(4), u, v) == 0;
    }
  }
  EXPECT_EQ(subs.size(), count);
}

TEST(MSubspace, SharedFamilySubspaceLifts) {
  // every family member x1x2 + x3x4 shares V = <e1, e3>; V x F_2^k x {0} stays an M-subspace
  const Field fk = Field::make(2);
  const std::vector<BoolFn> family(4, inner_product(4));
  const BoolFn f = gmm(fk, family);
  const Subspace lifted(8, {1, 4, 16, 32});
  EXPECT_TRUE(is_m_subspace(f, lifted));
  EXPECT_GE(linearity_index(f), 4);
}

TEST(Ea, Transform) {
  const BoolFn q = inner_product(2);
  EXPECT_EQ(ea_transform(q, LinearMap::identity(2), 0, 0, false), q);
  EXPECT_EQ(ea_transform(q, LinearMap{2, {2, 1}}, 0, 0, false), q);
  EXPECT_THROW(ea_transform(q, LinearMap{2, {1, 1}}, 0, 0, false), ParameterError);
  Xorshift64Star rng(3);
  const Field f4 = Field::make(4);
  const BoolFn base = mm(f4, power_perm(f4, 14));
  for (int t = 0; t < 50; ++t) {
    const LinearMap l = LinearMap::random_invertible(8, rng);
    EXPECT_TRUE(is_bent(ea_transform(base, l, rng.below(256), rng.below(256), (rng.next() & 1) != 0)));
  }
}

TEST(Ea, SecondDerivativeConstancyTransports) {
  Xorshift64Star rng(4);
  for (int t = 0; t < 100; ++t) {
    const BoolFn f = t % 2 ? inner_product(6) ^ BoolFn::from(6, [](std::uint64_t x) { return (x & 7) == 7; })
                           : random_fn(6, rng);
    const LinearMap l = LinearMap::random_invertible(6, rng);
    const BoolFn g = ea_transform(f, l, rng.below(64), rng.below(64), (rng.next() & 1) != 0);
    const std::uint64_t a = rng.below(64), b = rng.below(64);
    const LinearMap li = l.inverse();
    ASSERT_EQ(oracle::second_derivative_constant(f, a, b),
              oracle::second_derivative_constant(g, li.apply(a), li.apply(b)));
  }
}

TEST(Ea, MSubspacePullback) {
  Xorshift64Star rng(5);
  const Field f3 = Field::make(3);
  const BoolFn h = mm(f3, power_perm(f3, 6));
  const LinearMap l = LinearMap::random_invertible(6, rng);
  const BoolFn g = ea_transform(h, l, 0, 0, false);
  const LinearMap li = l.inverse();
  const Subspace w(6, {li.apply(1), li.apply(2), li.apply(4)});
  EXPECT_TRUE(is_m_subspace(g, w));
}

}  // namespace
