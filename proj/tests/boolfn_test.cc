#include <gtest/gtest.h>

#include "bent/boolfn.h"
#include "bent/construct.h"
#include "bent/derivative.h"
#include "bent/errors.h"
#include "bent/rng.h"
#include "bent/verify/oracles.h"

namespace {

using namespace bent;

BoolFn x1x2(int n = 2) {
  return BoolFn::from(n, [](std::uint64_t x) { return (x & 3) == 3; });
}

BoolFn random_fn(int n, Xorshift64Star& rng) {
  return BoolFn::from(n, [&](std::uint64_t) { return (rng.next() & 1) != 0; });
}

TEST(BoolFn, Construction) {
  EXPECT_THROW(BoolFn(0), ParameterError);
  EXPECT_THROW(BoolFn(kMaxVars + 1), ParameterError);
  BoolFn f(3);
  f.set(5, true);
  EXPECT_TRUE(f(5));
  EXPECT_EQ(f.weight(), 1u);
  EXPECT_EQ(f.complement().weight(), 7u);
  EXPECT_TRUE(BoolFn(7).is_constant());
}

TEST(Walsh, SmallSpectra) {
  const auto w0 = walsh_transform(BoolFn(2));
  EXPECT_EQ(w0, (std::vector<std::int64_t>{4, 0, 0, 0}));
  const auto w = walsh_transform(x1x2());
  EXPECT_EQ(w, (std::vector<std::int64_t>{2, 2, 2, -2}));
  Xorshift64Star rng(1);
  for (int n = 1; n <= 10; ++n) {
    const BoolFn f = random_fn(n, rng);
    EXPECT_EQ(walsh_transform(f)[0], static_cast<std::int64_t>(f.size()) - 2 * static_cast<std::int64_t>(f.weight()));
  }
}

TEST(Walsh, ButterflyMatchesDoubleSum) {
  Xorshift64Star rng(2);
  for (int t = 0; t < 100; ++t) {
    const BoolFn f = random_fn(1 + t % 6, rng);
    const auto w = walsh_transform(f);
    ASSERT_EQ(w, oracle::walsh_dot(f));
    std::int64_t sum = 0;
    for (std::int64_t v : w) {
      sum += v * v;
      ASSERT_EQ(v % 2, 0);
    }
    ASSERT_EQ(sum, static_cast<std::int64_t>(f.size() * f.size()));
  }
}

TEST(Walsh, TracePairingMatchesDoubleSum) {
  const Field f = Field::make(3);
  Xorshift64Star rng(3);
  const BoolFn g = random_fn(6, rng);
  EXPECT_EQ(walsh_transform(g, Pairing::trace2(f)), oracle::walsh_trace2(g, {3, f.irred()}));
  EXPECT_EQ(walsh_transform(g, Pairing::trace2(f)), walsh_naive(g, Pairing::trace2(f)));
}

TEST(Bent, Classification) {
  EXPECT_TRUE(is_bent(x1x2()));
  EXPECT_FALSE(is_bent(linear_fn(4, 0b1011, true)));
  EXPECT_FALSE(is_bent(x1x2(3)));
  const Field f = Field::make(3);
  EXPECT_TRUE(is_bent(psap(f, subfield_trace_fn(Subfield(f, 3)))));
}

TEST(Bent, AgreesWithDerivativeCriterion) {
  Xorshift64Star rng(4);
  for (int n = 2; n <= 10; n += 2) {
    const BoolFn quad = BoolFn::from(n, [n](std::uint64_t x) {
      int v = 0;
      for (int i = 0; i < n; i += 2) v ^= static_cast<int>((x >> i) & (x >> (i + 1)) & 1);
      return v != 0;
    });
    EXPECT_TRUE(oracle::bent_by_derivatives(quad));
    EXPECT_TRUE(is_bent(quad));
    for (int t = 0; t < 5; ++t) {
      const BoolFn g = random_fn(n, rng);
      EXPECT_EQ(is_bent(g), oracle::bent_by_derivatives(g));
    }
  }
  for (int n = 1; n <= 9; n += 2) EXPECT_FALSE(is_bent(random_fn(n, rng)));
}

TEST(Plateaued, Orders) {
  EXPECT_EQ(plateaued_order(x1x2()), 0);
  EXPECT_EQ(plateaued_order(x1x2(3)), 1);
  EXPECT_TRUE(is_semibent(x1x2(3)));
  EXPECT_EQ(plateaued_order(linear_fn(3, 1)), 3);
  EXPECT_FALSE(is_semibent(linear_fn(3, 1)));
  const BoolFn semi4 = BoolFn::from(4, [](std::uint64_t x) { return ((x & 3) == 3) ^ ((x >> 2) & 1); });
  EXPECT_EQ(plateaued_order(semi4), 2);
  EXPECT_TRUE(is_semibent(semi4));
  BoolFn odd(3);
  odd.set(0, true);
  EXPECT_FALSE(plateaued_order(odd).has_value());
}

TEST(Dual, SmallCases) {
  EXPECT_EQ(dual(x1x2()), x1x2());
  EXPECT_THROW(dual(linear_fn(2, 1)), DomainError);
  const Field f = Field::make(3);
  const BoolFn g = mm(f, power_perm(f, 6));
  const BoolFn d = dual(g);
  EXPECT_EQ(dual(d), g);
  EXPECT_EQ(d, oracle::dual_from(oracle::walsh_dot(g), 6));
}

TEST(Dual, TracePairing) {
  const Field f = Field::make(3);
  const BoolFn g = mm(f, power_perm(f, 6));
  const BoolFn d = dual(g, Pairing::trace2(f));
  EXPECT_EQ(d, oracle::dual_from(oracle::walsh_trace2(g, {3, f.irred()}), 6));
  EXPECT_EQ(dual(d, Pairing::trace2(f)), g);
}

TEST(Anf, Degrees) {
  const BoolFn f = BoolFn::from(3, [](std::uint64_t x) { return ((x & 3) == 3) ^ ((x >> 2) & 1); });
  EXPECT_EQ(anf_degree(f), 2);
  EXPECT_EQ(anf_degree(BoolFn(4).complement()), 0);
  EXPECT_EQ(anf_degree(BoolFn(4)), 0);
  const BoolFn a = anf(f);
  EXPECT_TRUE(a(3));
  EXPECT_TRUE(a(4));
  EXPECT_EQ(a.weight(), 2u);
  EXPECT_EQ(anf(a), f);
  const Field fl = Field::make(3);
  const BoolFn ps = psap(fl, subfield_trace_fn(Subfield(fl, 3)));
  EXPECT_EQ(anf_degree(ps), 3);
  Xorshift64Star rng(5);
  for (int t = 0; t < 20; ++t) {
    const BoolFn g = random_fn(1 + t % 8, rng);
    EXPECT_EQ(anf_degree(g), oracle::anf_degree_subset_sum(g));
  }
}

TEST(Balance, AndExtendedSpectrumInvariance) {
  EXPECT_TRUE(is_balanced(linear_fn(3, 1)));
  EXPECT_FALSE(is_balanced(x1x2()));
  Xorshift64Star rng(6);
  const BoolFn f = random_fn(6, rng);
  const auto ref = ext_walsh_spectrum(f);
  for (int t = 0; t < 20; ++t) {
    const LinearMap l = LinearMap::random_invertible(6, rng);
    const BoolFn g = ea_transform(f, l, rng.below(64), rng.below(64), (rng.next() & 1) != 0);
    EXPECT_EQ(ext_walsh_spectrum(g), ref);
  }
}

}  // namespace
