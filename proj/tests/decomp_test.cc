#include <bit>

#include <gtest/gtest.h>

#include "bent/construct.h"
#include "bent/decomp.h"
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

BoolFn random_mm3(Xorshift64Star& rng) {
  const Field f = Field::make(3);
  std::vector<Elem> t(8);
  for (Elem i = 0; i < 8; ++i) t[i] = i;
  for (std::size_t i = 7; i > 0; --i) std::swap(t[i], t[rng.below(i + 1)]);
  return mm(f, make_perm(f, t), random_fn(3, rng));
}

TEST(Restrict, Slicing) {
  const BoolFn f = inner_product(4);
  const Restrictions r = restrict_to_cosets(f, 1, 2);
  EXPECT_EQ(r.s_basis, (std::vector<std::uint64_t>{4, 8}));
  EXPECT_EQ(r.reps, (std::array<std::uint64_t, 4>{0, 2, 1, 3}));
  for (const BoolFn& p : r.parts) EXPECT_TRUE(is_bent(p));
  EXPECT_THROW(restrict_to_cosets(f, 3, 3), ParameterError);
  EXPECT_THROW(restrict_to_cosets(f, 0, 1), ParameterError);
}

TEST(Restrict, ProductWithPlane) {
  Xorshift64Star rng(1);
  const BoolFn g = random_fn(4, rng);
  const BoolFn f = BoolFn::from(6, [&](std::uint64_t i) { return g(i & 15) ^ ((i >> 4) == 3); });
  const Restrictions r = restrict_to_cosets(f, 16, 32);
  EXPECT_EQ(r.parts[0], g);
  EXPECT_EQ(r.parts[1], g);
  EXPECT_EQ(r.parts[2], g);
  EXPECT_EQ(r.parts[3], g.complement());
}

TEST(Restrict, BentRestrictionsShareSpectra) {
  Xorshift64Star rng(2);
  const Field f4 = Field::make(4);
  const BoolFn f = gpsap(f4, validate_gps_params(4, 2, 2), subfield_trace_fn(Subfield(f4, 2)), false);
  for (int t = 0; t < 30; ++t) {
    const std::uint64_t u = 1 + rng.below(255), v = 1 + rng.below(255);
    if (u == v) continue;
    const Restrictions r = restrict_to_cosets(f, u, v);
    for (int i = 1; i < 4; ++i) EXPECT_EQ(ext_walsh_spectrum(r.parts[i]), ext_walsh_spectrum(r.parts[0]));
  }
}

TEST(Classify, InnerProduct) {
  const BoolFn f = inner_product(4);
  const DecompositionReport a = classify_decomposition(f, 1, 2);
  EXPECT_EQ(a.classification, DecompClass::kAllBent);
  EXPECT_EQ(a.dual_second_derivative, SecondDerivativeKind::kConstantOne);
  EXPECT_EQ(a.criterion_agrees, true);
  const DecompositionReport b = classify_decomposition(f, 1, 4);
  EXPECT_EQ(b.classification, DecompClass::kAllSemibent);
  EXPECT_EQ(b.dual_second_derivative, SecondDerivativeKind::kConstantZero);
  Xorshift64Star rng(3);
  const DecompositionReport c = classify_decomposition(random_fn(5, rng), 1, 2);
  EXPECT_FALSE(c.dual_second_derivative.has_value());
}

TEST(Classify, MixedPlaneOfTraceForm) {
  const Field f4 = Field::make(4);
  const BoolFn t = gpsap_trace_form(f4, validate_gps_params(4, 2, 2), identity_perm(f4));
  // (a, b) = (1, 0), (c, d) = (0, 1) in F x F coordinates: ad + bc = 1
  const DecompositionReport r = classify_decomposition(t, 1, 1u << 4);
  EXPECT_EQ(r.classification, DecompClass::kMixed);
  EXPECT_EQ(r.dual_second_derivative, SecondDerivativeKind::kNonConstant);
}

TEST(Classify, MatchesDualCriterionEverywhere) {
  const Field f3 = Field::make(3);
  for (const BoolFn& f : {inner_product(6), mm(f3, power_perm(f3, 6)), psap(f3, subfield_trace_fn(Subfield(f3, 3)))}) {
    const BoolFn fd = dual(f);
    const auto w = walsh_transform(f);
    for (std::uint64_t v = 1; v < 64; ++v) {
      for (std::uint64_t u = 1; u < std::bit_floor(v); ++u) {
        if (v & std::bit_floor(u)) continue;
        const DecompositionReport r = classify_decomposition(f, u, v);
        const int sd = oracle::second_derivative_constant(fd, u, v);
        const DecompClass want = sd == 1 ? DecompClass::kAllBent : sd == 0 ? DecompClass::kAllSemibent : DecompClass::kMixed;
        ASSERT_EQ(r.classification, want) << u << "," << v;
        ASSERT_EQ(classify_plane_spectral(w, 6, u, v), want);
        const auto e = oracle::classify_by_enumeration(f, u, v);
        ASSERT_EQ(e.bent, r.bent);
        ASSERT_EQ(e.semibent, r.semibent);
      }
    }
  }
}

TEST(Scan, Summaries) {
  const ScanSummary s = scan_decompositions(inner_product(4));
  EXPECT_EQ(s.planes, 35u);
  EXPECT_GE(s.all_bent, 1u);
  EXPECT_EQ(s.all_bent + s.all_semibent + s.mixed, s.planes);
  bool found = false;
  for (const ScanEntry& e : s.entries) found |= e.u == 1 && e.v == 2 && e.classification == DecompClass::kAllBent;
  EXPECT_TRUE(found);
  EXPECT_THROW(scan_decompositions(linear_fn(4, 1)), DomainError);
  EXPECT_THROW(scan_decompositions(BoolFn(14)), ResourceError);
  const ScanSummary mixed = scan_decompositions(inner_product(4), {false, true});
  EXPECT_EQ(mixed.entries.size(), mixed.planes);
}

TEST(Scan, VerticalPlanesSemibent) {
  const Field f4 = Field::make(4);
  const BoolFn t = gpsap_trace_form(f4, validate_gps_params(4, 2, 2), identity_perm(f4));
  const ScanSummary s = scan_decompositions(t);
  std::uint64_t vertical = 0;
  for (const ScanEntry& e : s.entries) {
    if ((e.u & 15) == 0 && (e.v & 15) == 0) {
      EXPECT_EQ(e.classification, DecompClass::kAllSemibent);
      ++vertical;
    }
  }
  EXPECT_EQ(vertical, 35u);
}

TEST(Ftof, Agreement) {
  const Field f = Field::make(4);
  const GpsParams p = validate_gps_params(4, 2, 2);
  EXPECT_TRUE(check_ftof_equivalence(f, p, identity_perm(f), 1, 0, 0, 1));
  EXPECT_THROW(check_ftof_equivalence(f, p, identity_perm(f), 1, 1, 1, 1), DomainError);
}

TEST(Concat, Identities) {
  Xorshift64Star rng(4);
  const BoolFn g = random_mm3(rng);
  const BoolFn sum = concat4(g, g, g, g.complement());
  EXPECT_EQ(sum, BoolFn::from(8, [&](std::uint64_t i) { return g(i & 63) ^ ((i >> 6) == 3); }));
  EXPECT_TRUE(concat_bent_check(g, g, g, g.complement()));
  EXPECT_FALSE(concat_bent_check(g, g, g, g));
  EXPECT_FALSE(is_bent(concat4(g, g, g, g)));
  EXPECT_THROW(concat4(g, g, g, BoolFn(4)), ParameterError);
  EXPECT_THROW(concat_bent_check(g, g, g, linear_fn(6, 1)), DomainError);
  for (int t = 0; t < 100; ++t) {
    const BoolFn a = random_fn(4, rng), b = random_fn(4, rng), c = random_fn(4, rng), d = random_fn(4, rng);
    const Restrictions r = restrict_to_cosets(concat4(a, b, c, d), 16, 32);
    ASSERT_EQ(r.parts, (std::array<BoolFn, 4>{a, b, c, d}));
  }
}

TEST(Concat, DualSumEquivalence) {
  Xorshift64Star rng(5);
  for (int t = 0; t < 50; ++t) {
    const BoolFn a = random_mm3(rng), b = random_mm3(rng), c = random_mm3(rng), d = random_mm3(rng);
    ASSERT_EQ(is_bent(concat4(a, b, c, d)), concat_bent_check(a, b, c, d));
  }
}

TEST(Psffff, Builds) {
  const Field f3 = Field::make(3);
  const BoolFn h = psffff(f3, 1, subfield_identity(Subfield(f3, 1)), 1, 1, 1);
  EXPECT_EQ(h.n(), 8);
  EXPECT_TRUE(is_bent(h));
  const Field f2 = Field::make(2);
  EXPECT_THROW(psffff(f2, 1, subfield_identity(Subfield(f2, 1)), 1, 1, 1), ParameterError);
  const Field f4 = Field::make(4);
  const Subfield s2(f4, 2);
  EXPECT_THROW(psffff(f4, 2, subfield_identity(s2), 1, 1, 0), ParameterError);
}

TEST(Psffff, QuartersAreVectorialComponents) {
  // restricting to (z1, z2) gives the trace components for alpha, beta, gamma and
  // alpha + beta + gamma, the last complemented
  const Field f = Field::make(5);
  const Subfield s(f, 1);
  const GpsParams p = validate_gps_params(5, 1, 3);
  const BoolFn h = psffff(f, 1, subfield_identity(s), 1, 1, 1);
  const VecFn v = gpsap_vectorial(f, p, subfield_identity(s), 0);
  const BoolFn comp = component_trace(v, s, 1);
  const Restrictions r = restrict_to_cosets(h, 1u << 10, 1u << 11);
  EXPECT_EQ(r.parts[0], comp);
  EXPECT_EQ(r.parts[1], comp);
  EXPECT_EQ(r.parts[2], comp);
  EXPECT_EQ(r.parts[3], comp.complement());
}

TEST(Partition, Builds) {
  const Field f3 = Field::make(3);
  const GpsParams p = validate_gps_params(3, 3, 1);
  const auto assign = default_partition_assignment(3);
  ASSERT_EQ(assign.size(), 8u);
  for (std::uint8_t q : assign) EXPECT_EQ(std::popcount(static_cast<unsigned>(q)) % 2, 1);
  const BoolFn h = partition_bent(f3, p, assign);
  EXPECT_EQ(h.n(), 8);
  EXPECT_TRUE(is_bent(h));
  auto even = assign;
  even[0] = 0b0011;
  EXPECT_THROW(partition_bent(f3, p, even), ParameterError);
  auto dup = assign;
  dup[0] = dup[1];
  EXPECT_THROW(partition_bent(f3, p, dup), ParameterError);
  const Field f6 = Field::make(6);
  EXPECT_TRUE(is_bent(partition_bent(f6, validate_gps_params(6, 3, 11), default_partition_assignment(3))));
}

TEST(Partition, QuadruplesOnEachPart) {
  const Field f = Field::make(3);
  const GpsParams p = validate_gps_params(3, 3, 1);
  const auto assign = default_partition_assignment(3);
  const BoolFn h = partition_bent(f, p, assign);
  const SpreadSets s = spread_sets(f, p);
  for (std::uint64_t xy = 0; xy < 64; ++xy) {
    unsigned q = 0;
    for (unsigned slot = 0; slot < 4; ++slot) {
      const std::uint64_t z1 = slot >> 1, z2 = slot & 1;
      q |= static_cast<unsigned>(h(xy | z1 << 6 | z2 << 7)) << slot;
    }
    const std::int32_t part = s.a_part[xy];
    if (part < 0) {
      EXPECT_EQ(q, 0b1000u);
    } else {
      EXPECT_EQ(q, assign[static_cast<std::size_t>(part)]);
      EXPECT_EQ((q >> 3) & 1, ((q ^ (q >> 1) ^ (q >> 2)) & 1) ^ 1);
    }
  }
}

}  // namespace
