#include <algorithm>
#include <numeric>

#include <gtest/gtest.h>

#include "bent/construct.h"
#include "bent/derivative.h"
#include "bent/errors.h"
#include "bent/pairing.h"
#include "bent/rng.h"
#include "bent/verify/oracles.h"

namespace {

using namespace bent;

BoolFn x1x2(int n) {
  return BoolFn::from(n, [](std::uint64_t x) { return (x & 3) == 3; });
}

TEST(Permutations, Tables) {
  const Field f = Field::make(3);
  EXPECT_THROW(make_perm(f, std::vector<Elem>(8, 0)), ParameterError);
  EXPECT_THROW(power_perm(f, 7), ParameterError);
  const PermTable inv = power_perm(f, 6);
  for (Elem x = 1; x < 8; ++x) EXPECT_EQ(f.mul(x, inv.table[x]), 1u);
  EXPECT_EQ(inverse_perm(inverse_perm(inv)).table, inv.table);
  const PermTable g = power_perm(f, 3);
  const PermTable gi = inverse_perm(g);
  for (Elem x = 0; x < 8; ++x) EXPECT_EQ(gi.table[g.table[x]], x);
}

TEST(Mm, Builds) {
  const Field f2 = Field::make(2);
  const BoolFn a = mm(f2, identity_perm(f2));
  EXPECT_TRUE(is_bent(a));
  EXPECT_EQ(anf_degree(a), 2);
  const Field f3 = Field::make(3);
  const BoolFn b = mm(f3, power_perm(f3, 6));
  EXPECT_TRUE(is_bent(b));
  EXPECT_TRUE(in_mm_completed(b));
  const BoolFn g = BoolFn::from(3, [](std::uint64_t y) { return y == 5; });
  const BoolFn c = mm(f3, power_perm(f3, 6), g);
  EXPECT_TRUE(is_bent(c));
  EXPECT_EQ(c ^ b, BoolFn::from(6, [](std::uint64_t i) { return (i >> 3) == 5; }));
}

TEST(GmmGeneral, DisjointSupports) {
  const BoolFn f0 = x1x2(3);
  const BoolFn f1 = f0 ^ linear_fn(3, 4);
  const std::vector<BoolFn> fam{f0, f1};
  const BoolFn g = gmm_general(fam);
  EXPECT_EQ(g.n(), 4);
  EXPECT_TRUE(is_bent(g));
  const std::vector<BoolFn> same{f0, f0};
  EXPECT_THROW(gmm_general(same), ParameterError);
  // k = m: distinct linear functions
  std::vector<BoolFn> lin;
  for (std::uint64_t c = 0; c < 4; ++c) lin.push_back(linear_fn(2, c));
  EXPECT_TRUE(is_bent(gmm_general(lin)));
}

TEST(Gmm, BuildsAndDual) {
  const Field f1 = Field::make(1);
  const std::vector<BoolFn> fam(2, x1x2(2));
  const BoolFn g = gmm(f1, fam);
  EXPECT_EQ(g, BoolFn::from(4, [](std::uint64_t i) { return ((i & 3) == 3) ^ ((i >> 2) == 3); }));
  EXPECT_EQ(gmm_dual(f1, fam), g);
  const Field f2 = Field::make(2);
  const BoolFn q = BoolFn::from(4, [](std::uint64_t x) { return ((x & 3) == 3) ^ ((x >> 2) == 3); });
  const std::vector<BoolFn> fam2(4, q);
  const BoolFn g2 = gmm(f2, fam2);
  EXPECT_TRUE(is_bent(g2));
  EXPECT_EQ(gmm_dual(f2, fam2), dual(g2, gmm_pairing(4, f2)));
  const std::vector<BoolFn> mixed{q ^ linear_fn(4, 5), q};
  EXPECT_EQ(gmm_dual(f1, mixed), dual(gmm(f1, mixed), gmm_pairing(4, f1)));
  const std::vector<BoolFn> bad{x1x2(2), linear_fn(2, 1)};
  EXPECT_THROW(gmm(f1, bad), ParameterError);
}

TEST(Psap, Builds) {
  for (int m = 2; m <= 3; ++m) {
    const Field f = Field::make(m);
    const BoolFn p = psap(f, subfield_trace_fn(Subfield(f, m)));
    EXPECT_TRUE(is_bent(p));
    EXPECT_EQ(anf_degree(p), m);
  }
  const Field f = Field::make(3);
  EXPECT_THROW(psap(f, SubfieldFn{3, 3, std::vector<Elem>(8, 0)}), ParameterError);
}

TEST(Gpsap, Grid) {
  struct G {
    int m, k;
    std::uint64_t e;
  };
  for (const G g : {G{4, 2, 2}, G{6, 3, 11}, G{6, 2, 2}, G{4, 4, 1}}) {
    const Field f = Field::make(g.m);
    const GpsParams p = validate_gps_params(g.m, g.k, g.e);
    const SubfieldFn pf = g.k >= 3 ? subfield_inverse_trace_fn(Subfield(f, g.k)) : subfield_trace_fn(Subfield(f, g.k));
    for (bool c0 : {false, true}) {
      for (GpsForm form : {GpsForm::kF, GpsForm::kG}) {
        const BoolFn h = gpsap(f, p, pf, c0, form);
        EXPECT_TRUE(is_bent(h)) << g.m << "," << g.k << "," << g.e;
        EXPECT_EQ(anf_degree(h), g.m);
      }
    }
  }
}

TEST(Gpsap, ConstantOnSpreadParts) {
  const Field f = Field::make(4);
  const GpsParams p = validate_gps_params(4, 2, 2);
  const Subfield s(f, 2);
  const SubfieldFn pf = subfield_trace_fn(s);
  const SpreadSets sets = spread_sets(f, p);
  const BoolFn h = gpsap(f, p, pf, true, GpsForm::kF);
  for (std::uint64_t i = 0; i < h.size(); ++i) {
    const std::int32_t part = sets.a_part[i];
    if ((i & 15) == 0) {
      EXPECT_EQ(h(i), h(0));
    } else if (part >= 0) {
      EXPECT_EQ(h(i), pf.table[static_cast<std::size_t>(part)] != 0) << i;
    }
  }
}

TEST(Gpsap, DesarguesianSpecialization) {
  const Field f = Field::make(3);
  const GpsParams p = validate_gps_params(3, 3, 1);
  const SubfieldFn pf = subfield_trace_fn(Subfield(f, 3));
  EXPECT_EQ(gpsap(f, p, pf, false), psap(f, pf));
}

TEST(TraceForm, DualFormula) {
  const Field f4 = Field::make(4);
  const GpsParams p = validate_gps_params(4, 2, 2);
  const BoolFn t = gpsap_trace_form(f4, p, identity_perm(f4));
  EXPECT_TRUE(is_bent(t));
  EXPECT_EQ(gpsap_dual_formula(f4, p, identity_perm(f4)), dual(t, Pairing::trace2(f4)));
  const Field f3 = Field::make(3);
  const GpsParams p3 = validate_gps_params(3, 1, 3);
  EXPECT_EQ(p3.eta, 5u);
  EXPECT_TRUE(is_bent(gpsap_trace_form(f3, p3, identity_perm(f3))));
  EXPECT_THROW(power_perm(f4, 3), ParameterError);
  PermTable shifted = identity_perm(f4);
  std::swap(shifted.table[0], shifted.table[1]);
  EXPECT_THROW(gpsap_trace_form(f4, p, shifted), ParameterError);
}

TEST(TraceForm, GoldNeedsFullSubfield) {
  // with k = m any permutation works; with k < m the Gold trace form is not bent
  const Field f5 = Field::make(5);
  EXPECT_TRUE(is_bent(gpsap_trace_form(f5, validate_gps_params(5, 5, 2), power_perm(f5, 3))));
  EXPECT_FALSE(is_bent(gpsap_trace_form(f5, validate_gps_params(5, 1, 3), power_perm(f5, 3))));
}

TEST(Vectorial, ParametersChecked) {
  const Field f = Field::make(4);
  const GpsParams p = validate_gps_params(4, 2, 2);
  const Subfield s(f, 2);
  SubfieldFn notperm = subfield_identity(s);
  notperm.table[1] = 0;
  EXPECT_THROW(gpsap_vectorial(f, p, notperm, 0), ParameterError);
  EXPECT_THROW(gpsap_vectorial(f, p, subfield_identity(s), 2), ParameterError);
}

TEST(Spread, Counts) {
  const Field f = Field::make(4);
  const SpreadSets s = spread_sets(f, validate_gps_params(4, 2, 2));
  EXPECT_EQ(s.count_a(-1), 16u);
  EXPECT_EQ(s.count_b(-1), 16u);
  for (int g = 0; g < 4; ++g) {
    EXPECT_EQ(s.count_a(g), 60u);
    EXPECT_EQ(s.count_b(g), 60u);
  }
  const Field f2 = Field::make(2);
  const SpreadSets d = spread_sets(f2, validate_gps_params(2, 2, 1));
  for (int g = 0; g < 4; ++g) EXPECT_EQ(d.count_a(g), 3u);
}

TEST(CorEx, Builds) {
  const BoolFn a = build_cor_ex(4, 1, {CorExVariant::kInverse, 1});
  EXPECT_EQ(a.n(), 10);
  EXPECT_TRUE(is_bent(a));
  const BoolFn b = build_cor_ex(5, 2, {CorExVariant::kGold, 1});
  EXPECT_EQ(b.n(), 14);
  EXPECT_TRUE(is_bent(b));
  EXPECT_THROW(build_cor_ex(4, 2, {CorExVariant::kInverse, 1}), ParameterError);
  EXPECT_THROW(build_cor_ex(6, 1, {CorExVariant::kGold, 1}), ParameterError);
  EXPECT_THROW(build_cor_ex(5, 1, {CorExVariant::kGold, 5}), ParameterError);
}

TEST(TraceSum, Cases) {
  EXPECT_TRUE(trace_sum_nonconstant(Field::make(4), 1, 1));
  EXPECT_THROW(trace_sum_nonconstant(Field::make(4), 0, 1), DomainError);
  RecordProperty("m2_c1_d1", trace_sum_nonconstant(Field::make(2), 1, 1) ? "true" : "false");
}

TEST(GLambda, GoldBalanced) {
  const Field f = Field::make(5);
  const GpsParams p = validate_gps_params(5, 1, 3);
  const PermTable gold = power_perm(f, 3);
  EXPECT_TRUE(glambda_nonconstant(f, p, gold));
  for (std::uint64_t w : glambda_weights(f, p, gold)) EXPECT_EQ(w, 16u);
  const Field f4 = Field::make(4);
  const auto w = glambda_weights(f4, validate_gps_params(4, 2, 2), identity_perm(f4));
  EXPECT_EQ(w.size(), 14u);
}

}  // namespace
