#include "bent/verify/suite.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <numeric>
#include <optional>
#include <sstream>

#include <json.hpp>

#include "bent/construct.h"
#include "bent/decomp.h"
#include "bent/derivative.h"
#include "bent/errors.h"
#include "bent/kernels.h"
#include "bent/rng.h"
#include "bent/verify/oracles.h"

namespace bent::verify {

namespace {

// Time limits per criterion, in seconds; 0 means none.
constexpr double kBudgetBentGrid = 120;
constexpr double kBudgetDegree = 5;
constexpr double kBudgetOutsideMM = 600;
constexpr double kBudgetPropertyP = 300;
constexpr double kBudgetTraceSum = 60;
constexpr double kBudgetDecomp = 300;
constexpr double kBudgetCharSum = 30;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail << "FAILED: ";
      pass = false;
      detail << what << "; ";
    }
  }
};

struct Entry {
  std::string name;
  BoolFn f;
  int degree_m = -1;  // expected ANF degree for the degree-law families
};

struct GmmCase {
  std::string name;
  Field fk;
  std::vector<BoolFn> family;
};

struct GridParams {
  int m, k;
  std::uint64_t e;
};

constexpr GridParams kGpsGrid[] = {{4, 2, 2}, {6, 3, 11}, {6, 2, 2}, {4, 4, 1}};

std::string params_name(const GpsParams& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.k) + "," + std::to_string(p.e) + ")";
}

std::uint64_t gold_exponent(int kprime) { return (std::uint64_t{1} << kprime) + 1; }

std::vector<Elem> random_perm(std::uint32_t size, Xorshift64Star& rng) {
  std::vector<Elem> t(size);
  std::iota(t.begin(), t.end(), 0);
  for (std::uint32_t i = size - 1; i > 0; --i) std::swap(t[i], t[rng.below(i + 1)]);
  return t;
}

BoolFn random_fn(int n, Xorshift64Star& rng) {
  BoolFn f(n);
  for (auto& w : f.words()) w = rng.next();
  if (n < 6) f.words()[0] &= (std::uint64_t{1} << (std::uint64_t{1} << n)) - 1;
  return f;
}

// Bent functions on n in {2, 4}: inner products composed with random affine maps.
BoolFn random_quadratic_bent(int n, Xorshift64Star& rng) {
  const BoolFn base = BoolFn::from(n, [&](std::uint64_t x) {
    int v = 0;
    for (int i = 0; i < n; i += 2) v ^= static_cast<int>((x >> i) & (x >> (i + 1)) & 1);
    return v != 0;
  });
  const LinearMap l = LinearMap::random_invertible(n, rng);
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return ea_transform(base, l, rng.next() & mask, rng.next() & mask, (rng.next() & 1) != 0);
}

// For k <= 2 every balanced function is affine.
SubfieldFn grid_p(const Field& f, int k) {
  const Subfield s(f, k);
  return k <= 2 ? subfield_trace_fn(s) : subfield_inverse_trace_fn(s);
}

PermTable random_mm_perm(const Field& f, Xorshift64Star& rng) { return make_perm(f, random_perm(f.size(), rng)); }

BoolFn random_mm(const Field& f, Xorshift64Star& rng) {
  const PermTable pi = random_mm_perm(f, rng);
  return mm(f, pi, random_fn(f.m(), rng));
}

class Suite {
 public:
  explicit Suite(const SuiteOptions& opts) : opts_(opts) {}

  CriterionResult run(int id) {
    CriterionResult r;
    r.id = id;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      switch (id) {
        case 1:
          r.name = "bentness-grid";
          r.budget_seconds = kBudgetBentGrid;
          bentness_grid(o);
          break;
        case 2:
          r.name = "degree-law";
          r.budget_seconds = kBudgetDegree;
          degree_law(o);
          break;
        case 3:
          r.name = "outside-mm-sharp";
          r.budget_seconds = opts_.level == Level::kFast ? kBudgetOutsideMM : 0;
          outside_mm(o);
          break;
        case 4:
          r.name = "property-p";
          r.budget_seconds = kBudgetPropertyP;
          property_p(o);
          break;
        case 5:
          r.name = "trace-sum";
          r.budget_seconds = kBudgetTraceSum;
          trace_sum(o);
          break;
        case 6:
          r.name = "dual-formulas";
          dual_formulas(o);
          break;
        case 7:
          r.name = "decomposition-criterion";
          r.budget_seconds = kBudgetDecomp;
          decomposition(o);
          break;
        case 8:
          r.name = "concatenation-duals";
          concatenation(o);
          break;
        case 9:
          r.name = "ftof-equivalence";
          ftof(o);
          break;
        case 10:
          r.name = "semibent-planes";
          semibent_planes(o);
          break;
        case 11:
          r.name = "character-sums";
          r.budget_seconds = kBudgetCharSum;
          character_sums(o);
          break;
        case 12:
          r.name = "structural";
          structural(o);
          break;
        default:
          break;
      }
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.budget_seconds > 0 && r.seconds > r.budget_seconds) {
      o.require(false, "time budget exceeded");
    }
    r.pass = o.pass;
    r.detail = o.detail.str();
    while (!r.detail.empty() && (r.detail.back() == ' ' || r.detail.back() == ';')) r.detail.pop_back();
    return r;
  }

 private:
  // Shared constructions; built on first use so criteria can run alone.
  const std::vector<Entry>& corpus() {
    if (!corpus_) build_corpus();
    return *corpus_;
  }
  const std::vector<GmmCase>& gmm_cases() {
    if (!corpus_) build_corpus();
    return gmm_cases_;
  }

  void build_corpus() {
    std::vector<Entry> c;
    for (int m = 2; m <= 5; ++m) {
      const Field f = Field::make(m);
      c.push_back({"psap m=" + std::to_string(m), psap(f, subfield_trace_fn(Subfield(f, m))), m});
    }
    for (const GridParams& g : kGpsGrid) {
      const Field f = Field::make(g.m);
      const GpsParams p = validate_gps_params(g.m, g.k, g.e);
      const SubfieldFn pf = grid_p(f, g.k);
      for (int c0 = 0; c0 <= 1; ++c0) {
        for (GpsForm form : {GpsForm::kF, GpsForm::kG}) {
          c.push_back({"gpsap " + params_name(p) + (form == GpsForm::kF ? " f" : " g") +
                           "-form c0=" + std::to_string(c0),
                       gpsap(f, p, pf, c0 != 0, form), g.m});
        }
      }
    }
    for (const auto& [g, kprime] : trace_form_cases()) {
      const Field f = Field::make(g.m);
      const GpsParams p = validate_gps_params(g.m, g.k, g.e);
      const PermTable q = kprime == 0 ? identity_perm(f) : power_perm(f, gold_exponent(kprime));
      c.push_back({"gpsap-trace " + params_name(p) + (kprime == 0 ? " Q=id" : " Q=x^" + std::to_string(gold_exponent(kprime))),
                   gpsap_trace_form(f, p, q)});
    }
    Xorshift64Star rng(opts_.seed);
    for (int k = 1; k <= 2; ++k) {
      for (int n : {2, 4}) {
        GmmCase gc{"gmm k=" + std::to_string(k) + " n=" + std::to_string(n), Field::make(k), {}};
        for (std::uint32_t z = 0; z < gc.fk.size(); ++z) gc.family.push_back(random_quadratic_bent(n, rng));
        c.push_back({gc.name, gmm(gc.fk, gc.family)});
        gmm_cases_.push_back(std::move(gc));
      }
    }
    c.push_back({"cor-ex1 (4,1)", build_cor_ex(4, 1, {CorExVariant::kInverse, 1})});
    c.push_back({"cor-ex2 (5,2) k'=1", build_cor_ex(5, 2, {CorExVariant::kGold, 1})});
    for (int m : {3, 5}) {
      const Field f = Field::make(m);
      const Subfield s(f, 1);
      c.push_back({"psffff (" + std::to_string(m) + ",1)", psffff(f, 1, subfield_identity(s), 1, 1, 1)});
    }
    for (const GridParams& g : {GridParams{3, 3, 1}, GridParams{6, 3, 11}}) {
      const Field f = Field::make(g.m);
      const GpsParams p = validate_gps_params(g.m, g.k, g.e);
      c.push_back({"partition " + params_name(p), partition_bent(f, p, default_partition_assignment(g.k))});
    }
    corpus_ = std::move(c);
  }

  static std::vector<std::pair<GridParams, int>> trace_form_cases() {
    // second: 0 for Q = identity, else the Gold parameter k'
    // Gold Q needs k = m, where any permutation gives a bent trace form.
    return {{{4, 2, 2}, 0}, {{6, 3, 11}, 0}, {{5, 1, 3}, 0}, {{5, 5, 2}, 1}, {{5, 5, 1}, 2}, {{3, 3, 2}, 1}};
  }

  void bentness_grid(Outcome& o) {
    int bent = 0, cross = 0;
    for (const Entry& e : corpus()) {
      const bool b = is_bent(e.f);
      o.require(b, e.name + " not bent");
      bent += b;
      if (e.f.n() <= 8) {
        o.require(oracle::bent_by_derivatives(e.f) == b, e.name + " derivative criterion disagrees");
        ++cross;
      }
    }
    o.detail << bent << "/" << corpus().size() << " bent, " << cross
             << " cross-checked by derivatives";
  }

  void degree_law(Outcome& o) {
    int count = 0;
    for (const Entry& e : corpus()) {
      if (e.degree_m < 0) continue;
      const int d = anf_degree(e.f);
      o.require(d == e.degree_m, e.name + " degree " + std::to_string(d));
      o.require(oracle::anf_degree_subset_sum(e.f) == d, e.name + " subset-sum degree disagrees");
      ++count;
    }
    o.detail << count << " psap/gpsap functions of degree m";
    // Affine P lowers the degree when -e has small binary weight; recorded only.
    const Field f6 = Field::make(6);
    const GpsParams p = validate_gps_params(6, 3, 11);
    const SubfieldFn tr = subfield_trace_fn(Subfield(f6, 3));
    o.detail << "; affine P at " << params_name(p) << ": f-form degree "
             << anf_degree(gpsap(f6, p, tr, false, GpsForm::kF)) << ", g-form degree "
             << anf_degree(gpsap(f6, p, tr, false, GpsForm::kG)) << " (not asserted)";
  }

  void outside_mm(Outcome& o) {
    const BoolFn f = build_cor_ex(4, 1, {CorExVariant::kInverse, 1});
    o.require(is_bent(f), "cor-ex1 (4,1) not bent");
    const int idx = linearity_index(f, 5);
    o.require(idx <= 4, "cor-ex1 (4,1) has a 5-dimensional M-subspace");
    o.detail << "cor-ex1 (4,1): index " << idx << " with cap 5";
    if (opts_.level == Level::kFull) {
      const BoolFn g = build_cor_ex(5, 2, {CorExVariant::kGold, 1});
      const int gi = linearity_index(g, 7);
      o.require(gi < 7, "cor-ex2 (5,2) has a 7-dimensional M-subspace");
      o.detail << "; cor-ex2 (5,2): index " << gi << " with cap 7";
    }
  }

  void property_p(Outcome& o) {
    int held = 0;
    auto check = [&](int m, std::uint64_t e, const std::string& label) {
      const Field f = Field::make(m);
      const PermTable pi = power_perm(f, e);
      const auto r = check_property_p(f, pi);
      o.require(r.holds, label + " fails Property (P)");
      held += r.holds;
      if (m <= 4) {
        const oracle::SlowField sf{m, f.irred()};
        const auto ce = oracle::property_p_counterexample(sf, pi.table);
        o.require(!ce.has_value() == r.holds, label + " brute force disagrees");
      }
    };
    for (int m = 4; m <= 8; ++m) check(m, (std::uint64_t{1} << m) - 2, "inverse m=" + std::to_string(m));
    for (auto [m, kp] : {std::pair{3, 1}, {5, 1}, {5, 2}, {7, 1}, {7, 2}, {7, 3}}) {
      check(m, gold_exponent(kp), "gold (" + std::to_string(m) + "," + std::to_string(kp) + ")");
    }
    const Field f3 = Field::make(3);
    const auto id = check_property_p(f3, identity_perm(f3));
    o.require(!id.holds && id.counterexample.has_value(), "identity m=3 passes Property (P)");
    if (id.counterexample) {
      const auto [a1, a2, b1, b2] = *id.counterexample;
      const oracle::SlowField sf{3, f3.irred()};
      o.require(oracle::property_p_equations_hold(sf, identity_perm(f3).table, a1, a2, b1, b2) &&
                    !property_p_trivial(a1, a2, b1, b2),
                "identity counterexample invalid");
      o.detail << held << "/11 permutations satisfy (P); identity m=3 counterexample (a1,a2,b1,b2)=("
               << a1 << "," << a2 << "," << b1 << "," << b2 << ")";
    }
  }

  void trace_sum(Outcome& o) {
    std::uint64_t pairs = 0;
    for (int m = 4; m <= 8; ++m) {
      const Field f = Field::make(m);
      for (Elem c = 1; c < f.size(); ++c) {
        for (Elem d = 1; d < f.size(); ++d) {
          const bool ok = trace_sum_nonconstant(f, c, d);
          if (!ok) o.require(false, "m=" + std::to_string(m) + " c=" + std::to_string(c) + " d=" + std::to_string(d));
          ++pairs;
        }
      }
    }
    o.detail << pairs << " (c,d) pairs over m=4..8 non-vanishing";
  }

  void dual_formulas(Outcome& o) {
    int checked = 0;
    for (const GmmCase& gc : gmm_cases()) {
      const BoolFn f = gmm(gc.fk, gc.family);
      const int n = gc.family[0].n();
      o.require(gmm_dual(gc.fk, gc.family) == dual(f, gmm_pairing(n, gc.fk)), gc.name + " dual formula mismatch");
      ++checked;
    }
    for (const auto& [g, kprime] : trace_form_cases()) {
      const Field f = Field::make(g.m);
      const GpsParams p = validate_gps_params(g.m, g.k, g.e);
      const PermTable q = kprime == 0 ? identity_perm(f) : power_perm(f, gold_exponent(kprime));
      const BoolFn t = gpsap_trace_form(f, p, q);
      o.require(gpsap_dual_formula(f, p, q) == dual(t, Pairing::trace2(f)),
                "gpsap " + params_name(p) + " dual formula mismatch");
      ++checked;
    }
    {
      // small case against the double-sum trace-pairing spectrum
      const Field f = Field::make(3);
      const GpsParams p = validate_gps_params(3, 1, 3);
      const PermTable q = identity_perm(f);
      const auto w = oracle::walsh_trace2(gpsap_trace_form(f, p, q), oracle::SlowField{3, f.irred()});
      o.require(gpsap_dual_formula(f, p, q) == oracle::dual_from(w, 6), "gpsap (3,1,3) oracle dual mismatch");
      ++checked;
    }
    int involutions = 0;
    for (const Entry& e : corpus()) {
      if (!is_bent(e.f)) continue;
      o.require(dual(dual(e.f)) == e.f, e.name + " dual is not an involution");
      ++involutions;
    }
    o.detail << checked << " dual formulas match; dual(dual(f)) = f on " << involutions << " functions";
  }

  void decomposition(Outcome& o) {
    struct Case {
      std::string name;
      BoolFn f;
    };
    std::vector<Case> cases;
    cases.push_back({"x1x2+x3x4", BoolFn::from(4, [](std::uint64_t x) {
                       return (((x & 1) & (x >> 1)) ^ ((x >> 2) & (x >> 3) & 1)) != 0;
                     })});
    const Field f3 = Field::make(3);
    cases.push_back({"MM m=3", mm(f3, power_perm(f3, 6))});
    cases.push_back({"psap m=3", psap(f3, subfield_trace_fn(Subfield(f3, 3)))});
    const Field f4 = Field::make(4);
    const GpsParams p = validate_gps_params(4, 2, 2);
    cases.push_back({"gpsap (4,2,2)", gpsap(f4, p, subfield_trace_fn(Subfield(f4, 2)), false)});
    for (const Case& c : cases) {
      const int n = c.f.n();
      const BoolFn fd = dual(c.f);
      const auto w = walsh_transform(c.f);
      std::uint64_t planes = 0, counts[3] = {0, 0, 0};
      for (std::uint64_t v = 1; v < c.f.size(); ++v) {
        for (std::uint64_t u = 1; u < std::bit_floor(v); ++u) {
          if (v & std::bit_floor(u)) continue;
          ++planes;
          const DecompositionReport r = classify_decomposition(c.f, u, v);
          const int sd = oracle::second_derivative_constant(fd, u, v);
          const DecompClass expected = sd == 1   ? DecompClass::kAllBent
                                       : sd == 0 ? DecompClass::kAllSemibent
                                                 : DecompClass::kMixed;
          ++counts[static_cast<int>(r.classification)];
          if (r.classification != expected) {
            o.require(false, c.name + " plane (" + std::to_string(u) + "," + std::to_string(v) + ")");
          }
          if (classify_plane_spectral(w, n, u, v) != r.classification) {
            o.require(false, c.name + " spectral route disagrees at (" + std::to_string(u) + "," +
                                 std::to_string(v) + ")");
          }
          if (n <= 6) {
            const auto e = oracle::classify_by_enumeration(c.f, u, v);
            if (e.bent != r.bent || e.semibent != r.semibent) {
              o.require(false, c.name + " coset enumeration disagrees");
            }
          }
        }
      }
      o.detail << c.name << ": " << planes << " planes (" << counts[0] << " bent, " << counts[1]
               << " semibent, " << counts[2] << " mixed); ";
    }
  }

  void concatenation(Outcome& o) {
    Xorshift64Star rng(opts_.seed ^ 0x8ULL);
    const Field f = Field::make(3);
    int agree = 0, bent = 0, total = 0;
    auto check = [&](const BoolFn& a, const BoolFn& b, const BoolFn& c, const BoolFn& d,
                     std::optional<bool> expected) {
      const bool lhs = is_bent(concat4(a, b, c, d));
      const bool rhs = concat_bent_check(a, b, c, d);
      ++total;
      agree += lhs == rhs;
      bent += lhs;
      o.require(lhs == rhs, "equivalence fails on quadruple " + std::to_string(total));
      if (expected) o.require(lhs == *expected, "designed quadruple " + std::to_string(total));
    };
    for (int t = 0; t < 50; ++t) {
      const BoolFn a = random_mm(f, rng), b = random_mm(f, rng), c = random_mm(f, rng), d = random_mm(f, rng);
      check(a, b, c, d, std::nullopt);
    }
    for (int t = 0; t < 5; ++t) {
      const BoolFn g1 = random_mm(f, rng), g2 = random_mm(f, rng);
      check(g1, g2, g1, g2.complement(), true);
      check(g1, g1, g1, g1, false);
      check(g1, g1, g1, g1.complement(), true);
    }
    o.detail << agree << "/" << total << " quadruples agree (" << bent << " bent concatenations)";
  }

  void ftof(Outcome& o) {
    const Field f = Field::make(4);
    const GpsParams p = validate_gps_params(4, 2, 2);
    const PermTable q = identity_perm(f);
    Xorshift64Star rng(opts_.seed ^ 0x9ULL);
    int ok = 0, total = 0;
    auto one = [&](Elem a, Elem b, Elem c, Elem d) {
      ++total;
      const bool r = check_ftof_equivalence(f, p, q, a, b, c, d);
      ok += r;
      o.require(r, "(a,b,c,d)=(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) +
                       "," + std::to_string(d) + ")");
    };
    one(1, 0, 0, 1);
    while (total < 51) {
      const Elem a = static_cast<Elem>(rng.below(16)), b = static_cast<Elem>(rng.below(16));
      const Elem c = static_cast<Elem>(rng.below(16)), d = static_cast<Elem>(rng.below(16));
      if ((f.mul(a, d) ^ f.mul(b, c)) == 0) continue;
      one(a, b, c, d);
    }
    o.detail << ok << "/" << total << " (a,b,c,d) agree";
  }

  void semibent_planes(Outcome& o) {
    for (const GridParams& g : {GridParams{4, 2, 2}, GridParams{5, 1, 3}}) {
      const Field f = Field::make(g.m);
      const GpsParams p = validate_gps_params(g.m, g.k, g.e);
      const BoolFn fn = gpsap_trace_form(f, p, identity_perm(f));
      const int m = g.m;
      std::uint64_t inside = 0, semi_inside = 0;
      for (std::uint64_t v = 1; v < f.size(); ++v) {
        for (std::uint64_t u = 1; u < std::bit_floor(v); ++u) {
          if (v & std::bit_floor(u)) continue;
          ++inside;
          const auto r = classify_decomposition(fn, u << m, v << m);
          semi_inside += r.classification == DecompClass::kAllSemibent;
        }
      }
      o.require(semi_inside == inside, params_name(p) + ": " + std::to_string(inside - semi_inside) +
                                           " planes in {0}xF not semibent");
      const ScanSummary s = scan_decompositions(fn);
      o.detail << params_name(p) << ": " << semi_inside << "/" << inside
               << " planes in {0}xF semibent; full scan " << s.all_semibent << " semibent, " << s.all_bent
               << " bent of " << s.planes << " (recorded, not asserted); ";
    }
  }

  void character_sums(Outcome& o) {
    const Field f = Field::make(4);
    const GpsParams p = validate_gps_params(4, 2, 2);
    const Subfield s(f, p.k);
    const SpreadSets sets = spread_sets(f, p);
    const oracle::SlowField sf{4, f.irred()};
    const int m = 4;
    const std::int64_t big = (1 << m) - (1 << (m - p.k)), small = -(1 << (m - p.k));
    std::uint64_t checked = 0;
    for (Elem u = 0; u < f.size(); ++u) {
      for (Elem v = 0; v < f.size(); ++v) {
        if (u == 0 && v == 0) continue;
        std::vector<std::int64_t> chi_b(s.elements().size(), 0);
        std::int64_t chi_v = 0;
        for (std::uint64_t i = 0; i < sets.b_part.size(); ++i) {
          const Elem x = static_cast<Elem>(i & 15), y = static_cast<Elem>(i >> m);
          const int sign = sf.trace(sf.mul(u, x) ^ sf.mul(v, y)) ? -1 : 1;
          if (sets.b_part[i] < 0) {
            chi_v += sign;
          } else {
            chi_b[static_cast<std::size_t>(sets.b_part[i])] += sign;
          }
        }
        o.require(chi_v == (u != 0 ? 0 : (1 << m)), "chi(V) at (" + std::to_string(u) + "," + std::to_string(v) + ")");
        for (std::size_t gi = 0; gi < chi_b.size(); ++gi) {
          const Elem gamma = s.elements()[gi];
          const bool hit = u != 0 && f.frobenius(gamma, p.ell) ==
                                         f.trace_rel(f.mul(v, f.pow(u, -static_cast<std::int64_t>(p.e))), p.k);
          if (chi_b[gi] != (hit ? big : small)) {
            o.require(false, "chi(B) at (u,v,gamma)=(" + std::to_string(u) + "," + std::to_string(v) + "," +
                                 std::to_string(gamma) + ")");
          }
          ++checked;
        }
      }
    }
    o.detail << checked << " (u,v,gamma) sums and 255 V-sums match";
  }

  void structural(Outcome& o) {
    int parseval = 0;
    for (const Entry& e : corpus()) {
      const auto w = walsh_transform(e.f);
      std::int64_t s = 0;
      for (std::int64_t x : w) s += x * x;
      o.require(s == (std::int64_t{1} << (2 * e.f.n())), e.name + " violates Parseval");
      ++parseval;
    }
    Xorshift64Star rng(opts_.seed ^ 0xC12ULL);
    const kernels::Dispatch* simd = kernels::avx2();
    for (int t = 0; t < 100; ++t) {
      const int n = 1 + t % 6;
      const BoolFn f = random_fn(n, rng);
      const auto w = walsh_transform(f);
      o.require(w == oracle::walsh_dot(f), "butterfly differs from double sum, trial " + std::to_string(t));
      if (simd != nullptr) {
        std::vector<std::int64_t> a(f.size()), b(f.size());
        kernels::scalar().expand_signs(f.words().data(), a.data(), n);
        kernels::scalar().fwht(a.data(), a.size());
        simd->expand_signs(f.words().data(), b.data(), n);
        simd->fwht(b.data(), b.size());
        o.require(a == b, "scalar and AVX2 butterflies differ, trial " + std::to_string(t));
      }
    }
    for (int t = 0; t < 100; ++t) {
      const BoolFn a = random_fn(4, rng), b = random_fn(4, rng), c = random_fn(4, rng), d = random_fn(4, rng);
      const auto r = restrict_to_cosets(concat4(a, b, c, d), 1u << 4, 1u << 5);
      o.require(r.parts[0] == a && r.parts[1] == b && r.parts[2] == c && r.parts[3] == d,
                "concat/restrict round trip, trial " + std::to_string(t));
    }
    const Field f4 = Field::make(4);
    const BoolFn bent8 = gpsap(f4, validate_gps_params(4, 2, 2), subfield_trace_fn(Subfield(f4, 2)), false);
    for (int t = 0; t < 20; ++t) {
      const int n = t % 2 == 0 ? 8 : 2 + t % 6;
      const BoolFn f = t % 4 == 0 ? bent8 : random_fn(n, rng);
      const std::uint64_t mask = (std::uint64_t{1} << f.n()) - 1;
      const LinearMap l = LinearMap::random_invertible(f.n(), rng);
      const BoolFn g = ea_transform(f, l, rng.next() & mask, rng.next() & mask, (rng.next() & 1) != 0);
      o.require(ext_walsh_spectrum(g) == ext_walsh_spectrum(f), "EA transform changed the extended spectrum, trial " + std::to_string(t));
    }
    int spreads = 0;
    for (const GridParams& g : kGpsGrid) {
      const Field f = Field::make(g.m);
      const GpsParams p = validate_gps_params(g.m, g.k, g.e);
      const SpreadSets s = spread_sets(f, p);
      const std::uint64_t part = (std::uint64_t{1} << (g.m - g.k)) * (f.size() - 1);
      o.require(s.count_a(-1) == f.size() && s.count_b(-1) == f.size(), params_name(p) + " |U| or |V|");
      for (std::int32_t gi = 0; gi < (1 << g.k); ++gi) {
        o.require(s.count_a(gi) == part && s.count_b(gi) == part, params_name(p) + " |A(gamma)| or |B(gamma)|");
      }
      ++spreads;
    }
    o.detail << "Parseval on " << parseval << " spectra; 100 butterfly, 100 round-trip, 20 EA trials; "
             << spreads << " spread partitions counted";
  }

  SuiteOptions opts_;
  std::optional<std::vector<Entry>> corpus_;
  std::vector<GmmCase> gmm_cases_;
};

}  // namespace

std::vector<CriterionResult> run_suite(const SuiteOptions& opts,
                                       const std::function<void(const CriterionResult&)>& on_result) {
  std::vector<int> ids = opts.only;
  if (ids.empty()) {
    for (int i = 1; i <= 12; ++i) ids.push_back(i);
  }
  for (int id : ids) {
    if (id < 1 || id > 12) throw ParameterError("no criterion " + std::to_string(id));
  }
  Suite suite(opts);
  std::vector<CriterionResult> out;
  for (int id : ids) {
    out.push_back(suite.run(id));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  char head[96];
  std::snprintf(head, sizeof head, "%s C%02d %-24s %8.3fs", r.pass ? "PASS" : "FAIL", r.id, r.name.c_str(),
                r.seconds);
  std::string s = head;
  if (r.budget_seconds > 0) {
    char b[32];
    std::snprintf(b, sizeof b, " (budget %.0fs)", r.budget_seconds);
    s += b;
  }
  if (!r.detail.empty()) s += ": " + r.detail;
  return s;
}

std::string results_json(const std::vector<CriterionResult>& rs) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& r : rs) {
    j.push_back({{"id", r.id},
                 {"name", r.name},
                 {"pass", r.pass},
                 {"seconds", r.seconds},
                 {"budget_seconds", r.budget_seconds},
                 {"detail", r.detail}});
  }
  return j.dump(2);
}

}  // namespace bent::verify
