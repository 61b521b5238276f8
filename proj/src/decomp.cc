#include "bent/decomp.h"

#include <bit>
#include <cstdlib>
#include <string>

#include "bent/derivative.h"
#include "bent/errors.h"
#include "bent/parallel.h"
#include "bent/subspace.h"

namespace bent {

namespace {

int dotp(std::uint64_t a, std::uint64_t b) { return std::popcount(a & b) & 1; }

void check_pair(int n, std::uint64_t u, std::uint64_t v) {
  if ((u >> n) != 0 || (v >> n) != 0) throw ParameterError("u or v exceeds the dimension");
  if (u == 0 || v == 0 || u == v) throw ParameterError("u and v are linearly dependent");
  if (n < 3) throw ParameterError("decomposition needs n >= 3");
}

}  // namespace

Restrictions restrict_to_cosets(const BoolFn& f, std::uint64_t u, std::uint64_t v) {
  const int n = f.n();
  check_pair(n, u, v);
  Restrictions r;
  const std::uint64_t pair[2] = {u, v};
  r.s_basis = orthogonal_complement(pair, n);
  int found = 0;
  std::array<bool, 4> have{};
  for (std::uint64_t x = 0; found < 4; ++x) {
    const int i = 2 * dotp(u, x) + dotp(v, x);
    if (!have[static_cast<std::size_t>(i)]) {
      have[static_cast<std::size_t>(i)] = true;
      r.reps[static_cast<std::size_t>(i)] = x;
      ++found;
    }
  }
  // Gray-code walk over S: entry j visits w_i + sum of basis vectors at set bits of j.
  const std::uint64_t count = std::uint64_t{1} << (n - 2);
  for (std::size_t i = 0; i < 4; ++i) {
    BoolFn g(n - 2);
    std::uint64_t x = r.reps[i];
    std::uint64_t prev = 0;
    for (std::uint64_t j = 0; j < count; ++j) {
      const std::uint64_t gray = j ^ (j >> 1);
      if (j > 0) x ^= r.s_basis[static_cast<std::size_t>(std::countr_zero(gray ^ prev))];
      prev = gray;
      g.set(gray, f(x));
    }
    r.parts[i] = std::move(g);
  }
  return r;
}

const char* to_string(DecompClass c) {
  switch (c) {
    case DecompClass::kAllBent:
      return "AllBent";
    case DecompClass::kAllSemibent:
      return "AllSemibent";
    case DecompClass::kMixed:
      break;
  }
  return "Mixed";
}

const char* to_string(SecondDerivativeKind k) {
  switch (k) {
    case SecondDerivativeKind::kConstantOne:
      return "ConstantOne";
    case SecondDerivativeKind::kConstantZero:
      return "ConstantZero";
    case SecondDerivativeKind::kNonConstant:
      break;
  }
  return "NonConstant";
}

SecondDerivativeKind second_derivative_kind(const BoolFn& f, std::uint64_t a, std::uint64_t b) {
  const BoolFn d = second_derivative(f, a, b);
  const std::uint64_t w = d.weight();
  if (w == 0) return SecondDerivativeKind::kConstantZero;
  if (w == d.size()) return SecondDerivativeKind::kConstantOne;
  return SecondDerivativeKind::kNonConstant;
}

DecompositionReport classify_decomposition(const BoolFn& f, std::uint64_t u, std::uint64_t v) {
  DecompositionReport rep;
  rep.u = u;
  rep.v = v;
  rep.restrictions = restrict_to_cosets(f, u, v);
  bool all_bent = true, all_semi = true;
  for (std::size_t i = 0; i < 4; ++i) {
    const BoolFn& g = rep.restrictions.parts[i];
    const auto w = walsh_transform(g);
    rep.bent[i] = is_bent_spectrum(w, g.n());
    const auto s = plateaued_order_spectrum(w, g.n());
    rep.semibent[i] = s && (g.n() % 2 == 1 ? *s == 1 : *s == 2);
    for (std::int64_t x : w) ++rep.spectra[i][std::llabs(x)];
    all_bent = all_bent && rep.bent[i];
    all_semi = all_semi && rep.semibent[i];
  }
  rep.classification = all_bent   ? DecompClass::kAllBent
                       : all_semi ? DecompClass::kAllSemibent
                                  : DecompClass::kMixed;
  if (is_bent(f)) {
    const auto kind = second_derivative_kind(dual(f), u, v);
    rep.dual_second_derivative = kind;
    const DecompClass expected = kind == SecondDerivativeKind::kConstantOne    ? DecompClass::kAllBent
                                 : kind == SecondDerivativeKind::kConstantZero ? DecompClass::kAllSemibent
                                                                               : DecompClass::kMixed;
    rep.criterion_agrees = expected == rep.classification;
  }
  return rep;
}

DecompClass classify_plane_spectral(std::span<const std::int64_t> walsh, int n, std::uint64_t u,
                                    std::uint64_t v) {
  check_pair(n, u, v);
  const std::uint64_t pair[2] = {u, v};
  const auto piv = rref(std::vector<std::uint64_t>(pair, pair + 2));
  if (piv.size() != 2) throw ParameterError("u and v are linearly dependent");
  const std::uint64_t pivots = std::bit_floor(piv[0]) | std::bit_floor(piv[1]);
  const int rn = n - 2;
  const std::int64_t bent_amp = rn % 2 == 0 ? std::int64_t{1} << (rn / 2) : -1;
  const std::int64_t semi_amp = std::int64_t{1} << ((rn + (rn % 2 == 0 ? 2 : 1)) / 2);
  bool bent[4] = {true, true, true, true}, semi[4] = {true, true, true, true};
  for (std::uint64_t l = 0; l < walsh.size(); ++l) {
    if (l & pivots) continue;
    const std::int64_t w0 = walsh[l], wu = walsh[l ^ u], wv = walsh[l ^ v], wuv = walsh[l ^ u ^ v];
    // Coset i has (<u,w_i>, <v,w_i>) = (i >> 1, i & 1).
    const std::int64_t r[4] = {
        (w0 + wu + wv + wuv) / 4,
        (w0 + wu - wv - wuv) / 4,
        (w0 - wu + wv - wuv) / 4,
        (w0 - wu - wv + wuv) / 4,
    };
    for (int i = 0; i < 4; ++i) {
      const std::int64_t a = std::llabs(r[i]);
      bent[i] = bent[i] && a == bent_amp;
      semi[i] = semi[i] && (a == 0 || a == semi_amp);
    }
  }
  if (bent[0] && bent[1] && bent[2] && bent[3]) return DecompClass::kAllBent;
  // An all-zero spectrum is impossible, so {0, semi_amp} means plateaued of the semibent order.
  if (semi[0] && semi[1] && semi[2] && semi[3]) return DecompClass::kAllSemibent;
  return DecompClass::kMixed;
}

ScanSummary scan_decompositions(const BoolFn& f, const ScanOptions& opts) {
  const int n = f.n();
  if (n > 12 && !opts.allow_large) {
    throw ResourceError("exhaustive decomposition scan refused for n=" + std::to_string(n) +
                        " (cap 12); pass the override to run it anyway");
  }
  const auto w = walsh_transform(f);
  if (!is_bent_spectrum(w, n)) throw DomainError("decomposition scan needs a bent function");
  ScanSummary out;
  out.n = n;
  // Canonical planes: RREF pairs u < v, v's pivot above u's, v zero at u's pivot.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> planes;
  for (std::uint64_t v = 1; v < f.size(); ++v) {
    const std::uint64_t pv = std::bit_floor(v);
    for (std::uint64_t u = 1; u < pv; ++u) {
      if ((v & std::bit_floor(u)) == 0) planes.emplace_back(u, v);
    }
  }
  std::vector<DecompClass> cls(planes.size());
  parallel_for(planes.size(), [&](std::size_t i) {
    cls[i] = classify_plane_spectral(w, n, planes[i].first, planes[i].second);
  });
  out.planes = planes.size();
  for (std::size_t i = 0; i < planes.size(); ++i) {
    switch (cls[i]) {
      case DecompClass::kAllBent:
        ++out.all_bent;
        break;
      case DecompClass::kAllSemibent:
        ++out.all_semibent;
        break;
      case DecompClass::kMixed:
        ++out.mixed;
        if (!opts.keep_mixed) continue;
        break;
    }
    out.entries.push_back({planes[i].first, planes[i].second, cls[i]});
  }
  return out;
}

bool check_ftof_equivalence(const Field& f, const GpsParams& params, const PermTable& q, Elem a,
                            Elem b, Elem c, Elem d) {
  if ((f.mul(a, d) ^ f.mul(b, c)) == 0) throw DomainError("ad + bc = 0");
  const int m = f.m();
  const BoolFn fn = gpsap_trace_form(f, params, q);
  const BoolFn fd = dual(fn, Pairing::trace2(f));
  const std::uint64_t u = a | (std::uint64_t{b} << m), v = c | (std::uint64_t{d} << m);
  const auto lhs = second_derivative_kind(fd, u, v);

  const int shift = (m - params.ell) % m;
  const Elem at = f.frobenius(a, shift), bt = f.frobenius(b, shift);
  const Elem ct = f.frobenius(c, shift), dt = f.frobenius(d, shift);
  const auto e = static_cast<std::int64_t>(params.e);
  const std::uint64_t mask = f.size() - 1;
  const BoolFn hat = BoolFn::from(2 * m, [&](std::uint64_t i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>(i >> m);
    const Elem num = f.mul(bt, x) ^ f.mul(dt, y);
    const Elem den = f.mul(at, x) ^ f.mul(ct, y);
    return f.trace(q.table[f.mul(num, f.pow(den, -e))]) != 0;
  });
  const auto rhs = second_derivative_kind(hat, 1, std::uint64_t{1} << m);
  return lhs == rhs;
}

BoolFn concat4(const BoolFn& f1, const BoolFn& f2, const BoolFn& f3, const BoolFn& f4) {
  const int n = f1.n();
  if (f2.n() != n || f3.n() != n || f4.n() != n) {
    throw ParameterError("concatenation needs four functions of equal dimension");
  }
  const BoolFn* parts[4] = {&f1, &f2, &f3, &f4};
  const std::uint64_t mask = (std::uint64_t{1} << n) - 1;
  return BoolFn::from(n + 2, [&](std::uint64_t i) {
    const std::uint64_t y = (i >> n) & 1, z = (i >> (n + 1)) & 1;
    return (*parts[2 * y + z])(i & mask);
  });
}

bool concat_bent_check(const BoolFn& f1, const BoolFn& f2, const BoolFn& f3, const BoolFn& f4) {
  for (const BoolFn* g : {&f1, &f2, &f3, &f4}) {
    if (!is_bent(*g)) throw DomainError("concatenation check needs four bent functions");
  }
  const BoolFn s = dual(f1) ^ dual(f2) ^ dual(f3) ^ dual(f4);
  return s.weight() == s.size();
}

BoolFn psffff(const Field& f, int k, const SubfieldFn& p, Elem alpha, Elem beta, Elem gamma) {
  const int m = f.m();
  if (k < 1 || m % k != 0) {
    throw ParameterError("k | m fails (k=" + std::to_string(k) + ", m=" + std::to_string(m) + ")");
  }
  const std::uint64_t e = (std::uint64_t{1} << k) + 1;
  if (gcd_u64(f.order(), e) != 1) {
    throw ParameterError("gcd(2^m - 1, 2^k + 1) = 1 fails (m=" + std::to_string(m) +
                         ", k=" + std::to_string(k) + ")");
  }
  const Subfield s(f, k);
  if (!is_permutation_form(s, p)) throw ParameterError("P must be a permutation of S_" + std::to_string(k));
  for (Elem a : {alpha, beta, gamma}) {
    if (a == 0 || !s.contains(a)) throw ParameterError("alpha, beta, gamma must be nonzero members of S_k");
  }
  if ((alpha ^ beta ^ gamma) == 0) throw ParameterError("alpha + beta + gamma != 0 fails");
  const Elem coef[4] = {alpha, beta, gamma, alpha ^ beta ^ gamma};  // (z1, z2) = 00, 01, 10, 11
  const std::uint64_t mask = f.size() - 1;
  const auto ne = -static_cast<std::int64_t>(e);
  return BoolFn::from(2 * m + 2, [&](std::uint64_t i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>((i >> m) & mask);
    const std::uint64_t z1 = (i >> (2 * m)) & 1, z2 = (i >> (2 * m + 1)) & 1;
    const Elem pv = p.table[s.index_of(f.trace_rel(f.mul(y, f.pow(x, ne)), k))];
    return (s.trace(f.mul(coef[2 * z1 + z2], pv)) != 0) != ((z1 & z2) != 0);
  });
}

std::vector<std::uint8_t> default_partition_assignment(int k) {
  std::vector<std::uint8_t> odd;
  for (std::uint8_t q = 0; q < 16; ++q) {
    if (std::popcount(static_cast<unsigned>(q)) % 2 == 1) odd.push_back(q);
  }
  std::vector<std::uint8_t> out(std::size_t{1} << k);
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = odd[i % odd.size()];
  return out;
}

BoolFn partition_bent(const Field& f, const GpsParams& params,
                      std::span<const std::uint8_t> assignment) {
  if (params.k < 3) throw ParameterError("k >= 3 fails (k=" + std::to_string(params.k) + ")");
  const SpreadSets sets = spread_sets(f, params);
  if (assignment.size() != (std::size_t{1} << params.k)) {
    throw ParameterError("assignment needs one quadruple per member of S_k");
  }
  std::array<std::size_t, 16> uses{};
  for (std::uint8_t q : assignment) {
    if (q > 15) throw ParameterError("quadruple value exceeds 4 bits");
    if (std::popcount(static_cast<unsigned>(q)) % 2 == 0) {
      throw ParameterError("quadruple " + std::to_string(q) + " has an even number of ones");
    }
    ++uses[q];
  }
  const std::size_t per = std::size_t{1} << (params.k - 3);
  for (std::uint8_t q = 0; q < 16; ++q) {
    if (std::popcount(static_cast<unsigned>(q)) % 2 == 1 && uses[q] != per) {
      throw ParameterError("quadruple " + std::to_string(q) + " assigned " + std::to_string(uses[q]) +
                           " times, expected " + std::to_string(per));
    }
  }
  const int m = f.m();
  const std::uint64_t mask = (std::uint64_t{1} << (2 * m)) - 1;
  return BoolFn::from(2 * m + 2, [&](std::uint64_t i) {
    const std::int32_t part = sets.a_part[i & mask];
    const std::uint64_t z1 = (i >> (2 * m)) & 1, z2 = (i >> (2 * m + 1)) & 1;
    const std::uint64_t slot = 2 * z1 + z2;
    if (part < 0) return slot == 3;
    return ((assignment[static_cast<std::size_t>(part)] >> slot) & 1) != 0;
  });
}

}  // namespace bent
