#include "bent/construct.h"

#include <algorithm>
#include <string>

#include "bent/errors.h"

namespace bent {

namespace {

void check_params(const Field& f, const GpsParams& params) {
  if (params.m != f.m()) throw ParameterError("parameter m differs from the field degree");
  validate_gps_params(params.m, params.k, params.e);
}

void check_trace_q(const Field& f, const PermTable& q) {
  if (q.m != f.m()) throw ParameterError("Q lives in a different field");
  make_perm(f, q.table);
  if (q.table[0] != 0) throw ParameterError("Q(0) = 0 fails");
}

}  // namespace

BoolFn gpsap(const Field& f, const GpsParams& params, const SubfieldFn& p, bool c0, GpsForm form) {
  check_params(f, params);
  const Subfield s(f, params.k);
  if (p.k != params.k || !is_balanced_form(p)) {
    throw ParameterError("generalized PS_ap needs a balanced P on S_" + std::to_string(params.k));
  }
  const int m = f.m();
  const std::uint64_t mask = f.size() - 1;
  const auto e = static_cast<std::int64_t>(params.e), eta = static_cast<std::int64_t>(params.eta);
  return BoolFn::from(2 * m, [&](std::uint64_t i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>(i >> m);
    Elem t;
    bool on_axis;
    if (form == GpsForm::kF) {
      t = f.mul(y, f.pow(x, -e));
      on_axis = x == 0;
    } else {
      t = f.mul(x, f.pow(y, -eta));
      on_axis = y == 0;
    }
    return (p.table[s.index_of(f.trace_rel(t, params.k))] != 0) != (c0 && on_axis);
  });
}

BoolFn gpsap_trace_form(const Field& f, const GpsParams& params, const PermTable& q) {
  check_params(f, params);
  check_trace_q(f, q);
  const int m = f.m();
  const std::uint64_t mask = f.size() - 1;
  const auto eta = static_cast<std::int64_t>(params.eta);
  return BoolFn::from(2 * m, [&](std::uint64_t i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>(i >> m);
    return f.trace(q.table[f.mul(x, f.pow(y, -eta))]) != 0;
  });
}

BoolFn gpsap_dual_formula(const Field& f, const GpsParams& params, const PermTable& q) {
  check_params(f, params);
  check_trace_q(f, q);
  const int m = f.m();
  const std::uint64_t mask = f.size() - 1;
  const auto e = static_cast<std::int64_t>(params.e);
  const int shift = (m - params.ell) % m;
  return BoolFn::from(2 * m, [&](std::uint64_t i) {
    const Elem xt = f.frobenius(static_cast<Elem>(i & mask), shift);
    const Elem yt = f.frobenius(static_cast<Elem>(i >> m), shift);
    return f.trace(q.table[f.mul(yt, f.pow(xt, -e))]) != 0;
  });
}

VecFn gpsap_vectorial(const Field& f, const GpsParams& params, const SubfieldFn& p, Elem c0) {
  check_params(f, params);
  const Subfield s(f, params.k);
  if (!is_permutation_form(s, p)) {
    throw ParameterError("vectorial generalized PS_ap needs a permutation of S_" +
                         std::to_string(params.k));
  }
  if (!s.contains(c0)) throw ParameterError("c0 must lie in S_" + std::to_string(params.k));
  const int m = f.m();
  const std::uint64_t mask = f.size() - 1;
  const auto e = static_cast<std::int64_t>(params.e);
  VecFn out{2 * m, params.k, std::vector<std::uint32_t>(std::size_t{1} << (2 * m))};
  for (std::uint64_t i = 0; i < out.table.size(); ++i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>(i >> m);
    Elem v = p.table[s.index_of(f.trace_rel(f.mul(y, f.pow(x, -e)), params.k))];
    if (x == 0) v ^= c0;
    out.table[i] = s.encode(v);
  }
  return out;
}

std::uint64_t SpreadSets::count_a(std::int32_t part) const {
  return static_cast<std::uint64_t>(std::count(a_part.begin(), a_part.end(), part));
}

std::uint64_t SpreadSets::count_b(std::int32_t part) const {
  return static_cast<std::uint64_t>(std::count(b_part.begin(), b_part.end(), part));
}

SpreadSets spread_sets(const Field& f, const GpsParams& params) {
  check_params(f, params);
  const Subfield s(f, params.k);
  const int m = f.m();
  const std::uint64_t mask = f.size() - 1;
  const auto e = static_cast<std::int64_t>(params.e), eta = static_cast<std::int64_t>(params.eta);
  SpreadSets out{m, params.k, {}, {}};
  const std::size_t size = std::size_t{1} << (2 * m);
  out.a_part.resize(size);
  out.b_part.resize(size);
  for (std::uint64_t i = 0; i < size; ++i) {
    const Elem x = static_cast<Elem>(i & mask), y = static_cast<Elem>(i >> m);
    out.a_part[i] = x == 0 ? -1
                           : static_cast<std::int32_t>(
                                 s.index_of(f.trace_rel(f.mul(y, f.pow(x, -e)), params.k)));
    out.b_part[i] = y == 0 ? -1
                           : static_cast<std::int32_t>(
                                 s.index_of(f.trace_rel(f.mul(x, f.pow(y, -eta)), params.k)));
  }
  return out;
}

bool trace_sum_nonconstant(const Field& f, Elem c, Elem d) {
  if (c == 0 || d == 0) throw DomainError("trace sum needs nonzero c and d");
  bool seen[2] = {false, false};
  for (Elem x = 1; x < f.size(); ++x) {
    if (x == c) continue;
    seen[f.trace(f.mul(d, f.inv(x) ^ f.inv(x ^ c)))] = true;
    if (seen[0] && seen[1]) return true;
  }
  return false;
}

std::vector<std::uint64_t> glambda_weights(const Field& f, const GpsParams& params,
                                           const PermTable& q) {
  check_params(f, params);
  check_trace_q(f, q);
  const auto e = static_cast<std::int64_t>(params.e);
  std::vector<std::uint64_t> out;
  for (Elem l = 2; l < f.size(); ++l) {
    std::uint64_t w = 0;
    for (Elem x = 0; x < f.size(); ++x) {
      const Elem t = f.pow(x, -e);
      w += static_cast<std::uint64_t>(
          f.trace(q.table[f.mul(l ^ 1, t)] ^ q.table[t] ^ q.table[f.mul(l, t)]));
    }
    out.push_back(w);
  }
  return out;
}

bool glambda_nonconstant(const Field& f, const GpsParams& params, const PermTable& q) {
  for (std::uint64_t w : glambda_weights(f, params, q)) {
    if (w == 0 || w == f.size()) return false;
  }
  return true;
}

}  // namespace bent
